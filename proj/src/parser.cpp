#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "iso/errors.hpp"
#include "iso/expr.hpp"

namespace iso {

namespace {

// Recursive descent over the expression grammar. Positions are byte offsets
// into the original text so error messages can point at the exact spot.
class Parser {
 public:
  Parser(std::string_view text, int dim, bool curveParameter)
      : text_(text), dim_(dim), curveParameter_(curveParameter) {}

  Expression run() {
    Expression e = parseExpr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
    return e;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int dim_;
  bool curveParameter_;

  [[noreturn]] void fail(const std::string& message, size_t offset) const {
    throw ParseError(message, offset);
  }

  void skipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expression parseExpr() {
    std::vector<Expression> terms;
    terms.push_back(parseTerm());
    while (true) {
      if (consume('+')) {
        terms.push_back(parseTerm());
      } else if (consume('-')) {
        terms.push_back(negate(parseTerm()));
      } else {
        break;
      }
    }
    return sum(std::move(terms));
  }

  Expression parseTerm() {
    Expression current = parseFactor();
    while (true) {
      if (consume('*')) {
        current = current * parseFactor();
      } else if (consume('/')) {
        current = current / parseFactor();
      } else {
        break;
      }
    }
    return current;
  }

  Expression parseFactor() {
    Expression base = parseAtom();
    if (consume('^')) {
      return pow(base, parseExponent());
    }
    return base;
  }

  double parseExponent() {
    skipSpace();
    size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skipSpace();
    }
    if (pos_ >= text_.size() || !startsNumber(text_[pos_])) {
      if (pos_ < text_.size() &&
          (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
           text_[pos_] == '(')) {
        fail("exponent must be a numeric constant", pos_);
      }
      fail("expected exponent after '^'", start);
    }
    double value = parseNumber();
    return negative ? -value : value;
  }

  static bool startsNumber(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  double parseNumber() {
    size_t start = pos_;
    double value = 0.0;
    auto result =
        std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (result.ec != std::errc()) fail("invalid number", start);
    pos_ = static_cast<size_t>(result.ptr - text_.data());
    return value;
  }

  Expression parseAtom() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input", pos_);
    char c = text_[pos_];
    if (startsNumber(c)) {
      return constant(parseNumber());
    }
    if (c == '(') {
      ++pos_;
      Expression inner = parseExpr();
      if (!consume(')')) fail("expected ')'", pos_);
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return negate(parseAtom());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return parseIdentifier();
    }
    fail(std::string("unexpected character '") + c + "'", pos_);
  }

  Expression parseIdentifier() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "exp" || name == "log" || name == "sqrt" || name == "sin" ||
        name == "cos") {
      if (!consume('(')) fail("expected '(' after '" + std::string(name) + "'", pos_);
      Expression arg = parseExpr();
      if (!consume(')')) fail("expected ')'", pos_);
      if (name == "exp") return exp(arg);
      if (name == "log") return log(arg);
      if (name == "sqrt") return sqrt(arg);
      if (name == "sin") return sin(arg);
      return cos(arg);
    }
    if (curveParameter_) {
      if (name == "u") return variable(1);
      fail("unknown identifier '" + std::string(name) + "', curves use 'u'", start);
    }
    if (name == "x") {
      size_t digitsStart = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ == digitsStart) fail("expected variable index after 'x'", start);
      int index = 0;
      auto result =
          std::from_chars(text_.data() + digitsStart, text_.data() + pos_, index);
      if (result.ec != std::errc()) fail("invalid variable index", digitsStart);
      if (index < 1 || index > dim_) {
        fail("variable x" + std::to_string(index) + " out of range for dimension " +
                 std::to_string(dim_),
             start);
      }
      return variable(index);
    }
    fail("unknown identifier '" + std::string(name) + "'", start);
  }
};

}  // namespace

Expression parseExpression(std::string_view text, int dim) {
  if (dim < 1) throw DomainError("dimension must be at least 1");
  return Parser(text, dim, false).run();
}

Expression parseCurveExpression(std::string_view text) {
  return Parser(text, 1, true).run();
}

}  // namespace iso

#include "iso/expr.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "iso/errors.hpp"

namespace iso {

namespace {

bool allFinite(double v) { return std::isfinite(v); }

std::string formatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Expression Expression::make(Node node) {
  return Expression(std::make_shared<const Node>(std::move(node)));
}

Expression::Expression() {
  static const std::shared_ptr<const Node> zero = std::make_shared<const Node>();
  node_ = zero;
}

Expression constant(double value) {
  if (!allFinite(value)) throw DomainError("constant must be finite");
  if (value == 0.0) value = 0.0;  // normalize -0
  Expression::Node node;
  node.kind = Expression::Kind::Constant;
  node.value = value;
  return Expression::make(std::move(node));
}

Expression variable(int index) {
  if (index < 1) throw DomainError("variable index must be positive");
  Expression::Node node;
  node.kind = Expression::Kind::Variable;
  node.index = index;
  return Expression::make(std::move(node));
}

Expression sum(std::vector<Expression> terms) {
  std::vector<Expression> flat;
  flat.reserve(terms.size());
  int constantAt = -1;
  double constantTotal = 0.0;
  auto absorb = [&](const Expression& term) {
    if (term.isConstant()) {
      if (constantAt < 0) {
        constantAt = static_cast<int>(flat.size());
        flat.push_back(term);
      }
      constantTotal += term.constantValue();
    } else {
      flat.push_back(term);
    }
  };
  for (const Expression& term : terms) {
    if (term.kind() == Expression::Kind::Sum) {
      for (const Expression& child : term.children()) absorb(child);
    } else {
      absorb(term);
    }
  }
  if (constantAt >= 0) {
    if (constantTotal == 0.0 && flat.size() > 1) {
      flat.erase(flat.begin() + constantAt);
    } else {
      flat[constantAt] = constant(constantTotal);
    }
  }
  if (flat.empty()) return constant(0.0);
  if (flat.size() == 1) return flat.front();
  Expression::Node node;
  node.kind = Expression::Kind::Sum;
  node.children = std::move(flat);
  return Expression::make(std::move(node));
}

Expression product(std::vector<Expression> factors) {
  std::vector<Expression> flat;
  flat.reserve(factors.size());
  int constantAt = -1;
  double constantTotal = 1.0;
  auto absorb = [&](const Expression& factor) {
    if (factor.isConstant()) {
      if (constantAt < 0) {
        constantAt = static_cast<int>(flat.size());
        flat.push_back(factor);
      }
      constantTotal *= factor.constantValue();
    } else {
      flat.push_back(factor);
    }
  };
  for (const Expression& factor : factors) {
    if (factor.kind() == Expression::Kind::Product) {
      for (const Expression& child : factor.children()) absorb(child);
    } else {
      absorb(factor);
    }
  }
  if (constantAt >= 0 && constantTotal == 0.0) return constant(0.0);
  if (!allFinite(constantTotal)) throw DomainError("constant overflow in product");
  bool negative = constantTotal < 0.0;
  double magnitude = negative ? -constantTotal : constantTotal;
  if (constantAt >= 0) {
    if (magnitude == 1.0 && flat.size() > 1) {
      flat.erase(flat.begin() + constantAt);
    } else {
      flat[constantAt] = constant(magnitude);
    }
  }
  Expression result;
  if (flat.empty()) {
    result = constant(1.0);
  } else if (flat.size() == 1) {
    result = flat.front();
  } else {
    Expression::Node node;
    node.kind = Expression::Kind::Product;
    node.children = std::move(flat);
    result = Expression::make(std::move(node));
  }
  return negative ? negate(result) : result;
}

Expression quotient(const Expression& numerator, const Expression& denominator) {
  if (denominator.isConstant(1.0)) return numerator;
  if (numerator.isConstant() && denominator.isConstant() &&
      denominator.constantValue() != 0.0) {
    double v = numerator.constantValue() / denominator.constantValue();
    if (allFinite(v)) return constant(v);
  }
  Expression::Node node;
  node.kind = Expression::Kind::Quotient;
  node.children = {numerator, denominator};
  return Expression::make(std::move(node));
}

Expression pow(const Expression& base, double exponent) {
  if (!allFinite(exponent)) throw DomainError("exponent must be finite");
  if (exponent == 1.0) return base;
  if (exponent == 0.0) return constant(1.0);
  if (base.isConstant()) {
    double v = std::pow(base.constantValue(), exponent);
    if (allFinite(v)) return constant(v);
  }
  Expression::Node node;
  node.kind = Expression::Kind::Power;
  node.value = exponent;
  node.children = {base};
  return Expression::make(std::move(node));
}

Expression pow(const Expression& base, const Expression& exponent) {
  if (!exponent.isConstant())
    throw DomainError("exponent must fold to a constant");
  return pow(base, exponent.constantValue());
}

Expression exp(const Expression& e) {
  if (e.isConstant()) {
    double v = std::exp(e.constantValue());
    if (allFinite(v)) return constant(v);
  }
  Expression::Node node;
  node.kind = Expression::Kind::Exp;
  node.children = {e};
  return Expression::make(std::move(node));
}

Expression log(const Expression& e) {
  if (e.isConstant() && e.constantValue() > 0.0) {
    return constant(std::log(e.constantValue()));
  }
  Expression::Node node;
  node.kind = Expression::Kind::Log;
  node.children = {e};
  return Expression::make(std::move(node));
}

Expression sqrt(const Expression& e) { return pow(e, 0.5); }

Expression sin(const Expression& e) {
  if (e.isConstant()) return constant(std::sin(e.constantValue()));
  Expression::Node node;
  node.kind = Expression::Kind::Sin;
  node.children = {e};
  return Expression::make(std::move(node));
}

Expression cos(const Expression& e) {
  if (e.isConstant()) return constant(std::cos(e.constantValue()));
  Expression::Node node;
  node.kind = Expression::Kind::Cos;
  node.children = {e};
  return Expression::make(std::move(node));
}

Expression negate(const Expression& e) {
  if (e.isConstant()) return constant(-e.constantValue());
  if (e.kind() == Expression::Kind::Negate) return e.children().front();
  Expression::Node node;
  node.kind = Expression::Kind::Negate;
  node.children = {e};
  return Expression::make(std::move(node));
}

// ---- equality --------------------------------------------------------------

bool operator==(const Expression& a, const Expression& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expression::Kind::Constant:
      return a.constantValue() == b.constantValue();
    case Expression::Kind::Variable:
      return a.variableIndex() == b.variableIndex();
    case Expression::Kind::Power:
      if (a.exponent() != b.exponent()) return false;
      break;
    default:
      break;
  }
  const auto& ca = a.children();
  const auto& cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (size_t i = 0; i < ca.size(); ++i) {
    if (!(ca[i] == cb[i])) return false;
  }
  return true;
}

// ---- evaluation ------------------------------------------------------------

namespace {

double evalNode(const Expression& e, const Eigen::VectorXd& x) {
  using Kind = Expression::Kind;
  double v = 0.0;
  switch (e.kind()) {
    case Kind::Constant:
      return e.constantValue();
    case Kind::Variable: {
      int i = e.variableIndex();
      if (i > x.size())
        throw DomainError("variable x" + std::to_string(i) +
                          " outside point dimension " + std::to_string(x.size()));
      return x(i - 1);
    }
    case Kind::Sum:
      for (const Expression& c : e.children()) v += evalNode(c, x);
      break;
    case Kind::Product:
      v = 1.0;
      for (const Expression& c : e.children()) v *= evalNode(c, x);
      break;
    case Kind::Quotient: {
      double num = evalNode(e.children()[0], x);
      double den = evalNode(e.children()[1], x);
      if (den == 0.0) throw DomainError("division by zero");
      v = num / den;
      break;
    }
    case Kind::Power: {
      double base = evalNode(e.children()[0], x);
      v = std::pow(base, e.exponent());
      if (!std::isfinite(v)) {
        if (base == 0.0 && e.exponent() < 0.0)
          throw DomainError("zero raised to a negative power");
        if (base < 0.0)
          throw DomainError("negative base with fractional exponent");
        throw DomainError("power evaluation is not finite");
      }
      return v;
    }
    case Kind::Exp:
      v = std::exp(evalNode(e.children()[0], x));
      break;
    case Kind::Log: {
      double arg = evalNode(e.children()[0], x);
      if (arg <= 0.0) throw DomainError("log of a non-positive value");
      v = std::log(arg);
      break;
    }
    case Kind::Sin:
      return std::sin(evalNode(e.children()[0], x));
    case Kind::Cos:
      return std::cos(evalNode(e.children()[0], x));
    case Kind::Negate:
      return -evalNode(e.children()[0], x);
  }
  if (!std::isfinite(v)) throw DomainError("evaluation is not finite");
  return v;
}

}  // namespace

double evaluate(const Expression& e, const Eigen::VectorXd& x) {
  return evalNode(e, x);
}

double evaluate(const Expression& e, double x1) {
  Eigen::VectorXd x(1);
  x(0) = x1;
  return evalNode(e, x);
}

// ---- differentiation -------------------------------------------------------

Expression differentiate(const Expression& e, int index) {
  using Kind = Expression::Kind;
  if (index < 1) throw DomainError("derivative index must be positive");
  switch (e.kind()) {
    case Kind::Constant:
      return constant(0.0);
    case Kind::Variable:
      return constant(e.variableIndex() == index ? 1.0 : 0.0);
    case Kind::Sum: {
      std::vector<Expression> terms;
      terms.reserve(e.children().size());
      for (const Expression& c : e.children()) terms.push_back(differentiate(c, index));
      return sum(std::move(terms));
    }
    case Kind::Product: {
      const auto& factors = e.children();
      std::vector<Expression> terms;
      terms.reserve(factors.size());
      for (size_t i = 0; i < factors.size(); ++i) {
        std::vector<Expression> piece = factors;
        piece[i] = differentiate(factors[i], index);
        terms.push_back(product(std::move(piece)));
      }
      return sum(std::move(terms));
    }
    case Kind::Quotient: {
      const Expression& a = e.children()[0];
      const Expression& b = e.children()[1];
      Expression da = differentiate(a, index);
      Expression db = differentiate(b, index);
      return (da * b - a * db) / pow(b, 2.0);
    }
    case Kind::Power: {
      const Expression& base = e.children()[0];
      double p = e.exponent();
      return constant(p) * pow(base, p - 1.0) * differentiate(base, index);
    }
    case Kind::Exp:
      return exp(e.children()[0]) * differentiate(e.children()[0], index);
    case Kind::Log:
      return differentiate(e.children()[0], index) / e.children()[0];
    case Kind::Sin:
      return cos(e.children()[0]) * differentiate(e.children()[0], index);
    case Kind::Cos:
      return negate(sin(e.children()[0])) * differentiate(e.children()[0], index);
    case Kind::Negate:
      return negate(differentiate(e.children()[0], index));
  }
  throw InternalError("unhandled expression kind in differentiate");
}

// ---- structure queries -----------------------------------------------------

int maxVariableIndex(const Expression& e) {
  if (e.kind() == Expression::Kind::Variable) return e.variableIndex();
  int best = 0;
  for (const Expression& c : e.children()) {
    best = std::max(best, maxVariableIndex(c));
  }
  return best;
}

Expression substituteVariables(const Expression& e,
                               const std::vector<Expression>& replacements) {
  using Kind = Expression::Kind;
  switch (e.kind()) {
    case Kind::Constant:
      return e;
    case Kind::Variable: {
      size_t i = static_cast<size_t>(e.variableIndex());
      if (i > replacements.size())
        throw DomainError("no replacement for variable x" + std::to_string(i));
      return replacements[i - 1];
    }
    case Kind::Sum: {
      std::vector<Expression> parts;
      parts.reserve(e.children().size());
      for (const Expression& c : e.children())
        parts.push_back(substituteVariables(c, replacements));
      return sum(std::move(parts));
    }
    case Kind::Product: {
      std::vector<Expression> parts;
      parts.reserve(e.children().size());
      for (const Expression& c : e.children())
        parts.push_back(substituteVariables(c, replacements));
      return product(std::move(parts));
    }
    case Kind::Quotient:
      return quotient(substituteVariables(e.children()[0], replacements),
                      substituteVariables(e.children()[1], replacements));
    case Kind::Power:
      return pow(substituteVariables(e.children()[0], replacements), e.exponent());
    case Kind::Exp:
      return exp(substituteVariables(e.children()[0], replacements));
    case Kind::Log:
      return log(substituteVariables(e.children()[0], replacements));
    case Kind::Sin:
      return sin(substituteVariables(e.children()[0], replacements));
    case Kind::Cos:
      return cos(substituteVariables(e.children()[0], replacements));
    case Kind::Negate:
      return negate(substituteVariables(e.children()[0], replacements));
  }
  throw InternalError("unhandled expression kind in substituteVariables");
}

// ---- printing --------------------------------------------------------------
//
// Precedence levels: sum 1, product/quotient 2, power 3, everything else 4.
// The renderer emits the minimal parenthesization that reparses to the same
// tree under the grammar (where unary minus binds tighter than '^').

namespace {

int printLevel(const Expression& e) {
  using Kind = Expression::Kind;
  switch (e.kind()) {
    case Kind::Sum:
      return 1;
    case Kind::Product:
    case Kind::Quotient:
      return 2;
    case Kind::Power:
      return 3;
    default:
      return 4;
  }
}

void render(const Expression& e, int minLevel, std::string& out);

void renderParens(const Expression& e, std::string& out) {
  out += '(';
  render(e, 1, out);
  out += ')';
}

void renderCall(const char* name, const Expression& arg, std::string& out) {
  out += name;
  out += '(';
  render(arg, 1, out);
  out += ')';
}

void render(const Expression& e, int minLevel, std::string& out) {
  using Kind = Expression::Kind;
  if (printLevel(e) < minLevel) {
    renderParens(e, out);
    return;
  }
  switch (e.kind()) {
    case Kind::Constant: {
      double v = e.constantValue();
      if (v < 0.0) {
        out += '-';
        out += formatDouble(-v);
      } else {
        out += formatDouble(v);
      }
      break;
    }
    case Kind::Variable:
      out += 'x';
      out += std::to_string(e.variableIndex());
      break;
    case Kind::Sum: {
      const auto& terms = e.children();
      for (size_t i = 0; i < terms.size(); ++i) {
        const Expression& t = terms[i];
        if (t.kind() == Kind::Negate) {
          // After '+'/'-' the minus sign negates a whole term, but in the
          // leading slot it is a unary minus and binds to a single atom.
          out += '-';
          render(t.children()[0], i == 0 ? 4 : 2, out);
        } else if (t.isConstant() && t.constantValue() < 0.0) {
          out += '-';
          out += formatDouble(-t.constantValue());
        } else {
          if (i > 0) out += '+';
          render(t, 2, out);
        }
      }
      break;
    }
    case Kind::Product: {
      const auto& factors = e.children();
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += '*';
        // A quotient is left-associative with '*', so it may only appear
        // bare in the first slot: a/b*c groups as (a/b)*c.
        int level = (i > 0 && factors[i].kind() == Kind::Quotient) ? 3 : 2;
        render(factors[i], level, out);
      }
      break;
    }
    case Kind::Quotient:
      render(e.children()[0], 2, out);
      out += '/';
      render(e.children()[1], 3, out);
      break;
    case Kind::Power:
      render(e.children()[0], 4, out);
      out += '^';
      if (e.exponent() < 0.0) {
        out += '-';
        out += formatDouble(-e.exponent());
      } else {
        out += formatDouble(e.exponent());
      }
      break;
    case Kind::Exp:
      renderCall("exp", e.children()[0], out);
      break;
    case Kind::Log:
      renderCall("log", e.children()[0], out);
      break;
    case Kind::Sin:
      renderCall("sin", e.children()[0], out);
      break;
    case Kind::Cos:
      renderCall("cos", e.children()[0], out);
      break;
    case Kind::Negate:
      out += '-';
      render(e.children()[0], 4, out);
      break;
  }
}

}  // namespace

std::string toString(const Expression& e) {
  std::string out;
  render(e, 1, out);
  return out;
}

}  // namespace iso

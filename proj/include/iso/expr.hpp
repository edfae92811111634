#ifndef ISO_EXPR_HPP
#define ISO_EXPR_HPP

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace iso {

/// Immutable expression tree for scalar fields on the positive orthant.
///
/// Trees are built through the factory functions below, which perform
/// constant folding (evaluating constant subtrees, eliminating 0/1
/// identities and hoisting negative constant factors) at construction.
/// No other rewriting is ever applied, so structural equality and the
/// printed form are stable. Nodes are shared via shared_ptr; expressions
/// are values and safe to evaluate concurrently.
///
/// Exponents of `^` are compile-time constants; a general exponent goes
/// through exp/log explicitly. Sums and products are n-ary.
class Expression {
 public:
  enum class Kind {
    Constant,
    Variable,  // 1-based index
    Sum,
    Product,
    Quotient,
    Power,  // base expression, constant real exponent
    Exp,
    Log,
    Sin,
    Cos,
    Negate,
  };

  Expression();  // the constant 0

  Kind kind() const { return node_->kind; }
  double constantValue() const { return node_->value; }  // Constant only
  int variableIndex() const { return node_->index; }     // Variable only
  double exponent() const { return node_->value; }       // Power only
  const std::vector<Expression>& children() const { return node_->children; }

  bool isConstant() const { return kind() == Kind::Constant; }
  bool isConstant(double v) const {
    return isConstant() && node_->value == v;
  }

 private:
  struct Node {
    Kind kind = Kind::Constant;
    double value = 0.0;  // constant value / power exponent
    int index = 0;       // variable index
    std::vector<Expression> children;
  };

  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expression make(Node node);

  std::shared_ptr<const Node> node_;

  friend Expression constant(double);
  friend Expression variable(int);
  friend Expression sum(std::vector<Expression>);
  friend Expression product(std::vector<Expression>);
  friend Expression quotient(const Expression&, const Expression&);
  friend Expression pow(const Expression&, double);
  friend Expression exp(const Expression&);
  friend Expression log(const Expression&);
  friend Expression sin(const Expression&);
  friend Expression cos(const Expression&);
  friend Expression negate(const Expression&);
};

// ---- construction ----------------------------------------------------------

Expression constant(double value);
Expression variable(int index);  // 1-based
Expression sum(std::vector<Expression> terms);
Expression product(std::vector<Expression> factors);
Expression quotient(const Expression& numerator, const Expression& denominator);
Expression pow(const Expression& base, double exponent);
/// Exponent expression must fold to a constant; throws DomainError otherwise.
Expression pow(const Expression& base, const Expression& exponent);
Expression exp(const Expression& e);
Expression log(const Expression& e);
Expression sqrt(const Expression& e);  // desugars to e^0.5
Expression sin(const Expression& e);
Expression cos(const Expression& e);
Expression negate(const Expression& e);

inline Expression operator+(const Expression& a, const Expression& b) {
  return sum({a, b});
}
inline Expression operator-(const Expression& a, const Expression& b) {
  return sum({a, negate(b)});
}
inline Expression operator-(const Expression& a) { return negate(a); }
inline Expression operator*(const Expression& a, const Expression& b) {
  return product({a, b});
}
inline Expression operator/(const Expression& a, const Expression& b) {
  return quotient(a, b);
}

// ---- queries ---------------------------------------------------------------

/// Structural equality (exact constants, same kinds, same children).
bool operator==(const Expression& a, const Expression& b);
inline bool operator!=(const Expression& a, const Expression& b) { return !(a == b); }

/// Evaluates at x (x(i-1) feeds variable i). Throws DomainError on any
/// undefined operation or non-finite intermediate; never returns inf/NaN.
double evaluate(const Expression& e, const Eigen::VectorXd& x);
/// Single-variable convenience (curve coordinates, homothetic outer maps).
double evaluate(const Expression& e, double x1);

/// Exact symbolic partial derivative with respect to variable `index`.
Expression differentiate(const Expression& e, int index);

/// Largest variable index that occurs (0 for constant expressions).
int maxVariableIndex(const Expression& e);

/// Simultaneous substitution: variable i becomes replacements[i-1].
/// Every occurring variable must have a replacement.
Expression substituteVariables(const Expression& e,
                               const std::vector<Expression>& replacements);

/// Canonical text form; parseExpression(toString(e), n) reconstructs e for
/// any tree built by the factories above.
std::string toString(const Expression& e);

// ---- parsing ---------------------------------------------------------------
//
// Grammar (whitespace insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' signed-number]
//   atom   := number | ident | '(' expr ')'
//           | ('exp'|'log'|'sqrt'|'sin'|'cos') '(' expr ')' | '-' atom
//   ident  := 'x' digits   (1-based, bounded by the declared dimension)
//
// sqrt(e) desugars to e^0.5. Numbers accept scientific notation.

/// Parses a scalar field on n inputs. Throws ParseError (with byte offset)
/// on syntax errors, unknown identifiers, out-of-range variable indices and
/// non-constant exponents.
Expression parseExpression(std::string_view text, int dim);

/// Parses a curve coordinate in the single parameter `u` (mapped to
/// variable 1).
Expression parseCurveExpression(std::string_view text);

}  // namespace iso

#endif  // ISO_EXPR_HPP

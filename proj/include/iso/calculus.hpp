#ifndef ISO_CALCULUS_HPP
#define ISO_CALCULUS_HPP

#include <Eigen/Dense>
#include <vector>

#include "iso/expr.hpp"
#include "iso/model.hpp"

namespace iso {

/// Value, gradient and Hessian of a scalar field at one point. The Hessian
/// is exactly symmetric (the upper triangle is computed and mirrored).
struct DiffBundle {
  Eigen::VectorXd point;
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

/// Symbolic first and second partials of a function, built once so that
/// per-point evaluation is just tree walks. All evaluation entry points
/// require the point to lie in the positive orthant.
class Differentials {
 public:
  explicit Differentials(const FunctionModel& model);
  Differentials(Expression f, int dim);

  int dim() const { return dim_; }
  const Expression& function() const { return f_; }
  /// d f / d x_i, 1-based.
  const Expression& partial(int i) const;
  /// d^2 f / (d x_i d x_j), 1-based, order irrelevant.
  const Expression& partial(int i, int j) const;
  /// Sum of the pure second partials.
  const Expression& laplacianExpression() const { return laplacian_; }
  /// Laplacian of the Laplacian; built on each call, so cache the result
  /// when evaluating along a sweep.
  Expression bilaplacianExpression() const;

  DiffBundle at(const Eigen::VectorXd& x) const;
  double valueAt(const Eigen::VectorXd& x) const;
  Eigen::VectorXd gradientAt(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd hessianAt(const Eigen::VectorXd& x) const;
  double laplacianAt(const Eigen::VectorXd& x) const;

 private:
  int dim_;
  Expression f_;
  std::vector<Expression> gradient_;    // size n
  std::vector<Expression> hessianUpper_;  // row-major upper triangle, size n(n+1)/2
  Expression laplacian_;

  const Expression& upper(int i, int j) const;  // 0-based, i <= j
};

DiffBundle diffBundle(const FunctionModel& model, const Eigen::VectorXd& x);
double laplacian(const FunctionModel& model, const Eigen::VectorXd& x);
double bilaplacian(const FunctionModel& model, const Eigen::VectorXd& x);

/// Central-difference derivative oracles over the model's direct evaluation
/// route, for validating the symbolic derivatives. Steps are
/// h_i = 1e-5 * max(x_i, 1); the point must keep a 10*h_i margin from the
/// orthant boundary (NumericError otherwise).
Eigen::VectorXd fdGradient(const FunctionModel& model, const Eigen::VectorXd& x);
Eigen::MatrixXd fdHessian(const FunctionModel& model, const Eigen::VectorXd& x);

/// Throws DomainError unless every coordinate is strictly positive.
void requirePositive(const Eigen::VectorXd& x);

}  // namespace iso

#endif  // ISO_CALCULUS_HPP

#ifndef ISO_MODEL_HPP
#define ISO_MODEL_HPP

#include <Eigen/Dense>
#include <memory>
#include <string>

#include "iso/expr.hpp"

namespace iso {

enum class FamilyKind {
  CobbDouglas,        // gamma * prod x_i^alpha_i
  CES,                // gamma * (sum a_i^rho x_i^rho)^(d/rho)
  PerfectSubstitute,  // sum a_i x_i
  Homothetic,         // F(h(x)) for an inner model h and scalar map F
  Generic,            // arbitrary expression
};

/// A production function on n >= 2 inputs, known either as a structured
/// family (with parameters) or as a raw expression. Each model carries two
/// evaluation routes: the lowered expression tree (used for symbolic
/// differentiation) and a closed-form direct evaluation, which downstream
/// checks compare against each other.
///
/// Models are immutable values; copies share state.
class FunctionModel {
 public:
  static FunctionModel cobbDouglas(double gamma, Eigen::VectorXd alpha);
  static FunctionModel ces(double gamma, double degree, double rho,
                           Eigen::VectorXd weights);
  static FunctionModel perfectSubstitute(Eigen::VectorXd weights);
  /// `outer` is a one-variable expression; x1 stands for the inner value.
  static FunctionModel homothetic(Expression outer, FunctionModel inner);
  static FunctionModel generic(Expression f, int dim);

  FamilyKind family() const;
  int dim() const;

  /// Lowered expression tree over x1..xn.
  const Expression& expression() const;

  /// Closed-form evaluation on the positive orthant, independent of the
  /// lowered tree. Throws DomainError off the orthant or on overflow.
  double evaluateDirect(const Eigen::VectorXd& x) const;

  // Family parameters. Throw ModelError when the family does not match.
  double gamma() const;
  double cesDegree() const;
  double cesRho() const;
  const Eigen::VectorXd& weights() const;  // Cobb-Douglas alpha or CES/linear a
  const Expression& outer() const;
  const FunctionModel& inner() const;

  /// Short structural label, e.g. "cobb-douglas(gamma=2, alpha=[0.5, 0.5])".
  std::string describe() const;

 private:
  struct Data;
  explicit FunctionModel(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

}  // namespace iso

#endif  // ISO_MODEL_HPP

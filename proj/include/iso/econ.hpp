#ifndef ISO_ECON_HPP
#define ISO_ECON_HPP

#include <Eigen/Dense>
#include <string>

#include "iso/expr.hpp"
#include "iso/model.hpp"
#include "iso/numeric.hpp"

namespace iso {

/// Whether f(t*x) = t^d f(x) holds on the sampled domain. The degree is the
/// mean of the pointwise Euler ratios <x, grad f> / f; the verdict requires
/// that ratio to be constant across the sample (spread <= 1e-6*(1+|mean|))
/// and survives a direct doubling test f(2x) = 2^d f(x) at ten points.
struct HomogeneityVerdict {
  bool homogeneous = false;
  double degree = 0.0;  // meaningful only when homogeneous
  double spread = 0.0;  // max - min of the Euler ratios
};

enum class ReturnsToScale { Increasing, Constant, Decreasing, NotApplicable };

/// Outcome of the linearity test: Hessian entries vanish across the sample
/// and values match the tangent plane through the first sample point, whose
/// gradient provides the recovered coefficients.
struct SubstituteVerdict {
  bool yes = false;
  Eigen::VectorXd coefficients;
  double worstHessianEntry = 0.0;
  double worstValueResidual = 0.0;
};

/// Best-effort family recognition of a raw expression.
enum class FamilyTagKind {
  PerfectSubstitute,
  CobbDouglas,
  PowerOfPerfectSubstitute,  // (sum b_i x_i)^d with d != 1
  CES,
  Generic,
};

struct FamilyTag {
  FamilyTagKind kind = FamilyTagKind::Generic;
  std::string label;       // human-readable tag with parameters
  double gamma = 0.0;      // Cobb-Douglas / CES scale
  double degree = 0.0;     // CES d or power degree
  double rho = 0.0;        // CES exponent
  Eigen::VectorXd weights;  // alpha / a / b, per kind (a1 = 1 gauge for CES)
  double residual = 0.0;   // worst reconstruction residual of the fit
};

struct EconReport {
  HomogeneityVerdict homogeneity;
  ReturnsToScale returnsToScale = ReturnsToScale::NotApplicable;
  SubstituteVerdict substitute;
  double positivity = 0.0;  // fraction of the sample with f > 0
};

HomogeneityVerdict estimateHomogeneityDegree(const FunctionModel& m,
                                             const SamplePlan& plan);

/// Constant iff homogeneous with |degree - 1| <= 1e-6.
ReturnsToScale returnsToScale(const HomogeneityVerdict& h);

SubstituteVerdict isPerfectSubstitute(const FunctionModel& m,
                                      const SamplePlan& plan);

/// Tests, in order: perfect substitute, Cobb-Douglas, power of a perfect
/// substitute, CES; Generic is the fallback, never an error. plan.dim is
/// the declared input dimension.
FamilyTag classifyFamily(const Expression& e, const SamplePlan& plan);

EconReport econReport(const FunctionModel& m, const SamplePlan& plan);

const char* toString(ReturnsToScale rts);
const char* toString(FamilyTagKind kind);

}  // namespace iso

#endif  // ISO_ECON_HPP

#ifndef ISO_CURVATURE_HPP
#define ISO_CURVATURE_HPP

#include <Eigen/Dense>
#include <string>

#include "iso/calculus.hpp"
#include "iso/model.hpp"
#include "iso/numeric.hpp"

namespace iso {

/// Pointwise curvature data of the graph hypersurface of f.
///
/// The graph lives in R^(n+1) carrying the degenerate metric that measures
/// lengths through the projection onto the first n coordinates (the top
/// view); the distinguished vertical direction is i = (0,...,0,1). In that
/// geometry the principal curvatures at a point are the eigenvalues of the
/// Hessian of f, and the fundamental curvatures K_j are binomial-averaged
/// elementary symmetric functions of them.
struct CurvatureProfile {
  Eigen::VectorXd point;
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
  Eigen::VectorXd principalCurvatures;  // ascending eigenvalues of the Hessian
  Eigen::MatrixXd principalDirections;  // orthonormal top views, one column each
  Eigen::MatrixXd liftedDirections;     // (n+1) rows: t_j lifted by <t_j, grad f>
  Eigen::VectorXd fundamentalCurvatures;  // K_1..K_n, eigenvalue route
  double isotropicMeanCurvature = 0.0;    // K_1 = trace/n
  double relativeCurvature = 0.0;         // K_n = det of the Hessian
};

/// Builds the profile at x. The fundamental curvatures are computed twice,
/// from the eigenvalues and from principal-minor sums, and cross-checked
/// within 1e-8*(1+|H|_max^n); disagreement throws InternalError. The stored
/// values are the eigenvalue route.
CurvatureProfile curvatureProfile(const FunctionModel& m, const Eigen::VectorXd& x);
CurvatureProfile curvatureProfile(const Differentials& d, const Eigen::VectorXd& x);

/// Quadratic form t' (D^2 f) t of a unit top-view direction t: the normal
/// curvature of any surface curve through x with that tangent. Throws
/// DomainError unless |t| = 1 within 1e-10.
double normalCurvature(const FunctionModel& m, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& t);
double normalCurvature(const Differentials& d, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& t);

/// Sectional curvature of the tangent plane spanned by orthonormal top-view
/// directions u, v: the determinant of the 2x2 restriction of the Hessian,
/// which equals the product of the extremal normal curvatures over the
/// plane. Throws DomainError unless u, v are orthonormal within 1e-10.
double sectionalCurvature(const FunctionModel& m, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& u, const Eigen::VectorXd& v);
double sectionalCurvature(const Differentials& d, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// Which tangent planes a flatness sweep inspects.
struct PlaneStrategy {
  enum class Kind { CoordinatePairs, RandomPlanes };
  Kind kind = Kind::CoordinatePairs;
  int planes = 8;  // per sample point, RandomPlanes only

  static PlaneStrategy coordinatePairs() { return {}; }
  static PlaneStrategy randomPlanes(int k);
  std::string name() const;
};

/// Outcome of a sampled geometric predicate. The quantifier "everywhere" is
/// replaced by "at every point of the plan's sample"; the verdict carries
/// the plan and tolerances so it can be reproduced. holds is equivalent to
/// worstResidual <= worstThreshold, where the worst point maximizes the
/// residual/threshold ratio (ties broken by sample order).
struct PredicateVerdict {
  std::string predicate;
  bool holds = false;
  Eigen::VectorXd worstPoint;
  double worstResidual = 0.0;
  double worstThreshold = 0.0;
  SamplePlan plan;
  Tolerance tol;
  std::string strategy;  // flatness only
  std::string finding;   // divergence note, empty when none
};

/// Holds iff |laplacian| <= atol + rtol*|f| at every sample point
/// (the surface is isotropic minimal iff f is harmonic).
PredicateVerdict isIsotropicMinimal(const FunctionModel& m, const SamplePlan& plan,
                                    const Tolerance& tol = Tolerance());

/// Holds iff |det D^2 f| <= atol + rtol*|H|_max^n at every sample point
/// (null relative curvature: the homogeneous Monge-Ampere equation).
PredicateVerdict hasNullRelativeCurvature(const FunctionModel& m,
                                          const SamplePlan& plan,
                                          const Tolerance& tol = Tolerance());

/// Holds iff every inspected sectional curvature vanishes within
/// atol + rtol*|H|_max^2. With the coordinate-pairs strategy, a passing
/// sweep additionally compares the largest eigenvalue-pair product against
/// the same bound; if coordinate sections vanish but that product does not,
/// the verdict keeps the strategy's answer and records a finding.
PredicateVerdict isIsotropicFlat(const FunctionModel& m, const SamplePlan& plan,
                                 const Tolerance& tol = Tolerance(),
                                 const PlaneStrategy& strategy = PlaneStrategy());

/// Holds iff |laplacian of laplacian| <= atol + rtol*|f| at every sample
/// point.
PredicateVerdict isIsotropicBiharmonic(const FunctionModel& m,
                                       const SamplePlan& plan,
                                       const Tolerance& tol = Tolerance());

}  // namespace iso

#endif  // ISO_CURVATURE_HPP

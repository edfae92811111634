#include "iso/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "iso/errors.hpp"

namespace iso {

namespace {

std::string formatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double maxAbs(const Eigen::MatrixXd& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

void requireUnit(const Eigen::VectorXd& t) {
  if (std::abs(t.norm() - 1.0) > 1e-10) {
    throw DomainError("direction must be a unit vector (|t| = " +
                      formatDouble(t.norm()) + ")");
  }
}

void requireOrthonormal(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  requireUnit(u);
  requireUnit(v);
  if (std::abs(u.dot(v)) > 1e-10) {
    throw DomainError("plane directions must be orthogonal (<u,v> = " +
                      formatDouble(u.dot(v)) + ")");
  }
}

void requireDirectionDim(const Eigen::VectorXd& t, int dim) {
  if (t.size() != dim) {
    throw DomainError("direction dimension " + std::to_string(t.size()) +
                      " does not match function dimension " + std::to_string(dim));
  }
}

}  // namespace

CurvatureProfile curvatureProfile(const Differentials& d, const Eigen::VectorXd& x) {
  const int n = d.dim();
  CurvatureProfile profile;
  profile.point = x;
  profile.value = d.valueAt(x);
  profile.gradient = d.gradientAt(x);
  profile.hessian = d.hessianAt(x);

  EigenDecomposition eigen = eigenSymmetric(profile.hessian);
  profile.principalCurvatures = eigen.values;
  profile.principalDirections = eigen.vectors;
  profile.liftedDirections.resize(n + 1, n);
  for (int j = 0; j < n; ++j) {
    profile.liftedDirections.col(j).head(n) = eigen.vectors.col(j);
    profile.liftedDirections(n, j) = eigen.vectors.col(j).dot(profile.gradient);
  }

  profile.fundamentalCurvatures = elementarySymmetricMeans(eigen.values);
  Eigen::VectorXd minorRoute = principalMinorMeans(profile.hessian);
  double scale = 1.0 + std::pow(maxAbs(profile.hessian), n);
  for (int j = 0; j < n; ++j) {
    double gap = std::abs(profile.fundamentalCurvatures(j) - minorRoute(j));
    if (gap > 1e-8 * scale) {
      throw InternalError(
          "fundamental curvature K" + std::to_string(j + 1) +
          " disagrees between the eigenvalue and principal-minor routes (" +
          formatDouble(profile.fundamentalCurvatures(j)) + " vs " +
          formatDouble(minorRoute(j)) + ")");
    }
  }
  profile.isotropicMeanCurvature = profile.fundamentalCurvatures(0);
  profile.relativeCurvature = profile.fundamentalCurvatures(n - 1);
  return profile;
}

CurvatureProfile curvatureProfile(const FunctionModel& m, const Eigen::VectorXd& x) {
  return curvatureProfile(Differentials(m), x);
}

double normalCurvature(const Differentials& d, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& t) {
  requireDirectionDim(t, d.dim());
  requireUnit(t);
  Eigen::MatrixXd h = d.hessianAt(x);
  return t.dot(h * t);
}

double normalCurvature(const FunctionModel& m, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& t) {
  return normalCurvature(Differentials(m), x, t);
}

double sectionalCurvature(const Differentials& d, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  requireDirectionDim(u, d.dim());
  requireDirectionDim(v, d.dim());
  requireOrthonormal(u, v);
  Eigen::MatrixXd h = d.hessianAt(x);
  double huu = u.dot(h * u);
  double hvv = v.dot(h * v);
  double huv = u.dot(h * v);
  return huu * hvv - huv * huv;
}

double sectionalCurvature(const FunctionModel& m, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  return sectionalCurvature(Differentials(m), x, u, v);
}

PlaneStrategy PlaneStrategy::randomPlanes(int k) {
  if (k < 1) throw DomainError("random-plane count must be positive");
  PlaneStrategy s;
  s.kind = Kind::RandomPlanes;
  s.planes = k;
  return s;
}

std::string PlaneStrategy::name() const {
  if (kind == Kind::CoordinatePairs) return "coordinatePairs";
  return "randomPlanes(" + std::to_string(planes) + ")";
}

// ---- sampled predicates ------------------------------------------------------

namespace {

// Sequential worst-point accumulator: keeps the sample point maximizing
// residual/threshold (first occurrence wins ties).
class WorstTracker {
 public:
  void offer(const Eigen::VectorXd& x, double residual, double threshold) {
    double ratio = threshold > 0.0 ? residual / threshold
                                   : (residual > 0.0 ? HUGE_VAL : 0.0);
    if (!seen_ || ratio > bestRatio_) {
      seen_ = true;
      bestRatio_ = ratio;
      point_ = x;
      residual_ = residual;
      threshold_ = threshold;
    }
  }

  void writeTo(PredicateVerdict& verdict) const {
    verdict.worstPoint = point_;
    verdict.worstResidual = residual_;
    verdict.worstThreshold = threshold_;
    verdict.holds = residual_ <= threshold_;
  }

 private:
  bool seen_ = false;
  double bestRatio_ = 0.0;
  Eigen::VectorXd point_;
  double residual_ = 0.0;
  double threshold_ = 0.0;
};

SamplePlan planForModel(const FunctionModel& m, SamplePlan plan) {
  plan.dim = m.dim();
  return plan;
}

}  // namespace

PredicateVerdict isIsotropicMinimal(const FunctionModel& m, const SamplePlan& plan,
                                    const Tolerance& tol) {
  SamplePlan effective = planForModel(m, plan);
  Differentials d(m);
  PredicateVerdict verdict;
  verdict.predicate = "isotropicMinimal";
  verdict.plan = effective;
  verdict.tol = tol;
  WorstTracker worst;
  for (const Eigen::VectorXd& x : samplePoints(effective)) {
    double f = d.valueAt(x);
    double lap = d.laplacianAt(x);
    worst.offer(x, std::abs(lap), tol.bound(std::abs(f)));
  }
  worst.writeTo(verdict);
  return verdict;
}

PredicateVerdict hasNullRelativeCurvature(const FunctionModel& m,
                                          const SamplePlan& plan,
                                          const Tolerance& tol) {
  SamplePlan effective = planForModel(m, plan);
  Differentials d(m);
  PredicateVerdict verdict;
  verdict.predicate = "nullRelativeCurvature";
  verdict.plan = effective;
  verdict.tol = tol;
  WorstTracker worst;
  const int n = m.dim();
  for (const Eigen::VectorXd& x : samplePoints(effective)) {
    Eigen::MatrixXd h = d.hessianAt(x);
    double det = h.partialPivLu().determinant();
    double scale = std::pow(maxAbs(h), n);
    worst.offer(x, std::abs(det), tol.bound(scale));
  }
  worst.writeTo(verdict);
  return verdict;
}

PredicateVerdict isIsotropicFlat(const FunctionModel& m, const SamplePlan& plan,
                                 const Tolerance& tol,
                                 const PlaneStrategy& strategy) {
  SamplePlan effective = planForModel(m, plan);
  Differentials d(m);
  const int n = m.dim();
  PredicateVerdict verdict;
  verdict.predicate = "isotropicFlat";
  verdict.plan = effective;
  verdict.tol = tol;
  verdict.strategy = strategy.name();

  // Plane draws (random strategy) are consumed sequentially over the sample,
  // so the same plan yields the same planes.
  Xoshiro256pp rng(effective.seed ^ 0x706c616e65735ull);
  WorstTracker worst;
  WorstTracker eigenPairWorst;  // max |product of two largest eigenvalues|
  for (const Eigen::VectorXd& x : samplePoints(effective)) {
    Eigen::MatrixXd h = d.hessianAt(x);
    double threshold = tol.bound(maxAbs(h) * maxAbs(h));
    if (strategy.kind == PlaneStrategy::Kind::CoordinatePairs) {
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          double minor = h(j, j) * h(k, k) - h(j, k) * h(j, k);
          worst.offer(x, std::abs(minor), threshold);
        }
      }
    } else {
      for (int p = 0; p < strategy.planes; ++p) {
        Eigen::VectorXd u(n), v(n);
        while (true) {
          for (int i = 0; i < n; ++i) u(i) = rng.gaussian();
          if (u.norm() > 1e-8) break;
        }
        u.normalize();
        while (true) {
          for (int i = 0; i < n; ++i) v(i) = rng.gaussian();
          v -= u.dot(v) * u;
          if (v.norm() > 1e-8) break;
        }
        v.normalize();
        double huu = u.dot(h * u);
        double hvv = v.dot(h * v);
        double huv = u.dot(h * v);
        worst.offer(x, std::abs(huu * hvv - huv * huv), threshold);
      }
    }
    if (strategy.kind == PlaneStrategy::Kind::CoordinatePairs) {
      // Max |sectional| over all planes is the product of the two largest
      // |eigenvalues|; track it to detect rank > 1 behind vanishing minors.
      Eigen::VectorXd kappa = eigenvaluesSymmetric(h).cwiseAbs();
      std::sort(kappa.data(), kappa.data() + kappa.size());
      eigenPairWorst.offer(x, kappa(n - 1) * kappa(n - 2), threshold);
    }
  }
  worst.writeTo(verdict);

  if (strategy.kind == PlaneStrategy::Kind::CoordinatePairs && verdict.holds) {
    PredicateVerdict shadow;
    eigenPairWorst.writeTo(shadow);
    if (!shadow.holds) {
      std::string point = "(";
      for (Eigen::Index i = 0; i < shadow.worstPoint.size(); ++i) {
        if (i > 0) point += ", ";
        point += formatDouble(shadow.worstPoint(i));
      }
      point += ")";
      verdict.finding =
          "coordinate-plane sections vanish but the Hessian has rank > 1: "
          "largest eigenvalue-pair product " +
          formatDouble(shadow.worstResidual) + " exceeds " +
          formatDouble(shadow.worstThreshold) + " at " + point +
          "; a generic plane section does not vanish there";
    }
  }
  return verdict;
}

PredicateVerdict isIsotropicBiharmonic(const FunctionModel& m,
                                       const SamplePlan& plan,
                                       const Tolerance& tol) {
  SamplePlan effective = planForModel(m, plan);
  Differentials d(m);
  Expression bilap = d.bilaplacianExpression();
  PredicateVerdict verdict;
  verdict.predicate = "isotropicBiharmonic";
  verdict.plan = effective;
  verdict.tol = tol;
  WorstTracker worst;
  for (const Eigen::VectorXd& x : samplePoints(effective)) {
    double f = d.valueAt(x);
    double b = evaluate(bilap, x);
    worst.offer(x, std::abs(b), tol.bound(std::abs(f)));
  }
  worst.writeTo(verdict);
  return verdict;
}

}  // namespace iso

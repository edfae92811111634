#include "iso/econ.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "iso/calculus.hpp"
#include "iso/errors.hpp"

namespace iso {

namespace {

std::string formatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string formatVector(const Eigen::VectorXd& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += formatDouble(v(i));
  }
  out += "]";
  return out;
}

}  // namespace

HomogeneityVerdict estimateHomogeneityDegree(const FunctionModel& m,
                                             const SamplePlan& plan) {
  SamplePlan effective = plan;
  effective.dim = m.dim();
  Differentials d(m);
  std::vector<Eigen::VectorXd> points = samplePoints(effective);

  double lo = 0.0, hi = 0.0, total = 0.0;
  bool first = true;
  for (const Eigen::VectorXd& x : points) {
    double f = d.valueAt(x);
    if (f == 0.0) {
      throw DomainError("function vanishes at a sample point; Euler ratio "
                        "undefined there");
    }
    double ratio = x.dot(d.gradientAt(x)) / f;
    total += ratio;
    if (first) {
      lo = hi = ratio;
      first = false;
    } else {
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }

  HomogeneityVerdict verdict;
  verdict.degree = total / static_cast<double>(points.size());
  verdict.spread = hi - lo;
  verdict.homogeneous = verdict.spread <= 1e-6 * (1.0 + std::abs(verdict.degree));

  if (verdict.homogeneous) {
    // Confirm by direct scaling: f(2x) = 2^d f(x).
    double factor = std::pow(2.0, verdict.degree);
    size_t checks = std::min<size_t>(10, points.size());
    for (size_t i = 0; i < checks; ++i) {
      double fx = d.valueAt(points[i]);
      double f2x = d.valueAt(2.0 * points[i]);
      if (std::abs(f2x - factor * fx) > 1e-6 * (1.0 + std::abs(f2x))) {
        verdict.homogeneous = false;
        break;
      }
    }
  }
  return verdict;
}

ReturnsToScale returnsToScale(const HomogeneityVerdict& h) {
  if (!h.homogeneous) return ReturnsToScale::NotApplicable;
  if (std::abs(h.degree - 1.0) <= 1e-6) return ReturnsToScale::Constant;
  return h.degree > 1.0 ? ReturnsToScale::Increasing : ReturnsToScale::Decreasing;
}

SubstituteVerdict isPerfectSubstitute(const FunctionModel& m,
                                      const SamplePlan& plan) {
  SamplePlan effective = plan;
  effective.dim = m.dim();
  Differentials d(m);
  std::vector<Eigen::VectorXd> points = samplePoints(effective);

  SubstituteVerdict verdict;
  verdict.coefficients = d.gradientAt(points.front());
  double gradNorm = verdict.coefficients.norm();
  bool hessianFlat = true;
  bool valuesLinear = true;
  for (const Eigen::VectorXd& x : points) {
    Eigen::MatrixXd h = d.hessianAt(x);
    double entry = h.cwiseAbs().maxCoeff();
    verdict.worstHessianEntry = std::max(verdict.worstHessianEntry, entry);
    if (entry > 1e-9 * (1.0 + gradNorm)) hessianFlat = false;

    double f = d.valueAt(x);
    double residual = std::abs(f - verdict.coefficients.dot(x));
    verdict.worstValueResidual = std::max(verdict.worstValueResidual, residual);
    if (residual > 1e-8 * std::abs(f)) valuesLinear = false;
  }
  verdict.yes = hessianFlat && valuesLinear;
  return verdict;
}

// ---- family classification ---------------------------------------------------

namespace {

struct FitContext {
  SamplePlan plan;
  std::vector<Eigen::VectorXd> points;
};

bool fitCobbDouglas(const Differentials& d, const FitContext& ctx, FamilyTag& tag) {
  const int n = d.dim();
  const auto& points = ctx.points;
  // Log-log slopes x_i f_i / f must be constant per axis.
  Eigen::MatrixXd ratios(points.size(), n);
  for (size_t k = 0; k < points.size(); ++k) {
    const Eigen::VectorXd& x = points[k];
    double f = d.valueAt(x);
    if (f == 0.0) return false;
    for (int i = 0; i < n; ++i) {
      ratios(k, i) = x(i) * evaluate(d.partial(i + 1), x) / f;
    }
  }
  Eigen::VectorXd alpha(n);
  for (int i = 0; i < n; ++i) {
    alpha(i) = ratios.col(i).mean();
    double deviation = (ratios.col(i).array() - alpha(i)).abs().maxCoeff();
    if (deviation > 1e-8 * (1.0 + std::abs(alpha(i)))) return false;
    if (std::abs(alpha(i)) < 1e-7) return false;  // degenerate axis
  }
  // Scale and reconstruction.
  double gamma = 0.0;
  for (const Eigen::VectorXd& x : points) {
    double monomial = 1.0;
    for (int i = 0; i < n; ++i) monomial *= std::pow(x(i), alpha(i));
    gamma += d.valueAt(x) / monomial;
  }
  gamma /= static_cast<double>(points.size());
  if (!(gamma > 0.0) || !std::isfinite(gamma)) return false;
  double worst = 0.0;
  for (const Eigen::VectorXd& x : points) {
    double monomial = gamma;
    for (int i = 0; i < n; ++i) monomial *= std::pow(x(i), alpha(i));
    double f = d.valueAt(x);
    double residual = std::abs(f - monomial);
    if (residual > 1e-6 * (1.0 + std::abs(f))) return false;
    worst = std::max(worst, residual);
  }
  tag.kind = FamilyTagKind::CobbDouglas;
  tag.gamma = gamma;
  tag.weights = alpha;
  tag.residual = worst;
  tag.label = "cobb-douglas(gamma=" + formatDouble(gamma) +
              ", alpha=" + formatVector(alpha) + ")";
  return true;
}

bool fitPowerOfSubstitute(const Expression& e, const Differentials& d,
                          const FitContext& ctx, double degree, FamilyTag& tag) {
  if (std::abs(degree) < 1e-7) return false;
  // If f = (sum b_i x_i)^d then f^(1/d) is linear with gradient b.
  Expression root;
  try {
    root = pow(e, 1.0 / degree);
  } catch (const Error&) {
    return false;
  }
  FunctionModel rootModel = FunctionModel::generic(root, d.dim());
  SubstituteVerdict linear;
  try {
    linear = isPerfectSubstitute(rootModel, ctx.plan);
  } catch (const Error&) {
    return false;
  }
  if (!linear.yes) return false;
  tag.kind = FamilyTagKind::PowerOfPerfectSubstitute;
  tag.degree = degree;
  tag.weights = linear.coefficients;
  tag.residual = linear.worstValueResidual;
  tag.label = "power-of-perfect-substitute(d=" + formatDouble(degree) +
              ", b=" + formatVector(linear.coefficients) + ")";
  return true;
}

bool fitCes(const Differentials& d, const FitContext& ctx, double degree,
            FamilyTag& tag) {
  const int n = d.dim();
  const auto& points = ctx.points;
  // For the CES form, log(f_i / f_1) is affine in log(x_i / x_1) with slope
  // rho - 1 and intercept rho * log(a_i / a_1), the same slope on every
  // axis. Fit per axis by least squares and require consistency.
  double slopeSum = 0.0;
  Eigen::VectorXd intercepts(n);
  intercepts(0) = 0.0;
  for (int i = 1; i < n; ++i) {
    double sz = 0.0, sy = 0.0, szz = 0.0, szy = 0.0;
    for (const Eigen::VectorXd& x : points) {
      double fi = evaluate(d.partial(i + 1), x);
      double f1 = evaluate(d.partial(1), x);
      if (!(fi > 0.0) || !(f1 > 0.0)) return false;
      double z = std::log(x(i) / x(0));
      double y = std::log(fi / f1);
      sz += z;
      sy += y;
      szz += z * z;
      szy += z * y;
    }
    double count = static_cast<double>(points.size());
    double denom = szz - sz * sz / count;
    if (std::abs(denom) < 1e-12) return false;
    double slope = (szy - sz * sy / count) / denom;
    intercepts(i) = (sy - slope * sz) / count;
    slopeSum += slope;
  }
  double rho = slopeSum / static_cast<double>(n - 1) + 1.0;
  if (std::abs(rho) < 1e-6) return false;

  Eigen::VectorXd weights(n);
  weights(0) = 1.0;
  for (int i = 1; i < n; ++i) {
    weights(i) = std::exp(intercepts(i) / rho);
    if (!std::isfinite(weights(i)) || !(weights(i) > 0.0)) return false;
  }

  // Scale from the values, then validate the reconstruction everywhere.
  auto aggregate = [&](const Eigen::VectorXd& x) {
    double u = 0.0;
    for (int i = 0; i < n; ++i) u += std::pow(weights(i) * x(i), rho);
    return u;
  };
  double gamma = 0.0;
  for (const Eigen::VectorXd& x : points) {
    gamma += d.valueAt(x) / std::pow(aggregate(x), degree / rho);
  }
  gamma /= static_cast<double>(points.size());
  if (!(gamma > 0.0) || !std::isfinite(gamma)) return false;
  double worst = 0.0;
  for (const Eigen::VectorXd& x : points) {
    double f = d.valueAt(x);
    double fitted = gamma * std::pow(aggregate(x), degree / rho);
    double residual = std::abs(f - fitted);
    if (residual > 1e-6 * (1.0 + std::abs(f))) return false;
    worst = std::max(worst, residual);
  }
  tag.kind = FamilyTagKind::CES;
  tag.gamma = gamma;
  tag.degree = degree;
  tag.rho = rho;
  tag.weights = weights;
  tag.residual = worst;
  tag.label = "ces(gamma=" + formatDouble(gamma) + ", d=" + formatDouble(degree) +
              ", rho=" + formatDouble(rho) + ", a=" + formatVector(weights) +
              " with a1=1)";
  return true;
}

}  // namespace

FamilyTag classifyFamily(const Expression& e, const SamplePlan& plan) {
  if (plan.dim < 2) throw DomainError("classification needs at least two inputs");
  if (maxVariableIndex(e) > plan.dim)
    throw DomainError("expression uses a variable beyond the declared dimension");

  FunctionModel model = FunctionModel::generic(e, plan.dim);
  Differentials d(model);
  FitContext ctx{plan, samplePoints(plan)};

  FamilyTag tag;
  tag.kind = FamilyTagKind::Generic;
  tag.label = "generic";

  SubstituteVerdict substitute = isPerfectSubstitute(model, plan);
  if (substitute.yes) {
    tag.kind = FamilyTagKind::PerfectSubstitute;
    tag.weights = substitute.coefficients;
    tag.residual = substitute.worstValueResidual;
    tag.label = "perfect-substitute(a=" + formatVector(substitute.coefficients) + ")";
    return tag;
  }

  if (fitCobbDouglas(d, ctx, tag)) return tag;

  HomogeneityVerdict h = estimateHomogeneityDegree(model, plan);
  if (h.homogeneous) {
    if (fitPowerOfSubstitute(e, d, ctx, h.degree, tag)) return tag;
    if (fitCes(d, ctx, h.degree, tag)) return tag;
  }
  return tag;
}

EconReport econReport(const FunctionModel& m, const SamplePlan& plan) {
  EconReport report;
  report.homogeneity = estimateHomogeneityDegree(m, plan);
  report.returnsToScale = returnsToScale(report.homogeneity);
  report.substitute = isPerfectSubstitute(m, plan);

  SamplePlan effective = plan;
  effective.dim = m.dim();
  Differentials d(m);
  int positive = 0;
  std::vector<Eigen::VectorXd> points = samplePoints(effective);
  for (const Eigen::VectorXd& x : points) {
    if (d.valueAt(x) > 0.0) ++positive;
  }
  report.positivity = static_cast<double>(positive) /
                      static_cast<double>(points.size());
  return report;
}

const char* toString(ReturnsToScale rts) {
  switch (rts) {
    case ReturnsToScale::Increasing:
      return "increasing";
    case ReturnsToScale::Constant:
      return "constant";
    case ReturnsToScale::Decreasing:
      return "decreasing";
    case ReturnsToScale::NotApplicable:
      return "n/a";
  }
  return "n/a";
}

const char* toString(FamilyTagKind kind) {
  switch (kind) {
    case FamilyTagKind::PerfectSubstitute:
      return "perfect-substitute";
    case FamilyTagKind::CobbDouglas:
      return "cobb-douglas";
    case FamilyTagKind::PowerOfPerfectSubstitute:
      return "power-of-perfect-substitute";
    case FamilyTagKind::CES:
      return "ces";
    case FamilyTagKind::Generic:
      return "generic";
  }
  return "generic";
}

}  // namespace iso

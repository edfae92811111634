#include "iso/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iso/calculus.hpp"
#include "iso/errors.hpp"

namespace iso {

namespace {

constexpr double kRegularityFloor = 1e-12;
constexpr double kGeodesicZero = 1e-10;

}  // namespace

ArclengthTable::ArclengthTable(TopViewCurve curve) : curve_(std::move(curve)) {
  if (curve_.coords.empty()) throw CurveError("curve needs at least one coordinate");
  if (!(curve_.b > curve_.a)) throw CurveError("parameter interval is empty");
  if (curve_.panels < 1) throw CurveError("panel count must be positive");
  velocity_.reserve(curve_.coords.size());
  acceleration_.reserve(curve_.coords.size());
  for (const Expression& c : curve_.coords) {
    if (maxVariableIndex(c) > 1)
      throw CurveError("curve coordinates must depend on the parameter only");
    velocity_.push_back(differentiate(c, 1));
    acceleration_.push_back(differentiate(velocity_.back(), 1));
  }

  const int panels = curve_.panels;
  const double h = (curve_.b - curve_.a) / panels;
  knotU_.resize(panels + 1);
  knotS_.resize(panels + 1);
  knotU_[0] = curve_.a;
  knotS_[0] = 0.0;
  double left = speedAt(curve_.a);
  for (int p = 0; p < panels; ++p) {
    double u0 = curve_.a + p * h;
    double u1 = curve_.a + (p + 1) * h;
    double mid = speedAt(0.5 * (u0 + u1));
    double right = speedAt(u1);
    knotU_[p + 1] = u1;
    knotS_[p + 1] = knotS_[p] + (h / 6.0) * (left + 4.0 * mid + right);
    left = right;
  }
}

double ArclengthTable::speedAt(double u) const {
  double sq = 0.0;
  for (const Expression& v : velocity_) {
    double d = evaluate(v, u);
    sq += d * d;
  }
  double speed = std::sqrt(sq);
  if (speed < kRegularityFloor) {
    throw CurveError("curve is irregular (|x'| = " + std::to_string(speed) +
                     " at u = " + std::to_string(u) + ")");
  }
  return speed;
}

double ArclengthTable::parameterAt(double s) const {
  double length = totalLength();
  double slack = 1e-9 * std::max(1.0, length);
  if (s < -slack || s > length + slack) {
    throw DomainError("arclength " + std::to_string(s) +
                      " outside [0, " + std::to_string(length) + "]");
  }
  s = std::clamp(s, 0.0, length);
  auto it = std::upper_bound(knotS_.begin(), knotS_.end(), s);
  size_t hi = std::min<size_t>(knotS_.size() - 1,
                               static_cast<size_t>(it - knotS_.begin()));
  size_t lo = hi - 1;
  double ds = knotS_[hi] - knotS_[lo];
  double w = (s - knotS_[lo]) / ds;
  // Cubic Hermite in s with exact endpoint slopes du/ds = 1/speed.
  double m0 = ds / speedAt(knotU_[lo]);
  double m1 = ds / speedAt(knotU_[hi]);
  double w2 = w * w;
  double w3 = w2 * w;
  double h00 = 2.0 * w3 - 3.0 * w2 + 1.0;
  double h10 = w3 - 2.0 * w2 + w;
  double h01 = -2.0 * w3 + 3.0 * w2;
  double h11 = w3 - w2;
  return h00 * knotU_[lo] + h10 * m0 + h01 * knotU_[hi] + h11 * m1;
}

double ArclengthTable::arclengthAt(double u) const {
  double span = curve_.b - curve_.a;
  double slack = 1e-9 * std::max(1.0, std::abs(span));
  if (u < curve_.a - slack || u > curve_.b + slack) {
    throw DomainError("parameter " + std::to_string(u) + " outside [" +
                      std::to_string(curve_.a) + ", " + std::to_string(curve_.b) +
                      "]");
  }
  u = std::clamp(u, curve_.a, curve_.b);
  auto it = std::upper_bound(knotU_.begin(), knotU_.end(), u);
  size_t hi = std::min<size_t>(knotU_.size() - 1,
                               static_cast<size_t>(it - knotU_.begin()));
  size_t lo = hi - 1;
  double u0 = knotU_[lo];
  if (u == u0) return knotS_[lo];
  double mid = 0.5 * (u0 + u);
  return knotS_[lo] + ((u - u0) / 6.0) *
                          (speedAt(u0) + 4.0 * speedAt(mid) + speedAt(u));
}

Eigen::VectorXd ArclengthTable::pointAt(double u) const {
  Eigen::VectorXd x(curve_.coords.size());
  for (size_t i = 0; i < curve_.coords.size(); ++i) {
    x(i) = evaluate(curve_.coords[i], u);
  }
  return x;
}

Eigen::VectorXd ArclengthTable::velocityAt(double u) const {
  Eigen::VectorXd v(velocity_.size());
  for (size_t i = 0; i < velocity_.size(); ++i) {
    v(i) = evaluate(velocity_[i], u);
  }
  return v;
}

Eigen::VectorXd ArclengthTable::accelerationAt(double u) const {
  Eigen::VectorXd a(acceleration_.size());
  for (size_t i = 0; i < acceleration_.size(); ++i) {
    a(i) = evaluate(acceleration_[i], u);
  }
  return a;
}

CurveFrame frameAt(const FunctionModel& m, const ArclengthTable& table, double s) {
  const int n = m.dim();
  if (static_cast<int>(table.curve().coords.size()) != n) {
    throw DomainError("curve has " + std::to_string(table.curve().coords.size()) +
                      " coordinates but the surface has " + std::to_string(n) +
                      " inputs");
  }
  double u = table.parameterAt(s);
  Eigen::VectorXd x = table.pointAt(u);
  requirePositive(x);
  Eigen::VectorXd xu = table.velocityAt(u);
  Eigen::VectorXd xuu = table.accelerationAt(u);
  double sigmaSq = xu.squaredNorm();
  double sigma = std::sqrt(sigmaSq);
  if (sigma < kRegularityFloor) {
    throw CurveError("curve is irregular at u = " + std::to_string(u));
  }

  Differentials d(m);
  double value = d.valueAt(x);
  Eigen::VectorXd grad = d.gradientAt(x);
  Eigen::MatrixXd hess = d.hessianAt(x);

  CurveFrame frame;
  frame.s = s;
  frame.t = xu / sigma;
  // Chain rule u -> s: x_s = x_u / sigma and
  // x_ss = x_uu / sigma^2 - x_u <x_u, x_uu> / sigma^4.
  Eigen::VectorXd xss = xuu / sigmaSq - xu * (xu.dot(xuu) / (sigmaSq * sigmaSq));

  frame.X.resize(n + 1);
  frame.X.head(n) = x;
  frame.X(n) = value;
  frame.T.resize(n + 1);
  frame.T.head(n) = frame.t;
  frame.T(n) = frame.t.dot(grad);

  frame.kappaG = xss.norm();
  frame.kappaN = frame.t.dot(hess * frame.t);
  frame.S = Eigen::VectorXd::Zero(n + 1);
  if (frame.kappaG >= kGeodesicZero) {
    frame.S.head(n) = xss / frame.kappaG;
    frame.S(n) = xss.dot(grad) / frame.kappaG;
  } else {
    frame.S(n) = 1.0;
    frame.hasKappaS = true;
    // Height acceleration along the curve: d^2/ds^2 of f(x(s)).
    frame.kappaS = xss.dot(grad) + frame.kappaN;
  }
  return frame;
}

std::vector<CurveFrame> curvatureAlong(const FunctionModel& m,
                                       const ArclengthTable& table, int stations) {
  if (stations < 2) throw DomainError("need at least two stations");
  std::vector<CurveFrame> frames;
  frames.reserve(stations);
  double length = table.totalLength();
  for (int i = 0; i < stations; ++i) {
    double s = length * static_cast<double>(i) / (stations - 1);
    frames.push_back(frameAt(m, table, s));
  }
  return frames;
}

std::vector<CurveFrame> curvatureAlong(const FunctionModel& m,
                                       const TopViewCurve& curve, int stations) {
  ArclengthTable table(curve);
  return curvatureAlong(m, table, stations);
}

}  // namespace iso

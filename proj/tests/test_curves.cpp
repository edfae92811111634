#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "iso/calculus.hpp"
#include "iso/curvature.hpp"
#include "iso/curves.hpp"
#include "iso/errors.hpp"
#include "iso/expr.hpp"
#include "iso/model.hpp"

using namespace iso;

namespace {

TopViewCurve makeCurve(const std::string& spec, double a, double b) {
  TopViewCurve c;
  c.a = a;
  c.b = b;
  size_t start = 0;
  while (start <= spec.size()) {
    size_t semi = spec.find(';', start);
    std::string piece =
        spec.substr(start, semi == std::string::npos ? semi : semi - start);
    c.coords.push_back(parseCurveExpression(piece));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return c;
}

}  // namespace

TEST_CASE("arclength of hand curves") {
  // Straight segment (2u+1, 1) over [0, 1]: length 2, s(u) = 2u.
  ArclengthTable seg(makeCurve("2*u+1;1", 0.0, 1.0));
  CHECK(seg.totalLength() == doctest::Approx(2.0).epsilon(1e-12));
  for (double u : {0.0, 0.25, 0.7, 1.0}) {
    CHECK(seg.arclengthAt(u) == doctest::Approx(2.0 * u).epsilon(1e-10));
    CHECK(seg.parameterAt(2.0 * u) == doctest::Approx(u).epsilon(1e-10));
  }

  // Half circle of radius 1 centered at (2, 2): length pi.
  ArclengthTable half(makeCurve("2+cos(u);2+sin(u)", 0.0, M_PI));
  CHECK(std::abs(half.totalLength() - M_PI) <= 1e-8);

  // Diagonal (u, u) over [1, 2]: length sqrt(2).
  ArclengthTable diag(makeCurve("u;u", 1.0, 2.0));
  CHECK(std::abs(diag.totalLength() - std::sqrt(2.0)) <= 1e-8);
}

TEST_CASE("point, velocity and acceleration evaluation") {
  ArclengthTable circle(makeCurve("2+cos(u);2+sin(u)", 0.0, M_PI));
  Eigen::VectorXd p = circle.pointAt(M_PI / 2);
  CHECK(p(0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(p(1) == doctest::Approx(3.0).epsilon(1e-14));
  Eigen::VectorXd v = circle.velocityAt(M_PI / 2);
  CHECK(v(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(v(1) == doctest::Approx(0.0).scale(1.0));
  Eigen::VectorXd acc = circle.accelerationAt(M_PI / 2);
  CHECK(acc(0) == doctest::Approx(0.0).scale(1.0));
  CHECK(acc(1) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("frames of the unit circle on the saddle x1*x2") {
  FunctionModel m = FunctionModel::generic(parseExpression("x1*x2", 2), 2);
  ArclengthTable circle(makeCurve("2+cos(u);2+sin(u)", 0.0, 2.0 * M_PI));

  // At s = 0 the curve starts at (3, 2) heading in the +x2 direction; the
  // top view is a unit circle, so the geodesic-like curvature is 1.
  CurveFrame f0 = frameAt(m, circle, 0.0);
  CHECK(f0.t(0) == doctest::Approx(0.0).scale(1.0));
  CHECK(f0.t(1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(f0.kappaG == doctest::Approx(1.0).epsilon(1e-9));
  // kappaN = t' H t with H = [[0,1],[1,0]] and t = (0,1): zero.
  CHECK(std::abs(f0.kappaN) <= 1e-9);
  CHECK_FALSE(f0.hasKappaS);

  // Quarter way to the top, s = pi/4: x = (2 + 1/sqrt2, 2 + 1/sqrt2),
  // t = (-1/sqrt2, 1/sqrt2), kappaN = -1.
  CurveFrame f1 = frameAt(m, circle, M_PI / 4);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(f1.t(0) == doctest::Approx(-r).epsilon(1e-9));
  CHECK(f1.t(1) == doctest::Approx(r).epsilon(1e-9));
  CHECK(f1.kappaG == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(f1.kappaN == doctest::Approx(-1.0).epsilon(1e-9));

  // The lifted tangent appends <t, grad f>, and X sits on the graph.
  Differentials d(m);
  Eigen::VectorXd x = f1.X.head(2);
  CHECK(f1.X(2) == doctest::Approx(d.valueAt(x)).epsilon(1e-12));
  CHECK(f1.T.head(2) == f1.t);
  CHECK(f1.T(2) ==
        doctest::Approx(f1.t.dot(d.gradientAt(x))).epsilon(1e-12));
}

TEST_CASE("a line on a plane degenerates the frame") {
  FunctionModel plane = FunctionModel::perfectSubstitute(Eigen::Vector2d(1, 1));
  ArclengthTable line(makeCurve("1+u*2^-0.5;1+u*2^-0.5", 0.0, 2.0));
  CHECK(line.totalLength() == doctest::Approx(2.0).epsilon(1e-10));

  CurveFrame f = frameAt(plane, line, 1.0);
  CHECK(f.kappaG == doctest::Approx(0.0).scale(1.0));
  // S falls back to the vertical direction i.
  CHECK(f.S(0) == 0.0);
  CHECK(f.S(1) == 0.0);
  CHECK(f.S(2) == 1.0);
  CHECK(std::abs(f.kappaN) <= 1e-12);
  CHECK(f.hasKappaS);
  CHECK(std::abs(f.kappaS) <= 1e-10);
}

TEST_CASE("frame normal curvature matches the quadratic form") {
  FunctionModel m = FunctionModel::generic(
      parseExpression("x1^2*x2+exp(0.1*x1)", 2), 2);
  ArclengthTable arc(makeCurve("2+cos(u);3+sin(2*u)", 0.0, 2.0));
  for (int k = 0; k <= 8; ++k) {
    double s = arc.totalLength() * k / 8.0;
    CurveFrame f = frameAt(m, arc, s);
    double direct = normalCurvature(m, f.X.head(2), f.t);
    CHECK(std::abs(f.kappaN - direct) <= 1e-9);
    CHECK(std::abs(f.t.norm() - 1.0) <= 1e-9);
  }
}

TEST_CASE("normal curvature depends only on the point and tangent") {
  // A circle and a line through (3, 2), both heading in +x2: their normal
  // curvatures agree even though the top-view curvatures differ.
  FunctionModel m = FunctionModel::generic(
      parseExpression("x1^1.5*x2^0.5", 2), 2);
  ArclengthTable circle(makeCurve("2+cos(u);2+sin(u)", 0.0, 1.0));
  ArclengthTable vertical(makeCurve("3;2+u", 0.0, 1.0));
  CurveFrame a = frameAt(m, circle, 0.0);
  CurveFrame b = frameAt(m, vertical, 0.0);
  CHECK((a.X.head(2) - b.X.head(2)).norm() <= 1e-12);
  CHECK((a.t - b.t).norm() <= 1e-9);
  CHECK(std::abs(a.kappaN - b.kappaN) <= 1e-8);
  CHECK(a.kappaG == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(b.kappaG == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("height grows at rate <t, grad f> along the curve") {
  FunctionModel m = FunctionModel::cobbDouglas(1.5, Eigen::Vector2d(0.6, 0.7));
  ArclengthTable arc(makeCurve("2+cos(u);2+sin(u)", 0.0, 2.0 * M_PI));
  Differentials d(m);
  const double h = 1e-5;
  for (int k = 1; k <= 6; ++k) {
    double s = arc.totalLength() * k / 7.0;
    CurveFrame f = frameAt(m, arc, s);
    auto height = [&](double sv) {
      double u = arc.parameterAt(sv);
      return d.valueAt(arc.pointAt(u));
    };
    double fd = (height(s + h) - height(s - h)) / (2.0 * h);
    double analytic = f.t.dot(d.gradientAt(f.X.head(2)));
    CHECK(std::abs(fd - analytic) <= 1e-6 * (1.0 + std::abs(analytic)));
  }
}

TEST_CASE("the lifted acceleration splits into kappaG S + kappaN i") {
  FunctionModel m = FunctionModel::generic(
      parseExpression("x1*x2+0.3*x1^2", 2), 2);
  ArclengthTable arc(makeCurve("2+cos(u);2+sin(u)", 0.0, 2.0 * M_PI));
  Differentials d(m);
  const double h = 1e-4;
  for (int k = 1; k <= 6; ++k) {
    double s = arc.totalLength() * k / 8.0;
    CurveFrame f = frameAt(m, arc, s);
    auto lifted = [&](double sv) {
      double u = arc.parameterAt(sv);
      Eigen::VectorXd x = arc.pointAt(u);
      Eigen::VectorXd X(3);
      X << x(0), x(1), d.valueAt(x);
      return X;
    };
    Eigen::VectorXd xpp =
        (lifted(s + h) - 2.0 * lifted(s) + lifted(s - h)) / (h * h);
    Eigen::Vector3d vertical(0, 0, 1);
    Eigen::VectorXd decomposed = f.kappaG * f.S + f.kappaN * vertical;
    CHECK((xpp - decomposed).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("stations are ascending and span the whole curve") {
  FunctionModel m = FunctionModel::generic(parseExpression("x1*x2", 2), 2);
  TopViewCurve circle = makeCurve("2+cos(u);2+sin(u)", 0.0, 2.0 * M_PI);
  std::vector<CurveFrame> frames = curvatureAlong(m, circle, 9);
  REQUIRE(frames.size() == 9);
  CHECK(frames.front().s == 0.0);
  CHECK(frames.back().s ==
        doctest::Approx(ArclengthTable(circle).totalLength()).epsilon(1e-12));
  for (size_t k = 1; k < frames.size(); ++k)
    CHECK(frames[k].s > frames[k - 1].s);
  for (const CurveFrame& f : frames)
    CHECK(f.kappaG == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("degenerate and out-of-domain curves are rejected") {
  FunctionModel m = FunctionModel::generic(parseExpression("x1*x2", 2), 2);

  // Zero-speed curve: both coordinates constant.
  CHECK_THROWS_AS(ArclengthTable(makeCurve("1;1", 0.0, 1.0)), CurveError);

  // Empty interval.
  TopViewCurve reversed = makeCurve("u;u", 2.0, 1.0);
  CHECK_THROWS_AS(ArclengthTable{reversed}, CurveError);

  // Curve leaving the positive orthant: evaluation at the bad station throws.
  TopViewCurve exiting = makeCurve("u;2-u", 0.5, 3.0);
  ArclengthTable table(exiting);
  CHECK_THROWS_AS(frameAt(m, table, table.totalLength()), DomainError);

  // Too few stations.
  TopViewCurve circle = makeCurve("2+cos(u);2+sin(u)", 0.0, 1.0);
  CHECK_THROWS_AS(curvatureAlong(m, circle, 1), DomainError);

  // Dimension mismatch between the curve and the model.
  TopViewCurve curve3 = makeCurve("1+u;1+u;1+u", 0.0, 1.0);
  CHECK_THROWS_AS(curvatureAlong(m, curve3, 4), DomainError);

  // Arclength queries outside [0, L].
  ArclengthTable diag(makeCurve("u;u", 1.0, 2.0));
  CHECK_THROWS_AS(diag.parameterAt(-0.5), DomainError);
  CHECK_THROWS_AS(diag.parameterAt(diag.totalLength() + 0.5), DomainError);
}

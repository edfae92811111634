#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "generators.hpp"
#include "iso/curvature.hpp"
#include "iso/errors.hpp"
#include "iso/expr.hpp"
#include "iso/model.hpp"

using namespace iso;

namespace {

Eigen::VectorXd v2(double a, double b) {
  Eigen::VectorXd x(2);
  x << a, b;
  return x;
}

}  // namespace

TEST_CASE("profile of the saddle x1*x2 at (1,1)") {
  FunctionModel m = FunctionModel::generic(parseExpression("x1*x2", 2), 2);
  CurvatureProfile p = curvatureProfile(m, v2(1, 1));
  CHECK(p.value == 1.0);
  CHECK(p.gradient(0) == 1.0);
  CHECK(p.gradient(1) == 1.0);
  CHECK(p.principalCurvatures(0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(p.principalCurvatures(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.fundamentalCurvatures(0) == doctest::Approx(0.0).scale(1.0));
  CHECK(p.fundamentalCurvatures(1) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(p.isotropicMeanCurvature == p.fundamentalCurvatures(0));
  CHECK(p.relativeCurvature == p.fundamentalCurvatures(1));

  // Lifted directions append <t, grad f> as the vertical component.
  REQUIRE(p.liftedDirections.rows() == 3);
  for (int j = 0; j < 2; ++j) {
    Eigen::VectorXd t = p.principalDirections.col(j);
    CHECK(p.liftedDirections.col(j).head(2) == t);
    CHECK(p.liftedDirections(2, j) ==
          doctest::Approx(t.dot(p.gradient)).epsilon(1e-14));
  }
}

TEST_CASE("profile oracles on two quadratics") {
  FunctionModel saddle =
      FunctionModel::generic(parseExpression("x1^2-x2^2", 2), 2);
  CurvatureProfile p = curvatureProfile(saddle, v2(3, 4));
  CHECK(p.principalCurvatures(0) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(p.principalCurvatures(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p.relativeCurvature == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(p.isotropicMeanCurvature == doctest::Approx(0.0).scale(1.0));

  FunctionModel ridge =
      FunctionModel::generic(parseExpression("(x1+x2)^2", 2), 2);
  p = curvatureProfile(ridge, v2(1, 1));
  CHECK(p.principalCurvatures(0) == doctest::Approx(0.0).scale(1.0));
  CHECK(p.principalCurvatures(1) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(p.fundamentalCurvatures(0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p.fundamentalCurvatures(1) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("normal curvature of x1*x2 along hand directions") {
  FunctionModel m = FunctionModel::generic(parseExpression("x1*x2", 2), 2);
  Eigen::VectorXd x = v2(1, 1);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(normalCurvature(m, x, v2(1, 0)) == doctest::Approx(0.0).scale(1.0));
  CHECK(normalCurvature(m, x, v2(0, 1)) == doctest::Approx(0.0).scale(1.0));
  CHECK(normalCurvature(m, x, v2(r, r)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(normalCurvature(m, x, v2(r, -r)) == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK_THROWS_AS(normalCurvature(m, x, v2(1, 1)), DomainError);
  CHECK_THROWS_AS(sectionalCurvature(m, x, v2(1, 0), v2(r, r)), DomainError);
}

TEST_CASE("normal curvatures over random directions stay within the principal bracket") {
  testgen::Gen gen(314);
  FunctionModel m = gen.family(3);
  Eigen::VectorXd x = gen.point(3, 0.5, 5.0);
  CurvatureProfile p = curvatureProfile(m, x);
  double lo = p.principalCurvatures(0) - 1e-8;
  double hi = p.principalCurvatures(2) + 1e-8;
  for (int trial = 0; trial < 1000; ++trial) {
    Eigen::VectorXd t(3);
    for (int i = 0; i < 3; ++i) t(i) = gen.rng().gaussian();
    t.normalize();
    double kn = normalCurvature(m, x, t);
    CHECK(kn >= lo);
    CHECK(kn <= hi);
  }
  // The principal directions reproduce the principal curvatures.
  for (int j = 0; j < 3; ++j) {
    double kn = normalCurvature(m, x, p.principalDirections.col(j));
    CHECK(std::abs(kn - p.principalCurvatures(j)) <= 1e-8);
  }
}

TEST_CASE("sectional curvature on eigen-planes is the product of the eigenvalues") {
  testgen::Gen gen(1618);
  for (int trial = 0; trial < 25; ++trial) {
    FunctionModel m = gen.family(3);
    Eigen::VectorXd x = gen.point(3, 0.5, 5.0);
    CurvatureProfile p = curvatureProfile(m, x);
    for (int j = 0; j < 3; ++j) {
      for (int k = j + 1; k < 3; ++k) {
        double expected = p.principalCurvatures(j) * p.principalCurvatures(k);
        double sec = sectionalCurvature(m, x, p.principalDirections.col(j),
                                        p.principalDirections.col(k));
        CHECK(std::abs(sec - expected) <= 1e-8 * (1.0 + std::abs(expected)));
      }
    }
  }
}

TEST_CASE("the principal curvature spectrum is rotation invariant") {
  // Precomposing f with an orthogonal change of coordinates rotates the
  // Hessian by congruence, which preserves its eigenvalues. Realize the
  // rotation symbolically through variable substitution, keeping the angle
  // small enough that both x and Q x stay inside the positive orthant.
  testgen::Gen gen(2718);
  for (int trial = 0; trial < 20; ++trial) {
    Expression f = gen.positive(2, 3);
    double theta = gen.uniform(-0.15, 0.15);
    double c = std::cos(theta), s = std::sin(theta);
    Expression x1 = variable(1), x2 = variable(2);
    std::vector<Expression> rotated = {
        sum({product({constant(c), x1}), product({constant(-s), x2})}),
        sum({product({constant(s), x1}), product({constant(c), x2})})};
    Expression g = substituteVariables(f, rotated);

    Eigen::VectorXd x = v2(gen.uniform(3.0, 5.0), gen.uniform(3.0, 5.0));
    Eigen::MatrixXd q(2, 2);
    q << c, -s, s, c;
    Eigen::VectorXd qx = q * x;
    if (qx.minCoeff() <= 0.1) continue;

    FunctionModel mf = FunctionModel::generic(f, 2);
    FunctionModel mg = FunctionModel::generic(g, 2);
    Eigen::VectorXd specF, specG;
    try {
      specF = curvatureProfile(mf, qx).principalCurvatures;
      specG = curvatureProfile(mg, x).principalCurvatures;
    } catch (const DomainError&) {
      continue;  // the random tree may be singular at this point
    }
    double scale = 1.0 + specF.cwiseAbs().maxCoeff();
    CHECK((specF - specG).cwiseAbs().maxCoeff() <= 1e-8 * scale);
  }
}

TEST_CASE("minimality and null relative curvature verdicts") {
  SamplePlan plan;
  plan.dim = 2;
  plan.count = 64;
  plan.seed = 42;

  FunctionModel saddle =
      FunctionModel::generic(parseExpression("x1*x2", 2), 2);
  PredicateVerdict minimal = isIsotropicMinimal(saddle, plan);
  CHECK(minimal.holds);
  CHECK(minimal.predicate == "isotropicMinimal");
  CHECK(minimal.worstResidual <= minimal.worstThreshold);
  CHECK(minimal.finding.empty());

  PredicateVerdict rc = hasNullRelativeCurvature(saddle, plan);
  CHECK_FALSE(rc.holds);  // det = -1 everywhere
  CHECK(rc.worstResidual > rc.worstThreshold);
  REQUIRE(rc.worstPoint.size() == 2);

  FunctionModel cd = FunctionModel::cobbDouglas(1.0, Eigen::Vector2d(0.5, 0.5));
  PredicateVerdict cdMinimal = isIsotropicMinimal(cd, plan);
  CHECK_FALSE(cdMinimal.holds);
  PredicateVerdict cdRc = hasNullRelativeCurvature(cd, plan);
  CHECK(cdRc.holds);  // degree-1 Cobb-Douglas solves the Monge-Ampere equation

  FunctionModel biharmonicOnly =
      FunctionModel::generic(parseExpression("x1^3*x2", 2), 2);
  CHECK(isIsotropicBiharmonic(biharmonicOnly, plan).holds);
  CHECK_FALSE(isIsotropicMinimal(biharmonicOnly, plan).holds);
  CHECK_FALSE(isIsotropicBiharmonic(cd, plan).holds);
}

TEST_CASE("flatness sweeps agree on genuinely flat surfaces") {
  // Two-input constant-returns Cobb-Douglas and powers of a linear
  // aggregate both have Hessians of rank at most one, so every tangent
  // 2-plane is a zero-curvature section. Both strategies must accept them
  // with no finding. (With three or more inputs a constant-returns
  // Cobb-Douglas is not flat: the (j,k) coordinate section scales with
  // 1 - alpha_j - alpha_k, which the sum constraint does not kill.)
  std::vector<std::pair<FunctionModel, int>> flats;
  flats.emplace_back(
      FunctionModel::cobbDouglas(2.0, Eigen::Vector2d(0.4, 0.6)), 2);
  flats.emplace_back(FunctionModel::generic(
      parseExpression("(x1+2*x2+0.5*x3)^3", 3), 3), 3);

  for (const auto& [m, dim] : flats) {
    SamplePlan plan;
    plan.dim = dim;
    plan.count = 48;
    plan.seed = 7;
    PredicateVerdict coord = isIsotropicFlat(m, plan, Tolerance(),
                                             PlaneStrategy::coordinatePairs());
    CHECK(coord.holds);
    CHECK(coord.strategy == "coordinatePairs");
    CHECK(coord.finding.empty());
    PredicateVerdict rand = isIsotropicFlat(m, plan, Tolerance(),
                                            PlaneStrategy::randomPlanes(8));
    CHECK(rand.holds);
    CHECK(rand.strategy == "randomPlanes(8)");

    // Rank <= 1 numerically: the two largest absolute eigenvalues cannot
    // both be far from zero.
    Differentials d(m);
    for (const Eigen::VectorXd& x : samplePoints(plan)) {
      Eigen::MatrixXd h = d.hessianAt(x);
      Eigen::VectorXd ev = eigenvaluesSymmetric(h).cwiseAbs();
      std::sort(ev.data(), ev.data() + ev.size());
      double pairProduct = ev(dim - 1) * ev(dim - 2);
      double scale = 1.0 + std::pow(h.cwiseAbs().maxCoeff(), 2);
      CHECK(pairProduct <= 1e-8 * scale);
    }
  }

  // Non-flat controls: the saddle, and a three-input constant-returns
  // Cobb-Douglas whose rank-two Hessian curves some coordinate section.
  SamplePlan plan2;
  plan2.dim = 2;
  plan2.count = 32;
  FunctionModel saddle =
      FunctionModel::generic(parseExpression("x1*x2", 2), 2);
  CHECK_FALSE(isIsotropicFlat(saddle, plan2).holds);
  SamplePlan plan3;
  plan3.dim = 3;
  plan3.count = 32;
  FunctionModel crs3 =
      FunctionModel::cobbDouglas(2.0, Eigen::Vector3d(0.2, 0.3, 0.5));
  CHECK_FALSE(isIsotropicFlat(crs3, plan3).holds);
  CHECK_FALSE(
      isIsotropicFlat(crs3, plan3, Tolerance(), PlaneStrategy::randomPlanes(8))
          .holds);
}

TEST_CASE("the coordinate sweep records a finding when it misses curvature") {
  SamplePlan plan;
  plan.dim = 3;
  plan.count = 16;
  plan.seed = 42;

  // The radius function is curved enough that both strategies reject it.
  FunctionModel radius = FunctionModel::generic(
      parseExpression("(x1^2+x2^2+x3^2)^0.5", 3), 3);
  PredicateVerdict coord = isIsotropicFlat(radius, plan, Tolerance(),
                                           PlaneStrategy::coordinatePairs());
  PredicateVerdict rand = isIsotropicFlat(radius, plan, Tolerance(),
                                          PlaneStrategy::randomPlanes(8));
  CHECK_FALSE(coord.holds);
  CHECK_FALSE(rand.holds);
  CHECK(coord.finding.empty());

  // A quadratic whose constant Hessian has unit diagonal and off-diagonal
  // entries (+1, +1, -1): every coordinate 2x2 section is exactly zero, yet
  // the eigenvalues are (-1, 2, 2), so the surface is nowhere flat. The
  // coordinate sweep passes, the eigenvalue cross-check cannot, and the
  // divergence must surface as a finding while the sweep keeps its answer.
  FunctionModel hidden = FunctionModel::generic(
      parseExpression(
          "0.5*x1^2+0.5*x2^2+0.5*x3^2+x1*x2+x1*x3-x2*x3", 3),
      3);
  PredicateVerdict h = isIsotropicFlat(hidden, plan, Tolerance(),
                                       PlaneStrategy::coordinatePairs());
  CHECK(h.holds);
  CHECK_FALSE(h.finding.empty());
  PredicateVerdict hr = isIsotropicFlat(hidden, plan, Tolerance(),
                                        PlaneStrategy::randomPlanes(8));
  CHECK_FALSE(hr.holds);
}

TEST_CASE("verdict worst point maximizes the residual ratio") {
  SamplePlan plan;
  plan.dim = 2;
  plan.count = 32;
  plan.seed = 11;
  FunctionModel cd = FunctionModel::cobbDouglas(1.0, Eigen::Vector2d(0.4, 0.4));
  PredicateVerdict v = isIsotropicMinimal(cd, plan);
  CHECK_FALSE(v.holds);
  Differentials d(cd);
  double worst = std::abs(d.laplacianAt(v.worstPoint));
  for (const Eigen::VectorXd& x : samplePoints(plan)) {
    double here = std::abs(d.laplacianAt(x));
    double bound = v.tol.bound(std::abs(d.valueAt(x)));
    CHECK(here / bound <= worst / v.tol.bound(std::abs(d.valueAt(v.worstPoint))) + 1e-12);
  }
  CHECK(v.worstResidual == doctest::Approx(worst).epsilon(1e-14));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "generators.hpp"
#include "iso/calculus.hpp"
#include "iso/errors.hpp"
#include "iso/model.hpp"

using namespace iso;

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("gradient and Hessian of the square-root Cobb-Douglas") {
  FunctionModel m = FunctionModel::cobbDouglas(1.0, vec2(0.5, 0.5));
  DiffBundle b = diffBundle(m, vec2(1, 1));
  CHECK(b.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b.gradient(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b.gradient(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b.hessian(0, 0) == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(b.hessian(0, 1) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(b.hessian(1, 0) == b.hessian(0, 1));
  CHECK(b.hessian(1, 1) == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(laplacian(m, vec2(1, 1)) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("bilaplacian oracles") {
  FunctionModel quartic =
      FunctionModel::generic(parseExpression("x1^4", 2), 2);
  CHECK(bilaplacian(quartic, vec2(3, 7)) == doctest::Approx(24.0).epsilon(1e-12));
  FunctionModel mixed =
      FunctionModel::generic(parseExpression("x1^3*x2", 2), 2);
  CHECK(std::abs(bilaplacian(mixed, vec2(2, 5))) < 1e-12);
}

TEST_CASE("Hessian is exactly symmetric by construction") {
  testgen::Gen gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    FunctionModel m = gen.family(3);
    Eigen::VectorXd x = gen.point(3, 0.3, 5.0);
    Eigen::MatrixXd h = Differentials(m).hessianAt(x);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("symbolic gradients and Hessians match finite differences") {
  testgen::Gen gen(501);
  for (int trial = 0; trial < 500; ++trial) {
    FunctionModel m = gen.family(2 + trial % 2);
    int n = m.dim();
    Eigen::VectorXd x = gen.point(n, 0.4, 6.0);
    Differentials d(m);
    Eigen::VectorXd g = d.gradientAt(x);
    Eigen::MatrixXd h = d.hessianAt(x);
    Eigen::VectorXd gfd = fdGradient(m, x);
    Eigen::MatrixXd hfd = fdHessian(m, x);
    double gscale = 1.0 + g.cwiseAbs().maxCoeff();
    double hscale = 1.0 + h.cwiseAbs().maxCoeff();
    CHECK((g - gfd).cwiseAbs().maxCoeff() <= 1e-5 * gscale);
    CHECK((h - hfd).cwiseAbs().maxCoeff() <= 1e-3 * hscale);
  }
}

TEST_CASE("laplacian equals the trace of the FD Hessian") {
  testgen::Gen gen(913);
  for (int trial = 0; trial < 60; ++trial) {
    FunctionModel m = gen.family(2);
    Eigen::VectorXd x = gen.point(2, 0.4, 6.0);
    double lap = laplacian(m, x);
    double traceFd = fdHessian(m, x).trace();
    CHECK(std::abs(lap - traceFd) <= 1e-3 * (1.0 + std::abs(lap)));
  }
}

TEST_CASE("Euler relation for homogeneous families") {
  testgen::Gen gen(321);
  int done = 0;
  while (done < 100) {
    FunctionModel m = gen.family(2 + done % 3);
    double degree;
    switch (m.family()) {
      case FamilyKind::CobbDouglas: degree = m.weights().sum(); break;
      case FamilyKind::CES: degree = m.cesDegree(); break;
      case FamilyKind::PerfectSubstitute: degree = 1.0; break;
      default: continue;  // homothetic draws are not homogeneous in general
    }
    Eigen::VectorXd x = gen.point(m.dim(), 0.2, 8.0);
    Differentials d(m);
    double f = d.valueAt(x);
    double euler = x.dot(d.gradientAt(x));
    CHECK(std::abs(euler - degree * f) <= 1e-9 * (1.0 + std::abs(degree * f)));

    // Differentiated Euler relation: sum_i x_i f_{x_i x_j} = (d-1) f_{x_j}.
    Eigen::VectorXd hx = d.hessianAt(x) * x;
    Eigen::VectorXd rhs = (degree - 1.0) * d.gradientAt(x);
    CHECK((hx - rhs).cwiseAbs().maxCoeff() <=
          1e-8 * (1.0 + rhs.cwiseAbs().maxCoeff()));
    ++done;
  }
}

TEST_CASE("homothetic power models satisfy Euler with the composed degree") {
  // (Cobb-Douglas of degree s)^m is homogeneous of degree s*m.
  FunctionModel inner = FunctionModel::cobbDouglas(1.0, vec2(0.4, 0.35));
  FunctionModel m = FunctionModel::homothetic(pow(variable(1), 3.0), inner);
  Differentials d(m);
  Eigen::VectorXd x = vec2(2.0, 3.0);
  double degree = 3.0 * 0.75;
  CHECK(x.dot(d.gradientAt(x)) ==
        doctest::Approx(degree * d.valueAt(x)).epsilon(1e-10));
}

TEST_CASE("direct family evaluation agrees with the lowered tree") {
  testgen::Gen gen(64);
  for (int trial = 0; trial < 200; ++trial) {
    FunctionModel m = gen.family(2 + trial % 3);
    Eigen::VectorXd x = gen.point(m.dim(), 0.1, 10.0);
    double direct = m.evaluateDirect(x);
    double lowered = evaluate(m.expression(), x);
    CHECK(std::abs(direct - lowered) <= 1e-12 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("CES with d=rho=1 lowers to the matching perfect substitute") {
  Eigen::VectorXd a = vec2(2.0, 5.0);
  FunctionModel ces = FunctionModel::ces(1.0, 1.0, 1.0, a);
  FunctionModel ps = FunctionModel::perfectSubstitute(a);
  testgen::Gen gen(17);
  for (int i = 0; i < 100; ++i) {
    Eigen::VectorXd x = gen.point(2, 0.1, 10.0);
    CHECK(evaluate(ces.expression(), x) == evaluate(ps.expression(), x));
  }
}

TEST_CASE("evaluation outside the positive orthant is an error") {
  FunctionModel m = FunctionModel::cobbDouglas(1.0, vec2(0.5, 0.5));
  CHECK_THROWS_AS(laplacian(m, vec2(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(laplacian(m, vec2(-1.0, 2.0)), DomainError);
  CHECK_THROWS_AS(Differentials(m).at(vec2(0.0, 1.0)), DomainError);
}

TEST_CASE("dimension mismatches are rejected") {
  FunctionModel m = FunctionModel::cobbDouglas(1.0, vec2(0.5, 0.5));
  Eigen::VectorXd x3 = Eigen::VectorXd::Constant(3, 1.0);
  CHECK_THROWS_AS(Differentials(m).valueAt(x3), DomainError);
}

TEST_CASE("partial accessor is order-insensitive") {
  Differentials d(parseExpression("x1^2*x2^3", 2), 2);
  Eigen::VectorXd x = vec2(2.0, 3.0);
  CHECK(evaluate(d.partial(1, 2), x) == evaluate(d.partial(2, 1), x));
  CHECK(evaluate(d.partial(1, 2), x) ==
        doctest::Approx(2.0 * 2.0 * 3.0 * 9.0).epsilon(1e-13));
}

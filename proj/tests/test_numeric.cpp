#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "generators.hpp"
#include "iso/errors.hpp"
#include "iso/numeric.hpp"

using namespace iso;

namespace {

Eigen::MatrixXd randomSymmetric(testgen::Gen& gen, int n) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      a(i, j) = gen.rng().gaussian() * 2.0;
      a(j, i) = a(i, j);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("tolerance policy") {
  Tolerance t;  // defaults (1e-9, 1e-6)
  CHECK(t.bound(0.0) == doctest::Approx(1e-9).epsilon(1e-12));
  CHECK(t.bound(100.0) == doctest::Approx(1e-9 + 1e-4).epsilon(1e-12));
  CHECK(t.accepts(5e-5, 100.0));
  CHECK_FALSE(t.accepts(2e-4, 100.0));
}

TEST_CASE("xoshiro stream is deterministic and in range") {
  Xoshiro256pp a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
  Xoshiro256pp r(7);
  for (int i = 0; i < 1000; ++i) {
    double u = r.nextUnit();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    double v = r.uniform(-3.0, 5.0);
    CHECK(v >= -3.0);
    CHECK(v <= 5.0);
    double w = r.logUniform(0.1, 10.0);
    CHECK(w >= 0.1);
    CHECK(w <= 10.0);
  }
  // Different seeds give different streams.
  Xoshiro256pp c(1), d(2);
  bool differ = false;
  for (int i = 0; i < 10; ++i) differ = differ || (c.next() != d.next());
  CHECK(differ);
}

TEST_CASE("sample plans are reproducible and live in the box") {
  SamplePlan plan;
  plan.dim = 3;
  plan.count = 64;
  plan.lo = 0.1;
  plan.hi = 10.0;
  plan.seed = 42;
  auto pts1 = samplePoints(plan);
  auto pts2 = samplePoints(plan);
  REQUIRE(pts1.size() == 64);
  for (size_t k = 0; k < pts1.size(); ++k) {
    CHECK(pts1[k] == pts2[k]);
    for (int i = 0; i < 3; ++i) {
      CHECK(pts1[k](i) >= plan.lo);
      CHECK(pts1[k](i) <= plan.hi);
    }
  }
  plan.seed = 43;
  auto pts3 = samplePoints(plan);
  CHECK(pts1[0] != pts3[0]);
}

TEST_CASE("Jacobi eigenvalues on hand matrices") {
  Eigen::MatrixXd offdiag(2, 2);
  offdiag << 0, 1, 1, 0;
  Eigen::VectorXd ev = eigenvaluesSymmetric(offdiag);
  CHECK(ev(0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ev(1) == doctest::Approx(1.0).epsilon(1e-12));

  Eigen::MatrixXd diag(2, 2);
  diag << 2, 0, 0, -2;
  ev = eigenvaluesSymmetric(diag);
  CHECK(ev(0) == -2.0);  // ascending order
  CHECK(ev(1) == 2.0);

  // All-ones off-diagonal 3x3: eigenvalues -1, -1, 2.
  Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(3, 3) -
                         Eigen::MatrixXd::Identity(3, 3);
  ev = eigenvaluesSymmetric(ones);
  CHECK(ev(0) == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(ev(1) == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(ev(2) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("eigenvectors diagonalize and are orthonormal") {
  testgen::Gen gen(99);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::MatrixXd a = randomSymmetric(gen, n);
      EigenDecomposition d = eigenSymmetric(a);
      double scale = 1.0 + a.cwiseAbs().maxCoeff();
      Eigen::MatrixXd recon =
          d.vectors * d.values.asDiagonal() * d.vectors.transpose();
      CHECK((recon - a).cwiseAbs().maxCoeff() <= 1e-10 * scale);
      Eigen::MatrixXd gram = d.vectors.transpose() * d.vectors;
      CHECK((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <=
            1e-12);
      for (int i = 0; i + 1 < n; ++i) CHECK(d.values(i) <= d.values(i + 1));
    }
  }
}

TEST_CASE("elementary symmetric means on hand spectra") {
  Eigen::VectorXd kappa(2);
  kappa << -1, 1;
  Eigen::VectorXd k = elementarySymmetricMeans(kappa);
  CHECK(k(0) == 0.0);
  CHECK(k(1) == -1.0);

  Eigen::VectorXd kappa3(3);
  kappa3 << -1, -1, 2;
  k = elementarySymmetricMeans(kappa3);
  CHECK(k(0) == 0.0);
  CHECK(k(1) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(k(2) == doctest::Approx(2.0).epsilon(1e-14));

  // Constant spectrum c: K_j = c^j.
  for (double c : {0.5, -1.5, 2.0}) {
    Eigen::VectorXd constant = Eigen::VectorXd::Constant(4, c);
    Eigen::VectorXd kc = elementarySymmetricMeans(constant);
    for (int j = 1; j <= 4; ++j) {
      CHECK(kc(j - 1) == doctest::Approx(std::pow(c, j)).epsilon(1e-13));
    }
  }
}

TEST_CASE("principal minor means on hand matrices") {
  Eigen::MatrixXd offdiag(2, 2);
  offdiag << 0, 1, 1, 0;
  Eigen::VectorXd k = principalMinorMeans(offdiag);
  CHECK(k(0) == 0.0);
  CHECK(k(1) == doctest::Approx(-1.0).epsilon(1e-14));

  Eigen::VectorXd ki = principalMinorMeans(Eigen::MatrixXd::Identity(3, 3));
  CHECK(ki(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ki(1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ki(2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigenvalue route equals principal-minor route on 300 seeded matrices") {
  testgen::Gen gen(2027);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 5;
    Eigen::MatrixXd a = randomSymmetric(gen, n);
    Eigen::VectorXd viaEigen = elementarySymmetricMeans(eigenvaluesSymmetric(a));
    Eigen::VectorXd viaMinors = principalMinorMeans(a);
    double tol = 1e-8 * (1.0 + std::pow(a.cwiseAbs().maxCoeff(), n));
    CHECK((viaEigen - viaMinors).cwiseAbs().maxCoeff() <= tol);

    // K_n is the determinant, n*K_1 the trace.
    double det = a.determinant();
    CHECK(std::abs(viaEigen(n - 1) - det) <= tol);
    CHECK(std::abs(viaMinors(n - 1) - det) <= tol);
    CHECK(n * viaEigen(0) ==
          doctest::Approx(a.trace()).epsilon(1e-12).scale(1.0 + std::abs(a.trace())));
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1.0);
  CHECK(binomial(5, 2) == 10.0);
  CHECK(binomial(6, 3) == 20.0);
  CHECK(binomial(12, 6) == 924.0);
}

TEST_CASE("input validation") {
  SamplePlan bad;
  bad.dim = 0;
  CHECK_THROWS_AS(samplePoints(bad), NumericError);
  SamplePlan inverted;
  inverted.dim = 2;
  inverted.lo = 5.0;
  inverted.hi = 1.0;
  CHECK_THROWS_AS(samplePoints(inverted), NumericError);
  Eigen::MatrixXd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(eigenvaluesSymmetric(rect), NumericError);
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(eigenvaluesSymmetric(asym), NumericError);
  Eigen::MatrixXd big = Eigen::MatrixXd::Identity(13, 13);
  CHECK_THROWS_AS(principalMinorMeans(big), NumericError);
}

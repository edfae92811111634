#ifndef ISO_NUMERIC_HPP
#define ISO_NUMERIC_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

namespace iso {

// Symmetric matrices are passed around as plain Eigen::MatrixXd with the
// convention that the upper triangle is the single source of truth; every
// routine in this header reads through selfadjointView<Upper> semantics.

/// Uniform pass/fail policy: a residual passes iff
/// |err| <= atol + rtol * |scale|.
struct Tolerance {
  double atol = 1e-9;
  double rtol = 1e-6;

  double bound(double scale) const;
  bool accepts(double err, double scale) const;
};

/// xoshiro256++ with splitmix64 seeding. All randomized sweeps in the
/// library draw from this generator so that runs are reproducible from a
/// single integer seed, independent of platform and standard library.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform double strictly inside (0, 1).
  double nextUnit();
  double uniform(double lo, double hi);
  /// exp of a uniform draw on [log lo, log hi]; requires lo > 0.
  double logUniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double gaussian();

 private:
  std::array<std::uint64_t, 4> state_;
};

/// Deterministic sampling recipe for the open positive orthant.
/// Identical plans produce identical point sequences.
struct SamplePlan {
  int dim = 2;
  int count = 128;
  double lo = 0.1;
  double hi = 10.0;
  std::uint64_t seed = 42;
};

/// Log-uniform points, all strictly inside [lo, hi] on every axis.
std::vector<Eigen::VectorXd> samplePoints(const SamplePlan& plan);

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns, orthonormal, matching values
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver for symmetric matrices (upper triangle read).
/// Stops when the off-diagonal Frobenius norm falls below 1e-12 * ||A||_F;
/// throws NumericError if that has not happened after 50 sweeps.
EigenDecomposition eigenSymmetric(const Eigen::MatrixXd& a);

/// Eigenvalues only, ascending.
Eigen::VectorXd eigenvaluesSymmetric(const Eigen::MatrixXd& a);

/// Fundamental curvature means K_j = e_j(kappa) / C(n, j), where e_j is the
/// j-th elementary symmetric polynomial, via the Newton-triangle recurrence.
Eigen::VectorXd elementarySymmetricMeans(const Eigen::VectorXd& kappa);

/// Same K_j through the second route: averages of j-by-j principal minors,
/// each minor evaluated by LU with partial pivoting. Enumerates all index
/// subsets explicitly, so the dimension is capped at 12.
Eigen::VectorXd principalMinorMeans(const Eigen::MatrixXd& a);

double binomial(int n, int k);

}  // namespace iso

#endif  // ISO_NUMERIC_HPP

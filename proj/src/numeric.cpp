#include "iso/numeric.hpp"

#include <Eigen/Jacobi>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "iso/errors.hpp"

namespace iso {

double Tolerance::bound(double scale) const { return atol + rtol * std::abs(scale); }

bool Tolerance::accepts(double err, double scale) const {
  return std::abs(err) <= bound(scale);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Xoshiro256pp::next() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Xoshiro256pp::nextUnit() {
  // 52 bits plus a half-ulp offset keeps the value strictly inside (0, 1).
  return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
}

double Xoshiro256pp::uniform(double lo, double hi) {
  return lo + nextUnit() * (hi - lo);
}

double Xoshiro256pp::logUniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Xoshiro256pp::gaussian() {
  const double u1 = nextUnit();
  const double u2 = nextUnit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<Eigen::VectorXd> samplePoints(const SamplePlan& plan) {
  if (plan.dim < 1 || plan.count < 1 || plan.lo <= 0.0 || plan.hi <= plan.lo)
    throw NumericError("invalid sample plan");
  Xoshiro256pp rng(plan.seed);
  std::vector<Eigen::VectorXd> points;
  points.reserve(static_cast<std::size_t>(plan.count));
  for (int k = 0; k < plan.count; ++k) {
    Eigen::VectorXd x(plan.dim);
    for (int i = 0; i < plan.dim; ++i) x(i) = rng.logUniform(plan.lo, plan.hi);
    points.push_back(std::move(x));
  }
  return points;
}

EigenDecomposition eigenSymmetric(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols() || n < 1) throw NumericError("eigenSymmetric: matrix must be square");
  const double skew = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-12 * (1.0 + a.cwiseAbs().maxCoeff()))
    throw NumericError("eigenSymmetric: matrix is not symmetric");

  Eigen::MatrixXd b = Eigen::MatrixXd(a.selfadjointView<Eigen::Upper>());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  const double normA = b.norm();
  const double threshold = 1e-12 * normA;
  constexpr int kSweepCap = 50;

  auto offNorm = [&]() {
    double s = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) s += 2.0 * b(p, q) * b(p, q);
    return std::sqrt(s);
  };

  int sweep = 0;
  if (normA > 0.0) {
    while (offNorm() > threshold) {
      if (sweep >= kSweepCap)
        throw NumericError("jacobi eigensolver did not converge within 50 sweeps");
      for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          if (b(p, q) == 0.0) continue;
          Eigen::JacobiRotation<double> rot;
          rot.makeJacobi(b(p, p), b(p, q), b(q, q));
          b.applyOnTheLeft(p, q, rot.transpose());
          b.applyOnTheRight(p, q, rot);
          v.applyOnTheRight(p, q, rot);
        }
      }
      ++sweep;
    }
  }

  // Ascending sort; ties keep the lower original index first.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return b(i, i) < b(j, j); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  out.sweeps = sweep;
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values(j) = b(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]);
    out.vectors.col(j) = v.col(order[static_cast<std::size_t>(j)]);
    // Deterministic sign: largest-magnitude component is positive.
    Eigen::Index imax;
    out.vectors.col(j).cwiseAbs().maxCoeff(&imax);
    if (out.vectors(imax, j) < 0.0) out.vectors.col(j) = -out.vectors.col(j);
  }
  return out;
}

Eigen::VectorXd eigenvaluesSymmetric(const Eigen::MatrixXd& a) {
  return eigenSymmetric(a).values;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

Eigen::VectorXd elementarySymmetricMeans(const Eigen::VectorXd& kappa) {
  const int n = static_cast<int>(kappa.size());
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n + 1);
  e(0) = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::min(i + 1, n); j >= 1; --j) e(j) += kappa(i) * e(j - 1);
  Eigen::VectorXd k(n);
  for (int j = 1; j <= n; ++j) k(j - 1) = e(j) / binomial(n, j);
  return k;
}

Eigen::VectorXd principalMinorMeans(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  if (n != a.cols() || n < 1) throw NumericError("principalMinorMeans: matrix must be square");
  if (n > 12) throw NumericError("principalMinorMeans: dimension capped at 12");

  const Eigen::MatrixXd sym = Eigen::MatrixXd(a.selfadjointView<Eigen::Upper>());
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(n);
  std::vector<Eigen::Index> idx;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    idx.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const auto size = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd sub(size, size);
    for (Eigen::Index r = 0; r < size; ++r)
      for (Eigen::Index c = 0; c < size; ++c) sub(r, c) = sym(idx[r], idx[c]);
    sums(size - 1) += sub.partialPivLu().determinant();
  }
  Eigen::VectorXd k(n);
  for (int j = 1; j <= n; ++j) k(j - 1) = sums(j - 1) / binomial(n, j);
  return k;
}

}  // namespace iso

#include "iso/calculus.hpp"

#include <cmath>
#include <string>

#include "iso/errors.hpp"

namespace iso {

void requirePositive(const Eigen::VectorXd& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x(i) > 0.0) || !std::isfinite(x(i))) {
      throw DomainError("point must lie in the positive orthant (x" +
                        std::to_string(i + 1) + " = " + std::to_string(x(i)) +
                        ")");
    }
  }
}

namespace {

void requireDim(const Eigen::VectorXd& x, int dim) {
  if (x.size() != dim) {
    throw DomainError("point dimension " + std::to_string(x.size()) +
                      " does not match function dimension " + std::to_string(dim));
  }
  requirePositive(x);
}

}  // namespace

Differentials::Differentials(const FunctionModel& model)
    : Differentials(model.expression(), model.dim()) {}

Differentials::Differentials(Expression f, int dim) : dim_(dim), f_(std::move(f)) {
  if (dim_ < 1) throw DomainError("dimension must be at least 1");
  if (maxVariableIndex(f_) > dim_)
    throw DomainError("expression uses a variable beyond the declared dimension");
  gradient_.reserve(dim_);
  for (int i = 1; i <= dim_; ++i) {
    gradient_.push_back(differentiate(f_, i));
  }
  hessianUpper_.reserve(static_cast<size_t>(dim_) * (dim_ + 1) / 2);
  for (int i = 1; i <= dim_; ++i) {
    for (int j = i; j <= dim_; ++j) {
      hessianUpper_.push_back(differentiate(gradient_[i - 1], j));
    }
  }
  std::vector<Expression> diagonal;
  diagonal.reserve(dim_);
  for (int i = 0; i < dim_; ++i) {
    diagonal.push_back(upper(i, i));
  }
  laplacian_ = sum(std::move(diagonal));
}

const Expression& Differentials::upper(int i, int j) const {
  // Row-major upper triangle: row i starts after i full rows of shrinking
  // length, i.e. at i*n - i*(i-1)/2.
  int start = i * dim_ - i * (i - 1) / 2;
  return hessianUpper_[static_cast<size_t>(start + j - i)];
}

const Expression& Differentials::partial(int i) const {
  if (i < 1 || i > dim_) throw DomainError("partial index out of range");
  return gradient_[i - 1];
}

const Expression& Differentials::partial(int i, int j) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_)
    throw DomainError("partial index out of range");
  if (i > j) std::swap(i, j);
  return upper(i - 1, j - 1);
}

Expression Differentials::bilaplacianExpression() const {
  std::vector<Expression> terms;
  terms.reserve(dim_);
  for (int i = 1; i <= dim_; ++i) {
    terms.push_back(differentiate(differentiate(laplacian_, i), i));
  }
  return sum(std::move(terms));
}

DiffBundle Differentials::at(const Eigen::VectorXd& x) const {
  requireDim(x, dim_);
  DiffBundle out;
  out.point = x;
  out.value = evaluate(f_, x);
  out.gradient.resize(dim_);
  for (int i = 0; i < dim_; ++i) {
    out.gradient(i) = evaluate(gradient_[i], x);
  }
  out.hessian.resize(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      double v = evaluate(upper(i, j), x);
      out.hessian(i, j) = v;
      out.hessian(j, i) = v;
    }
  }
  return out;
}

double Differentials::valueAt(const Eigen::VectorXd& x) const {
  requireDim(x, dim_);
  return evaluate(f_, x);
}

Eigen::VectorXd Differentials::gradientAt(const Eigen::VectorXd& x) const {
  requireDim(x, dim_);
  Eigen::VectorXd g(dim_);
  for (int i = 0; i < dim_; ++i) {
    g(i) = evaluate(gradient_[i], x);
  }
  return g;
}

Eigen::MatrixXd Differentials::hessianAt(const Eigen::VectorXd& x) const {
  requireDim(x, dim_);
  Eigen::MatrixXd h(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      double v = evaluate(upper(i, j), x);
      h(i, j) = v;
      h(j, i) = v;
    }
  }
  return h;
}

double Differentials::laplacianAt(const Eigen::VectorXd& x) const {
  requireDim(x, dim_);
  return evaluate(laplacian_, x);
}

DiffBundle diffBundle(const FunctionModel& model, const Eigen::VectorXd& x) {
  return Differentials(model).at(x);
}

double laplacian(const FunctionModel& model, const Eigen::VectorXd& x) {
  return Differentials(model).laplacianAt(x);
}

double bilaplacian(const FunctionModel& model, const Eigen::VectorXd& x) {
  Differentials d(model);
  Expression b = d.bilaplacianExpression();
  requireDim(x, model.dim());
  return evaluate(b, x);
}

// ---- finite-difference oracles ----------------------------------------------

namespace {

Eigen::VectorXd fdSteps(const Eigen::VectorXd& x) {
  Eigen::VectorXd h(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    h(i) = 1e-5 * std::max(x(i), 1.0);
    if (!(x(i) > 10.0 * h(i))) {
      throw NumericError(
          "point too close to the orthant boundary for finite differences (x" +
          std::to_string(i + 1) + ")");
    }
  }
  return h;
}

}  // namespace

Eigen::VectorXd fdGradient(const FunctionModel& model, const Eigen::VectorXd& x) {
  requireDim(x, model.dim());
  Eigen::VectorXd h = fdSteps(x);
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd p = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    p(i) = x(i) + h(i);
    double fPlus = model.evaluateDirect(p);
    p(i) = x(i) - h(i);
    double fMinus = model.evaluateDirect(p);
    p(i) = x(i);
    g(i) = (fPlus - fMinus) / (2.0 * h(i));
  }
  return g;
}

Eigen::MatrixXd fdHessian(const FunctionModel& model, const Eigen::VectorXd& x) {
  requireDim(x, model.dim());
  Eigen::VectorXd h = fdSteps(x);
  Eigen::Index n = x.size();
  Eigen::MatrixXd hess(n, n);
  double fCenter = model.evaluateDirect(x);
  Eigen::VectorXd p = x;
  for (Eigen::Index i = 0; i < n; ++i) {
    p(i) = x(i) + h(i);
    double fPlus = model.evaluateDirect(p);
    p(i) = x(i) - h(i);
    double fMinus = model.evaluateDirect(p);
    p(i) = x(i);
    hess(i, i) = (fPlus - 2.0 * fCenter + fMinus) / (h(i) * h(i));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      p(i) = x(i) + h(i);
      p(j) = x(j) + h(j);
      double fpp = model.evaluateDirect(p);
      p(j) = x(j) - h(j);
      double fpm = model.evaluateDirect(p);
      p(i) = x(i) - h(i);
      double fmm = model.evaluateDirect(p);
      p(j) = x(j) + h(j);
      double fmp = model.evaluateDirect(p);
      p(i) = x(i);
      p(j) = x(j);
      double v = (fpp - fpm - fmp + fmm) / (4.0 * h(i) * h(j));
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }
  return hess;
}

}  // namespace iso

#include "iso/model.hpp"

#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

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

void requirePositiveOrthant(const Eigen::VectorXd& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x(i) > 0.0)) {
      throw DomainError("point must lie in the positive orthant (x" +
                        std::to_string(i + 1) + " = " + formatDouble(x(i)) + ")");
    }
  }
}

double finiteOrThrow(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " overflowed");
  return v;
}

}  // namespace

struct FunctionModel::Data {
  FamilyKind family = FamilyKind::Generic;
  int dim = 0;
  double gamma = 1.0;
  double degree = 1.0;  // CES d
  double rho = 1.0;     // CES rho
  Eigen::VectorXd weights;
  Expression outer;
  std::shared_ptr<const FunctionModel> inner;
  Expression lowered;
};

FunctionModel::FunctionModel(std::shared_ptr<const Data> data)
    : data_(std::move(data)) {}

FunctionModel FunctionModel::cobbDouglas(double gamma, Eigen::VectorXd alpha) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw ModelError("cobb-douglas scale must be positive");
  if (alpha.size() < 2) throw ModelError("model needs at least two inputs");
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    if (!std::isfinite(alpha(i)) || alpha(i) == 0.0)
      throw ModelError("cobb-douglas exponents must be finite and nonzero");
  }
  auto data = std::make_shared<Data>();
  data->family = FamilyKind::CobbDouglas;
  data->dim = static_cast<int>(alpha.size());
  data->gamma = gamma;
  data->weights = std::move(alpha);
  std::vector<Expression> factors;
  factors.push_back(constant(gamma));
  for (int i = 0; i < data->dim; ++i) {
    factors.push_back(pow(variable(i + 1), data->weights(i)));
  }
  data->lowered = product(std::move(factors));
  return FunctionModel(std::move(data));
}

FunctionModel FunctionModel::ces(double gamma, double degree, double rho,
                                 Eigen::VectorXd weights) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw ModelError("ces scale must be positive");
  if (!std::isfinite(degree) || degree == 0.0)
    throw ModelError("ces degree must be finite and nonzero");
  if (!std::isfinite(rho) || rho == 0.0)
    throw ModelError("ces exponent must be finite and nonzero");
  if (weights.size() < 2) throw ModelError("model needs at least two inputs");
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (!(weights(i) > 0.0) || !std::isfinite(weights(i)))
      throw ModelError("ces weights must be positive");
  }
  auto data = std::make_shared<Data>();
  data->family = FamilyKind::CES;
  data->dim = static_cast<int>(weights.size());
  data->gamma = gamma;
  data->degree = degree;
  data->rho = rho;
  data->weights = std::move(weights);
  std::vector<Expression> terms;
  for (int i = 0; i < data->dim; ++i) {
    double coeff = std::pow(data->weights(i), rho);
    if (!std::isfinite(coeff)) throw ModelError("ces weight power overflowed");
    terms.push_back(constant(coeff) * pow(variable(i + 1), rho));
  }
  data->lowered = constant(gamma) * pow(sum(std::move(terms)), degree / rho);
  return FunctionModel(std::move(data));
}

FunctionModel FunctionModel::perfectSubstitute(Eigen::VectorXd weights) {
  if (weights.size() < 2) throw ModelError("model needs at least two inputs");
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights(i)) || weights(i) == 0.0)
      throw ModelError("substitute weights must be finite and nonzero");
  }
  auto data = std::make_shared<Data>();
  data->family = FamilyKind::PerfectSubstitute;
  data->dim = static_cast<int>(weights.size());
  data->weights = std::move(weights);
  std::vector<Expression> terms;
  for (int i = 0; i < data->dim; ++i) {
    terms.push_back(constant(data->weights(i)) * variable(i + 1));
  }
  data->lowered = sum(std::move(terms));
  return FunctionModel(std::move(data));
}

FunctionModel FunctionModel::homothetic(Expression outer, FunctionModel inner) {
  if (maxVariableIndex(outer) > 1)
    throw ModelError("outer map must use only x1 (the inner value)");
  auto data = std::make_shared<Data>();
  data->family = FamilyKind::Homothetic;
  data->dim = inner.dim();
  data->outer = outer;
  data->inner = std::make_shared<const FunctionModel>(std::move(inner));
  data->lowered = substituteVariables(outer, {data->inner->expression()});
  return FunctionModel(std::move(data));
}

FunctionModel FunctionModel::generic(Expression f, int dim) {
  if (dim < 2) throw ModelError("model needs at least two inputs");
  if (maxVariableIndex(f) > dim)
    throw ModelError("expression uses a variable beyond the declared dimension");
  auto data = std::make_shared<Data>();
  data->family = FamilyKind::Generic;
  data->dim = dim;
  data->lowered = std::move(f);
  return FunctionModel(std::move(data));
}

FamilyKind FunctionModel::family() const { return data_->family; }
int FunctionModel::dim() const { return data_->dim; }
const Expression& FunctionModel::expression() const { return data_->lowered; }

double FunctionModel::evaluateDirect(const Eigen::VectorXd& x) const {
  if (x.size() != data_->dim)
    throw DomainError("point dimension " + std::to_string(x.size()) +
                      " does not match model dimension " +
                      std::to_string(data_->dim));
  requirePositiveOrthant(x);
  switch (data_->family) {
    case FamilyKind::CobbDouglas: {
      double v = data_->gamma;
      for (int i = 0; i < data_->dim; ++i) {
        v *= std::pow(x(i), data_->weights(i));
      }
      return finiteOrThrow(v, "cobb-douglas value");
    }
    case FamilyKind::CES: {
      double u = 0.0;
      for (int i = 0; i < data_->dim; ++i) {
        u += std::pow(data_->weights(i) * x(i), data_->rho);
      }
      finiteOrThrow(u, "ces aggregate");
      double v = data_->gamma * std::pow(u, data_->degree / data_->rho);
      return finiteOrThrow(v, "ces value");
    }
    case FamilyKind::PerfectSubstitute:
      return finiteOrThrow(data_->weights.dot(x), "linear value");
    case FamilyKind::Homothetic: {
      double h = data_->inner->evaluateDirect(x);
      return finiteOrThrow(evaluate(data_->outer, h), "homothetic value");
    }
    case FamilyKind::Generic:
      return evaluate(data_->lowered, x);
  }
  throw InternalError("unhandled model family in evaluateDirect");
}

double FunctionModel::gamma() const {
  if (data_->family != FamilyKind::CobbDouglas && data_->family != FamilyKind::CES)
    throw ModelError("model has no scale parameter");
  return data_->gamma;
}

double FunctionModel::cesDegree() const {
  if (data_->family != FamilyKind::CES) throw ModelError("model is not ces");
  return data_->degree;
}

double FunctionModel::cesRho() const {
  if (data_->family != FamilyKind::CES) throw ModelError("model is not ces");
  return data_->rho;
}

const Eigen::VectorXd& FunctionModel::weights() const {
  if (data_->weights.size() == 0) throw ModelError("model has no weight vector");
  return data_->weights;
}

const Expression& FunctionModel::outer() const {
  if (data_->family != FamilyKind::Homothetic)
    throw ModelError("model is not homothetic");
  return data_->outer;
}

const FunctionModel& FunctionModel::inner() const {
  if (data_->family != FamilyKind::Homothetic)
    throw ModelError("model is not homothetic");
  return *data_->inner;
}

std::string FunctionModel::describe() const {
  switch (data_->family) {
    case FamilyKind::CobbDouglas:
      return "cobb-douglas(gamma=" + formatDouble(data_->gamma) +
             ", alpha=" + formatVector(data_->weights) + ")";
    case FamilyKind::CES:
      return "ces(gamma=" + formatDouble(data_->gamma) +
             ", d=" + formatDouble(data_->degree) +
             ", rho=" + formatDouble(data_->rho) +
             ", a=" + formatVector(data_->weights) + ")";
    case FamilyKind::PerfectSubstitute:
      return "perfect-substitute(a=" + formatVector(data_->weights) + ")";
    case FamilyKind::Homothetic:
      return "homothetic(outer=" + toString(data_->outer) +
             ", inner=" + data_->inner->describe() + ")";
    case FamilyKind::Generic:
      return "generic(n=" + std::to_string(data_->dim) +
             ", f=" + toString(data_->lowered) + ")";
  }
  return "unknown";
}

}  // namespace iso

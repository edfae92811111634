#ifndef ISO_CURVES_HPP
#define ISO_CURVES_HPP

#include <Eigen/Dense>
#include <vector>

#include "iso/expr.hpp"
#include "iso/model.hpp"

namespace iso {

/// A curve in the positive orthant given coordinatewise as expressions of
/// one parameter u (variable 1), together with the parameter interval and
/// the quadrature resolution used for arclength. Curves on the graph
/// hypersurface of f are handled through their top view: the arclength of
/// the lifted curve in the degenerate ambient metric equals the Euclidean
/// arclength of the top view.
struct TopViewCurve {
  double a = 0.0;
  double b = 1.0;
  std::vector<Expression> coords;
  int panels = 1024;
};

/// Monotone parameter <-> arclength map for a regular top-view curve.
/// s(u) accumulates composite Simpson over uniform panels; the inverse
/// interpolates with cubic Hermite segments whose endpoint slopes are the
/// exact du/ds = 1/|x'(u)|. Derivatives of the coordinates are symbolic.
class ArclengthTable {
 public:
  explicit ArclengthTable(TopViewCurve curve);

  const TopViewCurve& curve() const { return curve_; }
  double totalLength() const { return knotS_.back(); }

  /// u for a given s in [0, totalLength] (tiny rounding overshoot tolerated).
  double parameterAt(double s) const;
  /// s for a given u in [a, b], from the cumulative table plus one Simpson
  /// panel fragment.
  double arclengthAt(double u) const;

  Eigen::VectorXd pointAt(double u) const;
  Eigen::VectorXd velocityAt(double u) const;
  Eigen::VectorXd accelerationAt(double u) const;

 private:
  TopViewCurve curve_;
  std::vector<Expression> velocity_;
  std::vector<Expression> acceleration_;
  std::vector<double> knotU_;
  std::vector<double> knotS_;

  double speedAt(double u) const;  // |x'(u)|, throws CurveError below 1e-12
};

/// Frenet-style data of the lifted curve at one arclength station. With
/// X(s) = (x(s), f(x(s))) and the vertical direction i = (0,..,0,1):
/// T = X' is the lifted unit tangent, X'' splits as kappaG * S + kappaN * i
/// where kappaN = t' (D^2 f) t. When the top view has zero curvature
/// (kappaG < 1e-10) S degenerates to i and kappaS = the second s-derivative
/// of the height is reported instead.
struct CurveFrame {
  double s = 0.0;
  Eigen::VectorXd X;  // n+1 lifted point
  Eigen::VectorXd T;  // n+1 lifted tangent
  Eigen::VectorXd t;  // n top-view unit tangent
  double kappaG = 0.0;
  Eigen::VectorXd S;  // n+1 side vector (i in the degenerate case)
  double kappaN = 0.0;
  bool hasKappaS = false;
  double kappaS = 0.0;
};

CurveFrame frameAt(const FunctionModel& m, const ArclengthTable& table, double s);

/// Frames at k >= 2 stations equally spaced in arclength, s = 0 .. length.
std::vector<CurveFrame> curvatureAlong(const FunctionModel& m,
                                       const TopViewCurve& curve, int stations);
std::vector<CurveFrame> curvatureAlong(const FunctionModel& m,
                                       const ArclengthTable& table, int stations);

}  // namespace iso

#endif  // ISO_CURVES_HPP

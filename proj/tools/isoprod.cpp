// isoprod: curvature analysis, classification, curve sweeps, and theorem
// checks for graph surfaces of production functions, with deterministic
// JSON/CSV/human reports.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iso/calculus.hpp"
#include "iso/curvature.hpp"
#include "iso/curves.hpp"
#include "iso/econ.hpp"
#include "iso/errors.hpp"
#include "iso/expr.hpp"
#include "iso/model.hpp"
#include "iso/numeric.hpp"
#include "iso/report.hpp"
#include "iso/verify.hpp"

namespace {

constexpr const char* kToolName = "isoprod";
constexpr const char* kToolVersion = "0.1.0";

// Command-line mistakes (as opposed to geometric domain errors): exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string function;
  std::string family;
  std::string at;
  std::string plan;
  std::string format = "json";
  std::string outPath;
  std::string check;
  std::string curve;
  std::string interval;
  std::string aText;
  std::string alphaText;
  std::string outer;
  int dim = 0;  // 0 = infer
  int stations = 16;
  unsigned long long seed = 42;
  double atol = 1e-9;
  double rtol = 1e-6;
  double gamma = 1.0;
  double degree = 1.0;
  double rho = 1.0;
  bool atolSet = false;
  bool rtolSet = false;
  bool planSet = false;
};

std::vector<double> parseNumberList(const std::string& text, const char* what) {
  std::vector<double> values;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    char* end = nullptr;
    const char* begin = piece.c_str();
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
      throw UsageError(std::string("invalid number '") + piece + "' in " + what);
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (values.empty()) throw UsageError(std::string(what) + " must not be empty");
  return values;
}

Eigen::VectorXd toVector(const std::vector<double>& values) {
  return Eigen::Map<const Eigen::VectorXd>(values.data(),
                                           static_cast<Eigen::Index>(values.size()));
}

iso::SamplePlan planFor(const Options& o, int dim) {
  iso::SamplePlan plan;
  plan.dim = dim;
  plan.seed = o.seed;
  if (o.planSet) {
    std::vector<double> v = parseNumberList(o.plan, "--plan (count,lo,hi)");
    if (v.size() != 3) throw UsageError("--plan takes count,lo,hi");
    if (v[0] < 1.0 || v[0] != static_cast<double>(static_cast<int>(v[0]))) {
      throw UsageError("--plan count must be a positive integer");
    }
    plan.count = static_cast<int>(v[0]);
    plan.lo = v[1];
    plan.hi = v[2];
  }
  if (!(plan.lo > 0.0) || !(plan.hi > plan.lo)) {
    throw UsageError("--plan bounds must satisfy 0 < lo < hi");
  }
  return plan;
}

iso::FunctionModel buildFamilyModel(const Options& o) {
  iso::FunctionModel base = [&] {
    if (o.family == "cobb-douglas") {
      if (o.alphaText.empty()) {
        throw UsageError("--family cobb-douglas requires --alpha a1,..,an");
      }
      return iso::FunctionModel::cobbDouglas(
          o.gamma, toVector(parseNumberList(o.alphaText, "--alpha")));
    }
    if (o.family == "ces") {
      if (o.aText.empty()) throw UsageError("--family ces requires --a a1,..,an");
      return iso::FunctionModel::ces(o.gamma, o.degree, o.rho,
                                     toVector(parseNumberList(o.aText, "--a")));
    }
    if (o.family == "perfect-substitute") {
      if (o.aText.empty()) {
        throw UsageError("--family perfect-substitute requires --a a1,..,an");
      }
      return iso::FunctionModel::perfectSubstitute(
          toVector(parseNumberList(o.aText, "--a")));
    }
    throw UsageError("unknown family '" + o.family +
                     "'; known: cobb-douglas, ces, perfect-substitute");
  }();
  if (!o.outer.empty()) {
    return iso::FunctionModel::homothetic(iso::parseExpression(o.outer, 1),
                                          std::move(base));
  }
  return base;
}

/// Resolves the model from exactly one of --function / --family. For inline
/// expressions the dimension comes from -n, else from the point length, else
/// from the highest variable mentioned (minimum 2).
iso::FunctionModel buildModel(const Options& o, int pointDim) {
  const bool hasFunction = !o.function.empty();
  const bool hasFamily = !o.family.empty();
  if (hasFunction == hasFamily) {
    throw UsageError("exactly one of --function or --family is required");
  }
  if (hasFamily) {
    iso::FunctionModel m = buildFamilyModel(o);
    if (o.dim > 0 && o.dim != m.dim()) {
      throw UsageError("--dim disagrees with the family's parameter count");
    }
    return m;
  }
  if (o.dim > 0) {
    return iso::FunctionModel::generic(iso::parseExpression(o.function, o.dim),
                                       o.dim);
  }
  iso::Expression e = iso::parseExpression(o.function, 1000);
  int dim = std::max(2, iso::maxVariableIndex(e));
  if (pointDim > dim) dim = pointDim;
  return iso::FunctionModel::generic(std::move(e), dim);
}

// ---- JSON builders -----------------------------------------------------------

iso::JsonValue vectorJson(const Eigen::VectorXd& v) {
  iso::JsonValue a = iso::JsonValue::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push(iso::JsonValue::number(v(i)));
  return a;
}

iso::JsonValue rowsJson(const Eigen::MatrixXd& m) {
  iso::JsonValue a = iso::JsonValue::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    a.push(vectorJson(m.row(i).transpose()));
  }
  return a;
}

iso::JsonValue columnsJson(const Eigen::MatrixXd& m) {
  iso::JsonValue a = iso::JsonValue::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) a.push(vectorJson(m.col(j)));
  return a;
}

iso::JsonValue planJson(const iso::SamplePlan& plan, bool withDim) {
  iso::JsonValue p = iso::JsonValue::object();
  if (withDim) p.set("dim", iso::JsonValue::integer(static_cast<long long>(plan.dim)));
  p.set("count", iso::JsonValue::integer(static_cast<long long>(plan.count)));
  p.set("lo", iso::JsonValue::number(plan.lo));
  p.set("hi", iso::JsonValue::number(plan.hi));
  p.set("seed", iso::JsonValue::integer(
                    static_cast<unsigned long long>(plan.seed)));
  return p;
}

iso::JsonValue verdictJson(const iso::PredicateVerdict& v) {
  iso::JsonValue o = iso::JsonValue::object();
  o.set("holds", iso::JsonValue::boolean(v.holds));
  o.set("worstResidual", iso::JsonValue::number(v.worstResidual));
  o.set("worstThreshold", iso::JsonValue::number(v.worstThreshold));
  o.set("worstPoint", vectorJson(v.worstPoint));
  if (!v.strategy.empty()) o.set("strategy", iso::JsonValue::string(v.strategy));
  return o;
}

iso::JsonValue toleranceJson(const iso::Tolerance& tol) {
  iso::JsonValue t = iso::JsonValue::object();
  t.set("atol", iso::JsonValue::number(tol.atol));
  t.set("rtol", iso::JsonValue::number(tol.rtol));
  return t;
}

iso::JsonValue inputEcho(const Options& o, const char* subcommand) {
  iso::JsonValue in = iso::JsonValue::object();
  in.set("subcommand", iso::JsonValue::string(subcommand));
  if (!o.function.empty()) in.set("function", iso::JsonValue::string(o.function));
  if (!o.family.empty()) {
    in.set("family", iso::JsonValue::string(o.family));
    in.set("gamma", iso::JsonValue::number(o.gamma));
    if (o.family == "ces") {
      in.set("d", iso::JsonValue::number(o.degree));
      in.set("rho", iso::JsonValue::number(o.rho));
    }
    if (!o.aText.empty()) in.set("a", iso::JsonValue::string(o.aText));
    if (!o.alphaText.empty()) in.set("alpha", iso::JsonValue::string(o.alphaText));
    if (!o.outer.empty()) in.set("outer", iso::JsonValue::string(o.outer));
  }
  if (!o.at.empty()) in.set("at", iso::JsonValue::string(o.at));
  if (!o.curve.empty()) in.set("curve", iso::JsonValue::string(o.curve));
  if (!o.interval.empty()) in.set("interval", iso::JsonValue::string(o.interval));
  if (!o.check.empty()) in.set("check", iso::JsonValue::string(o.check));
  in.set("format", iso::JsonValue::string(o.format));
  return in;
}

iso::JsonValue envelope(const Options& o, iso::JsonValue input,
                        iso::JsonValue results, iso::JsonValue findings,
                        const iso::Tolerance& tol) {
  iso::JsonValue root = iso::JsonValue::object();
  root.set("tool", iso::JsonValue::string(kToolName));
  root.set("version", iso::JsonValue::string(kToolVersion));
  root.set("seed", iso::JsonValue::integer(
                       static_cast<unsigned long long>(o.seed)));
  root.set("input", std::move(input));
  root.set("results", std::move(results));
  root.set("findings", std::move(findings));
  root.set("tolerances", toleranceJson(tol));
  return root;
}

void emitReport(const Options& o, const iso::JsonValue& root,
                const std::vector<std::string>& csvRows) {
  std::string text;
  if (o.format == "json") {
    text = iso::writeJson(root);
  } else if (o.format == "csv") {
    for (const std::string& row : csvRows) text += row;
  } else {
    bool color = o.outPath.empty() && ::isatty(1) != 0 &&
                 std::getenv("NO_COLOR") == nullptr;
    text = iso::renderHuman(root, color);
  }
  if (o.outPath.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(o.outPath, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw UsageError("cannot write output file '" + o.outPath + "'");
}

std::string formatBool(bool b) { return b ? "true" : "false"; }

// ---- analyze -------------------------------------------------------------------

int cmdAnalyze(const Options& o) {
  // Parse the function before checking --at so syntax errors (with their
  // byte offsets) surface even in incomplete invocations.
  std::vector<double> coords;
  if (!o.at.empty()) coords = parseNumberList(o.at, "--at");
  iso::FunctionModel model = buildModel(o, static_cast<int>(coords.size()));
  if (o.at.empty()) throw UsageError("analyze requires --at x1,..,xn");
  if (static_cast<int>(coords.size()) != model.dim()) {
    throw UsageError("--at has " + std::to_string(coords.size()) +
                     " coordinates but the model has dimension " +
                     std::to_string(model.dim()));
  }
  Eigen::VectorXd point = toVector(coords);

  iso::Differentials diff(model);
  iso::CurvatureProfile profile = iso::curvatureProfile(diff, point);
  double lap = diff.laplacianAt(point);

  iso::SamplePlan plan = planFor(o, model.dim());
  iso::Tolerance tol{o.atol, o.rtol};
  iso::PredicateVerdict minimal = iso::isIsotropicMinimal(model, plan, tol);
  iso::PredicateVerdict nullRC = iso::hasNullRelativeCurvature(model, plan, tol);
  iso::PredicateVerdict flat = iso::isIsotropicFlat(
      model, plan, tol, iso::PlaneStrategy::coordinatePairs());
  iso::PredicateVerdict biharmonic = iso::isIsotropicBiharmonic(model, plan, tol);

  iso::JsonValue results = iso::JsonValue::object();
  results.set("model", iso::JsonValue::string(model.describe()));
  results.set("dim", iso::JsonValue::integer(static_cast<long long>(model.dim())));
  results.set("point", vectorJson(point));
  results.set("value", iso::JsonValue::number(profile.value));
  results.set("gradient", vectorJson(profile.gradient));
  results.set("hessian", rowsJson(profile.hessian));
  results.set("laplacian", iso::JsonValue::number(lap));
  results.set("principalCurvatures", vectorJson(profile.principalCurvatures));
  results.set("principalDirections", columnsJson(profile.principalDirections));
  results.set("liftedDirections", columnsJson(profile.liftedDirections));
  results.set("fundamentalCurvatures", vectorJson(profile.fundamentalCurvatures));
  results.set("isotropicMeanCurvature",
              iso::JsonValue::number(profile.isotropicMeanCurvature));
  results.set("relativeCurvature",
              iso::JsonValue::number(profile.relativeCurvature));
  results.set("plan", planJson(plan, true));
  iso::JsonValue predicates = iso::JsonValue::object();
  predicates.set("isotropicMinimal", verdictJson(minimal));
  predicates.set("nullRelativeCurvature", verdictJson(nullRC));
  predicates.set("isotropicFlat", verdictJson(flat));
  predicates.set("isotropicBiharmonic", verdictJson(biharmonic));
  results.set("predicates", std::move(predicates));

  iso::JsonValue findings = iso::JsonValue::array();
  if (!flat.finding.empty()) findings.push(iso::JsonValue::string(flat.finding));

  std::vector<std::string> csv;
  csv.push_back(iso::csvRow({"quantity", "value"}));
  csv.push_back(iso::csvRow({"value", iso::formatNumber(profile.value)}));
  csv.push_back(iso::csvRow({"laplacian", iso::formatNumber(lap)}));
  csv.push_back(iso::csvRow({"isotropicMeanCurvature",
                             iso::formatNumber(profile.isotropicMeanCurvature)}));
  csv.push_back(iso::csvRow(
      {"relativeCurvature", iso::formatNumber(profile.relativeCurvature)}));
  for (Eigen::Index j = 0; j < profile.principalCurvatures.size(); ++j) {
    csv.push_back(
        iso::csvRow({"kappa_" + std::to_string(j + 1),
                     iso::formatNumber(profile.principalCurvatures(j))}));
  }
  for (Eigen::Index j = 0; j < profile.fundamentalCurvatures.size(); ++j) {
    csv.push_back(
        iso::csvRow({"K_" + std::to_string(j + 1),
                     iso::formatNumber(profile.fundamentalCurvatures(j))}));
  }
  for (Eigen::Index j = 0; j < profile.gradient.size(); ++j) {
    csv.push_back(iso::csvRow({"gradient_" + std::to_string(j + 1),
                               iso::formatNumber(profile.gradient(j))}));
  }
  for (Eigen::Index i = 0; i < profile.hessian.rows(); ++i) {
    for (Eigen::Index j = 0; j < profile.hessian.cols(); ++j) {
      csv.push_back(iso::csvRow(
          {"hessian_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
           iso::formatNumber(profile.hessian(i, j))}));
    }
  }
  csv.push_back(iso::csvRow({"isotropicMinimal", formatBool(minimal.holds)}));
  csv.push_back(iso::csvRow({"nullRelativeCurvature", formatBool(nullRC.holds)}));
  csv.push_back(iso::csvRow({"isotropicFlat", formatBool(flat.holds)}));
  csv.push_back(iso::csvRow({"isotropicBiharmonic", formatBool(biharmonic.holds)}));

  emitReport(o, envelope(o, inputEcho(o, "analyze"), std::move(results),
                         std::move(findings), tol),
             csv);
  return 0;
}

// ---- classify -------------------------------------------------------------------

int cmdClassify(const Options& o) {
  iso::FunctionModel model = buildModel(o, 0);
  iso::SamplePlan plan = planFor(o, model.dim());
  iso::EconReport report = iso::econReport(model, plan);
  iso::FamilyTag tag = iso::classifyFamily(model.expression(), plan);

  iso::JsonValue results = iso::JsonValue::object();
  results.set("model", iso::JsonValue::string(model.describe()));
  results.set("dim", iso::JsonValue::integer(static_cast<long long>(model.dim())));
  results.set("homogeneous",
              iso::JsonValue::boolean(report.homogeneity.homogeneous));
  results.set("degree", iso::JsonValue::number(report.homogeneity.degree));
  results.set("eulerSpread", iso::JsonValue::number(report.homogeneity.spread));
  results.set("returnsToScale",
              iso::JsonValue::string(iso::toString(report.returnsToScale)));
  iso::JsonValue substitute = iso::JsonValue::object();
  substitute.set("yes", iso::JsonValue::boolean(report.substitute.yes));
  substitute.set("coefficients", vectorJson(report.substitute.coefficients));
  substitute.set("worstHessianEntry",
                 iso::JsonValue::number(report.substitute.worstHessianEntry));
  substitute.set("worstValueResidual",
                 iso::JsonValue::number(report.substitute.worstValueResidual));
  results.set("perfectSubstitute", std::move(substitute));
  iso::JsonValue family = iso::JsonValue::object();
  family.set("kind", iso::JsonValue::string(iso::toString(tag.kind)));
  family.set("label", iso::JsonValue::string(tag.label));
  family.set("gamma", iso::JsonValue::number(tag.gamma));
  family.set("degree", iso::JsonValue::number(tag.degree));
  family.set("rho", iso::JsonValue::number(tag.rho));
  family.set("weights", vectorJson(tag.weights));
  family.set("residual", iso::JsonValue::number(tag.residual));
  results.set("family", std::move(family));
  results.set("positivityFraction", iso::JsonValue::number(report.positivity));
  results.set("plan", planJson(plan, true));

  std::vector<std::string> csv;
  csv.push_back(iso::csvRow({"quantity", "value"}));
  csv.push_back(iso::csvRow(
      {"homogeneous", formatBool(report.homogeneity.homogeneous)}));
  csv.push_back(
      iso::csvRow({"degree", iso::formatNumber(report.homogeneity.degree)}));
  csv.push_back(
      iso::csvRow({"eulerSpread", iso::formatNumber(report.homogeneity.spread)}));
  csv.push_back(
      iso::csvRow({"returnsToScale", iso::toString(report.returnsToScale)}));
  csv.push_back(
      iso::csvRow({"perfectSubstitute", formatBool(report.substitute.yes)}));
  for (Eigen::Index j = 0; j < report.substitute.coefficients.size(); ++j) {
    csv.push_back(
        iso::csvRow({"coefficient_" + std::to_string(j + 1),
                     iso::formatNumber(report.substitute.coefficients(j))}));
  }
  csv.push_back(iso::csvRow({"familyKind", iso::toString(tag.kind)}));
  csv.push_back(iso::csvRow({"familyLabel", tag.label}));
  csv.push_back(
      iso::csvRow({"positivityFraction", iso::formatNumber(report.positivity)}));

  iso::Tolerance tol{o.atol, o.rtol};
  emitReport(o, envelope(o, inputEcho(o, "classify"), std::move(results),
                         iso::JsonValue::array(), tol),
             csv);
  return 0;
}

// ---- curve ----------------------------------------------------------------------

int cmdCurve(const Options& o) {
  iso::FunctionModel model = buildModel(o, 0);
  if (o.curve.empty()) {
    throw UsageError("curve requires --curve \"x1(u);..;xn(u)\"");
  }
  if (o.stations < 2) throw UsageError("--stations must be at least 2");

  iso::TopViewCurve curve;
  size_t pos = 0;
  while (pos <= o.curve.size()) {
    size_t semi = o.curve.find(';', pos);
    std::string piece = o.curve.substr(
        pos, semi == std::string::npos ? std::string::npos : semi - pos);
    curve.coords.push_back(iso::parseCurveExpression(piece));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (static_cast<int>(curve.coords.size()) != model.dim()) {
    throw UsageError("--curve has " + std::to_string(curve.coords.size()) +
                     " coordinates but the model has dimension " +
                     std::to_string(model.dim()));
  }
  if (!o.interval.empty()) {
    std::vector<double> ab = parseNumberList(o.interval, "--interval (a,b)");
    if (ab.size() != 2 || !(ab[1] > ab[0])) {
      throw UsageError("--interval takes a,b with b > a");
    }
    curve.a = ab[0];
    curve.b = ab[1];
  }

  iso::ArclengthTable table(curve);
  std::vector<iso::CurveFrame> frames =
      iso::curvatureAlong(model, table, o.stations);

  iso::JsonValue results = iso::JsonValue::object();
  results.set("model", iso::JsonValue::string(model.describe()));
  results.set("length", iso::JsonValue::number(table.totalLength()));
  results.set("stations",
              iso::JsonValue::integer(static_cast<long long>(o.stations)));
  iso::JsonValue rows = iso::JsonValue::array();
  std::vector<std::string> csv;
  csv.push_back(iso::csvRow({"s", "kappa_g", "kappa_n", "kappa_s"}));
  for (const iso::CurveFrame& f : frames) {
    iso::JsonValue row = iso::JsonValue::object();
    row.set("s", iso::JsonValue::number(f.s));
    row.set("point", vectorJson(f.X));
    row.set("tangent", vectorJson(f.T));
    row.set("kappaG", iso::JsonValue::number(f.kappaG));
    row.set("sideVector", vectorJson(f.S));
    row.set("kappaN", iso::JsonValue::number(f.kappaN));
    row.set("kappaS", f.hasKappaS ? iso::JsonValue::number(f.kappaS)
                                  : iso::JsonValue());
    rows.push(std::move(row));
    csv.push_back(iso::csvRow({iso::formatNumber(f.s),
                               iso::formatNumber(f.kappaG),
                               iso::formatNumber(f.kappaN),
                               f.hasKappaS ? iso::formatNumber(f.kappaS) : ""}));
  }
  results.set("frames", std::move(rows));

  iso::Tolerance tol{o.atol, o.rtol};
  emitReport(o, envelope(o, inputEcho(o, "curve"), std::move(results),
                         iso::JsonValue::array(), tol),
             csv);
  return 0;
}

// ---- verify ---------------------------------------------------------------------

int cmdVerify(const Options& o) {
  std::vector<std::string> ids = iso::availableChecks();
  bool known = false;
  for (const std::string& id : ids) known = known || id == o.check;
  if (!known) {
    std::string list;
    for (const std::string& id : ids) {
      if (!list.empty()) list += ", ";
      list += id;
    }
    if (o.check.empty()) {
      throw UsageError("verify requires --check <id>; available: " + list);
    }
    throw UsageError("unknown check '" + o.check + "'; available: " + list);
  }
  iso::CheckOptions copts;
  copts.seed = o.seed;
  if (o.planSet) {
    iso::SamplePlan plan = planFor(o, 0);
    copts.count = plan.count;
    copts.lo = plan.lo;
    copts.hi = plan.hi;
  }
  copts.tolOverride = o.atolSet || o.rtolSet;
  copts.tol = iso::Tolerance{o.atol, o.rtol};

  iso::VerificationReport report = iso::runCheck(o.check, copts);

  iso::JsonValue results = iso::JsonValue::object();
  results.set("check", iso::JsonValue::string(report.check));
  results.set("title", iso::JsonValue::string(report.title));
  results.set("overall", iso::JsonValue::boolean(report.overall));
  results.set("plan", planJson(report.plan, false));
  iso::JsonValue counterexamples = iso::JsonValue::array();
  for (const iso::CellOutcome& cell : report.cells) {
    if (!cell.reportOnly && !cell.agree) {
      counterexamples.push(iso::JsonValue::string(cell.label));
    }
  }
  results.set("counterexamples", std::move(counterexamples));
  iso::JsonValue cells = iso::JsonValue::array();
  std::vector<std::string> csv;
  csv.push_back(iso::csvRow({"label", "expected", "observed", "agree",
                             "reportOnly", "worstResidual", "worstThreshold",
                             "notes"}));
  for (const iso::CellOutcome& cell : report.cells) {
    iso::JsonValue c = iso::JsonValue::object();
    c.set("label", iso::JsonValue::string(cell.label));
    iso::JsonValue params = iso::JsonValue::object();
    for (const auto& kv : cell.params) {
      params.set(kv.first, iso::JsonValue::string(kv.second));
    }
    c.set("params", std::move(params));
    c.set("expected", iso::JsonValue::boolean(cell.expected));
    c.set("observed", iso::JsonValue::boolean(cell.observed));
    c.set("agree", iso::JsonValue::boolean(cell.agree));
    c.set("reportOnly", iso::JsonValue::boolean(cell.reportOnly));
    c.set("worstResidual", iso::JsonValue::number(cell.worstResidual));
    c.set("worstThreshold", iso::JsonValue::number(cell.worstThreshold));
    c.set("worstPoint", vectorJson(cell.worstPoint));
    if (!cell.notes.empty()) c.set("notes", iso::JsonValue::string(cell.notes));
    if (!cell.error.empty()) c.set("error", iso::JsonValue::string(cell.error));
    cells.push(std::move(c));
    csv.push_back(iso::csvRow(
        {cell.label, formatBool(cell.expected), formatBool(cell.observed),
         formatBool(cell.agree), formatBool(cell.reportOnly),
         iso::formatNumber(cell.worstResidual),
         iso::formatNumber(cell.worstThreshold), cell.notes}));
  }
  results.set("cells", std::move(cells));

  iso::JsonValue findings = iso::JsonValue::array();
  for (const std::string& f : report.findings) {
    findings.push(iso::JsonValue::string(f));
  }

  emitReport(o, envelope(o, inputEcho(o, "verify"), std::move(results),
                         std::move(findings), report.tol),
             csv);
  return report.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isotropic curvature analysis of production-function graph "
               "surfaces"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  Options o;
  app.add_option("-f,--function", o.function,
                 "inline expression over x1..xn (e.g. \"x1*x2\")");
  app.add_option("--family", o.family,
                 "family: cobb-douglas | ces | perfect-substitute");
  app.add_option("--gamma", o.gamma, "family scale factor");
  app.add_option("--d", o.degree, "CES degree");
  app.add_option("--rho", o.rho, "CES substitution exponent");
  app.add_option("--a", o.aText, "comma-separated family weights");
  app.add_option("--alpha", o.alphaText, "comma-separated Cobb-Douglas exponents");
  app.add_option("--outer", o.outer,
                 "one-variable expression composed around the family");
  app.add_option("-n,--dim", o.dim, "input dimension (inferred when omitted)");
  app.add_option("--at", o.at, "evaluation point x1,..,xn");
  app.add_option("--plan", o.plan, "sample plan count,lo,hi");
  app.add_option("--seed", o.seed, "random seed for sample plans");
  app.add_option("--atol", o.atol, "absolute tolerance");
  app.add_option("--rtol", o.rtol, "relative tolerance");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--out", o.outPath, "output file (default: stdout)");
  app.add_option("--check", o.check, "check id for verify (C1..C9)");
  app.add_option("--curve", o.curve,
                 "semicolon-separated curve coordinates in u");
  app.add_option("--interval", o.interval, "curve parameter interval a,b");
  app.add_option("--stations", o.stations, "number of arclength stations");
  app.set_config("--spec", "", "flat key=value config file; flags override");
  app.allow_config_extras(false);  // unknown config keys are an error

  CLI::App* analyze =
      app.add_subcommand("analyze", "curvature profile at a point");
  CLI::App* classify =
      app.add_subcommand("classify", "homogeneity and family classification");
  CLI::App* curve =
      app.add_subcommand("curve", "curvatures along a surface curve");
  CLI::App* verify = app.add_subcommand("verify", "run a built-in check");
  for (CLI::App* sub : {analyze, classify, curve, verify}) {
    sub->fallthrough();
  }
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  o.atolSet = app.count("--atol") > 0;
  o.rtolSet = app.count("--rtol") > 0;
  o.planSet = app.count("--plan") > 0;

  try {
    if (analyze->parsed()) return cmdAnalyze(o);
    if (classify->parsed()) return cmdClassify(o);
    if (curve->parsed()) return cmdCurve(o);
    return cmdVerify(o);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const iso::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const iso::InternalError& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 4;
  } catch (const iso::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 4;
  }
}

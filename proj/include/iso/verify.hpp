#ifndef ISO_VERIFY_HPP
#define ISO_VERIFY_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iso/numeric.hpp"

namespace iso {

/// One grid cell of a check: a concrete model, the pattern's prediction for
/// it, and what the sampled predicate actually said. Evaluation failures are
/// recorded in `error` and count as disagreement; they never abort a sweep.
struct CellOutcome {
  std::string label;  // model description
  std::vector<std::pair<std::string, std::string>> params;  // grid coordinates
  bool expected = false;
  bool observed = false;
  bool agree = false;
  bool reportOnly = false;  // excluded from the overall verdict
  double worstResidual = 0.0;
  double worstThreshold = 0.0;
  Eigen::VectorXd worstPoint;
  std::string notes;
  std::string error;
};

struct VerificationReport {
  std::string check;
  std::string title;
  SamplePlan plan;  // per-cell dims replace plan.dim
  Tolerance tol;    // predicate tolerance used by the check
  std::vector<CellOutcome> cells;
  std::vector<std::string> findings;
  bool overall = false;  // conjunction of agree over non-report-only cells
};

/// Knobs shared by all checks; per-check grids and default tolerances are
/// built in. The seed drives both cell construction (where randomized) and
/// the per-cell sample plans.
struct CheckOptions {
  std::uint64_t seed = 42;
  int count = 128;
  double lo = 0.1;
  double hi = 10.0;
  bool tolOverride = false;
  Tolerance tol;
};

std::vector<std::string> availableChecks();

/// Runs one of the built-in checks C1..C9. Throws DomainError for unknown
/// ids. Reports are deterministic functions of (id, options).
VerificationReport runCheck(const std::string& id,
                            const CheckOptions& options = CheckOptions());

}  // namespace iso

#endif  // ISO_VERIFY_HPP

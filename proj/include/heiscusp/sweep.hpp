#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heiscusp/holonomy.hpp"

namespace heiscusp {

/// One verification job: a family with parameters, over one d.
struct SweepPoint {
  FamilyId family;
  FamilyParams params;
  long d = 1;  // squarefree

  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

/// Deterministic sweep order: by (family, k, p, k1, k2, d).
bool operator<(const SweepPoint& x, const SweepPoint& y);

enum class SweepStatus {
  Certified,      // standard holonomy built; the cert carries the checks
  Obstructed,     // standard_rep refused the d (root-of-unity obstruction)
  InvalidParams,  // parameters (or d) violate the family's constraints
};

const char* to_cstring(SweepStatus s);

struct SweepOutcome {
  SweepStatus status = SweepStatus::InvalidParams;
  std::string note = "not evaluated";
  std::optional<HolonomyCert> cert;

  bool certified_ok() const {
    return status == SweepStatus::Certified && cert && cert->all_ok();
  }

  friend bool operator==(const SweepOutcome&, const SweepOutcome&) = default;
};

enum class SweepMode { Serial, Parallel };

/// Worker count parallel mode will use: `requested` when positive, else the
/// HEISCUSP_WORKERS environment variable, else the OpenMP default; at least 1
/// and never more than the OpenMP thread limit.
int effective_workers(int requested);

/// Evaluates every point; outcome i belongs to point i.  Serial mode is the
/// reference implementation; Parallel fans the same pure per-point work out
/// over OpenMP threads and must produce identical outcomes.
std::vector<SweepOutcome> run_sweep(const std::vector<SweepPoint>& points,
                                    SweepMode mode, int max_workers = 0);

/// All valid parameter tuples of the family with the given k, in sweep
/// order; empty when k itself is out of range for the family.
std::vector<FamilyParams> enumerate_params(FamilyId f, long k);

/// Grid of every valid parameter tuple for each k, crossed with each d,
/// sorted into sweep order.  Invalid k contribute no points.
std::vector<SweepPoint> make_grid(FamilyId f, const std::vector<long>& ks,
                                  const std::vector<long>& ds);

}  // namespace heiscusp

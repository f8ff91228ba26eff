#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heiscusp/family.hpp"
#include "heiscusp/report.hpp"
#include "heiscusp/sweep.hpp"

namespace heiscusp {

/// Parses "2", "1,2,3", "1..5", and mixtures like "1,4..6"; throws
/// std::invalid_argument on malformed input or an empty range.
std::vector<long> parse_long_list(const std::string& text);

struct VerifyOptions {
  FamilyId family = FamilyId::NilTorus;
  std::vector<long> ks;           // required unless erratum (then -> {1,2,3})
  std::optional<long> p, k1, k2;  // omitted -> every valid combination
  std::vector<long> ds;           // empty -> default_ds(family)
  bool erratum = false;
  SweepMode mode = SweepMode::Parallel;
  int workers = 0;  // 0 -> HEISCUSP_WORKERS, else the OpenMP default
};

/// d sweep used when --d is omitted: {1, 2, 3, 5, 7} for the families that
/// accept every squarefree d, the single allowed d otherwise.
std::vector<long> default_ds(FamilyId f);

/// One record per sweep point (or per erratum k).  Obstructed and
/// invalid-parameter points are informative records outside the exit gate;
/// certificate failures gate the exit status.
Report cmd_verify(const VerifyOptions& opt);

/// Classifies one holomorphic element given in canonical text.  The record
/// cross-checks the classification against the minimal polynomial of the
/// matrix lift whenever the lift is defined over E_d.  Throws
/// std::invalid_argument on parse failure or an antiholomorphic element.
Report cmd_classify(const std::string& element_text,
                    std::optional<long> d_hint);

/// Allowed-d table for the family plus the holomorphy witness chain: either
/// the machine-checked steps forcing an antiholomorphic generator, or an
/// all-holomorphic holonomy at minimal parameters.
Report cmd_obstruct(FamilyId f);

/// Picard cusp descriptor for one d (with the vertical-generator evidence
/// and a single-cusp note), or the non-arithmetic cusp-group table.
/// Exactly one of `d`, `nonarith` must be given.
Report cmd_cusp(std::optional<long> d, bool nonarith);

/// 0 when every expected-pass record passed, 1 otherwise.
int exit_code(const Report& report);

}  // namespace heiscusp

#pragma once

#include <string>
#include <vector>

namespace heiscusp {

/// One line of a command report.  `expected_pass` marks the records that
/// gate the exit status; informative records (an explicitly requested
/// obstructed d, say) carry passed = true so they never fail anything,
/// with their nature in `outcome`.
struct CheckRecord {
  std::string name;     // what was checked
  std::string inputs;   // canonical text of the inputs
  std::string outcome;  // short tag: "pass", "fail", "obstructed", ...
  std::string detail;   // residuals, witness text, notes; may be empty
  bool expected_pass = true;
  bool passed = false;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  std::string command;    // echo of the invocation
  std::string timestamp;  // UTC; excluded from the determinism contract
  std::vector<CheckRecord> checks;

  long passed_count() const;
  long failed_count() const;       // expected-pass records that failed
  long informative_count() const;  // records outside the exit gate
  bool ok() const;                 // no expected-pass record failed
};

/// Report skeleton with the timestamp stamped now.
Report make_report(std::string command);

/// Line-oriented structured text; one record per line plus a summary.
std::string to_text(const Report& report);

/// The same content as a JSON document.
std::string to_json(const Report& report);

}  // namespace heiscusp

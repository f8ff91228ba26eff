#include "heiscusp/report.hpp"

#include <json.hpp>

#include <ctime>
#include <sstream>

namespace heiscusp {

long Report::passed_count() const {
  long n = 0;
  for (const CheckRecord& c : checks) n += c.passed ? 1 : 0;
  return n;
}

long Report::failed_count() const {
  long n = 0;
  for (const CheckRecord& c : checks) n += (c.expected_pass && !c.passed) ? 1 : 0;
  return n;
}

long Report::informative_count() const {
  long n = 0;
  for (const CheckRecord& c : checks) n += c.expected_pass ? 0 : 1;
  return n;
}

bool Report::ok() const { return failed_count() == 0; }

Report make_report(std::string command) {
  Report report;
  report.command = std::move(command);
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  report.timestamp = buf;
  return report;
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << "# " << report.command << "\n";
  os << "# " << report.timestamp << "\n";
  for (const CheckRecord& c : report.checks) {
    os << (c.expected_pass ? (c.passed ? "ok  " : "FAIL") : "info") << " | "
       << c.name;
    if (!c.inputs.empty()) os << " | " << c.inputs;
    os << " | " << c.outcome;
    if (!c.detail.empty()) os << " | " << c.detail;
    os << "\n";
  }
  os << "summary: " << report.checks.size() << " checks, "
     << report.passed_count() << " passed, " << report.failed_count()
     << " failed, " << report.informative_count() << " informative\n";
  return os.str();
}

std::string to_json(const Report& report) {
  nlohmann::json j;
  j["command"] = report.command;
  j["timestamp"] = report.timestamp;
  j["checks"] = nlohmann::json::array();
  for (const CheckRecord& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"inputs", c.inputs},
                           {"outcome", c.outcome},
                           {"detail", c.detail},
                           {"expected_pass", c.expected_pass},
                           {"passed", c.passed}});
  }
  j["summary"] = {{"total", report.checks.size()},
                  {"passed", report.passed_count()},
                  {"failed", report.failed_count()},
                  {"informative", report.informative_count()}};
  return j.dump(2) + "\n";
}

}  // namespace heiscusp

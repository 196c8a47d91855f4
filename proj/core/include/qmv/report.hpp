#ifndef QMV_REPORT_HPP
#define QMV_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace qmv {

enum class Status { Pass, Fail, Reported };

std::string status_name(Status s);

struct ReportEntry {
  std::string id;      // stable check identifier, e.g. "laws.sigma.assoc"
  std::string anchor;  // catalog law statement, e.g. "x (x) (y (x) z) = ..."
  Status status = Status::Pass;
  std::string witness; // counterexample / detail, empty on plain passes
  long ms = 0;
};

/// Structured pass/fail results. `Reported` entries are informational and do
/// not count as failures.
struct VerificationReport {
  std::vector<ReportEntry> entries;

  bool ok() const;
  std::size_t failures() const;

  void add(std::string id, std::string anchor, bool pass,
           std::string witness = "");
  void report(std::string id, std::string anchor, std::string detail);
  void merge(const VerificationReport& other);
  void sort_by_id();

  /// Schema: {"version":1,"entries":[{"id","anchor","status","witness","ms"}]}.
  /// Timings default to zero so that reports for a fixed seed are
  /// byte-identical across runs; pass include_timings to keep measured values.
  nlohmann::json to_json(bool include_timings = false) const;
  static VerificationReport from_json(const nlohmann::json& j);

  std::string to_text() const;
};

} // namespace qmv

#endif

#include "qmv/report.hpp"

#include <algorithm>
#include <sstream>

#include "qmv/errors.hpp"

namespace qmv {

using nlohmann::json;

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Reported: return "reported";
  }
  return "?";
}

static Status status_from_name(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "reported") return Status::Reported;
  throw ParseError("unknown status '" + s + "'");
}

bool VerificationReport::ok() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.status == Status::Fail) ++n;
  return n;
}

void VerificationReport::add(std::string id, std::string anchor, bool pass,
                             std::string witness) {
  entries.push_back({std::move(id), std::move(anchor),
                     pass ? Status::Pass : Status::Fail, std::move(witness), 0});
}

void VerificationReport::report(std::string id, std::string anchor,
                                std::string detail) {
  entries.push_back({std::move(id), std::move(anchor), Status::Reported,
                     std::move(detail), 0});
}

void VerificationReport::merge(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

void VerificationReport::sort_by_id() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ReportEntry& a, const ReportEntry& b) { return a.id < b.id; });
}

json VerificationReport::to_json(bool include_timings) const {
  json out;
  out["version"] = 1;
  out["entries"] = json::array();
  for (const auto& e : entries) {
    json je;
    je["id"] = e.id;
    je["anchor"] = e.anchor;
    je["status"] = status_name(e.status);
    if (!e.witness.empty()) je["witness"] = e.witness;
    je["ms"] = include_timings ? e.ms : 0;
    out["entries"].push_back(std::move(je));
  }
  return out;
}

VerificationReport VerificationReport::from_json(const json& j) {
  if (j.value("version", 0) != 1) throw ParseError("unsupported report version");
  VerificationReport r;
  for (const auto& je : j.at("entries")) {
    ReportEntry e;
    e.id = je.at("id").get<std::string>();
    e.anchor = je.at("anchor").get<std::string>();
    e.status = status_from_name(je.at("status").get<std::string>());
    e.witness = je.value("witness", std::string());
    e.ms = je.value("ms", 0L);
    r.entries.push_back(std::move(e));
  }
  return r;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << "[" << status_name(e.status) << "] " << e.id << "  -- " << e.anchor;
    if (!e.witness.empty()) os << "\n    witness: " << e.witness;
    os << "\n";
  }
  os << entries.size() << " checks, " << failures() << " failed\n";
  return os.str();
}

} // namespace qmv

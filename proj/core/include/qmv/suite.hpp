#ifndef QMV_SUITE_HPP
#define QMV_SUITE_HPP

#include <cstdint>
#include <string>

#include "qmv/quantale.hpp"
#include "qmv/report.hpp"
#include "qmv/space.hpp"

namespace qmv {

struct SuiteConfig {
  std::string suite = "all"; // laws|metq|topology|hsmonad|transformer|all
  std::uint64_t seed = 0;
  std::size_t samples = 200;      // per sampled law check on analytic carriers
  std::size_t max_carrier = 4;    // carrier cap for family-level topology work
  bool include_timings = false;   // keep reports byte-identical by default
};

/// Runs the selected verification suites over the built-in corpus.
/// Deterministic given (config, seed); guard violations become Reported
/// entries instead of aborting; entries come back sorted by id.
VerificationReport run_suite(const SuiteConfig& cfg);

/// A loaded specification file: exactly one of the two members is set.
struct LoadedSpec {
  QuantalePtr quantale;
  SpacePtr space;
};

/// Reads a JSON file holding either a quantale descriptor ("kind": ...) or a
/// space ("points"/"d"/"quantale"). Table quantales are law-checked during
/// construction; spaces are shape-checked (metric laws are the verify
/// commands' job). Throws ParseError / LawViolation accordingly.
LoadedSpec load_spec(const std::string& path);

/// Serializes a report: "json" (schema-versioned, stable) or "text".
std::string emit_report(const VerificationReport& r, const std::string& format,
                        bool include_timings = false);

} // namespace qmv

#endif

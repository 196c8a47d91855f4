#ifndef QMV_LAWS_HPP
#define QMV_LAWS_HPP

#include <cstdint>
#include <vector>

#include "qmv/quantale.hpp"
#include "qmv/report.hpp"

namespace qmv {

/// Exhaustive checking needs a finite carrier; sampled checking draws the
/// given number of cases from the quantale's deterministic sampler.
struct CheckMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  int samples = 1000;

  static CheckMode exhaustive_mode() { return {true, 0, 0}; }
  static CheckMode sampled(std::uint64_t seed, int samples) {
    return {false, seed, samples};
  }
};

/// Partial-order laws, lub/glb correctness, monoid laws, both distributive
/// laws over subsets, bottom annihilation, the residual adjunction, and flag
/// consistency. Failures are report entries with witnesses, never exceptions.
VerificationReport check_quantale_laws(const Quantale& q, const CheckMode& mode);

/// The way-below basics: << is contained in <=, is stable under composition
/// with <= on both sides, bottom is way below everything, and the sets
/// {x : x << y} are closed under binary join.
VerificationReport check_way_below_properties(const Quantale& q,
                                              const CheckMode& mode);

/// Both interpolation statements, with witnesses re-verified: q1 << q << q2
/// and q1 << q2 (x) w with w << I (both sides).
VerificationReport check_interpolation(const Quantale& q, const CheckMode& mode);

/// Enumerates the carrier (exhaustive) or draws samples.
std::vector<Value> law_check_domain(const Quantale& q, const CheckMode& mode);

} // namespace qmv

#endif

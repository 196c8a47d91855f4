#ifndef QMV_CORPUS_HPP
#define QMV_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qmv/quantale.hpp"
#include "qmv/space.hpp"

namespace qmv {

// Extra built-in quantales.

/// {0..k} under the reversed order with truncated addition (k acts as bottom).
QuantalePtr make_chain(std::size_t k);

/// {0..k} under the reversed order with max as tensor (a truncation of the
/// naturals-with-meet instance to a finite table).
QuantalePtr make_nmeet_trunc(std::size_t k);

struct NamedQuantale {
  std::string name;
  QuantalePtr q;
};

/// The finite instances checked exhaustively: sigma, trivial, the truncated
/// chains, sigma x sigma, relations on a 2-set, powerset of a 2-element
/// monoid, and mod_unit of the relation quantale.
std::vector<NamedQuantale> corpus_finite_quantales();

/// The analytic instances checked by sampling.
std::vector<NamedQuantale> corpus_analytic_quantales();

// Named spaces.

/// {0,1,2,12/5,5/2} over rplus with d(x,y) = y-x if x <= y else 0.
SpacePtr oline_space();
/// {0,1/2,1,2,5/2} with the same distance.
SpacePtr oline_b_space();
/// {0,1,3} over rplus with d = |x-y|.
SpacePtr abs3_space();
/// Three-point chain poset a <= b <= c encoded over sigma.
SpacePtr sigma_poset_space();
/// Two points at mutual distance I (not separated).
SpacePtr chaotic2_space();
/// Two points at mutual distance bottom.
SpacePtr discrete2_space();
/// A = {(0,2),(2,0)} plus p = (2,2) over rplus x rplus, componentwise |x-y|.
SpacePtr counterexample_space();

/// Random Q-metric space: seeded entries, unit diagonal, then join-closure of
/// the triangle law (shortest-path style) until the metric laws hold.
SpacePtr random_space(const QuantalePtr& q, std::size_t n, std::uint64_t seed);

struct NamedSpace {
  std::string name;
  SpacePtr space;
};

/// Every space the suites run over: the named spaces above plus seeded random
/// spaces over each finite corpus quantale and over rplus.
std::vector<NamedSpace> corpus_spaces(std::uint64_t seed);

} // namespace qmv

#endif

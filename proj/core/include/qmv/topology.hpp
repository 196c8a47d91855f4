#ifndef QMV_TOPOLOGY_HPP
#define QMV_TOPOLOGY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qmv/report.hpp"
#include "qmv/space.hpp"

namespace qmv {

/// Subsets of a space's carrier as bitmasks over point indices (|X| <= 31).
using Subset = std::uint32_t;

Subset full_subset(const Space& x);
Subset subset_of(const Space& x, const std::vector<std::string>& names);
std::string subset_str(const Space& x, Subset a);

/// {y : delta << d(x,y)} (dual: d(y,x)); requires delta << I.
Subset ball(const Space& x, std::size_t center, const Value& delta,
            bool dual = false);

/// For all x in O there is delta << I with B(x,delta) included in O. Finite
/// quantales enumerate delta; otherwise the ball is replaced by its limit
/// {y : I <= d(x,y)}, the intersection of all balls around x.
ArrowCheckResult is_open(const Space& x, Subset o, bool dual = false);

/// Closure in the ball topology {y : forall delta << I exists a in A with
/// delta << d(y,a)}, computed by the finite-carrier reduction
/// {y : exists a in A. I <= d(y,a)}; dual=true swaps the metric's arguments,
/// giving the closure of the dual-ball topology.
Subset closure(const Space& x, Subset a, bool dual = false);

/// The epsilon-delta condition f(B(x,delta)) in B(f(x),epsilon), with the
/// same limit reductions per side as is_open.
ArrowCheckResult is_continuous(const SpaceMap& f);

/// Union of the balls around A's points; requires delta << I.
Subset b_r(const Space& x, Subset a, const Value& delta);

/// The delta-flattening: dual closure of b_r.
Subset flatten(const Space& x, Subset a, const Value& delta);

/// {delta : delta << I} for a finite quantale.
std::vector<Value> small_deltas(const Quantale& q);

/// Radius candidates for checking "forall delta << I" statements over an
/// analytic quantale with a finite carrier: bottom, the matrix entries,
/// their pairwise joins/meets/tensors, interpolants toward I, and the
/// per-entry limit witnesses, filtered to << I.
std::vector<Value> delta_candidates(const Space& x);

using PrecisionBall = std::function<Subset(Subset, const Value&)>;
using LimitSet = std::function<Subset(Subset)>;

/// Generic robust-style openness of a family U of subsets, for a precision
/// operator with its limit set (b_r with the dual closure, or the *-distance
/// ball with the *-closure): every A in U admits delta << I with
/// P(ball(A,delta)) included in U. Finite quantales enumerate delta; the
/// analytic reduction asks for S containing limit(A) with P(S) in U.
ArrowCheckResult robust_like_open(const Space& x, const std::vector<Subset>& u,
                                  const PrecisionBall& pb, const LimitSet& ls);

ArrowCheckResult robust_open(const Space& x, const std::vector<Subset>& u);

/// The specialization preorder of the robust topology: B included in the
/// dual closure of A.
bool robust_spec_leq(const Space& x, Subset a, Subset b);

/// All opens of the (dual) ball topology; guard |X| <= 16 (large enough for
/// powerset spaces of carriers up to 4 points).
std::vector<Subset> enumerate_point_topology(const Space& x, bool dual);

/// All open families, each encoded as a bitmask over subset-masks (bit s set
/// iff the subset with point-mask s belongs); guard |X| <= 4.
std::vector<std::uint32_t>
enumerate_family_topology(const Space& x, const PrecisionBall& pb,
                          const LimitSet& ls);
std::vector<std::uint32_t> enumerate_robust_topology(const Space& x);

/// The four open-ball properties, both dual variants.
VerificationReport check_open_ball_properties(const Space& x,
                                              const std::string& tag);

/// The five b_r properties; item 2 is checked in its unbracketed reading,
/// the bracketed variant's status is a separate informational entry.
VerificationReport check_br_properties(const Space& x, const std::string& tag);

} // namespace qmv

#endif

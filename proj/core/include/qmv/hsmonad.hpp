#ifndef QMV_HSMONAD_HPP
#define QMV_HSMONAD_HPP

#include <optional>
#include <string>

#include "qmv/report.hpp"
#include "qmv/space.hpp"
#include "qmv/topology.hpp"

namespace qmv {

/// The Hausdorff-Smyth distance between subsets: the meet over b in B of the
/// joins over a in A of d(a,b). The empty-set conventions fall out of the
/// empty meet/join: d_S(A,{}) = top, d_S({},B) = bottom for nonempty B.
Value d_s(const Space& x, Subset a, Subset b);

/// The powerset space (P(X), d_S). Point index i is exactly the subset mask
/// i, so subsets of this space's carrier double as families over X.
/// Guard: 2^|X| <= 2^guard points (default guard 5).
SpacePtr ps_space(const SpacePtr& x, std::size_t guard = 5);

/// The monad unit x -> {x}, an isometry into the powerset space.
SpaceMap ps_unit(const SpacePtr& x, const SpacePtr& psx);

/// The Kleisli extension of a short map f : X -> P_S(Y), sending A to the
/// union of the f(x) over x in A. ps_source must be the powerset space of
/// f's source; f's target must itself carry the d_S of its singletons.
/// Throws PreconditionError when f is not short or the target is malformed.
SpaceMap kleisli_extend(const SpaceMap& f, const SpacePtr& ps_source);

/// The *-distance d(A,y): the join over a in A of d(a,y); equals d_S(A,{y}).
Value star_distance(const Space& x, Subset a, std::size_t y);

/// {y : I <= d(A,y)}.
Subset star_closure(const Space& x, Subset a);

/// {y : delta << d(A,y)}; requires delta << I.
Subset b_s(const Space& x, Subset a, const Value& delta);

/// Exhaustive check of the *-preorder characterizations on P(X):
/// A <=_{d_S} B iff B lies in the *-closure of A; equivalence iff equal
/// *-closures; d_S(A,B) as the meet of the *-distances into B. A Reported
/// entry names a distinct equivalent pair when one exists.
VerificationReport check_star_preorder(const Space& x, const std::string& tag);

/// B_S lemma items: B_R(A,delta) in B_S(A,delta), and
/// delta <= d_S(A, B_S(A,delta)).
VerificationReport check_bs_properties(const Space& x, const std::string& tag);

/// Openness of a family in the *-robust topology (B_S in place of B_R,
/// *-closure as the limit set).
ArrowCheckResult star_robust_open(const Space& x, const std::vector<Subset>& u);

std::vector<std::uint32_t> enumerate_star_robust_topology(const Space& x);

/// The topology theorems on a finite-quantale space with |X| <= 3:
/// (a) the d_S ball topology on P(X) equals the *-robust topology,
/// (b) the *-robust topology is contained in the robust one,
/// (c) equality in (b) when the quantale is linear and non-trivial
///     (Reported otherwise),
/// (d) the finite-subset characterization of delta << d(A,y), with the
///     single-witness form on linear quantales for delta != bottom.
VerificationReport check_topology_theorems(const Space& x,
                                           const std::string& tag);

/// Searches 3-point spaces over sigma x sigma (unit diagonal, all entry
/// combinations, metric laws enforced) for one where the *-robust topology
/// is strictly contained in the robust one; deterministic first hit.
std::optional<SpacePtr> find_strict_inclusion_instance();

/// The non-linear counterexample: Q = rplus x rplus, A = {(0,2),(2,0)},
/// p = (2,2), componentwise distance. Asserts d(A,p) = (0,0) = I; p lies in
/// B_S(A,delta) for every grid delta << I; p is outside B_R(A,(1,1)); and
/// (1,1) is not way below d(p',p) for either p' in A.
VerificationReport run_counterexample();

} // namespace qmv

#endif

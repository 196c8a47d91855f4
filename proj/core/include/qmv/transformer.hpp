#ifndef QMV_TRANSFORMER_HPP
#define QMV_TRANSFORMER_HPP

#include <functional>
#include <string>
#include <vector>

#include "qmv/report.hpp"
#include "qmv/space.hpp"
#include "qmv/topology.hpp"

namespace qmv {

/// An extensional Po-enriched monad over a declared finite universe of base
/// spaces: the object map must return a stable pointer per universe member
/// (compose() matches spaces by identity), the unit must be short, and the
/// extension must send short maps f : X -> MY to short maps MX -> MY.
struct MonadInstance {
  std::string name;
  std::vector<SpacePtr> universe;
  std::function<SpacePtr(const SpacePtr&)> m;
  std::function<SpaceMap(const SpacePtr&)> unit;
  std::function<SpaceMap(const SpaceMap&)> extend;
};

/// A monad map: a family of short components theta_X : MX -> M'X.
struct MonadMapInstance {
  std::string name;
  MonadInstance source;
  MonadInstance target;
  std::function<SpaceMap(const SpacePtr&)> component;
};

/// The Hausdorff-Smyth monad restricted to a universe (powerset spaces are
/// built once and reused, so composition by pointer identity works).
MonadInstance ps_monad(std::vector<SpacePtr> universe, std::size_t guard = 5);

MonadInstance identity_monad(std::vector<SpacePtr> universe);

/// The three monad equations plus enrichment (monotonicity of extension),
/// quantified over every short f : X -> MY between universe members. Maps
/// are compared literally when the codomain is separated and up to pointwise
/// metric equivalence otherwise. Throws GuardExceeded when a map space is
/// too large to enumerate and MismatchError when the universe is not closed
/// under M (the object map returned null).
VerificationReport check_monad_laws(const MonadInstance& mi,
                                    const std::string& tag);

/// theta . eta = eta' and theta . f* = (theta . f)*' . theta, with the same
/// comparison discipline; each component is required to be short.
VerificationReport check_monad_map(const MonadMapInstance& th,
                                   const std::string& tag);

/// The separation monad transformer: M'X is the separation quotient of MX,
/// eta' = r . eta, f*' = r . (s . f)* . s, and in_T is the family r_X.
/// last_rep switches every section to the other canonical choice, for
/// section-independence tests.
struct SeparationTransform {
  MonadInstance transformed;
  MonadMapInstance in_t;
};
SeparationTransform separation_transform(const MonadInstance& mi,
                                         bool last_rep = false);

/// The *-closure of A: the biggest subset in its d_S-equivalence class.
Subset canonical_representative(const Space& x, Subset a);

/// A ~ canonical_representative(A) for every A; over a linear non-trivial
/// quantale additionally canonical_representative = dual closure (Reported,
/// with the discrepancy if any, otherwise).
VerificationReport check_canonical_representative(const Space& x,
                                                  const std::string& tag);

} // namespace qmv

#endif

#ifndef QMV_SPACE_HPP
#define QMV_SPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmv/monoidal_map.hpp"
#include "qmv/quantale.hpp"
#include "qmv/report.hpp"

namespace qmv {

/// A Q-metric space with a finite carrier: named points and a square distance
/// matrix over the referenced quantale. The carrier order is stable and is
/// what deterministic constructions (sections, quotients) index by.
struct Space {
  QuantalePtr q;
  std::vector<std::string> points;
  std::vector<std::vector<Value>> d;

  std::size_t size() const { return points.size(); }
  const Value& dist(std::size_t i, std::size_t j) const { return d[i][j]; }
  std::size_t index_of(const std::string& point) const; // throws MismatchError

  /// {"quantale":descriptor,"points":[ids],"d":[[elem,...],...]}
  static Space from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

using SpacePtr = std::shared_ptr<const Space>;

/// Validates matrix shape and element membership (throws on malformed data),
/// but not the metric laws; those are check_qmetric's job.
SpacePtr make_space(QuantalePtr q, std::vector<std::string> points,
                    std::vector<std::vector<Value>> d);

/// I <= d(x,x) and d(x,y) (x) d(y,z) <= d(x,z), exhaustively.
VerificationReport check_qmetric(const Space& x);

/// x <=_d y iff I <= d(x,y).
bool d_preorder_leq(const Space& x, std::size_t i, std::size_t j);

/// A function between carriers, as target indices per source index.
struct SpaceMap {
  SpacePtr source;
  SpacePtr target;
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t i) const { return map[i]; }
};

SpaceMap identity_space_map(const SpacePtr& x);
SpaceMap compose(const SpaceMap& g, const SpaceMap& f); // g after f

enum class ArrowKind { Short, Isometry, HomLeq, Equivalent };

struct ArrowCheckResult {
  bool ok = true;
  std::string witness;
};

/// Short / isometry are unary; hom_leq / equivalent compare parallel f, g
/// pointwise in the target's d-preorder.
ArrowCheckResult arrow_check(ArrowKind kind, const SpaceMap& f,
                             const std::optional<SpaceMap>& g = std::nullopt);

/// A constructed (co)limit together with its structural maps: projections,
/// injections, the equalizer inclusion, or the coequalizer quotient map.
struct Constructed {
  SpacePtr space;
  std::vector<SpaceMap> maps;
};

Constructed product_space(const std::vector<SpacePtr>& factors);
Constructed sum_space(const std::vector<SpacePtr>& summands);
Constructed equalizer(const SpaceMap& f, const SpaceMap& g);
Constructed coequalizer(const SpaceMap& f, const SpaceMap& g);

/// (X, h . d) for a lax map h out of X's quantale. The lax check (and the
/// metric laws of the image) are re-verified; failure is an error.
SpacePtr reindex(const MonoidalMap& h, const Space& x,
                 const CheckMode& mode = CheckMode::sampled(0, 200));

ArrowCheckResult is_separated(const Space& x);

/// X/~ with d0([x],[y]) = d(x,y); r is the quotient map, s the section
/// picking the least-index representative (greatest-index when last_rep,
/// for section-independence tests).
struct SeparationQuotient {
  SpacePtr space;
  SpaceMap r; // X -> X0
  SpaceMap s; // X0 -> X
};
SeparationQuotient separation_quotient(const SpacePtr& x, bool last_rep = false);

/// id <= g.f, f.g <= id, and conversely, in the hom-preorder.
bool check_equivalence_pair(const SpaceMap& f, const SpaceMap& g);

} // namespace qmv

#endif

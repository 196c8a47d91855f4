#ifndef QMV_MONOIDAL_MAP_HPP
#define QMV_MONOIDAL_MAP_HPP

#include <functional>
#include <string>

#include "qmv/laws.hpp"
#include "qmv/quantale.hpp"
#include "qmv/report.hpp"

namespace qmv {

enum class MapKind { Lax, Strict };

/// A function between quantale carriers with its claimed kind. Lax means
/// I' <= h(I) and h(x) (x)' h(y) <= h(x (x) y); strict means equalities.
struct MonoidalMap {
  std::string name;
  QuantalePtr source;
  QuantalePtr target;
  std::function<Value(const Value&)> fn;
  MapKind kind = MapKind::Lax;

  Value operator()(const Value& x) const { return fn(x); }
};

// The shipped maps.
MonoidalMap map_top(const QuantalePtr& q);  // 1 -> Q, * |-> top
MonoidalMap map_bang(const QuantalePtr& q); // Q -> 1
MonoidalMap map_mod_unit_incl(const QuantalePtr& base);  // Q/I -> Q
MonoidalMap map_mod_unit_meet(const QuantalePtr& base);  // Q -> Q/I, x |-> x ^ I
MonoidalMap map_sigma_to_mod_unit(const QuantalePtr& base); // Sigma -> Q/I
MonoidalMap map_mod_unit_to_sigma(const QuantalePtr& base); // Q/I -> Sigma
MonoidalMap map_nplus_to_rplus(); // inclusion
MonoidalMap map_rplus_to_nplus(); // round up
MonoidalMap map_rmeet_to_rplus(); // identity on the carrier

/// Monotonicity, the lax inequalities, and (when claimed strict) the
/// equalities, over the source domain given by the mode.
VerificationReport check_monoidal_map(const MonoidalMap& h, const CheckMode& mode);

/// Pointwise status of f : X -> Y against g : Y -> X in both orientations.
/// f -| g means id_X <= g.f and f.g <= id_Y.
struct AdjointStatus {
  bool fg_adjoint = false; // f -| g
  bool gf_adjoint = false; // g -| f
  bool equivalence = false;
  std::string fg_witness, gf_witness;
};

AdjointStatus adjoint_status(const MonoidalMap& f, const MonoidalMap& g,
                             const CheckMode& mode);

/// Reports which of {adjunction, equivalence, neither} holds per orientation.
VerificationReport check_adjoint_pair(const MonoidalMap& f, const MonoidalMap& g,
                                      const CheckMode& mode);

} // namespace qmv

#endif

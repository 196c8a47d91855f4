#ifndef QMV_QUANTALE_HPP
#define QMV_QUANTALE_HPP

#include <memory>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmv/errors.hpp"
#include "qmv/value.hpp"

namespace qmv {

class Quantale;
using QuantalePtr = std::shared_ptr<const Quantale>;

enum class Side { Left, Right };

/// A quantale: a complete lattice with a monoid tensor distributing over
/// joins. Concrete instances are either finite (table-backed) or analytic
/// (closed-form over exact rationals). Instances are immutable after
/// construction and all operations are pure.
class Quantale {
public:
  virtual ~Quantale() = default;

  virtual std::string name() const = 0;
  virtual bool contains(const Value& x) const = 0;

  virtual bool leq(const Value& x, const Value& y) const = 0;
  virtual Value tensor(const Value& x, const Value& y) const = 0;
  virtual Value bottom() const = 0;
  virtual Value top() const = 0;
  virtual Value unit() const = 0;
  virtual Value join2(const Value& x, const Value& y) const = 0;
  virtual Value meet2(const Value& x, const Value& y) const = 0;

  /// Instance rule for the way-below relation: leq on finite tables,
  /// (x = inf or x > y) on the rational carriers, componentwise on products.
  virtual bool way_below(const Value& x, const Value& y) const = 0;

  /// Right adjoint of tensoring: x (x) y <= z iff y <= residual(Left, x, z).
  /// Finite instances compute the defining join; analytic ones use closed
  /// forms and throw UnsupportedOperation when none is implemented.
  virtual Value residual(Side side, const Value& x, const Value& z) const = 0;

  virtual bool finite() const = 0;
  virtual std::vector<Value> elements() const; // throws if not finite
  virtual Value sample(std::mt19937_64& rng) const = 0;

  virtual std::string show(const Value& x) const = 0;
  virtual Value parse_elem(const nlohmann::json& j) const = 0;
  virtual nlohmann::json elem_json(const Value& x) const = 0;

  /// Given d with not(I <= d), returns a witness w << I with not(w << d);
  /// such a w always exists in a continuous quantale (otherwise the join of
  /// all w << I, which is I, would sit below d). Joins of these witnesses are
  /// what turn "for all delta << I" over an infinite carrier into finitely
  /// many checks. Throws PreconditionError when I <= d.
  virtual Value limit_witness(const Value& d) const;

  /// Unchecked per-instance interpolation rules; call through interpolate()
  /// and tensor_interpolate(), which enforce pre- and postconditions.
  virtual Value interpolant(const Value& q1, const Value& q2) const = 0;
  virtual Value tensor_witness(const Value& q1, const Value& q2, Side side) const = 0;

  // Flags, computed from the structure (exhaustively when finite).
  virtual bool is_linear() const = 0;
  virtual bool is_commutative() const = 0;
  bool is_affine() const { return unit() == top(); }
  bool is_trivial() const { return bottom() == unit(); }

  /// Fold of join2 / meet2; the empty join is bottom, the empty meet is top.
  Value join(const std::vector<Value>& xs) const;
  Value meet(const std::vector<Value>& xs) const;

  /// Throws MismatchError naming the element if it is not in the carrier.
  void require(const Value& x) const;
};

/// Finite quantale backed by explicit tables. Elements are indices into the
/// name table; join/meet tables are derived (and validated) at construction.
class TableQuantale final : public Quantale,
                            public std::enable_shared_from_this<TableQuantale> {
public:
  std::string name() const override { return name_; }
  bool contains(const Value& x) const override;
  bool leq(const Value& x, const Value& y) const override;
  Value tensor(const Value& x, const Value& y) const override;
  Value bottom() const override { return Value(bot_); }
  Value top() const override { return Value(top_); }
  Value unit() const override { return Value(unit_); }
  Value join2(const Value& x, const Value& y) const override;
  Value meet2(const Value& x, const Value& y) const override;
  bool way_below(const Value& x, const Value& y) const override; // = leq
  Value residual(Side side, const Value& x, const Value& z) const override;
  Value interpolant(const Value& q1, const Value& q2) const override;
  Value tensor_witness(const Value& q1, const Value& q2, Side side) const override;
  bool finite() const override { return true; }
  std::vector<Value> elements() const override;
  Value sample(std::mt19937_64& rng) const override;
  std::string show(const Value& x) const override;
  Value parse_elem(const nlohmann::json& j) const override;
  nlohmann::json elem_json(const Value& x) const override;
  bool is_linear() const override { return linear_; }
  bool is_commutative() const override { return commutative_; }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& element_names() const { return names_; }
  std::size_t index_of(const std::string& elem_name) const;

  /// Validates the tables (partial order, lattice, monoid, distributivity,
  /// bottom annihilation); throws LawViolation with a witness on failure.
  static std::shared_ptr<const TableQuantale>
  make(std::string name, std::vector<std::string> element_names,
       std::vector<std::vector<bool>> leq,
       std::vector<std::vector<std::size_t>> tensor, std::size_t unit);

  /// Still validates the order and lattice structure (join/meet tables are
  /// derived from leq), but skips the monoid, distributivity, and annihilation
  /// checks, so that check_quantale_laws can be exercised on broken tables.
  static std::shared_ptr<const TableQuantale>
  make_unchecked(std::string name, std::vector<std::string> element_names,
                 std::vector<std::vector<bool>> leq,
                 std::vector<std::vector<std::size_t>> tensor, std::size_t unit);

private:
  static std::shared_ptr<const TableQuantale>
  make_impl(std::string name, std::vector<std::string> element_names,
            std::vector<std::vector<bool>> leq,
            std::vector<std::vector<std::size_t>> tensor, std::size_t unit,
            bool check_monoid);
  TableQuantale() = default;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> tensor_, join_, meet_;
  std::size_t unit_ = 0, bot_ = 0, top_ = 0;
  bool linear_ = false, commutative_ = false;
};

// Built-in analytic / small instances.
QuantalePtr make_rplus();   // extended non-negative rationals, tensor +
QuantalePtr make_rmeet();   // same carrier, tensor max
QuantalePtr make_nplus();   // naturals with inf, tensor +
QuantalePtr make_nmeet();   // naturals with inf, tensor max
QuantalePtr make_sigma();   // {inf, 0} sub-quantale of rplus
QuantalePtr make_trivial(); // one element

QuantalePtr make_product(std::vector<QuantalePtr> factors, std::string name = "");

/// The sub-quantale on {x : x <= I}. Returns the base itself when it is
/// affine; requires a finite base otherwise.
QuantalePtr make_mod_unit(const QuantalePtr& base);

/// Powerset of a finite monoid, as an explicit table quantale. The monoid is
/// given by element names, a composition table, and the unit's index.
QuantalePtr make_powerset_monoid(const std::vector<std::string>& monoid_elems,
                                 const std::vector<std::vector<std::size_t>>& mul,
                                 std::size_t monoid_unit);

/// Relations on a finite set of atoms, as an explicit table quantale.
QuantalePtr make_relations(const std::vector<std::string>& atoms);

/// Builds a quantale from a JSON descriptor:
///   {"kind":"builtin","name":"rplus"|...}
///   {"kind":"tables","elements":[...],"leq":[[...]],"tensor":[[...]],"unit":...}
///   {"kind":"product","factors":[descriptor,...]}
///   {"kind":"mod_unit","of":descriptor}
///   {"kind":"powerset_monoid","elements":[...],"table":[[name,...]],"unit":name}
///   {"kind":"relations","atoms":[...]}
QuantalePtr build_quantale(const nlohmann::json& descriptor);

/// Dispatch helper for the CLI: op is one of leq|join|meet|top|bottom.
/// leq takes exactly two args and the result carries 0/1 as a bool.
struct LatticeEvalResult {
  bool is_bool = false;
  bool b = false;
  Value value;
};
LatticeEvalResult lattice_eval(const Quantale& q, const std::string& op,
                               const std::vector<Value>& args);

/// Interpolation in a continuous quantale: given q1 << q2, returns q with
/// q1 << q << q2. The result is re-verified before being returned.
Value interpolate(const Quantale& q, const Value& q1, const Value& q2);

/// Tensor interpolation: given q1 << q2, returns w with w << I and
/// q1 << q2 (x) w (Right) or q1 << w (x) q2 (Left); re-verified.
Value tensor_interpolate(const Quantale& q, const Value& q1, const Value& q2,
                         Side side);

} // namespace qmv

#endif

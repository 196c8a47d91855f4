#include "qmv/quantale.hpp"

#include <algorithm>
#include <sstream>

namespace qmv {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Quantale base

std::vector<Value> Quantale::elements() const {
  throw UnsupportedOperation("enumeration of " + name());
}

Value Quantale::join(const std::vector<Value>& xs) const {
  Value acc = bottom();
  for (const auto& x : xs) acc = join2(acc, x);
  return acc;
}

Value Quantale::meet(const std::vector<Value>& xs) const {
  Value acc = top();
  for (const auto& x : xs) acc = meet2(acc, x);
  return acc;
}

void Quantale::require(const Value& x) const {
  if (!contains(x))
    throw MismatchError("element " + show(x) + " does not belong to " + name());
}

Value Quantale::limit_witness(const Value& d) const {
  require(d);
  if (leq(unit(), d))
    throw PreconditionError("limit_witness needs not(I <= " + show(d) + ")");
  if (!finite())
    throw UnsupportedOperation("limit_witness on " + name());
  for (const auto& w : elements())
    if (way_below(w, unit()) && !way_below(w, d)) return w;
  throw LawViolation("no limit witness for " + show(d) + " in " + name());
}

// ---------------------------------------------------------------------------
// TableQuantale

bool TableQuantale::contains(const Value& x) const {
  return x.is_index() && x.index() < names_.size();
}

bool TableQuantale::leq(const Value& x, const Value& y) const {
  require(x);
  require(y);
  return leq_[x.index()][y.index()];
}

Value TableQuantale::tensor(const Value& x, const Value& y) const {
  require(x);
  require(y);
  return Value(tensor_[x.index()][y.index()]);
}

Value TableQuantale::join2(const Value& x, const Value& y) const {
  require(x);
  require(y);
  return Value(join_[x.index()][y.index()]);
}

Value TableQuantale::meet2(const Value& x, const Value& y) const {
  require(x);
  require(y);
  return Value(meet_[x.index()][y.index()]);
}

bool TableQuantale::way_below(const Value& x, const Value& y) const {
  // In a finite lattice every directed set has a maximum, so << coincides
  // with <=.
  return leq(x, y);
}

Value TableQuantale::residual(Side side, const Value& x, const Value& z) const {
  require(x);
  require(z);
  std::size_t acc = bot_;
  for (std::size_t y = 0; y < names_.size(); ++y) {
    std::size_t t = side == Side::Left ? tensor_[x.index()][y] : tensor_[y][x.index()];
    if (leq_[t][z.index()]) acc = join_[acc][y];
  }
  return Value(acc);
}

Value TableQuantale::interpolant(const Value& q1, const Value& q2) const {
  (void)q1;
  return q2;
}

Value TableQuantale::tensor_witness(const Value& q1, const Value& q2,
                                    Side side) const {
  for (std::size_t w = 0; w < names_.size(); ++w) {
    if (!leq_[w][unit_]) continue;
    std::size_t t = side == Side::Right ? tensor_[q2.index()][w] : tensor_[w][q2.index()];
    if (leq_[q1.index()][t]) return Value(w);
  }
  throw LawViolation("no tensor-interpolation witness in " + name_ + " for " +
                     show(q1) + " << " + show(q2));
}

std::vector<Value> TableQuantale::elements() const {
  std::vector<Value> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) out.emplace_back(Value(i));
  return out;
}

Value TableQuantale::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> d(0, names_.size() - 1);
  return Value(d(rng));
}

std::string TableQuantale::show(const Value& x) const {
  if (!contains(x)) return "<foreign>";
  return names_[x.index()];
}

Value TableQuantale::parse_elem(const json& j) const {
  if (!j.is_string()) throw ParseError("expected element name in " + name_);
  return Value(index_of(j.get<std::string>()));
}

json TableQuantale::elem_json(const Value& x) const {
  require(x);
  return names_[x.index()];
}

std::size_t TableQuantale::index_of(const std::string& elem_name) const {
  auto it = std::find(names_.begin(), names_.end(), elem_name);
  if (it == names_.end())
    throw ParseError("unknown element '" + elem_name + "' of " + name_);
  return static_cast<std::size_t>(it - names_.begin());
}

std::shared_ptr<const TableQuantale>
TableQuantale::make(std::string name, std::vector<std::string> element_names,
                    std::vector<std::vector<bool>> leq,
                    std::vector<std::vector<std::size_t>> tensor,
                    std::size_t unit) {
  return make_impl(std::move(name), std::move(element_names), std::move(leq),
                   std::move(tensor), unit, true);
}

std::shared_ptr<const TableQuantale>
TableQuantale::make_unchecked(std::string name,
                              std::vector<std::string> element_names,
                              std::vector<std::vector<bool>> leq,
                              std::vector<std::vector<std::size_t>> tensor,
                              std::size_t unit) {
  return make_impl(std::move(name), std::move(element_names), std::move(leq),
                   std::move(tensor), unit, false);
}

std::shared_ptr<const TableQuantale>
TableQuantale::make_impl(std::string name, std::vector<std::string> element_names,
                         std::vector<std::vector<bool>> leq,
                         std::vector<std::vector<std::size_t>> tensor,
                         std::size_t unit, bool check_monoid) {
  const std::size_t n = element_names.size();
  auto bad = [&](const std::string& msg) { throw LawViolation(name + ": " + msg); };
  if (n == 0) bad("empty carrier");
  if (leq.size() != n || tensor.size() != n || unit >= n)
    bad("table dimensions do not match the carrier");
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n || tensor[i].size() != n)
      bad("table dimensions do not match the carrier");
    for (std::size_t j = 0; j < n; ++j)
      if (tensor[i][j] >= n) bad("tensor entry out of range");
  }

  auto nm = [&](std::size_t i) { return element_names[i]; };

  // Partial order.
  for (std::size_t i = 0; i < n; ++i)
    if (!leq[i][i]) bad("leq not reflexive at " + nm(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        bad("leq not antisymmetric at (" + nm(i) + ", " + nm(j) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k])
            bad("leq not transitive at (" + nm(i) + ", " + nm(j) + ", " + nm(k) + ")");

  // Lattice structure: derive binary join/meet tables.
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool found_join = false, found_meet = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq[i][k] && leq[j][k]) {
          bool least = true;
          for (std::size_t c = 0; c < n; ++c)
            if (leq[i][c] && leq[j][c] && !leq[k][c]) { least = false; break; }
          if (least) { join[i][j] = k; found_join = true; }
        }
        if (leq[k][i] && leq[k][j]) {
          bool greatest = true;
          for (std::size_t c = 0; c < n; ++c)
            if (leq[c][i] && leq[c][j] && !leq[c][k]) { greatest = false; break; }
          if (greatest) { meet[i][j] = k; found_meet = true; }
        }
      }
      if (!found_join) bad("no join for (" + nm(i) + ", " + nm(j) + ")");
      if (!found_meet) bad("no meet for (" + nm(i) + ", " + nm(j) + ")");
    }

  std::size_t bot = 0, top = 0;
  {
    bool found_bot = false, found_top = false;
    for (std::size_t i = 0; i < n; ++i) {
      bool is_bot = true, is_top = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (!leq[i][j]) is_bot = false;
        if (!leq[j][i]) is_top = false;
      }
      if (is_bot) { bot = i; found_bot = true; }
      if (is_top) { top = i; found_top = true; }
    }
    if (!found_bot) bad("no bottom element");
    if (!found_top) bad("no top element");
  }

  // Monoid laws.
  for (std::size_t i = 0; check_monoid && i < n; ++i) {
    if (tensor[unit][i] != i)
      bad("unit law fails at " + nm(i) + " (left)");
    if (tensor[i][unit] != i)
      bad("unit law fails at " + nm(i) + " (right)");
  }
  for (std::size_t i = 0; check_monoid && i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (tensor[tensor[i][j]][k] != tensor[i][tensor[j][k]])
          bad("associativity fails at (" + nm(i) + ", " + nm(j) + ", " + nm(k) + ")");

  // Binary distributivity and bottom annihilation. Together with the fold
  // convention for finite joins these give the full distributive laws.
  for (std::size_t x = 0; check_monoid && x < n; ++x) {
    if (tensor[x][bot] != bot || tensor[bot][x] != bot)
      bad("bottom annihilation fails at " + nm(x));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (tensor[x][join[i][j]] != join[tensor[x][i]][tensor[x][j]])
          bad("left distributivity fails at (" + nm(x) + ", " + nm(i) + ", " + nm(j) + ")");
        if (tensor[join[i][j]][x] != join[tensor[i][x]][tensor[j][x]])
          bad("right distributivity fails at (" + nm(x) + ", " + nm(i) + ", " + nm(j) + ")");
      }
  }

  bool linear = true;
  for (std::size_t i = 0; i < n && linear; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!leq[i][j] && !leq[j][i]) { linear = false; break; }
  bool commutative = true;
  for (std::size_t i = 0; i < n && commutative; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (tensor[i][j] != tensor[j][i]) { commutative = false; break; }

  auto q = std::shared_ptr<TableQuantale>(new TableQuantale());
  q->name_ = std::move(name);
  q->names_ = std::move(element_names);
  q->leq_ = std::move(leq);
  q->tensor_ = std::move(tensor);
  q->join_ = std::move(join);
  q->meet_ = std::move(meet);
  q->unit_ = unit;
  q->bot_ = bot;
  q->top_ = top;
  q->linear_ = linear;
  q->commutative_ = commutative;
  return q;
}

// ---------------------------------------------------------------------------
// Scalar instances (rationals under the reversed order)

namespace {

// Common behaviour of the rational-carrier instances: the quantale order is
// the reversed real order, bottom is inf, top and unit are 0, join is the
// real min and meet the real max.
class ScalarQuantale : public Quantale {
public:
  bool leq(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    return x.scalar() >= y.scalar();
  }
  Value bottom() const override { return Value(Rat::inf()); }
  Value top() const override { return Value(Rat(0)); }
  Value unit() const override { return Value(Rat(0)); }
  Value join2(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    return Value(Rat::min(x.scalar(), y.scalar()));
  }
  Value meet2(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    return Value(Rat::max(x.scalar(), y.scalar()));
  }
  bool finite() const override { return false; }
  bool is_linear() const override { return true; }
  bool is_commutative() const override { return true; }
  std::string show(const Value& x) const override {
    return x.is_scalar() ? x.scalar().str() : "<foreign>";
  }
  Value parse_elem(const json& j) const override {
    Rat r;
    if (j.is_string())
      r = Rat::parse(j.get<std::string>());
    else if (j.is_number_integer())
      r = Rat(j.get<std::int64_t>());
    else
      throw ParseError("expected rational literal for " + name());
    Value v{r};
    require(v);
    return v;
  }
  json elem_json(const Value& x) const override {
    require(x);
    return x.scalar().str();
  }
};

// All elements compact: << coincides with <=, the unit is always a valid
// tensor-interpolation witness.
class CompactScalarQuantale : public ScalarQuantale {
public:
  bool way_below(const Value& x, const Value& y) const override {
    return leq(x, y);
  }
  Value interpolant(const Value&, const Value& q2) const override { return q2; }
  Value tensor_witness(const Value&, const Value&, Side) const override {
    return unit();
  }
  Value limit_witness(const Value& d) const override {
    require(d);
    if (leq(unit(), d))
      throw PreconditionError("limit_witness needs not(I <= " + show(d) + ")");
    return unit(); // unit << unit, and unit << d would force I <= d
  }
};

class RPlusLike : public ScalarQuantale {
public:
  bool way_below(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    return x.scalar().is_inf() || x.scalar() > y.scalar();
  }
  Value interpolant(const Value& q1, const Value& q2) const override {
    const Rat &a = q1.scalar(), &b = q2.scalar();
    if (a.is_inf()) return b.is_inf() ? Value(Rat::inf()) : Value(b + Rat(1));
    return Value(Rat::mid(a, b));
  }
  Value limit_witness(const Value& d) const override {
    require(d);
    if (leq(unit(), d))
      throw PreconditionError("limit_witness needs not(I <= " + show(d) + ")");
    // d > 0 here; d itself is << I but not << d (no strict self-excess).
    return d.scalar().is_inf() ? Value(Rat(1)) : d;
  }
};

class RPlus final : public RPlusLike {
public:
  std::string name() const override { return "rplus"; }
  bool contains(const Value& x) const override { return x.is_scalar(); }
  Value tensor(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    return Value(x.scalar() + y.scalar());
  }
  Value residual(Side, const Value& x, const Value& z) const override {
    require(x);
    require(z);
    if (x.scalar() >= z.scalar()) return Value(Rat(0));
    return Value(z.scalar().minus(x.scalar()));
  }
  Value tensor_witness(const Value& q1, const Value& q2, Side) const override {
    if (q1.scalar().is_inf()) return Value(Rat(1));
    return Value(q1.scalar().minus(q2.scalar()).half());
  }
  Value sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> coin(0, 15), p(0, 24), q(1, 8);
    if (coin(rng) == 0) return Value(Rat::inf());
    return Value(Rat(p(rng), q(rng)));
  }
};

class RMeet final : public RPlusLike {
public:
  std::string name() const override { return "rmeet"; }
  bool contains(const Value& x) const override { return x.is_scalar(); }
  Value tensor(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    return Value(Rat::max(x.scalar(), y.scalar()));
  }
  Value residual(Side, const Value& x, const Value& z) const override {
    require(x);
    require(z);
    if (x.scalar() >= z.scalar()) return Value(Rat(0));
    return z;
  }
  Value tensor_witness(const Value& q1, const Value& q2, Side) const override {
    if (q1.scalar().is_inf()) return Value(Rat(1));
    return Value(Rat::mid(q1.scalar(), q2.scalar()));
  }
  Value sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> coin(0, 15), p(0, 24), q(1, 8);
    if (coin(rng) == 0) return Value(Rat::inf());
    return Value(Rat(p(rng), q(rng)));
  }
};

class NPlus final : public CompactScalarQuantale {
public:
  std::string name() const override { return "nplus"; }
  bool contains(const Value& x) const override {
    return x.is_scalar() && x.scalar().is_integer();
  }
  Value tensor(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    return Value(x.scalar() + y.scalar());
  }
  Value residual(Side, const Value& x, const Value& z) const override {
    require(x);
    require(z);
    if (x.scalar() >= z.scalar()) return Value(Rat(0));
    return Value(z.scalar().minus(x.scalar()));
  }
  Value sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> coin(0, 15), p(0, 12);
    if (coin(rng) == 0) return Value(Rat::inf());
    return Value(Rat(p(rng)));
  }
};

class NMeet final : public CompactScalarQuantale {
public:
  std::string name() const override { return "nmeet"; }
  bool contains(const Value& x) const override {
    return x.is_scalar() && x.scalar().is_integer();
  }
  Value tensor(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    return Value(Rat::max(x.scalar(), y.scalar()));
  }
  Value residual(Side, const Value& x, const Value& z) const override {
    require(x);
    require(z);
    if (x.scalar() >= z.scalar()) return Value(Rat(0));
    return z;
  }
  Value sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> coin(0, 15), p(0, 12);
    if (coin(rng) == 0) return Value(Rat::inf());
    return Value(Rat(p(rng)));
  }
};

class Sigma final : public CompactScalarQuantale {
public:
  std::string name() const override { return "sigma"; }
  bool contains(const Value& x) const override {
    return x.is_scalar() && (x.scalar().is_inf() || x.scalar().is_zero());
  }
  Value tensor(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    return Value(x.scalar() + y.scalar());
  }
  Value residual(Side, const Value& x, const Value& z) const override {
    require(x);
    require(z);
    if (x.scalar() >= z.scalar()) return Value(Rat(0));
    return z;
  }
  bool finite() const override { return true; }
  std::vector<Value> elements() const override {
    return {Value(Rat::inf()), Value(Rat(0))};
  }
  Value sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> coin(0, 1);
    return coin(rng) ? Value(Rat(0)) : Value(Rat::inf());
  }
};

class Trivial final : public CompactScalarQuantale {
public:
  std::string name() const override { return "trivial"; }
  bool contains(const Value& x) const override {
    return x.is_scalar() && x.scalar().is_zero();
  }
  Value tensor(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    return Value(Rat(0));
  }
  Value residual(Side, const Value&, const Value&) const override {
    return Value(Rat(0));
  }
  Value bottom() const override { return Value(Rat(0)); }
  bool finite() const override { return true; }
  std::vector<Value> elements() const override { return {Value(Rat(0))}; }
  Value sample(std::mt19937_64&) const override { return Value(Rat(0)); }
};

// ---------------------------------------------------------------------------
// Products

class ProductQuantale final : public Quantale {
public:
  ProductQuantale(std::vector<QuantalePtr> factors, std::string name)
      : factors_(std::move(factors)), name_(std::move(name)) {
    if (factors_.empty()) throw Error("product needs at least one factor");
    if (name_.empty()) {
      std::ostringstream os;
      os << "product(";
      for (std::size_t i = 0; i < factors_.size(); ++i)
        os << (i ? "," : "") << factors_[i]->name();
      os << ")";
      name_ = os.str();
    }
  }

  std::string name() const override { return name_; }

  bool contains(const Value& x) const override {
    if (!x.is_tuple() || x.tuple().size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->contains(x.tuple()[i])) return false;
    return true;
  }

  bool leq(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->leq(x.tuple()[i], y.tuple()[i])) return false;
    return true;
  }

  Value tensor(const Value& x, const Value& y) const override {
    return zip(x, y, [](const Quantale& q, const Value& a, const Value& b) {
      return q.tensor(a, b);
    });
  }
  Value join2(const Value& x, const Value& y) const override {
    return zip(x, y, [](const Quantale& q, const Value& a, const Value& b) {
      return q.join2(a, b);
    });
  }
  Value meet2(const Value& x, const Value& y) const override {
    return zip(x, y, [](const Quantale& q, const Value& a, const Value& b) {
      return q.meet2(a, b);
    });
  }

  Value bottom() const override { return map0(&Quantale::bottom); }
  Value top() const override { return map0(&Quantale::top); }
  Value unit() const override { return map0(&Quantale::unit); }

  bool way_below(const Value& x, const Value& y) const override {
    require(x);
    require(y);
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->way_below(x.tuple()[i], y.tuple()[i])) return false;
    return true;
  }

  Value residual(Side side, const Value& x, const Value& z) const override {
    return zip(x, z, [side](const Quantale& q, const Value& a, const Value& b) {
      return q.residual(side, a, b);
    });
  }

  Value interpolant(const Value& q1, const Value& q2) const override {
    return zip(q1, q2, [](const Quantale& q, const Value& a, const Value& b) {
      return q.interpolant(a, b);
    });
  }
  Value tensor_witness(const Value& q1, const Value& q2, Side side) const override {
    return zip(q1, q2, [side](const Quantale& q, const Value& a, const Value& b) {
      return q.tensor_witness(a, b, side);
    });
  }

  bool finite() const override {
    for (const auto& f : factors_)
      if (!f->finite()) return false;
    return true;
  }

  Value limit_witness(const Value& d) const override {
    require(d);
    if (leq(unit(), d))
      throw PreconditionError("limit_witness needs not(I <= " + show(d) + ")");
    // Some component fails I_i <= d_i; a witness there plus bottoms elsewhere
    // (bottom << I always) fails to be way below d as a whole.
    ValueList t;
    bool placed = false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto& f = *factors_[i];
      const Value& di = d.tuple()[i];
      if (!placed && !f.leq(f.unit(), di)) {
        t.push_back(f.limit_witness(di));
        placed = true;
      } else {
        t.push_back(f.bottom());
      }
    }
    return Value(std::move(t));
  }

  std::vector<Value> elements() const override {
    std::vector<Value> out{Value(ValueList{})};
    for (const auto& f : factors_) {
      std::vector<Value> next;
      for (const auto& partial : out)
        for (const auto& e : f->elements()) {
          ValueList t = partial.tuple();
          t.push_back(e);
          next.emplace_back(std::move(t));
        }
      out = std::move(next);
    }
    return out;
  }

  Value sample(std::mt19937_64& rng) const override {
    ValueList t;
    t.reserve(factors_.size());
    for (const auto& f : factors_) t.push_back(f->sample(rng));
    return Value(std::move(t));
  }

  std::string show(const Value& x) const override {
    if (!contains(x)) return "<foreign>";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < factors_.size(); ++i)
      os << (i ? "," : "") << factors_[i]->show(x.tuple()[i]);
    os << ")";
    return os.str();
  }

  Value parse_elem(const json& j) const override {
    if (!j.is_array() || j.size() != factors_.size())
      throw ParseError("expected a " + std::to_string(factors_.size()) +
                       "-tuple for " + name_);
    ValueList t;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      t.push_back(factors_[i]->parse_elem(j[i]));
    return Value(std::move(t));
  }

  json elem_json(const Value& x) const override {
    require(x);
    json out = json::array();
    for (std::size_t i = 0; i < factors_.size(); ++i)
      out.push_back(factors_[i]->elem_json(x.tuple()[i]));
    return out;
  }

  bool is_linear() const override {
    if (finite()) {
      auto es = elements();
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
          if (!leq(es[i], es[j]) && !leq(es[j], es[i])) return false;
      return true;
    }
    std::size_t nontrivial = 0;
    bool all_linear = true;
    for (const auto& f : factors_) {
      if (!f->is_trivial()) ++nontrivial;
      if (!f->is_linear()) all_linear = false;
    }
    return all_linear && nontrivial <= 1;
  }

  bool is_commutative() const override {
    for (const auto& f : factors_)
      if (!f->is_commutative()) return false;
    return true;
  }

private:
  template <typename F>
  Value zip(const Value& x, const Value& y, F&& op) const {
    require(x);
    require(y);
    ValueList t;
    t.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
      t.push_back(op(*factors_[i], x.tuple()[i], y.tuple()[i]));
    return Value(std::move(t));
  }

  Value map0(Value (Quantale::*getter)() const) const {
    ValueList t;
    t.reserve(factors_.size());
    for (const auto& f : factors_) t.push_back(((*f).*getter)());
    return Value(std::move(t));
  }

  std::vector<QuantalePtr> factors_;
  std::string name_;
};

} // namespace

QuantalePtr make_rplus() { return std::make_shared<RPlus>(); }
QuantalePtr make_rmeet() { return std::make_shared<RMeet>(); }
QuantalePtr make_nplus() { return std::make_shared<NPlus>(); }
QuantalePtr make_nmeet() { return std::make_shared<NMeet>(); }
QuantalePtr make_sigma() { return std::make_shared<Sigma>(); }
QuantalePtr make_trivial() { return std::make_shared<Trivial>(); }

QuantalePtr make_product(std::vector<QuantalePtr> factors, std::string name) {
  return std::make_shared<ProductQuantale>(std::move(factors), std::move(name));
}

QuantalePtr make_mod_unit(const QuantalePtr& base) {
  if (base->is_affine()) return base; // Q/I = Q when I = top
  if (!base->finite())
    throw UnsupportedOperation("mod_unit of a non-affine analytic quantale");
  std::vector<Value> sub;
  for (const auto& e : base->elements())
    if (base->leq(e, base->unit())) sub.push_back(e);
  const std::size_t n = sub.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& e : sub) names.push_back(base->show(e));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<std::size_t>> tensor(n, std::vector<std::size_t>(n));
  auto idx = [&](const Value& v) {
    for (std::size_t i = 0; i < n; ++i)
      if (sub[i] == v) return i;
    throw LawViolation("mod_unit carrier of " + base->name() +
                       " not closed under tensor");
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      leq[i][j] = base->leq(sub[i], sub[j]);
      tensor[i][j] = idx(base->tensor(sub[i], sub[j]));
    }
  std::size_t unit = idx(base->unit());
  return TableQuantale::make("mod_unit(" + base->name() + ")", std::move(names),
                             std::move(leq), std::move(tensor), unit);
}

QuantalePtr make_powerset_monoid(const std::vector<std::string>& monoid_elems,
                                 const std::vector<std::vector<std::size_t>>& mul,
                                 std::size_t monoid_unit) {
  const std::size_t m = monoid_elems.size();
  if (m > 4) throw GuardExceeded("powerset monoid on more than 4 elements");
  const std::size_t n = std::size_t{1} << m;
  auto subset_name = [&](std::size_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) {
        if (!first) s += ",";
        s += monoid_elems[i];
        first = false;
      }
    return s + "}";
  };
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) names.push_back(subset_name(mask));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<std::size_t>> tensor(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      leq[a][b] = (a & ~b) == 0;
      std::size_t prod = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (a & (std::size_t{1} << i))
          for (std::size_t j = 0; j < m; ++j)
            if (b & (std::size_t{1} << j))
              prod |= std::size_t{1} << mul[i][j];
      tensor[a][b] = prod;
    }
  return TableQuantale::make("powerset_monoid", std::move(names), std::move(leq),
                             std::move(tensor), std::size_t{1} << monoid_unit);
}

QuantalePtr make_relations(const std::vector<std::string>& atoms) {
  const std::size_t k = atoms.size();
  if (k > 2) throw GuardExceeded("relation quantale on more than 2 atoms");
  const std::size_t pairs = k * k; // pair (i,j) has bit index i*k+j
  const std::size_t n = std::size_t{1} << pairs;
  auto rel_name = [&](std::size_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (mask & (std::size_t{1} << (i * k + j))) {
          if (!first) s += ",";
          s += "(" + atoms[i] + "," + atoms[j] + ")";
          first = false;
        }
    return s + "}";
  };
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) names.push_back(rel_name(mask));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<std::size_t>> tensor(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      leq[a][b] = (a & ~b) == 0;
      std::size_t comp = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t y = 0; y < k; ++y)
          if (a & (std::size_t{1} << (i * k + y)))
            for (std::size_t j = 0; j < k; ++j)
              if (b & (std::size_t{1} << (y * k + j)))
                comp |= std::size_t{1} << (i * k + j);
      tensor[a][b] = comp;
    }
  std::size_t identity = 0;
  for (std::size_t i = 0; i < k; ++i) identity |= std::size_t{1} << (i * k + i);
  return TableQuantale::make("relations", std::move(names), std::move(leq),
                             std::move(tensor), identity);
}

QuantalePtr build_quantale(const json& d) {
  if (!d.is_object() || !d.contains("kind"))
    throw ParseError("quantale descriptor needs a \"kind\" field");
  const std::string kind = d.at("kind").get<std::string>();
  if (kind == "builtin") {
    const std::string n = d.at("name").get<std::string>();
    if (n == "rplus") return make_rplus();
    if (n == "rmeet") return make_rmeet();
    if (n == "nplus") return make_nplus();
    if (n == "nmeet") return make_nmeet();
    if (n == "sigma") return make_sigma();
    if (n == "trivial") return make_trivial();
    throw ParseError("unknown builtin quantale '" + n + "'");
  }
  if (kind == "tables") {
    auto names = d.at("elements").get<std::vector<std::string>>();
    const std::size_t n = names.size();
    std::vector<std::vector<bool>> leq(n);
    const auto& jleq = d.at("leq");
    if (jleq.size() != n) throw ParseError("leq matrix has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
      if (jleq[i].size() != n) throw ParseError("leq matrix has wrong size");
      leq[i].resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        const auto& e = jleq[i][j];
        leq[i][j] = e.is_boolean() ? e.get<bool>() : e.get<int>() != 0;
      }
    }
    std::vector<std::vector<std::size_t>> tensor(n, std::vector<std::size_t>(n));
    const auto& jt = d.at("tensor");
    if (jt.size() != n) throw ParseError("tensor matrix has wrong size");
    // Elements may be referred to by name or by index.
    auto idx = [&](const json& e) -> std::size_t {
      if (e.is_number_unsigned() || e.is_number_integer()) {
        auto i = e.get<std::size_t>();
        if (i >= n) throw ParseError("element index out of range");
        return i;
      }
      const auto s = e.get<std::string>();
      auto it = std::find(names.begin(), names.end(), s);
      if (it == names.end()) throw ParseError("unknown element '" + s + "'");
      return static_cast<std::size_t>(it - names.begin());
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (jt[i].size() != n) throw ParseError("tensor matrix has wrong size");
      for (std::size_t j = 0; j < n; ++j) tensor[i][j] = idx(jt[i][j]);
    }
    std::size_t unit = idx(d.at("unit"));
    std::string name = d.value("name", std::string("tables"));
    return TableQuantale::make(std::move(name), std::move(names), std::move(leq),
                               std::move(tensor), unit);
  }
  if (kind == "product") {
    std::vector<QuantalePtr> factors;
    for (const auto& f : d.at("factors")) factors.push_back(build_quantale(f));
    return make_product(std::move(factors));
  }
  if (kind == "mod_unit") return make_mod_unit(build_quantale(d.at("of")));
  if (kind == "powerset_monoid") {
    auto elems = d.at("elements").get<std::vector<std::string>>();
    auto table_names = d.at("table");
    std::vector<std::vector<std::size_t>> mul(elems.size());
    auto idx = [&](const std::string& s) {
      auto it = std::find(elems.begin(), elems.end(), s);
      if (it == elems.end()) throw ParseError("unknown monoid element '" + s + "'");
      return static_cast<std::size_t>(it - elems.begin());
    };
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (const auto& cell : table_names[i])
        mul[i].push_back(idx(cell.get<std::string>()));
    return make_powerset_monoid(elems, mul, idx(d.at("unit").get<std::string>()));
  }
  if (kind == "relations")
    return make_relations(d.at("atoms").get<std::vector<std::string>>());
  throw ParseError("unknown quantale kind '" + kind + "'");
}

LatticeEvalResult lattice_eval(const Quantale& q, const std::string& op,
                               const std::vector<Value>& args) {
  for (const auto& a : args) q.require(a);
  LatticeEvalResult r;
  if (op == "leq") {
    if (args.size() != 2)
      throw PreconditionError("leq takes exactly two arguments");
    r.is_bool = true;
    r.b = q.leq(args[0], args[1]);
    return r;
  }
  if (op == "join") { r.value = q.join(args); return r; }
  if (op == "meet") { r.value = q.meet(args); return r; }
  if (op == "top") { r.value = q.top(); return r; }
  if (op == "bottom") { r.value = q.bottom(); return r; }
  throw Error("unknown lattice op '" + op + "'");
}

Value interpolate(const Quantale& q, const Value& q1, const Value& q2) {
  q.require(q1);
  q.require(q2);
  if (!q.way_below(q1, q2))
    throw PreconditionError("interpolate needs " + q.show(q1) + " << " + q.show(q2));
  Value w = q.interpolant(q1, q2);
  if (!q.way_below(q1, w) || !q.way_below(w, q2))
    throw LawViolation("interpolant " + q.show(w) + " fails " + q.show(q1) +
                       " << q << " + q.show(q2) + " in " + q.name());
  return w;
}

Value tensor_interpolate(const Quantale& q, const Value& q1, const Value& q2,
                         Side side) {
  q.require(q1);
  q.require(q2);
  if (!q.way_below(q1, q2))
    throw PreconditionError("tensor_interpolate needs " + q.show(q1) + " << " +
                            q.show(q2));
  Value w = q.tensor_witness(q1, q2, side);
  Value t = side == Side::Right ? q.tensor(q2, w) : q.tensor(w, q2);
  if (!q.way_below(w, q.unit()) || !q.way_below(q1, t))
    throw LawViolation("tensor-interpolation witness " + q.show(w) + " fails for " +
                       q.show(q1) + " << " + q.show(q2) + " in " + q.name());
  return w;
}

} // namespace qmv

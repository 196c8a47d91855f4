#include "qmv/monoidal_map.hpp"

namespace qmv {

namespace {

// Elements of mod_unit(Q), for finite non-affine Q, in the same enumeration
// order as make_mod_unit builds its table.
std::vector<Value> mod_unit_carrier(const QuantalePtr& base) {
  std::vector<Value> sub;
  for (const auto& e : base->elements())
    if (base->leq(e, base->unit())) sub.push_back(e);
  return sub;
}

std::size_t mod_unit_index(const std::vector<Value>& sub, const Value& v) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (sub[i] == v) return i;
  throw MismatchError("element not below the unit");
}

MonoidalMap identity_map(std::string name, const QuantalePtr& q) {
  return {std::move(name), q, q, [](const Value& x) { return x; },
          MapKind::Strict};
}

} // namespace

MonoidalMap map_top(const QuantalePtr& q) {
  auto one = make_trivial();
  return {"top_" + q->name(), one, q,
          [q](const Value&) { return q->top(); }, MapKind::Lax};
}

MonoidalMap map_bang(const QuantalePtr& q) {
  auto one = make_trivial();
  return {"bang_" + q->name(), q, one,
          [one](const Value&) { return one->unit(); }, MapKind::Strict};
}

MonoidalMap map_mod_unit_incl(const QuantalePtr& base) {
  auto sub = make_mod_unit(base);
  if (sub == base) return identity_map("incl_" + base->name(), base);
  auto carrier = mod_unit_carrier(base);
  return {"incl_" + base->name(), sub, base,
          [carrier](const Value& x) { return carrier[std::get<std::size_t>(x.v)]; },
          MapKind::Strict};
}

MonoidalMap map_mod_unit_meet(const QuantalePtr& base) {
  auto sub = make_mod_unit(base);
  if (sub == base) return identity_map("meet_unit_" + base->name(), base);
  auto carrier = mod_unit_carrier(base);
  // Only lax in general: (x ^ I) (x) (y ^ I) <= (x (x) y) ^ I can be strict
  // inequality; on affine bases the map is the identity and strict.
  return {"meet_unit_" + base->name(), base, sub,
          [base, carrier](const Value& x) {
            return Value(mod_unit_index(carrier, base->meet2(x, base->unit())));
          },
          MapKind::Lax};
}

MonoidalMap map_sigma_to_mod_unit(const QuantalePtr& base) {
  auto sigma = make_sigma();
  auto sub = make_mod_unit(base);
  Value bot = sub->bottom(), top = sub->top();
  return {"sigma_to_mod_unit_" + base->name(), sigma, sub,
          [sigma, bot, top](const Value& x) {
            return x == sigma->bottom() ? bot : top;
          },
          MapKind::Strict};
}

MonoidalMap map_mod_unit_to_sigma(const QuantalePtr& base) {
  auto sigma = make_sigma();
  auto sub = make_mod_unit(base);
  Value top = sub->top();
  return {"mod_unit_" + base->name() + "_to_sigma", sub, sigma,
          [sigma, top](const Value& x) {
            return x == top ? sigma->top() : sigma->bottom();
          },
          MapKind::Lax};
}

MonoidalMap map_nplus_to_rplus() {
  return {"nplus_to_rplus", make_nplus(), make_rplus(),
          [](const Value& x) { return x; }, MapKind::Strict};
}

MonoidalMap map_rplus_to_nplus() {
  return {"rplus_to_nplus", make_rplus(), make_nplus(),
          [](const Value& x) { return Value(std::get<Rat>(x.v).ceil()); },
          MapKind::Lax};
}

MonoidalMap map_rmeet_to_rplus() {
  return {"rmeet_to_rplus", make_rmeet(), make_rplus(),
          [](const Value& x) { return x; }, MapKind::Lax};
}

VerificationReport check_monoidal_map(const MonoidalMap& h, const CheckMode& mode) {
  VerificationReport r;
  const std::string p = "monmap." + h.name + ".";
  const Quantale& s = *h.source;
  const Quantale& t = *h.target;
  const auto dom = law_check_domain(s, mode);

  {
    std::string w;
    for (const auto& x : dom) {
      if (!t.contains(h(x))) {
        w = s.show(x) + " maps outside the target";
        break;
      }
      for (const auto& y : dom)
        if (s.leq(x, y) && !t.leq(h(x), h(y))) {
          w = "(" + s.show(x) + ", " + s.show(y) + ")";
          break;
        }
      if (!w.empty()) break;
    }
    r.add(p + "monotone", "x <= y implies h(x) <= h(y)", w.empty(), w);
  }
  {
    const bool ok = t.leq(t.unit(), h(s.unit()));
    r.add(p + "lax.unit", "I' <= h(I)", ok,
          ok ? "" : "h(I) = " + t.show(h(s.unit())));
  }
  {
    std::string w;
    for (const auto& x : dom) {
      for (const auto& y : dom)
        if (!t.leq(t.tensor(h(x), h(y)), h(s.tensor(x, y)))) {
          w = "(" + s.show(x) + ", " + s.show(y) + ")";
          break;
        }
      if (!w.empty()) break;
    }
    r.add(p + "lax.tensor", "h(x) (x)' h(y) <= h(x (x) y)", w.empty(), w);
  }
  if (h.kind == MapKind::Strict) {
    const bool ok = h(s.unit()) == t.unit();
    r.add(p + "strict.unit", "h(I) = I'", ok,
          ok ? "" : "h(I) = " + t.show(h(s.unit())));
    std::string w;
    for (const auto& x : dom) {
      for (const auto& y : dom)
        if (t.tensor(h(x), h(y)) != h(s.tensor(x, y))) {
          w = "(" + s.show(x) + ", " + s.show(y) + ")";
          break;
        }
      if (!w.empty()) break;
    }
    r.add(p + "strict.tensor", "h(x) (x)' h(y) = h(x (x) y)", w.empty(), w);
  }
  return r;
}

AdjointStatus adjoint_status(const MonoidalMap& f, const MonoidalMap& g,
                             const CheckMode& mode) {
  const Quantale& x_q = *f.source;
  const Quantale& y_q = *f.target;
  const auto xs = law_check_domain(x_q, mode);
  const auto ys = law_check_domain(y_q, mode);

  AdjointStatus st;
  // f -| g: id_X <= g.f and f.g <= id_Y.
  bool unit_ok = true, counit_ok = true, gf_id = true, fg_id = true;
  std::string w_unit, w_counit;
  for (const auto& x : xs) {
    Value gfx = g(f(x));
    if (!x_q.leq(x, gfx)) {
      unit_ok = false;
      if (w_unit.empty()) w_unit = "x = " + x_q.show(x);
    }
    if (gfx != x) gf_id = false;
  }
  for (const auto& y : ys) {
    Value fgy = f(g(y));
    if (!y_q.leq(fgy, y)) {
      counit_ok = false;
      if (w_counit.empty()) w_counit = "y = " + y_q.show(y);
    }
    if (fgy != y) fg_id = false;
  }
  st.fg_adjoint = unit_ok && counit_ok;
  if (!st.fg_adjoint) st.fg_witness = !unit_ok ? w_unit : w_counit;

  // g -| f: id_Y <= f.g and g.f <= id_X.
  bool unit2_ok = true, counit2_ok = true;
  std::string w_unit2, w_counit2;
  for (const auto& y : ys)
    if (!y_q.leq(y, f(g(y)))) {
      unit2_ok = false;
      if (w_unit2.empty()) w_unit2 = "y = " + y_q.show(y);
    }
  for (const auto& x : xs)
    if (!x_q.leq(g(f(x)), x)) {
      counit2_ok = false;
      if (w_counit2.empty()) w_counit2 = "x = " + x_q.show(x);
    }
  st.gf_adjoint = unit2_ok && counit2_ok;
  if (!st.gf_adjoint) st.gf_witness = !unit2_ok ? w_unit2 : w_counit2;

  st.equivalence = gf_id && fg_id;
  return st;
}

VerificationReport check_adjoint_pair(const MonoidalMap& f, const MonoidalMap& g,
                                      const CheckMode& mode) {
  VerificationReport r;
  const std::string p = "adjoint." + f.name + "." + g.name + ".";
  AdjointStatus st = adjoint_status(f, g, mode);
  auto describe = [](bool equiv, bool adj, const std::string& w) {
    if (equiv) return std::string("equivalence");
    if (adj) return std::string("adjunction");
    return "neither (" + w + ")";
  };
  r.report(p + "fg", "f -| g: id <= g.f and f.g <= id",
           describe(st.equivalence, st.fg_adjoint, st.fg_witness));
  r.report(p + "gf", "g -| f: id <= f.g and g.f <= id",
           describe(st.equivalence, st.gf_adjoint, st.gf_witness));
  r.add(p + "some_orientation", "one orientation is at least an adjunction",
        st.fg_adjoint || st.gf_adjoint || st.equivalence);
  return r;
}

} // namespace qmv

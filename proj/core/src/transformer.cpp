#include "qmv/transformer.hpp"

#include <algorithm>
#include <memory>

#include "qmv/hsmonad.hpp"

namespace qmv {

namespace {

constexpr std::size_t kMapGuard = 4096;

SpacePtr require_m(const MonadInstance& mi, const SpacePtr& x) {
  auto mx = mi.m(x);
  if (!mx) throw MismatchError("universe is not closed under the object map");
  return mx;
}

/// Pointwise comparison of parallel maps: literal equality when the common
/// codomain is separated, metric equivalence of outputs otherwise.
bool maps_agree(const SpaceMap& a, const SpaceMap& b, std::string& w) {
  const Space& t = *a.target;
  const bool sep = is_separated(t).ok;
  for (std::size_t i = 0; i < a.map.size(); ++i) {
    const bool same =
        sep ? a(i) == b(i)
            : d_preorder_leq(t, a(i), b(i)) && d_preorder_leq(t, b(i), a(i));
    if (!same) {
      w = a.source->points[i] + " -> " + t.points[a(i)] + " vs " +
          t.points[b(i)];
      return false;
    }
  }
  return true;
}

std::vector<SpaceMap> all_short_maps(const SpacePtr& x, const SpacePtr& y) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < x->size(); ++i) {
    total *= y->size();
    if (total > kMapGuard)
      throw GuardExceeded("too many candidate maps to enumerate");
  }
  std::vector<SpaceMap> out;
  std::vector<std::size_t> m(x->size(), 0);
  while (true) {
    SpaceMap f{x, y, m};
    if (arrow_check(ArrowKind::Short, f).ok) out.push_back(f);
    std::size_t k = 0;
    while (k < m.size() && ++m[k] == y->size()) m[k++] = 0;
    if (k == m.size()) return out;
  }
}

} // namespace

MonadInstance ps_monad(std::vector<SpacePtr> universe, std::size_t guard) {
  auto table = std::make_shared<std::vector<std::pair<SpacePtr, SpacePtr>>>();
  for (const auto& x : universe) table->emplace_back(x, ps_space(x, guard));
  auto lookup = [table](const SpacePtr& x) -> SpacePtr {
    for (const auto& [b, psb] : *table)
      if (b.get() == x.get()) return psb;
    return nullptr;
  };
  MonadInstance mi;
  mi.name = "ps";
  mi.universe = std::move(universe);
  mi.m = lookup;
  mi.unit = [lookup](const SpacePtr& x) { return ps_unit(x, lookup(x)); };
  mi.extend = [lookup](const SpaceMap& f) {
    auto psx = lookup(f.source);
    if (!psx) throw MismatchError("extension source is outside the universe");
    return kleisli_extend(f, psx);
  };
  return mi;
}

MonadInstance identity_monad(std::vector<SpacePtr> universe) {
  MonadInstance mi;
  mi.name = "identity";
  mi.universe = std::move(universe);
  mi.m = [](const SpacePtr& x) { return x; };
  mi.unit = [](const SpacePtr& x) { return identity_space_map(x); };
  mi.extend = [](const SpaceMap& f) { return f; };
  return mi;
}

VerificationReport check_monad_laws(const MonadInstance& mi,
                                    const std::string& tag) {
  VerificationReport r;
  const std::string p = "monad." + tag + ".";
  std::string w_short, w_unit_ext, w_ext_unit, w_assoc, w_ext_short, w_mono;

  for (const auto& x : mi.universe) {
    auto mx = require_m(mi, x);
    auto eta = mi.unit(x);
    if (w_short.empty()) {
      auto c = arrow_check(ArrowKind::Short, eta);
      if (!c.ok) w_short = "eta at " + c.witness;
    }
    auto eta_ext = mi.extend(eta);
    std::string w;
    if (w_unit_ext.empty() && !maps_agree(eta_ext, identity_space_map(mx), w))
      w_unit_ext = w;
  }

  for (const auto& x : mi.universe)
    for (const auto& y : mi.universe) {
      auto my = require_m(mi, y);
      auto fs = all_short_maps(x, my);
      auto eta_x = mi.unit(x);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& f = fs[i];
        auto fe = mi.extend(f);
        std::string w;
        if (w_ext_unit.empty() && !maps_agree(compose(fe, eta_x), f, w))
          w_ext_unit = w;
        if (w_ext_short.empty()) {
          auto c = arrow_check(ArrowKind::Short, fe);
          if (!c.ok) w_ext_short = "f* at " + c.witness;
        }
        for (std::size_t j = 0; j < fs.size(); ++j)
          if (w_mono.empty() && arrow_check(ArrowKind::HomLeq, f, fs[j]).ok &&
              !arrow_check(ArrowKind::HomLeq, fe, mi.extend(fs[j])).ok)
            w_mono = "f <= g but not f* <= g*";
        if (w_assoc.empty())
          for (const auto& z : mi.universe) {
            auto mz = require_m(mi, z);
            for (const auto& g : all_short_maps(y, mz)) {
              auto ge = mi.extend(g);
              std::string wa;
              if (!maps_agree(compose(ge, fe), mi.extend(compose(ge, f)),
                              wa)) {
                w_assoc = wa;
                break;
              }
            }
            if (!w_assoc.empty()) break;
          }
      }
    }

  r.add(p + "unit_short", "the unit is a short map", w_short.empty(), w_short);
  r.add(p + "unit_ext", "the extension of the unit is the identity",
        w_unit_ext.empty(), w_unit_ext);
  r.add(p + "ext_unit", "extension composed with the unit returns the map",
        w_ext_unit.empty(), w_ext_unit);
  r.add(p + "assoc", "g* . f* = (g* . f)*", w_assoc.empty(), w_assoc);
  r.add(p + "ext_short", "extension preserves shortness", w_ext_short.empty(),
        w_ext_short);
  r.add(p + "enrichment", "extension is monotone on hom-preorders",
        w_mono.empty(), w_mono);
  return r;
}

VerificationReport check_monad_map(const MonadMapInstance& th,
                                   const std::string& tag) {
  VerificationReport r;
  const std::string p = "mmap." + tag + ".";
  std::string w_short, w_unit, w_ext;

  for (const auto& x : th.source.universe) {
    auto theta_x = th.component(x);
    if (w_short.empty()) {
      auto c = arrow_check(ArrowKind::Short, theta_x);
      if (!c.ok) w_short = "theta at " + c.witness;
    }
    std::string w;
    if (w_unit.empty() &&
        !maps_agree(compose(theta_x, th.source.unit(x)), th.target.unit(x),
                    w))
      w_unit = w;
    for (const auto& y : th.source.universe) {
      auto my = require_m(th.source, y);
      auto theta_y = th.component(y);
      for (const auto& f : all_short_maps(x, my)) {
        std::string w2;
        if (w_ext.empty() &&
            !maps_agree(compose(theta_y, th.source.extend(f)),
                        compose(th.target.extend(compose(theta_y, f)),
                                theta_x),
                        w2))
          w_ext = w2;
      }
    }
  }

  r.add(p + "component_short", "every component is short", w_short.empty(),
        w_short);
  r.add(p + "unit_eq", "theta . eta = eta'", w_unit.empty(), w_unit);
  r.add(p + "extend_eq", "theta . f* = (theta . f)*' . theta", w_ext.empty(),
        w_ext);
  return r;
}

SeparationTransform separation_transform(const MonadInstance& mi,
                                         bool last_rep) {
  struct Entry {
    SpacePtr base;
    SeparationQuotient quo;
  };
  auto table = std::make_shared<std::vector<Entry>>();
  for (const auto& x : mi.universe)
    table->push_back({x, separation_quotient(require_m(mi, x), last_rep)});
  auto find_base = [table](const SpacePtr& x) -> const Entry* {
    for (const auto& e : *table)
      if (e.base.get() == x.get()) return &e;
    return nullptr;
  };
  auto find_quotient = [table](const SpacePtr& mpy) -> const Entry* {
    for (const auto& e : *table)
      if (e.quo.space.get() == mpy.get()) return &e;
    return nullptr;
  };

  MonadInstance mp;
  mp.name = mi.name + "_separated";
  mp.universe = mi.universe;
  mp.m = [find_base](const SpacePtr& x) -> SpacePtr {
    auto e = find_base(x);
    return e ? e->quo.space : nullptr;
  };
  mp.unit = [mi, find_base](const SpacePtr& x) {
    return compose(find_base(x)->quo.r, mi.unit(x));
  };
  mp.extend = [mi, find_base, find_quotient](const SpaceMap& f) {
    auto ex = find_base(f.source);
    auto ey = find_quotient(f.target);
    if (!ex || !ey)
      throw MismatchError("extension endpoints are outside the universe");
    auto inner = mi.extend(compose(ey->quo.s, f));
    return compose(compose(ey->quo.r, inner), ex->quo.s);
  };

  MonadMapInstance in_t;
  in_t.name = "in_T";
  in_t.source = mi;
  in_t.target = mp;
  in_t.component = [find_base](const SpacePtr& x) {
    return find_base(x)->quo.r;
  };
  return {std::move(mp), std::move(in_t)};
}

Subset canonical_representative(const Space& x, Subset a) {
  return star_closure(x, a);
}

VerificationReport check_canonical_representative(const Space& x,
                                                  const std::string& tag) {
  VerificationReport r;
  const Quantale& q = *x.q;
  const std::string p = "canon." + tag + ".";
  const Subset all = full_subset(x);

  std::string w_equiv, w_dual;
  for (Subset a = 0; a <= all; ++a) {
    Subset rep = canonical_representative(x, a);
    if (w_equiv.empty() && !(q.leq(q.unit(), d_s(x, a, rep)) &&
                             q.leq(q.unit(), d_s(x, rep, a))))
      w_equiv = subset_str(x, a);
    if (w_dual.empty() && rep != closure(x, a, true))
      w_dual = subset_str(x, a) + ": " + subset_str(x, rep) + " vs " +
               subset_str(x, closure(x, a, true));
  }
  r.add(p + "equiv", "A is d_S-equivalent to its canonical representative",
        w_equiv.empty(), w_equiv);
  if (q.is_linear() && !q.is_trivial())
    r.add(p + "dual_closure",
          "the canonical representative is the dual closure", w_dual.empty(),
          w_dual);
  else
    r.report(p + "dual_closure",
             "the canonical representative is the dual closure",
             w_dual.empty() ? "coincides" : "differs at " + w_dual);
  return r;
}

} // namespace qmv

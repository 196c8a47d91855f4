#include "qmv/hsmonad.hpp"

#include <algorithm>

#include "qmv/corpus.hpp"

namespace qmv {

namespace {

void require_radius(const Space& x, const Value& delta) {
  x.q->require(delta);
  if (!x.q->way_below(delta, x.q->unit()))
    throw PreconditionError("radius " + x.q->show(delta) +
                            " is not way below the unit");
}

bool subseteq(Subset a, Subset b) { return (a & ~b) == 0; }

std::vector<Value> radius_set(const Space& x) {
  return x.q->finite() ? small_deltas(*x.q) : delta_candidates(x);
}

} // namespace

Value d_s(const Space& x, Subset a, Subset b) {
  const Quantale& q = *x.q;
  std::vector<Value> meets;
  for (std::size_t y = 0; y < x.size(); ++y) {
    if (!(b & (Subset{1} << y))) continue;
    Value acc = q.bottom();
    for (std::size_t p = 0; p < x.size(); ++p)
      if (a & (Subset{1} << p)) acc = q.join2(acc, x.dist(p, y));
    meets.push_back(acc);
  }
  return q.meet(meets);
}

SpacePtr ps_space(const SpacePtr& x, std::size_t guard) {
  if (x->size() > guard)
    throw GuardExceeded("powerset space needs at most " +
                        std::to_string(guard) + " base points");
  const Subset all = full_subset(*x);
  std::vector<std::string> points;
  std::vector<std::vector<Value>> d;
  for (Subset a = 0; a <= all; ++a) points.push_back(subset_str(*x, a));
  for (Subset a = 0; a <= all; ++a) {
    std::vector<Value> row;
    for (Subset b = 0; b <= all; ++b) row.push_back(d_s(*x, a, b));
    d.push_back(std::move(row));
  }
  return make_space(x->q, std::move(points), std::move(d));
}

SpaceMap ps_unit(const SpacePtr& x, const SpacePtr& psx) {
  if (psx->size() != (std::size_t{1} << x->size()))
    throw MismatchError("powerset space has the wrong carrier size");
  SpaceMap eta{x, psx, {}};
  for (std::size_t i = 0; i < x->size(); ++i)
    eta.map.push_back(std::size_t{1} << i);
  return eta;
}

SpaceMap kleisli_extend(const SpaceMap& f, const SpacePtr& ps_source) {
  const Space& t = *f.target;
  std::size_t n = 0;
  while ((std::size_t{1} << n) < t.size()) ++n;
  if ((std::size_t{1} << n) != t.size())
    throw PreconditionError("extension target is not a powerset space");
  if (ps_source->size() != (std::size_t{1} << f.source->size()))
    throw MismatchError("ps_source does not match f's source");
  // the target's matrix must be the d_S of its own singletons
  for (Subset a = 0; a < t.size(); ++a)
    for (Subset b = 0; b < t.size(); ++b) {
      std::vector<Value> meets;
      for (std::size_t y = 0; y < n; ++y) {
        if (!(b & (Subset{1} << y))) continue;
        Value acc = t.q->bottom();
        for (std::size_t p = 0; p < n; ++p)
          if (a & (Subset{1} << p))
            acc = t.q->join2(acc, t.dist(std::size_t{1} << p,
                                         std::size_t{1} << y));
        meets.push_back(acc);
      }
      if (!(t.dist(a, b) == t.q->meet(meets)))
        throw PreconditionError("extension target is not a powerset space");
    }
  auto sh = arrow_check(ArrowKind::Short, f);
  if (!sh.ok)
    throw PreconditionError("extension of a non-short map at " + sh.witness);

  SpaceMap ext{ps_source, f.target, {}};
  for (Subset a = 0; a < ps_source->size(); ++a) {
    std::size_t u = 0;
    for (std::size_t i = 0; i < f.source->size(); ++i)
      if (a & (Subset{1} << i)) u |= f(i);
    ext.map.push_back(u);
  }
  return ext;
}

Value star_distance(const Space& x, Subset a, std::size_t y) {
  if (y >= x.size()) throw MismatchError("foreign point index");
  std::vector<Value> js;
  for (std::size_t p = 0; p < x.size(); ++p)
    if (a & (Subset{1} << p)) js.push_back(x.dist(p, y));
  return x.q->join(js);
}

Subset star_closure(const Space& x, Subset a) {
  Subset out = 0;
  for (std::size_t y = 0; y < x.size(); ++y)
    if (x.q->leq(x.q->unit(), star_distance(x, a, y))) out |= Subset{1} << y;
  return out;
}

Subset b_s(const Space& x, Subset a, const Value& delta) {
  require_radius(x, delta);
  Subset out = 0;
  for (std::size_t y = 0; y < x.size(); ++y)
    if (x.q->way_below(delta, star_distance(x, a, y))) out |= Subset{1} << y;
  return out;
}

VerificationReport check_star_preorder(const Space& x, const std::string& tag) {
  VerificationReport r;
  const Quantale& q = *x.q;
  const std::string p = "starpre." + tag + ".";
  const Subset all = full_subset(x);

  std::vector<Subset> cle(all + 1);
  for (Subset a = 0; a <= all; ++a) cle[a] = star_closure(x, a);

  std::string w1, w2, w3, equiv_pair;
  for (Subset a = 0; a <= all; ++a)
    for (Subset b = 0; b <= all; ++b) {
      const bool leq = q.leq(q.unit(), d_s(x, a, b));
      if (w1.empty() && leq != subseteq(b, cle[a]))
        w1 = "(" + subset_str(x, a) + ", " + subset_str(x, b) + ")";
      const bool geq = q.leq(q.unit(), d_s(x, b, a));
      if (w2.empty() && (leq && geq) != (cle[a] == cle[b]))
        w2 = "(" + subset_str(x, a) + ", " + subset_str(x, b) + ")";
      if (equiv_pair.empty() && a != b && leq && geq)
        equiv_pair = subset_str(x, a) + " ~ " + subset_str(x, b);
      if (w3.empty()) {
        std::vector<Value> ms;
        for (std::size_t y = 0; y < x.size(); ++y)
          if (b & (Subset{1} << y)) ms.push_back(star_distance(x, a, y));
        if (!(d_s(x, a, b) == q.meet(ms)))
          w3 = "(" + subset_str(x, a) + ", " + subset_str(x, b) + ")";
      }
    }
  r.add(p + "leq_iff_closure",
        "A <=_{d_S} B iff B lies in the *-closure of A", w1.empty(), w1);
  r.add(p + "equiv_iff_equal_closures",
        "A ~_{d_S} B iff the *-closures coincide", w2.empty(), w2);
  r.add(p + "ds_meet_of_star",
        "d_S(A,B) is the meet over B of the *-distances", w3.empty(), w3);
  r.report(p + "equivalent_pair", "a distinct equivalent pair of subsets",
           equiv_pair.empty() ? "none" : equiv_pair);
  return r;
}

VerificationReport check_bs_properties(const Space& x, const std::string& tag) {
  VerificationReport r;
  const Quantale& q = *x.q;
  const std::string p = "bs." + tag + ".";
  const auto deltas = radius_set(x);
  const Subset all = full_subset(x);

  std::string w1, w2;
  for (const auto& d : deltas)
    for (Subset a = 0; a <= all; ++a) {
      Subset bs = b_s(x, a, d);
      if (w1.empty() && !subseteq(b_r(x, a, d), bs))
        w1 = subset_str(x, a) + " at " + q.show(d);
      if (w2.empty() && !q.leq(d, d_s(x, a, bs)))
        w2 = subset_str(x, a) + " at " + q.show(d);
    }
  r.add(p + "item1", "B_R(A,delta) lies in B_S(A,delta)", w1.empty(), w1);
  r.add(p + "item2", "delta <= d_S(A, B_S(A,delta))", w2.empty(), w2);
  return r;
}

ArrowCheckResult star_robust_open(const Space& x,
                                  const std::vector<Subset>& u) {
  return robust_like_open(
      x, u, [&](Subset a, const Value& d) { return b_s(x, a, d); },
      [&](Subset a) { return star_closure(x, a); });
}

std::vector<std::uint32_t> enumerate_star_robust_topology(const Space& x) {
  return enumerate_family_topology(
      x, [&](Subset a, const Value& d) { return b_s(x, a, d); },
      [&](Subset a) { return star_closure(x, a); });
}

VerificationReport check_topology_theorems(const Space& x,
                                           const std::string& tag) {
  if (!x.q->finite())
    throw PreconditionError("topology theorems need a finite quantale");
  if (x.size() > 3)
    throw GuardExceeded("topology theorems need at most 3 points");
  VerificationReport r;
  const Quantale& q = *x.q;
  const std::string p = "hstop." + tag + ".";

  auto psx = ps_space(std::make_shared<const Space>(x));
  auto tau_ds = enumerate_point_topology(*psx, false);
  auto tau_star = enumerate_star_robust_topology(x);
  auto tau_r = enumerate_robust_topology(x);
  std::vector<std::uint32_t> ds(tau_ds.begin(), tau_ds.end());

  auto fam_str = [&](std::uint32_t fam) {
    std::string s = "{";
    bool first = true;
    for (Subset sub = 0; sub <= full_subset(x); ++sub)
      if (fam & (std::uint32_t{1} << sub)) {
        if (!first) s += ",";
        s += subset_str(x, sub);
        first = false;
      }
    return s + "}";
  };
  auto diff = [&](const std::vector<std::uint32_t>& l,
                  const std::vector<std::uint32_t>& r2) -> std::string {
    for (auto f : l)
      if (std::find(r2.begin(), r2.end(), f) == r2.end()) return fam_str(f);
    return "";
  };

  std::string wa = ds == tau_star ? "" : diff(ds, tau_star) + diff(tau_star, ds);
  r.add(p + "ball_eq_star",
        "the d_S ball topology equals the *-robust topology",
        wa.empty(), wa);
  std::string wb = diff(tau_star, tau_r);
  r.add(p + "star_in_robust",
        "the *-robust topology is contained in the robust one",
        wb.empty(), wb);
  if (q.is_linear() && !q.is_trivial()) {
    std::string wc = diff(tau_r, tau_star);
    r.add(p + "linear_equality",
          "robust = *-robust over a linear non-trivial quantale",
          wc.empty(), wc);
  } else {
    r.report(p + "linear_equality",
             "robust = *-robust over a linear non-trivial quantale",
             "not asserted (quantale is not linear non-trivial)");
  }

  // finite-subset characterization of delta << d(A,y)
  std::string wd, we;
  const auto deltas = small_deltas(q);
  const Subset all = full_subset(x);
  for (const auto& d : deltas)
    for (Subset a = 0; a <= all; ++a)
      for (std::size_t y = 0; y < x.size(); ++y) {
        const bool whole = q.way_below(d, star_distance(x, a, y));
        bool sub_witness = false;
        for (Subset a0 = 0; a0 <= all && !sub_witness; ++a0)
          if (subseteq(a0, a)) sub_witness = q.way_below(d, star_distance(x, a0, y));
        if (wd.empty() && whole != sub_witness)
          wd = subset_str(x, a) + "/" + x.points[y] + " at " + q.show(d);
        if (q.is_linear() && !(d == q.bottom())) {
          bool single = false;
          for (std::size_t i = 0; i < x.size() && !single; ++i)
            if (a & (Subset{1} << i)) single = q.way_below(d, x.dist(i, y));
          if (we.empty() && whole != single)
            we = subset_str(x, a) + "/" + x.points[y] + " at " + q.show(d);
        }
      }
  r.add(p + "finite_subset",
        "delta << d(A,y) iff some finite subset already witnesses it",
        wd.empty(), wd);
  if (q.is_linear())
    r.add(p + "single_witness",
          "over a linear quantale, a single point witnesses delta << d(A,y)",
          we.empty(), we);
  else
    r.report(p + "single_witness",
             "over a linear quantale, a single point witnesses delta << d(A,y)",
             "not applicable (quantale is not linear)");
  return r;
}

std::optional<SpacePtr> find_strict_inclusion_instance() {
  auto q = make_product({make_sigma(), make_sigma()}, "sigma_x_sigma");
  const auto elems = q->elements();
  const std::vector<std::string> pts = {"x", "y", "z"};
  const std::size_t off[6][2] = {{0, 1}, {0, 2}, {1, 0},
                                 {1, 2}, {2, 0}, {2, 1}};
  std::vector<std::size_t> pick(6, 0);
  while (true) {
    std::vector<std::vector<Value>> d(3, std::vector<Value>(3, q->unit()));
    for (std::size_t k = 0; k < 6; ++k) d[off[k][0]][off[k][1]] = elems[pick[k]];
    auto sp = make_space(q, pts, d);
    bool metric = true;
    for (const auto& e : check_qmetric(*sp).entries)
      if (e.status != Status::Pass) { metric = false; break; }
    if (metric) {
      auto tau_star = enumerate_star_robust_topology(*sp);
      auto tau_r = enumerate_robust_topology(*sp);
      if (tau_star.size() < tau_r.size()) return sp;
    }
    std::size_t k = 0;
    while (k < 6 && ++pick[k] == elems.size()) pick[k++] = 0;
    if (k == 6) return std::nullopt;
  }
}

VerificationReport run_counterexample() {
  VerificationReport r;
  auto sp = counterexample_space();
  const Quantale& q = *sp->q;
  const Subset a = subset_of(*sp, {"(0,2)", "(2,0)"});
  const std::size_t p = sp->index_of("(2,2)");

  Value dap = star_distance(*sp, a, p);
  r.add("cex.star_distance_unit", "d(A,p) = (0,0) = I", dap == q.unit(),
        dap == q.unit() ? "" : q.show(dap));

  auto pair = [](const Rat& u, const Rat& v) {
    return Value(ValueList{Value(u), Value(v)});
  };
  std::vector<Value> grid;
  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t m = 1; m <= 8; ++m)
      grid.push_back(pair(Rat(1, n), Rat(1, m)));
  grid.push_back(pair(Rat(1), Rat(1)));
  grid.push_back(pair(Rat(3), Rat(3)));

  std::string w;
  for (const auto& d : grid) {
    if (!q.way_below(d, q.unit())) { w = q.show(d) + " not << I"; break; }
    if (!(b_s(*sp, a, d) & (Subset{1} << p))) { w = q.show(d); break; }
  }
  r.add("cex.bs_contains_p", "p lies in B_S(A,delta) for every grid delta",
        w.empty(), w);

  const Value one_one = pair(Rat(1), Rat(1));
  const bool excl = !(b_r(*sp, a, one_one) & (Subset{1} << p));
  r.add("cex.br_excludes_p", "p lies outside B_R(A,(1,1))", excl,
        excl ? "" : "p in B_R(A,(1,1))");

  std::string w2;
  for (std::size_t i = 0; i < sp->size(); ++i)
    if ((a & (Subset{1} << i)) && q.way_below(one_one, sp->dist(i, p)))
      w2 = sp->points[i];
  r.add("cex.no_single_witness",
        "(1,1) is not way below d(p',p) for either p' in A", w2.empty(), w2);
  return r;
}

} // namespace qmv

#include "qmv/topology.hpp"

#include <algorithm>

namespace qmv {

namespace {

constexpr std::size_t kPointGuard = 31;

void require_small(const Space& x, std::size_t guard, const char* what) {
  if (x.size() > guard)
    throw GuardExceeded(std::string(what) + " needs at most " +
                        std::to_string(guard) + " points");
}

const Value& dir_dist(const Space& x, std::size_t from, std::size_t to,
                      bool dual) {
  return dual ? x.dist(to, from) : x.dist(from, to);
}

void require_radius(const Space& x, const Value& delta) {
  x.q->require(delta);
  if (!x.q->way_below(delta, x.q->unit()))
    throw PreconditionError("radius " + x.q->show(delta) +
                            " is not way below the unit");
}

// {y : I <= d(x,y)} (dual swaps): the intersection of all balls around x.
Subset limit_ball(const Space& x, std::size_t center, bool dual) {
  Subset out = 0;
  for (std::size_t y = 0; y < x.size(); ++y)
    if (x.q->leq(x.q->unit(), dir_dist(x, center, y, dual)))
      out |= Subset{1} << y;
  return out;
}

bool subseteq(Subset a, Subset b) { return (a & ~b) == 0; }

} // namespace

Subset full_subset(const Space& x) {
  require_small(x, kPointGuard, "subset mask");
  return (Subset{1} << x.size()) - 1;
}

Subset subset_of(const Space& x, const std::vector<std::string>& names) {
  Subset out = 0;
  for (const auto& n : names) out |= Subset{1} << x.index_of(n);
  return out;
}

std::string subset_str(const Space& x, Subset a) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (a & (Subset{1} << i)) {
      if (!first) out += ",";
      out += x.points[i];
      first = false;
    }
  return out + "}";
}

Subset ball(const Space& x, std::size_t center, const Value& delta, bool dual) {
  require_small(x, kPointGuard, "ball");
  require_radius(x, delta);
  Subset out = 0;
  for (std::size_t y = 0; y < x.size(); ++y)
    if (x.q->way_below(delta, dir_dist(x, center, y, dual)))
      out |= Subset{1} << y;
  return out;
}

ArrowCheckResult is_open(const Space& x, Subset o, bool dual) {
  require_small(x, kPointGuard, "is_open");
  const bool finite = x.q->finite();
  const auto deltas = finite ? small_deltas(*x.q) : std::vector<Value>{};
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!(o & (Subset{1} << p))) continue;
    bool found = false;
    if (finite) {
      for (const auto& d : deltas)
        if (subseteq(ball(x, p, d, dual), o)) { found = true; break; }
    } else {
      found = subseteq(limit_ball(x, p, dual), o);
    }
    if (!found) return {false, x.points[p]};
  }
  return {true, ""};
}

Subset closure(const Space& x, Subset a, bool dual) {
  require_small(x, kPointGuard, "closure");
  // cl uses d(y,a); the dual closure uses d(a,y). Note this is opposite to
  // the ball convention: the closure for the topology of *plain* balls
  // measures from the candidate point y toward A.
  Subset out = 0;
  for (std::size_t y = 0; y < x.size(); ++y)
    for (std::size_t p = 0; p < x.size(); ++p)
      if ((a & (Subset{1} << p)) &&
          x.q->leq(x.q->unit(), dual ? x.dist(p, y) : x.dist(y, p))) {
        out |= Subset{1} << y;
        break;
      }
  return out;
}

ArrowCheckResult is_continuous(const SpaceMap& f) {
  const Space& s = *f.source;
  const Space& t = *f.target;
  const bool sfin = s.q->finite();
  const bool tfin = t.q->finite();
  const auto sdeltas = sfin ? small_deltas(*s.q) : std::vector<Value>{};
  const auto teps = tfin ? small_deltas(*t.q) : std::vector<Value>{};

  auto image = [&](Subset a) {
    Subset out = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (a & (Subset{1} << i)) out |= Subset{1} << f(i);
    return out;
  };
  auto exists_delta = [&](std::size_t p, Subset target_ball) {
    if (!sfin) return subseteq(image(limit_ball(s, p, false)), target_ball);
    for (const auto& d : sdeltas)
      if (subseteq(image(ball(s, p, d, false)), target_ball)) return true;
    return false;
  };

  for (std::size_t p = 0; p < s.size(); ++p) {
    if (tfin) {
      for (const auto& e : teps)
        if (!exists_delta(p, ball(t, f(p), e, false)))
          return {false, s.points[p] + " at radius " + t.q->show(e)};
    } else {
      if (!exists_delta(p, limit_ball(t, f(p), false)))
        return {false, s.points[p]};
    }
  }
  return {true, ""};
}

Subset b_r(const Space& x, Subset a, const Value& delta) {
  require_radius(x, delta);
  Subset out = 0;
  for (std::size_t p = 0; p < x.size(); ++p)
    if (a & (Subset{1} << p)) out |= ball(x, p, delta, false);
  return out;
}

Subset flatten(const Space& x, Subset a, const Value& delta) {
  return closure(x, b_r(x, a, delta), true);
}

std::vector<Value> small_deltas(const Quantale& q) {
  std::vector<Value> out;
  for (const auto& e : q.elements())
    if (q.way_below(e, q.unit())) out.push_back(e);
  return out;
}

std::vector<Value> delta_candidates(const Space& x) {
  const Quantale& q = *x.q;
  std::vector<Value> pool;
  auto push = [&](const Value& v) {
    for (const auto& p : pool)
      if (p == v) return;
    pool.push_back(v);
  };
  push(q.bottom());
  for (const auto& row : x.d)
    for (const auto& e : row) push(e);
  const std::size_t base = pool.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base; ++j) {
      push(q.tensor(pool[i], pool[j]));
      push(q.join2(pool[i], pool[j]));
      push(q.meet2(pool[i], pool[j]));
    }
  for (std::size_t i = 0, end = pool.size(); i < end; ++i) {
    if (q.way_below(pool[i], q.unit()) && pool[i] != q.unit())
      push(q.interpolant(pool[i], q.unit()));
    if (!q.leq(q.unit(), pool[i])) push(q.limit_witness(pool[i]));
  }
  std::vector<Value> out;
  for (const auto& v : pool)
    if (q.way_below(v, q.unit())) out.push_back(v);
  return out;
}

ArrowCheckResult robust_like_open(const Space& x, const std::vector<Subset>& u,
                                  const PrecisionBall& pb, const LimitSet& ls) {
  require_small(x, 4, "robust-style openness");
  std::vector<bool> in_u(std::size_t{1} << x.size(), false);
  for (Subset s : u) in_u[s] = true;
  auto powerset_in_u = [&](Subset s) {
    Subset sub = s;
    while (true) {
      if (!in_u[sub]) return false;
      if (sub == 0) return true;
      sub = (sub - 1) & s;
    }
  };

  const bool finite = x.q->finite();
  const auto deltas = finite ? small_deltas(*x.q) : std::vector<Value>{};
  for (Subset a : u) {
    bool found = false;
    if (finite) {
      for (const auto& d : deltas)
        if (powerset_in_u(pb(a, d))) { found = true; break; }
    } else {
      // P({S : P(S) in U}) is downward closed, so the smallest S containing
      // the limit set is the best candidate.
      found = powerset_in_u(ls(a));
    }
    if (!found) return {false, subset_str(x, a)};
  }
  return {true, ""};
}

ArrowCheckResult robust_open(const Space& x, const std::vector<Subset>& u) {
  return robust_like_open(
      x, u, [&](Subset a, const Value& d) { return b_r(x, a, d); },
      [&](Subset a) { return closure(x, a, true); });
}

bool robust_spec_leq(const Space& x, Subset a, Subset b) {
  return subseteq(b, closure(x, a, true));
}

std::vector<Subset> enumerate_point_topology(const Space& x, bool dual) {
  require_small(x, 16, "point topology enumeration");
  std::vector<Subset> out;
  for (Subset o = 0; o <= full_subset(x); ++o)
    if (is_open(x, o, dual).ok) out.push_back(o);
  return out;
}

std::vector<std::uint32_t>
enumerate_family_topology(const Space& x, const PrecisionBall& pb,
                          const LimitSet& ls) {
  require_small(x, 4, "family topology enumeration");
  const std::uint32_t nsub = std::uint32_t{1} << x.size();
  // downmask[s]: bitmask over subset indices of all subsets of s.
  std::vector<std::uint32_t> downmask(nsub);
  for (Subset s = 0; s < nsub; ++s) {
    std::uint32_t m = 0;
    Subset sub = s;
    while (true) {
      m |= std::uint32_t{1} << sub;
      if (sub == 0) break;
      sub = (sub - 1) & s;
    }
    downmask[s] = m;
  }
  // reqs[s]: the candidate "P(ball(s,delta)) must lie inside the family"
  // masks; the family is open iff every member s satisfies one of them.
  std::vector<std::vector<std::uint32_t>> reqs(nsub);
  if (x.q->finite()) {
    for (const auto& d : small_deltas(*x.q))
      for (Subset s = 0; s < nsub; ++s) reqs[s].push_back(downmask[pb(s, d)]);
  } else {
    for (Subset s = 0; s < nsub; ++s) reqs[s].push_back(downmask[ls(s)]);
  }
  for (auto& r : reqs) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }

  std::vector<std::uint32_t> out;
  const std::uint64_t nfam = std::uint64_t{1} << nsub;
  for (std::uint64_t fam = 0; fam < nfam; ++fam) {
    const auto f = static_cast<std::uint32_t>(fam);
    bool open = true;
    for (Subset s = 0; s < nsub && open; ++s) {
      if (!(f & (std::uint32_t{1} << s))) continue;
      bool found = false;
      for (std::uint32_t rq : reqs[s])
        if ((rq & ~f) == 0) { found = true; break; }
      open = found;
    }
    if (open) out.push_back(f);
  }
  return out;
}

std::vector<std::uint32_t> enumerate_robust_topology(const Space& x) {
  return enumerate_family_topology(
      x, [&](Subset a, const Value& d) { return b_r(x, a, d); },
      [&](Subset a) { return closure(x, a, true); });
}

VerificationReport check_open_ball_properties(const Space& x,
                                              const std::string& tag) {
  VerificationReport r;
  const Quantale& q = *x.q;
  const auto deltas = q.finite() ? small_deltas(q) : delta_candidates(x);
  const std::size_t n = x.size();

  for (bool dual : {false, true}) {
    const std::string p =
        "ball." + tag + (dual ? ".dual." : ".") ;
    std::string w1, w2, w3, w4;
    std::vector<std::vector<Subset>> balls(deltas.size(),
                                           std::vector<Subset>(n));
    for (std::size_t di = 0; di < deltas.size(); ++di)
      for (std::size_t p0 = 0; p0 < n; ++p0)
        balls[di][p0] = ball(x, p0, deltas[di], dual);

    auto exists_shrink = [&](std::size_t y, Subset target) {
      if (!q.finite()) return subseteq(limit_ball(x, y, dual), target);
      for (std::size_t di = 0; di < deltas.size(); ++di)
        if (subseteq(balls[di][y], target)) return true;
      return false;
    };

    for (std::size_t di = 0; di < deltas.size(); ++di)
      for (std::size_t p0 = 0; p0 < n; ++p0) {
        if (w1.empty() && !(balls[di][p0] & (Subset{1} << p0)))
          w1 = x.points[p0] + " at " + q.show(deltas[di]);
        for (std::size_t dj = 0; dj < deltas.size(); ++dj)
          if (w2.empty() && q.leq(deltas[di], deltas[dj]) &&
              !subseteq(balls[dj][p0], balls[di][p0]))
            w2 = x.points[p0] + " at " + q.show(deltas[di]) + " <= " +
                 q.show(deltas[dj]);
        for (std::size_t y = 0; y < n && w3.empty(); ++y)
          if ((balls[di][p0] & (Subset{1} << y)) &&
              !exists_shrink(y, balls[di][p0]))
            w3 = x.points[y] + " in ball of " + x.points[p0];
      }
    for (std::size_t di = 0; di < deltas.size() && w4.empty(); ++di)
      for (std::size_t dj = 0; dj < deltas.size() && w4.empty(); ++dj)
        for (std::size_t p1 = 0; p1 < n && w4.empty(); ++p1)
          for (std::size_t p2 = 0; p2 < n && w4.empty(); ++p2) {
            Subset inter = balls[di][p1] & balls[dj][p2];
            for (std::size_t y = 0; y < n; ++y)
              if ((inter & (Subset{1} << y)) && !exists_shrink(y, inter)) {
                w4 = x.points[y] + " in the intersection at " + x.points[p1] +
                     "/" + x.points[p2];
                break;
              }
          }
    r.add(p + "item1", "x in B(x,delta)", w1.empty(), w1);
    r.add(p + "item2", "delta <= delta' implies B(x,delta') in B(x,delta)",
          w2.empty(), w2);
    r.add(p + "item3", "y in B(x,delta) implies some B(y,delta') in B(x,delta)",
          w3.empty(), w3);
    r.add(p + "item4", "balls intersecting at y contain some B(y,delta')",
          w4.empty(), w4);
  }
  return r;
}

VerificationReport check_br_properties(const Space& x, const std::string& tag) {
  VerificationReport r;
  const Quantale& q = *x.q;
  const std::string p = "br." + tag + ".";
  const auto deltas = q.finite() ? small_deltas(q) : delta_candidates(x);
  const std::size_t nd = deltas.size();
  const Subset all = full_subset(x);

  std::vector<std::vector<Subset>> br(nd, std::vector<Subset>(all + 1));
  for (std::size_t di = 0; di < nd; ++di)
    for (Subset a = 0; a <= all; ++a) br[di][a] = b_r(x, a, deltas[di]);
  std::vector<std::vector<bool>> dle(nd, std::vector<bool>(nd));
  std::vector<std::vector<bool>> dwb(nd, std::vector<bool>(nd));
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < nd; ++j) {
      dle[i][j] = q.leq(deltas[i], deltas[j]);
      dwb[i][j] = q.way_below(deltas[i], deltas[j]);
    }

  {
    std::string w;
    for (std::size_t di = 0; di < nd && w.empty(); ++di)
      for (std::size_t dj = 0; dj < nd && w.empty(); ++dj) {
        if (!dle[dj][di]) continue; // delta' <= delta
        for (Subset a = 0; a <= all && w.empty(); ++a) {
          if (!subseteq(a, br[di][a])) {
            w = subset_str(x, a) + " at " + q.show(deltas[di]);
            break;
          }
          for (Subset a2 = a; a2 <= all; a2 = (a2 + 1) | a) {
            if (!subseteq(br[di][a], br[dj][a2])) {
              w = subset_str(x, a) + " in " + subset_str(x, a2) + " at " +
                  q.show(deltas[di]) + "/" + q.show(deltas[dj]);
              break;
            }
            if (a2 == all) break;
          }
        }
      }
    r.add(p + "item1",
          "A in B_R(A,delta) in B_R(A',delta') for A in A', delta' <= delta",
          w.empty(), w);
  }

  {
    std::string w, wb;
    for (std::size_t d1 = 0; d1 < nd; ++d1)
      for (std::size_t d2 = 0; d2 < nd; ++d2) {
        Value t = q.tensor(deltas[d1], deltas[d2]);
        const bool bracket =
            q.leq(t, deltas[d1]) && q.leq(t, deltas[d2]);
        for (std::size_t dd = 0; dd < nd; ++dd) {
          if (!q.way_below(deltas[dd], t)) continue;
          for (Subset a = 0; a <= all; ++a)
            if (!subseteq(br[d2][br[d1][a]], br[dd][a])) {
              std::string msg = subset_str(x, a) + " at " +
                                q.show(deltas[d1]) + "," + q.show(deltas[d2]) +
                                "," + q.show(deltas[dd]);
              if (w.empty()) w = msg;
              if (bracket && wb.empty()) wb = msg;
            }
        }
      }
    r.add(p + "item2",
          "B_R(B_R(A,d1),d2) in B_R(A,delta) when delta << d1 (x) d2",
          w.empty(), w);
    r.report(p + "item2_bracketed",
             "the variant restricted to d1 (x) d2 <= each d_i",
             wb.empty() ? "holds" : "fails at " + wb);
  }

  {
    std::string w;
    for (Subset a = 0; a <= all && w.empty(); ++a) {
      Subset cl = closure(x, a, true);
      Subset inter = all;
      for (std::size_t di = 0; di < nd; ++di) inter &= br[di][a];
      // Per-point limit witnesses make the infinite intersection exact.
      for (std::size_t y = 0; y < x.size(); ++y) {
        if (cl & (Subset{1} << y)) continue;
        std::vector<Value> ws;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (a & (Subset{1} << i)) ws.push_back(q.limit_witness(x.dist(i, y)));
        inter &= b_r(x, a, q.join(ws));
      }
      if (inter != cl)
        w = subset_str(x, a) + ": " + subset_str(x, inter) + " vs " +
            subset_str(x, cl);
    }
    r.add(p + "item3", "dual closure of A = intersection of all B_R(A,delta)",
          w.empty(), w);
  }

  {
    std::string w;
    for (std::size_t di = 0; di < nd && w.empty(); ++di)
      for (Subset a = 0; a <= all; ++a)
        if (br[di][closure(x, a, true)] != br[di][a]) {
          w = subset_str(x, a) + " at " + q.show(deltas[di]);
          break;
        }
    r.add(p + "item4", "B_R(dual closure of A, delta) = B_R(A,delta)",
          w.empty(), w);
  }

  {
    std::string w;
    for (std::size_t di = 0; di < nd && w.empty(); ++di)
      for (std::size_t dj = 0; dj < nd && w.empty(); ++dj) {
        if (!dwb[dj][di]) continue; // delta' << delta
        for (Subset a = 0; a <= all; ++a) {
          Subset fl = flatten(x, a, deltas[di]);
          if (!subseteq(br[di][a], fl) || !subseteq(fl, br[dj][a])) {
            w = subset_str(x, a) + " at " + q.show(deltas[di]) + "/" +
                q.show(deltas[dj]);
            break;
          }
        }
      }
    r.add(p + "item5",
          "B_R(A,delta) in A_delta in B_R(A,delta') for delta' << delta",
          w.empty(), w);
  }
  return r;
}

} // namespace qmv

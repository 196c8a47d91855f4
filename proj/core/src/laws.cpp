#include "qmv/laws.hpp"

#include <array>
#include <random>

namespace qmv {

namespace {

std::string pair_str(const Quantale& q, const Value& a, const Value& b) {
  return "(" + q.show(a) + ", " + q.show(b) + ")";
}

std::string triple_str(const Quantale& q, const Value& a, const Value& b,
                       const Value& c) {
  return "(" + q.show(a) + ", " + q.show(b) + ", " + q.show(c) + ")";
}

std::string set_str(const Quantale& q, const std::vector<Value>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + q.show(s[i]);
  return out + "}";
}

// Tuple streams: every law below is a per-tuple predicate. Exhaustive mode
// enumerates all tuples over the carrier, sampled mode draws them.
template <std::size_t K>
std::vector<std::array<Value, K>> tuples(const Quantale& q, const CheckMode& mode,
                                         const std::vector<Value>& dom,
                                         std::uint64_t salt) {
  std::vector<std::array<Value, K>> out;
  if (mode.exhaustive) {
    std::array<std::size_t, K> ix{};
    const std::size_t n = dom.size();
    while (true) {
      std::array<Value, K> t;
      for (std::size_t k = 0; k < K; ++k) t[k] = dom[ix[k]];
      out.push_back(std::move(t));
      std::size_t k = 0;
      while (k < K && ++ix[k] == n) ix[k++] = 0;
      if (k == K) break;
    }
  } else {
    std::mt19937_64 rng(mode.seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
    for (int i = 0; i < mode.samples; ++i) {
      std::array<Value, K> t;
      for (std::size_t k = 0; k < K; ++k) t[k] = q.sample(rng);
      out.push_back(std::move(t));
    }
    // Tuples involving the distinguished elements.
    const Value specials[] = {q.bottom(), q.top(), q.unit()};
    for (const auto& s : specials) {
      std::array<Value, K> t;
      t[0] = s;
      for (std::size_t k = 1; k < K; ++k) t[k] = q.sample(rng);
      out.push_back(std::move(t));
    }
  }
  return out;
}

} // namespace

std::vector<Value> law_check_domain(const Quantale& q, const CheckMode& mode) {
  if (mode.exhaustive) {
    if (!q.finite())
      throw PreconditionError("exhaustive law check on infinite " + q.name());
    return q.elements();
  }
  std::mt19937_64 rng(mode.seed);
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(mode.samples) + 3);
  for (int i = 0; i < mode.samples; ++i) out.push_back(q.sample(rng));
  out.push_back(q.bottom());
  out.push_back(q.top());
  out.push_back(q.unit());
  return out;
}

VerificationReport check_quantale_laws(const Quantale& q, const CheckMode& mode) {
  VerificationReport r;
  const std::string p = "laws." + q.name() + ".";
  const auto dom = law_check_domain(q, mode);
  const auto pairs = tuples<2>(q, mode, dom, 2);
  const auto triples = tuples<3>(q, mode, dom, 3);

  {
    std::string w;
    for (const auto& x : dom)
      if (!q.leq(x, x)) { w = q.show(x); break; }
    r.add(p + "order.reflexive", "x <= x", w.empty(), w);
  }
  {
    std::string w;
    for (const auto& [x, y] : pairs)
      if (x != y && q.leq(x, y) && q.leq(y, x)) { w = pair_str(q, x, y); break; }
    r.add(p + "order.antisymmetric", "x <= y and y <= x imply x = y", w.empty(), w);
  }
  {
    std::string w;
    for (const auto& [x, y, z] : triples)
      if (q.leq(x, y) && q.leq(y, z) && !q.leq(x, z)) {
        w = triple_str(q, x, y, z);
        break;
      }
    r.add(p + "order.transitive", "x <= y and y <= z imply x <= z", w.empty(), w);
  }

  {
    std::string w;
    for (const auto& [x, y, z] : triples) {
      Value j = q.join2(x, y);
      if (!q.leq(x, j) || !q.leq(y, j)) { w = pair_str(q, x, y); break; }
      if (q.leq(x, z) && q.leq(y, z) && !q.leq(j, z)) {
        w = triple_str(q, x, y, z);
        break;
      }
    }
    r.add(p + "lattice.join.lub", "x v y is the least upper bound", w.empty(), w);
  }
  {
    std::string w;
    for (const auto& [x, y, z] : triples) {
      Value m = q.meet2(x, y);
      if (!q.leq(m, x) || !q.leq(m, y)) { w = pair_str(q, x, y); break; }
      if (q.leq(z, x) && q.leq(z, y) && !q.leq(z, m)) {
        w = triple_str(q, x, y, z);
        break;
      }
    }
    r.add(p + "lattice.meet.glb", "x ^ y is the greatest lower bound", w.empty(), w);
  }
  r.add(p + "lattice.empty.join", "join of the empty list is bottom",
        q.join({}) == q.bottom());
  r.add(p + "lattice.empty.meet", "meet of the empty list is top",
        q.meet({}) == q.top());
  {
    std::string w;
    for (const auto& x : dom)
      if (!q.leq(q.bottom(), x) || !q.leq(x, q.top())) { w = q.show(x); break; }
    r.add(p + "lattice.bounds", "bottom <= x <= top", w.empty(), w);
  }

  {
    std::string w;
    for (const auto& x : dom)
      if (q.tensor(q.unit(), x) != x || q.tensor(x, q.unit()) != x) {
        w = q.show(x);
        break;
      }
    r.add(p + "monoid.unit", "I (x) x = x = x (x) I", w.empty(), w);
  }
  {
    std::string w;
    for (const auto& [x, y, z] : triples)
      if (q.tensor(q.tensor(x, y), z) != q.tensor(x, q.tensor(y, z))) {
        w = triple_str(q, x, y, z);
        break;
      }
    r.add(p + "monoid.assoc", "(x (x) y) (x) z = x (x) (y (x) z)", w.empty(), w);
  }

  // Distributivity over finite joins. Exhaustively over all subsets when the
  // carrier is small; otherwise over sampled subsets.
  {
    std::string wl, wr;
    if (mode.exhaustive && dom.size() <= 16) {
      const std::size_t n = dom.size();
      const std::size_t masks = std::size_t{1} << n;
      auto bit_of = [](std::size_t lb) {
        std::size_t b = 0;
        while ((std::size_t{1} << b) != lb) ++b;
        return b;
      };
      std::vector<Value> joinS(masks, q.bottom());
      for (std::size_t m = 1; m < masks; ++m) {
        std::size_t lb = m & (~m + 1);
        joinS[m] = q.join2(joinS[m ^ lb], dom[bit_of(lb)]);
      }
      auto subset_of = [&](std::size_t m) {
        std::vector<Value> s;
        for (std::size_t b = 0; b < n; ++b)
          if (m & (std::size_t{1} << b)) s.push_back(dom[b]);
        return s;
      };
      for (const auto& x : dom) {
        std::vector<Value> rhsL(masks, q.bottom()), rhsR(masks, q.bottom());
        for (std::size_t m = 1; m < masks; ++m) {
          std::size_t lb = m & (~m + 1);
          std::size_t b = bit_of(lb);
          rhsL[m] = q.join2(rhsL[m ^ lb], q.tensor(x, dom[b]));
          rhsR[m] = q.join2(rhsR[m ^ lb], q.tensor(dom[b], x));
        }
        for (std::size_t m = 0; m < masks; ++m) {
          if (wl.empty() && q.tensor(x, joinS[m]) != rhsL[m])
            wl = "x=" + q.show(x) + " S=" + set_str(q, subset_of(m));
          if (wr.empty() && q.tensor(joinS[m], x) != rhsR[m])
            wr = "x=" + q.show(x) + " S=" + set_str(q, subset_of(m));
        }
        if (!wl.empty() && !wr.empty()) break;
      }
    } else {
      std::mt19937_64 rng(mode.seed + 17);
      std::uniform_int_distribution<int> size_d(0, 4);
      const int cases = mode.exhaustive ? 2000 : mode.samples;
      std::uniform_int_distribution<std::size_t> pick(0, dom.size() - 1);
      for (int i = 0; i < cases; ++i) {
        Value x = mode.exhaustive ? dom[pick(rng)] : q.sample(rng);
        std::vector<Value> s;
        const int k = size_d(rng);
        for (int j = 0; j < k; ++j)
          s.push_back(mode.exhaustive ? dom[pick(rng)] : q.sample(rng));
        std::vector<Value> tl, tr;
        for (const auto& y : s) {
          tl.push_back(q.tensor(x, y));
          tr.push_back(q.tensor(y, x));
        }
        if (wl.empty() && q.tensor(x, q.join(s)) != q.join(tl))
          wl = "x=" + q.show(x) + " S=" + set_str(q, s);
        if (wr.empty() && q.tensor(q.join(s), x) != q.join(tr))
          wr = "x=" + q.show(x) + " S=" + set_str(q, s);
      }
    }
    r.add(p + "dist.left", "x (x) (join S) = join {x (x) y | y in S}", wl.empty(), wl);
    r.add(p + "dist.right", "(join S) (x) x = join {y (x) x | y in S}", wr.empty(), wr);
  }

  {
    std::string w;
    for (const auto& x : dom)
      if (q.tensor(q.bottom(), x) != q.bottom() ||
          q.tensor(x, q.bottom()) != q.bottom()) {
        w = q.show(x);
        break;
      }
    r.add(p + "bottom.annihilation", "bottom (x) x = bottom = x (x) bottom",
          w.empty(), w);
  }

  for (Side side : {Side::Left, Side::Right}) {
    const std::string id =
        p + std::string("residual.") + (side == Side::Left ? "left" : "right");
    const std::string anchor = side == Side::Left
                                   ? "x (x) y <= z iff y <= x \\ z"
                                   : "y (x) x <= z iff y <= z / x";
    try {
      std::string w;
      for (const auto& [x, z, y] : triples) {
        Value res = q.residual(side, x, z);
        Value t = side == Side::Left ? q.tensor(x, y) : q.tensor(y, x);
        if (q.leq(t, z) != q.leq(y, res)) {
          w = "x=" + q.show(x) + " z=" + q.show(z) + " y=" + q.show(y);
          break;
        }
      }
      r.add(id, anchor, w.empty(), w);
    } catch (const UnsupportedOperation& e) {
      r.report(id, anchor, e.what());
    }
  }

  {
    std::string w;
    for (const auto& [x, y] : pairs)
      if (!q.leq(x, y) && !q.leq(y, x)) { w = pair_str(q, x, y); break; }
    const bool total_seen = w.empty();
    if (q.is_linear())
      r.add(p + "flags.linear", "is_linear iff the order is total", total_seen, w);
    else if (mode.exhaustive)
      r.add(p + "flags.linear", "is_linear iff the order is total", !total_seen,
            total_seen ? "order is total but is_linear is false" : "");
    else
      r.report(p + "flags.linear", "is_linear iff the order is total",
               total_seen ? "no incomparable sample found" : "witness " + w);
  }
  r.add(p + "flags.trivial", "is_trivial iff bottom = I",
        q.is_trivial() == (q.bottom() == q.unit()));

  return r;
}

VerificationReport check_way_below_properties(const Quantale& q,
                                              const CheckMode& mode) {
  VerificationReport r;
  const std::string p = "waybelow." + q.name() + ".";
  const auto dom = law_check_domain(q, mode);
  const auto pairs = tuples<2>(q, mode, dom, 5);
  const auto triples = tuples<3>(q, mode, dom, 6);
  const auto quads = tuples<4>(q, mode, dom, 7);

  {
    std::string w;
    for (const auto& [x, y] : pairs)
      if (q.way_below(x, y) && !q.leq(x, y)) { w = pair_str(q, x, y); break; }
    r.add(p + "in_leq", "x << y implies x <= y", w.empty(), w);
  }
  {
    std::string w;
    for (const auto& x : dom)
      if (!q.way_below(q.bottom(), x)) { w = q.show(x); break; }
    r.add(p + "bottom", "bottom << x", w.empty(), w);
  }
  {
    std::string w;
    for (const auto& [lo, x0, x1, hi] : quads)
      if (q.leq(lo, x0) && q.way_below(x0, x1) && q.leq(x1, hi) &&
          !q.way_below(lo, hi)) {
        w = q.show(lo) + " <= " + q.show(x0) + " << " + q.show(x1) +
            " <= " + q.show(hi);
        break;
      }
    r.add(p + "chain", "x0' <= x0 << x1 <= x1' implies x0' << x1'", w.empty(), w);
  }
  {
    std::string w;
    for (const auto& [x0, x1, y] : triples)
      if (q.way_below(x0, y) && q.way_below(x1, y) &&
          !q.way_below(q.join2(x0, x1), y)) {
        w = "y=" + q.show(y) + " " + pair_str(q, x0, x1);
        break;
      }
    r.add(p + "join_closed", "x0 << y and x1 << y imply x0 v x1 << y", w.empty(), w);
  }
  return r;
}

VerificationReport check_interpolation(const Quantale& q, const CheckMode& mode) {
  VerificationReport r;
  const std::string p = "interp." + q.name() + ".";
  const auto dom = law_check_domain(q, mode);
  const auto pairs = tuples<2>(q, mode, dom, 11);

  std::string w_mid, w_left, w_right;
  int cases = 0;
  for (const auto& [a, b] : pairs) {
    if (!q.way_below(a, b)) continue;
    ++cases;
    try {
      interpolate(q, a, b);
    } catch (const Error& e) {
      if (w_mid.empty()) w_mid = e.what();
    }
    try {
      tensor_interpolate(q, a, b, Side::Right);
    } catch (const Error& e) {
      if (w_right.empty()) w_right = e.what();
    }
    try {
      tensor_interpolate(q, a, b, Side::Left);
    } catch (const Error& e) {
      if (w_left.empty()) w_left = e.what();
    }
  }
  r.add(p + "between", "q1 << q2 implies q1 << q << q2 for some q", w_mid.empty(),
        w_mid);
  r.add(p + "tensor.right", "q1 << q2 implies q1 << q2 (x) w for some w << I",
        w_right.empty(), w_right);
  r.add(p + "tensor.left", "q1 << q2 implies q1 << w (x) q2 for some w << I",
        w_left.empty(), w_left);
  r.add(p + "pairs_nonempty", "the checked way-below relation is inhabited",
        cases > 0);
  return r;
}

} // namespace qmv

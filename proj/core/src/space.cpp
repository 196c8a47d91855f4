#include "qmv/space.hpp"

#include <algorithm>
#include <numeric>

namespace qmv {

using nlohmann::json;

std::size_t Space::index_of(const std::string& point) const {
  auto it = std::find(points.begin(), points.end(), point);
  if (it == points.end())
    throw MismatchError("unknown point '" + point + "'");
  return static_cast<std::size_t>(it - points.begin());
}

Space Space::from_json(const json& j) {
  auto q = build_quantale(j.at("quantale"));
  auto points = j.at("points").get<std::vector<std::string>>();
  const std::size_t n = points.size();
  const auto& jd = j.at("d");
  if (jd.size() != n) throw ParseError("distance matrix has wrong size");
  std::vector<std::vector<Value>> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (jd[i].size() != n) throw ParseError("distance matrix has wrong size");
    for (std::size_t k = 0; k < n; ++k) d[i].push_back(q->parse_elem(jd[i][k]));
  }
  return *make_space(std::move(q), std::move(points), std::move(d));
}

json Space::to_json() const {
  json out;
  out["quantale"] = {{"kind", "builtin"}, {"name", q->name()}};
  out["points"] = points;
  out["d"] = json::array();
  for (std::size_t i = 0; i < size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < size(); ++j) row.push_back(q->elem_json(d[i][j]));
    out["d"].push_back(std::move(row));
  }
  return out;
}

SpacePtr make_space(QuantalePtr q, std::vector<std::string> points,
                    std::vector<std::vector<Value>> d) {
  const std::size_t n = points.size();
  if (d.size() != n) throw MismatchError("distance matrix has wrong size");
  for (const auto& row : d) {
    if (row.size() != n) throw MismatchError("distance matrix has wrong size");
    for (const auto& e : row) q->require(e);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i] == points[j])
        throw MismatchError("duplicate point '" + points[i] + "'");
  auto s = std::make_shared<Space>();
  s->q = std::move(q);
  s->points = std::move(points);
  s->d = std::move(d);
  return s;
}

VerificationReport check_qmetric(const Space& x) {
  VerificationReport r;
  const Quantale& q = *x.q;
  const std::size_t n = x.size();
  {
    std::string w;
    for (std::size_t i = 0; i < n; ++i)
      if (!q.leq(q.unit(), x.dist(i, i))) { w = x.points[i]; break; }
    r.add("qmetric.refl", "I <= d(x,x)", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t i = 0; i < n && w.empty(); ++i)
      for (std::size_t j = 0; j < n && w.empty(); ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!q.leq(q.tensor(x.dist(i, j), x.dist(j, k)), x.dist(i, k))) {
            w = "(" + x.points[i] + ", " + x.points[j] + ", " + x.points[k] + ")";
            break;
          }
    r.add("qmetric.triangle", "d(x,y) (x) d(y,z) <= d(x,z)", w.empty(), w);
  }
  return r;
}

bool d_preorder_leq(const Space& x, std::size_t i, std::size_t j) {
  return x.q->leq(x.q->unit(), x.dist(i, j));
}

SpaceMap identity_space_map(const SpacePtr& x) {
  SpaceMap f{x, x, {}};
  f.map.resize(x->size());
  std::iota(f.map.begin(), f.map.end(), 0);
  return f;
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (f.target.get() != g.source.get())
    throw MismatchError("composing non-composable space maps");
  SpaceMap h{f.source, g.target, {}};
  for (std::size_t i = 0; i < f.map.size(); ++i) h.map.push_back(g(f(i)));
  return h;
}

static void require_parallel(const SpaceMap& f, const SpaceMap& g) {
  if (f.source.get() != g.source.get() || f.target.get() != g.target.get())
    throw MismatchError("expected a parallel pair of space maps");
}

static bool hom_leq(const SpaceMap& f, const SpaceMap& g, std::string& w) {
  const Space& t = *f.target;
  for (std::size_t i = 0; i < f.source->size(); ++i)
    if (!d_preorder_leq(t, f(i), g(i))) {
      w = f.source->points[i];
      return false;
    }
  return true;
}

ArrowCheckResult arrow_check(ArrowKind kind, const SpaceMap& f,
                             const std::optional<SpaceMap>& g) {
  const Space& s = *f.source;
  const Space& t = *f.target;
  if (s.q->name() != t.q->name())
    throw MismatchError("space map across different quantales");
  ArrowCheckResult res;
  switch (kind) {
    case ArrowKind::Short:
    case ArrowKind::Isometry:
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
          const Value& a = s.dist(i, j);
          const Value& b = t.dist(f(i), f(j));
          bool ok = kind == ArrowKind::Short ? s.q->leq(a, b) : a == b;
          if (!ok) {
            res.ok = false;
            res.witness = "(" + s.points[i] + ", " + s.points[j] + ")";
            return res;
          }
        }
      return res;
    case ArrowKind::HomLeq: {
      if (!g) throw PreconditionError("hom_leq needs a second map");
      require_parallel(f, *g);
      res.ok = hom_leq(f, *g, res.witness);
      return res;
    }
    case ArrowKind::Equivalent: {
      if (!g) throw PreconditionError("equivalent needs a second map");
      require_parallel(f, *g);
      res.ok = hom_leq(f, *g, res.witness) && hom_leq(*g, f, res.witness);
      return res;
    }
  }
  return res;
}

Constructed product_space(const std::vector<SpacePtr>& factors) {
  if (factors.empty())
    throw PreconditionError("product of an empty family of spaces");
  const auto q = factors[0]->q;
  for (const auto& f : factors)
    if (f->q->name() != q->name())
      throw MismatchError("product factors over different quantales");

  std::vector<std::string> points;
  std::vector<std::vector<std::size_t>> coords; // point -> factor indices
  points.push_back("");
  coords.emplace_back();
  for (const auto& f : factors) {
    std::vector<std::string> nps;
    std::vector<std::vector<std::size_t>> ncs;
    for (std::size_t p = 0; p < points.size(); ++p)
      for (std::size_t i = 0; i < f->size(); ++i) {
        nps.push_back(points[p].empty() ? f->points[i]
                                        : points[p] + "," + f->points[i]);
        auto c = coords[p];
        c.push_back(i);
        ncs.push_back(std::move(c));
      }
    points = std::move(nps);
    coords = std::move(ncs);
  }
  if (factors.size() > 1)
    for (auto& p : points) p = "(" + p + ")";

  const std::size_t n = points.size();
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Value> ds;
      for (std::size_t k = 0; k < factors.size(); ++k)
        ds.push_back(factors[k]->dist(coords[a][k], coords[b][k]));
      d[a][b] = q->meet(ds);
    }
  Constructed c;
  c.space = make_space(q, std::move(points), std::move(d));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    SpaceMap pr{c.space, factors[k], {}};
    for (std::size_t a = 0; a < n; ++a) pr.map.push_back(coords[a][k]);
    c.maps.push_back(std::move(pr));
  }
  return c;
}

Constructed sum_space(const std::vector<SpacePtr>& summands) {
  if (summands.empty())
    throw PreconditionError("sum of an empty family of spaces");
  const auto q = summands[0]->q;
  for (const auto& s : summands)
    if (s->q->name() != q->name())
      throw MismatchError("sum summands over different quantales");

  std::vector<std::string> points;
  std::vector<std::pair<std::size_t, std::size_t>> tags;
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (std::size_t i = 0; i < summands[k]->size(); ++i) {
      points.push_back(std::to_string(k) + ":" + summands[k]->points[i]);
      tags.emplace_back(k, i);
    }
  const std::size_t n = points.size();
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n, q->bottom()));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (tags[a].first == tags[b].first)
        d[a][b] = summands[tags[a].first]->dist(tags[a].second, tags[b].second);
  Constructed c;
  c.space = make_space(q, std::move(points), std::move(d));
  std::size_t off = 0;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    SpaceMap in{summands[k], c.space, {}};
    for (std::size_t i = 0; i < summands[k]->size(); ++i)
      in.map.push_back(off + i);
    off += summands[k]->size();
    c.maps.push_back(std::move(in));
  }
  return c;
}

Constructed equalizer(const SpaceMap& f, const SpaceMap& g) {
  require_parallel(f, g);
  const Space& x = *f.source;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (f(i) == g(i)) keep.push_back(i);
  std::vector<std::string> points;
  std::vector<std::vector<Value>> d(keep.size(), std::vector<Value>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    points.push_back(x.points[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b)
      d[a][b] = x.dist(keep[a], keep[b]);
  }
  Constructed c;
  c.space = make_space(x.q, std::move(points), std::move(d));
  SpaceMap incl{c.space, f.source, keep};
  c.maps.push_back(std::move(incl));
  return c;
}

namespace {
struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Partition of 0..n-1 into classes listed in first-occurrence order.
std::vector<std::vector<std::size_t>> classes_of(UnionFind& uf, std::size_t n) {
  std::vector<std::vector<std::size_t>> cls;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = uf.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(cls.size());
      cls.emplace_back();
    }
    cls[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return cls;
}
} // namespace

Constructed coequalizer(const SpaceMap& f, const SpaceMap& g) {
  require_parallel(f, g);
  const Space& y = *f.target;
  UnionFind uf(y.size());
  for (std::size_t i = 0; i < f.source->size(); ++i) uf.unite(f(i), g(i));
  auto cls = classes_of(uf, y.size());

  std::vector<std::string> points;
  for (const auto& c : cls) points.push_back("[" + y.points[c[0]] + "]");
  std::vector<std::vector<Value>> d(cls.size(), std::vector<Value>(cls.size()));
  for (std::size_t a = 0; a < cls.size(); ++a)
    for (std::size_t b = 0; b < cls.size(); ++b) {
      std::vector<Value> ds;
      for (std::size_t i : cls[a])
        for (std::size_t j : cls[b]) ds.push_back(y.dist(i, j));
      d[a][b] = y.q->join(ds);
    }
  Constructed c;
  c.space = make_space(y.q, std::move(points), std::move(d));
  SpaceMap quot{f.target, c.space, {}};
  quot.map.resize(y.size());
  for (std::size_t a = 0; a < cls.size(); ++a)
    for (std::size_t i : cls[a]) quot.map[i] = a;
  c.maps.push_back(std::move(quot));
  return c;
}

SpacePtr reindex(const MonoidalMap& h, const Space& x, const CheckMode& mode) {
  if (h.source->name() != x.q->name())
    throw MismatchError("reindexing along a map out of a different quantale");
  auto lax = check_monoidal_map(h, mode);
  if (!lax.ok())
    throw LawViolation("reindexing along a non-lax map " + h.name);
  const std::size_t n = x.size();
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = h(x.dist(i, j));
  auto out = make_space(h.target, x.points, std::move(d));
  auto laws = check_qmetric(*out);
  if (!laws.ok())
    throw LawViolation("reindexed space fails the metric laws along " + h.name);
  return out;
}

ArrowCheckResult is_separated(const Space& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (d_preorder_leq(x, i, j) && d_preorder_leq(x, j, i))
        return {false, "(" + x.points[i] + ", " + x.points[j] + ")"};
  return {true, ""};
}

SeparationQuotient separation_quotient(const SpacePtr& x, bool last_rep) {
  const std::size_t n = x->size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d_preorder_leq(*x, i, j) && d_preorder_leq(*x, j, i)) uf.unite(i, j);
  auto cls = classes_of(uf, n);

  std::vector<std::size_t> rep;
  for (const auto& c : cls) rep.push_back(last_rep ? c.back() : c.front());
  std::vector<std::string> points;
  for (std::size_t a = 0; a < cls.size(); ++a)
    points.push_back("[" + x->points[rep[a]] + "]");
  std::vector<std::vector<Value>> d(cls.size(), std::vector<Value>(cls.size()));
  for (std::size_t a = 0; a < cls.size(); ++a)
    for (std::size_t b = 0; b < cls.size(); ++b)
      d[a][b] = x->dist(rep[a], rep[b]);

  SeparationQuotient out;
  out.space = make_space(x->q, std::move(points), std::move(d));
  out.r = {x, out.space, {}};
  out.r.map.resize(n);
  for (std::size_t a = 0; a < cls.size(); ++a)
    for (std::size_t i : cls[a]) out.r.map[i] = a;
  out.s = {out.space, x, rep};
  return out;
}

bool check_equivalence_pair(const SpaceMap& f, const SpaceMap& g) {
  if (f.source.get() != g.target.get() || f.target.get() != g.source.get())
    throw MismatchError("expected maps in opposite directions");
  auto gf = compose(g, f);
  auto fg = compose(f, g);
  auto idx = identity_space_map(f.source);
  auto idy = identity_space_map(f.target);
  return arrow_check(ArrowKind::Equivalent, gf, idx).ok &&
         arrow_check(ArrowKind::Equivalent, fg, idy).ok;
}

} // namespace qmv

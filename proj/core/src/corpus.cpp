#include "qmv/corpus.hpp"

namespace qmv {

QuantalePtr make_chain(std::size_t k) {
  const std::size_t n = k + 1;
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<std::size_t>> tensor(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      leq[i][j] = i >= j; // reversed order: larger numbers sit lower
      tensor[i][j] = std::min(i + j, k);
    }
  }
  return TableQuantale::make("chain" + std::to_string(n), std::move(names),
                             std::move(leq), std::move(tensor), 0);
}

QuantalePtr make_nmeet_trunc(std::size_t k) {
  const std::size_t n = k + 1;
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<std::size_t>> tensor(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      leq[i][j] = i >= j;
      tensor[i][j] = std::max(i, j);
    }
  }
  return TableQuantale::make("nmeet_trunc" + std::to_string(k),
                             std::move(names), std::move(leq),
                             std::move(tensor), 0);
}

std::vector<NamedQuantale> corpus_finite_quantales() {
  auto rel = make_relations({"0", "1"});
  return {
      {"sigma", make_sigma()},
      {"trivial", make_trivial()},
      {"chain4", make_chain(3)},
      {"nmeet_trunc3", make_nmeet_trunc(3)},
      {"sigma_x_sigma", make_product({make_sigma(), make_sigma()})},
      {"relations2", rel},
      {"powerset_z2", make_powerset_monoid({"e", "a"}, {{0, 1}, {1, 0}}, 0)},
      {"mod_unit_relations2", make_mod_unit(rel)},
  };
}

std::vector<NamedQuantale> corpus_analytic_quantales() {
  return {
      {"rplus", make_rplus()},
      {"rmeet", make_rmeet()},
      {"nplus", make_nplus()},
      {"nmeet", make_nmeet()},
      {"rplus_x_rplus", make_product({make_rplus(), make_rplus()})},
  };
}

namespace {

SpacePtr oriented_diff_space(const std::vector<std::string>& labels) {
  auto q = make_rplus();
  const std::size_t n = labels.size();
  std::vector<Rat> vals;
  for (const auto& s : labels) vals.push_back(Rat::parse(s));
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = Value(vals[i] <= vals[j] ? vals[j].minus(vals[i]) : Rat(0));
  return make_space(q, labels, std::move(d));
}

} // namespace

SpacePtr oline_space() {
  return oriented_diff_space({"0", "1", "2", "12/5", "5/2"});
}

SpacePtr oline_b_space() {
  return oriented_diff_space({"0", "1/2", "1", "2", "5/2"});
}

SpacePtr abs3_space() {
  auto q = make_rplus();
  std::vector<Rat> vals = {Rat(0), Rat(1), Rat(3)};
  std::vector<std::vector<Value>> d(3, std::vector<Value>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      d[i][j] = Value(vals[i] <= vals[j] ? vals[j].minus(vals[i])
                                         : vals[i].minus(vals[j]));
  return make_space(q, {"0", "1", "3"}, std::move(d));
}

SpacePtr sigma_poset_space() {
  auto q = make_sigma();
  // a <= b <= c, encoded as d(x,y) = top when x <= y, bottom otherwise.
  std::vector<std::vector<Value>> d(3, std::vector<Value>(3, q->bottom()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) d[i][j] = q->top();
  return make_space(q, {"a", "b", "c"}, std::move(d));
}

SpacePtr chaotic2_space() {
  auto q = make_sigma();
  std::vector<std::vector<Value>> d(2, std::vector<Value>(2, q->unit()));
  return make_space(q, {"a", "b"}, std::move(d));
}

SpacePtr discrete2_space() {
  auto q = make_sigma();
  std::vector<std::vector<Value>> d(2, std::vector<Value>(2, q->bottom()));
  d[0][0] = d[1][1] = q->unit();
  return make_space(q, {"a", "b"}, std::move(d));
}

SpacePtr counterexample_space() {
  auto q = make_product({make_rplus(), make_rplus()});
  auto comp = [](const Rat& a, const Rat& b) {
    return a <= b ? b.minus(a) : a.minus(b);
  };
  const std::vector<std::pair<Rat, Rat>> pts = {
      {Rat(0), Rat(2)}, {Rat(2), Rat(0)}, {Rat(2), Rat(2)}};
  std::vector<std::vector<Value>> d(3, std::vector<Value>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      d[i][j] = Value(ValueList{Value(comp(pts[i].first, pts[j].first)),
                                Value(comp(pts[i].second, pts[j].second))});
  return make_space(q, {"(0,2)", "(2,0)", "(2,2)"}, std::move(d));
}

SpacePtr random_space(const QuantalePtr& q, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Value>> d(n, std::vector<Value>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = i == j ? q->unit() : q->sample(rng);
  // Join-closure of the triangle law; entries only move up in the quantale
  // order, so the diagonal stays above the unit.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Value t = q->tensor(d[i][j], d[j][k]);
          if (!q->leq(t, d[i][k])) {
            d[i][k] = q->join2(d[i][k], t);
            changed = true;
          }
        }
  }
  std::vector<std::string> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
  return make_space(q, std::move(points), std::move(d));
}

std::vector<NamedSpace> corpus_spaces(std::uint64_t seed) {
  std::vector<NamedSpace> out = {
      {"oline", oline_space()},
      {"oline_b", oline_b_space()},
      {"abs3", abs3_space()},
      {"sigma_poset", sigma_poset_space()},
      {"chaotic2", chaotic2_space()},
      {"discrete2", discrete2_space()},
      {"counterexample", counterexample_space()},
  };
  for (const auto& [name, q] : corpus_finite_quantales()) {
    out.push_back({"rand3_" + name, random_space(q, 3, seed ^ 0x51ed)});
    out.push_back({"rand2_" + name, random_space(q, 2, seed ^ 0xb007)});
  }
  out.push_back({"rand3_rplus", random_space(make_rplus(), 3, seed ^ 0xa1e1)});
  out.push_back({"rand4_rplus", random_space(make_rplus(), 4, seed ^ 0xd00d)});
  return out;
}

} // namespace qmv

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "qmv/corpus.hpp"
#include "qmv/hsmonad.hpp"

using namespace qmv;

namespace {

bool all_pass(const VerificationReport& r) {
  for (const auto& e : r.entries)
    if (e.status == Status::Fail) return false;
  return true;
}

std::vector<SpaceMap> short_maps_into(const SpacePtr& x, const SpacePtr& y) {
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

TEST_CASE("d_S values and empty-set conventions") {
  auto a3 = abs3_space();
  CHECK(d_s(*a3, subset_of(*a3, {"0", "3"}), subset_of(*a3, {"1"})) ==
        Value(Rat(1)));
  CHECK(d_s(*a3, subset_of(*a3, {"0", "3"}), 0) == a3->q->top());
  CHECK(d_s(*a3, 0, subset_of(*a3, {"1"})) == a3->q->bottom());

  auto sig = sigma_poset_space();
  CHECK(d_s(*sig, subset_of(*sig, {"a"}), subset_of(*sig, {"b"})) ==
        sig->q->top());
  CHECK(d_s(*sig, subset_of(*sig, {"b"}), subset_of(*sig, {"a"})) ==
        sig->q->bottom());
}

TEST_CASE("powerset spaces are Q-metric and the unit is an isometry") {
  auto one = make_space(make_sigma(), {"x"},
                        {{make_sigma()->unit()}});
  auto ps1 = ps_space(one);
  CHECK(ps1->size() == 2);
  CHECK(ps1->dist(1, 0) == one->q->top());
  CHECK(ps1->dist(0, 1) == one->q->bottom());

  for (const auto& [name, sp] : corpus_spaces(31)) {
    CAPTURE(name);
    if (sp->size() > 3) continue;
    auto psx = ps_space(sp);
    CHECK(all_pass(check_qmetric(*psx)));
    auto eta = ps_unit(sp, psx);
    CHECK(arrow_check(ArrowKind::Isometry, eta).ok);
  }
  CHECK_THROWS_AS(ps_space(oline_space(), 4), GuardExceeded);
}

TEST_CASE("Kleisli extension satisfies the monad equations") {
  auto q = make_chain(3);
  auto x = random_space(q, 2, 21);
  auto y = random_space(q, 2, 22);
  auto psx = ps_space(x);
  auto psy = ps_space(y);

  auto eta_x = ps_unit(x, psx);
  auto eta_ext = kleisli_extend(eta_x, psx);
  for (std::size_t a = 0; a < psx->size(); ++a) CHECK(eta_ext(a) == a);

  auto fs = short_maps_into(x, psy);
  auto gs = short_maps_into(y, psx);
  REQUIRE(!fs.empty());
  REQUIRE(!gs.empty());
  for (const auto& f : fs) {
    auto fe = kleisli_extend(f, psx);
    CHECK(arrow_check(ArrowKind::Short, fe).ok);
    CHECK(compose(fe, eta_x).map == f.map);
    for (const auto& g : gs) {
      auto ge = kleisli_extend(g, psy);
      CHECK(compose(ge, fe).map ==
            kleisli_extend(compose(ge, f), psx).map);
    }
  }
  // monotonicity in the hom-preorder
  for (const auto& f : fs)
    for (const auto& g : fs)
      if (arrow_check(ArrowKind::HomLeq, f, g).ok)
        CHECK(arrow_check(ArrowKind::HomLeq, kleisli_extend(f, psx),
                          kleisli_extend(g, psx))
                  .ok);

  CHECK_THROWS_AS(kleisli_extend(SpaceMap{x, abs3_space(), {0, 0}}, psx),
                  PreconditionError);
  // a non-short map into the powerset space must be rejected
  bool found_nonshort = false;
  std::vector<std::size_t> m(x->size(), 0);
  while (!found_nonshort) {
    SpaceMap f{x, psy, m};
    if (!arrow_check(ArrowKind::Short, f).ok) {
      found_nonshort = true;
      CHECK_THROWS_AS(kleisli_extend(f, psx), PreconditionError);
    }
    std::size_t k = 0;
    while (k < m.size() && ++m[k] == psy->size()) m[k++] = 0;
    if (k == m.size()) break;
  }
  CHECK(found_nonshort);
}

TEST_CASE("star distance and star closure") {
  auto cex = counterexample_space();
  Subset a = subset_of(*cex, {"(0,2)", "(2,0)"});
  CHECK(star_distance(*cex, a, cex->index_of("(2,2)")) == cex->q->unit());
  CHECK(star_distance(*cex, 0, 0) == cex->q->bottom());
  for (std::size_t y = 0; y < cex->size(); ++y)
    CHECK(cex->q->leq(cex->q->unit(),
                      star_distance(*cex, Subset{1} << y, y)));

  auto sig = sigma_poset_space();
  CHECK(star_closure(*sig, subset_of(*sig, {"b"})) ==
        subset_of(*sig, {"b", "c"}));
  CHECK(star_closure(*sig, 0) == 0);

  auto f1b = oline_b_space();
  CHECK(star_closure(*f1b, subset_of(*f1b, {"1", "2"})) ==
        subset_of(*f1b, {"0", "1/2", "1", "2"}));

  // d(A,y) = d_S(A,{y})
  auto a3 = abs3_space();
  for (Subset s = 0; s <= full_subset(*a3); ++s)
    for (std::size_t y = 0; y < a3->size(); ++y)
      CHECK(star_distance(*a3, s, y) == d_s(*a3, s, Subset{1} << y));
}

TEST_CASE("star preorder characterizations across the corpus") {
  for (const auto& [name, sp] : corpus_spaces(32)) {
    CAPTURE(name);
    if (sp->size() > 4) continue;
    auto rep = check_star_preorder(*sp, name);
    for (const auto& e : rep.entries) {
      CAPTURE(e.id);
      CAPTURE(e.witness);
      if (e.status != Status::Reported) CHECK(e.status == Status::Pass);
    }
  }
  auto rep = check_star_preorder(*chaotic2_space(), "chaotic2");
  auto it = std::find_if(rep.entries.begin(), rep.entries.end(),
                         [](const ReportEntry& e) {
                           return e.id.find("equivalent_pair") !=
                                  std::string::npos;
                         });
  REQUIRE(it != rep.entries.end());
  CHECK(it->witness != "none");
}

TEST_CASE("B_S lemma items across the corpus") {
  for (const auto& [name, sp] : corpus_spaces(33)) {
    CAPTURE(name);
    if (sp->size() > 4) continue;
    auto rep = check_bs_properties(*sp, name);
    for (const auto& e : rep.entries) {
      CAPTURE(e.id);
      CAPTURE(e.witness);
      CHECK(e.status == Status::Pass);
    }
  }
}

TEST_CASE("star-robust openness and the topology theorems") {
  for (const auto& [name, sp] : corpus_spaces(34)) {
    CAPTURE(name);
    if (sp->size() > 3 || !sp->q->finite()) continue;
    // the full powerset family is open
    std::vector<Subset> all_subsets;
    for (Subset s = 0; s <= full_subset(*sp); ++s) all_subsets.push_back(s);
    CHECK(star_robust_open(*sp, all_subsets).ok);
    // every d_S-ball open of the powerset space is star-robust open
    auto psx = ps_space(sp);
    for (Subset fam : enumerate_point_topology(*psx, false)) {
      std::vector<Subset> u;
      for (Subset s = 0; s <= full_subset(*sp); ++s)
        if (fam & (Subset{1} << s)) u.push_back(s);
      CHECK(star_robust_open(*sp, u).ok);
    }
    auto rep = check_topology_theorems(*sp, name);
    for (const auto& e : rep.entries) {
      CAPTURE(e.id);
      CAPTURE(e.witness);
      if (e.status != Status::Reported) CHECK(e.status == Status::Pass);
    }
  }
  CHECK_THROWS_AS(check_topology_theorems(*oline_space(), "f"),
                  PreconditionError);
  CHECK_THROWS_AS(
      check_topology_theorems(*random_space(make_sigma(), 4, 1), "f"),
      GuardExceeded);
}

TEST_CASE("a strict inclusion between the topologies exists over sigma x sigma") {
  auto sp = find_strict_inclusion_instance();
  REQUIRE(sp.has_value());
  auto tau_star = enumerate_star_robust_topology(**sp);
  auto tau_r = enumerate_robust_topology(**sp);
  CHECK(tau_star.size() < tau_r.size());
  for (auto f : tau_star)
    CHECK(std::find(tau_r.begin(), tau_r.end(), f) != tau_r.end());
  // a robust-open family that is not star-robust open
  bool found = false;
  for (auto f : tau_r) {
    if (std::find(tau_star.begin(), tau_star.end(), f) != tau_star.end())
      continue;
    std::vector<Subset> u;
    for (Subset s = 0; s <= full_subset(**sp); ++s)
      if (f & (std::uint32_t{1} << s)) u.push_back(s);
    auto res = star_robust_open(**sp, u);
    CHECK_FALSE(res.ok);
    CHECK(!res.witness.empty());
    CHECK(robust_open(**sp, u).ok);
    found = true;
    break;
  }
  CHECK(found);
}

TEST_CASE("the non-linear counterexample report") {
  auto rep = run_counterexample();
  CHECK(rep.entries.size() == 4);
  for (const auto& e : rep.entries) {
    CAPTURE(e.id);
    CAPTURE(e.witness);
    CHECK(e.status == Status::Pass);
  }
}

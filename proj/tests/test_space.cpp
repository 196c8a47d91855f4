#include <doctest.h>

#include "qmv/corpus.hpp"
#include "qmv/space.hpp"

#include "instances.hpp"

using namespace qmv;
using namespace qmv::testing;

namespace {

Value rv(const char* s) { return Value(Rat::parse(s)); }

std::vector<std::vector<std::size_t>> all_functions(std::size_t from,
                                                    std::size_t to) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(from, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < from && ++f[i] == to) f[i++] = 0;
    if (i == from) break;
  }
  if (from == 0) out = {{}};
  return out;
}

std::vector<SpaceMap> all_short_maps(const SpacePtr& a, const SpacePtr& b) {
  std::vector<SpaceMap> out;
  for (auto& fn : all_functions(a->size(), b->size())) {
    SpaceMap m{a, b, fn};
    if (arrow_check(ArrowKind::Short, m).ok) out.push_back(std::move(m));
  }
  return out;
}

bool same_map(const SpaceMap& f, const SpaceMap& g) { return f.map == g.map; }

} // namespace

TEST_CASE("check_qmetric accepts the corpus and flags corruption") {
  CHECK(check_qmetric(*oline_space()).ok());
  CHECK(check_qmetric(*abs3_space()).ok());
  CHECK(check_qmetric(*counterexample_space()).ok());
  for (const auto& [name, sp] : corpus_spaces(5)) {
    CAPTURE(name);
    CHECK(check_qmetric(*sp).ok());
  }

  auto bad = *abs3_space();
  bad.d[0][2] = rv("5"); // |0-3| corrupted upward breaks the triangle via 1
  auto r = check_qmetric(bad);
  CHECK_FALSE(r.ok());
  bool seen = false;
  for (const auto& e : r.entries)
    if (e.status == Status::Fail) {
      seen = true;
      CHECK(e.id == "qmetric.triangle");
      CHECK(e.witness == "(0, 1, 3)");
    }
  CHECK(seen);
}

TEST_CASE("d-preorder") {
  auto f1 = oline_space();
  CHECK(d_preorder_leq(*f1, f1->index_of("2"), f1->index_of("1")));
  CHECK_FALSE(d_preorder_leq(*f1, f1->index_of("1"), f1->index_of("2")));
  for (std::size_t i = 0; i < f1->size(); ++i)
    CHECK(d_preorder_leq(*f1, i, i));

  auto po = sigma_poset_space(); // a <= b <= c
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(d_preorder_leq(*po, i, j) == (i <= j));
}

TEST_CASE("arrow_check kinds") {
  auto f1 = oline_space();
  auto id = identity_space_map(f1);
  CHECK(arrow_check(ArrowKind::Short, id).ok);
  CHECK(arrow_check(ArrowKind::Isometry, id).ok);
  CHECK(arrow_check(ArrowKind::Equivalent, id, id).ok);

  // Two points 2 apart mapped onto points 1 apart: short but not isometric.
  auto q = make_rplus();
  auto x = make_space(q, {"a", "b"},
                      {{rv("0"), rv("2")}, {rv("2"), rv("0")}});
  auto y = make_space(q, {"a", "b"},
                      {{rv("0"), rv("1")}, {rv("1"), rv("0")}});
  SpaceMap f{x, y, {0, 1}};
  CHECK(arrow_check(ArrowKind::Short, f).ok);
  auto iso = arrow_check(ArrowKind::Isometry, f);
  CHECK_FALSE(iso.ok);
  CHECK(iso.witness == "(a, b)");
  CHECK_THROWS_AS(arrow_check(ArrowKind::HomLeq, f), PreconditionError);
}

TEST_CASE("product and sum metrics") {
  auto f1 = oline_space();
  auto prod = product_space({f1, f1});
  CHECK(prod.space->size() == 25);
  CHECK(check_qmetric(*prod.space).ok());
  // meet of rplus is the real max, taken componentwise
  auto i = prod.space->index_of("(0,1)");
  auto j = prod.space->index_of("(2,2)");
  CHECK(prod.space->dist(i, j) == rv("2")); // max(d(0,2)=2, d(1,2)=1)
  for (const auto& pr : prod.maps)
    CHECK(arrow_check(ArrowKind::Short, pr).ok);

  auto q = make_rplus();
  auto a = make_space(q, {"a"}, {{rv("0")}});
  auto b = make_space(q, {"b"}, {{rv("0")}});
  auto sum = sum_space({a, b});
  CHECK(sum.space->size() == 2);
  CHECK(sum.space->dist(0, 1) == rv("inf"));
  for (const auto& in : sum.maps)
    CHECK(arrow_check(ArrowKind::Short, in).ok);
}

TEST_CASE("equalizer and coequalizer") {
  auto q = make_sigma();
  auto x = random_space(q, 3, 21);
  auto y = random_space(q, 2, 22);
  auto fs = all_short_maps(x, y);
  REQUIRE(fs.size() >= 2);
  for (const auto& f : fs)
    for (const auto& g : fs) {
      auto eq = equalizer(f, g);
      CHECK(check_qmetric(*eq.space).ok());
      CHECK(arrow_check(ArrowKind::Short, eq.maps[0]).ok);
      auto co = coequalizer(f, g);
      CHECK(check_qmetric(*co.space).ok());
      CHECK(arrow_check(ArrowKind::Short, co.maps[0]).ok);
    }

  // Parallel constant maps agree -> 2-class quotient; differ -> classes merge.
  auto z = chaotic2_space();
  auto disc = discrete2_space();
  SpaceMap c0{z, disc, {0, 0}};
  SpaceMap c1{z, disc, {1, 1}};
  CHECK(coequalizer(c0, c0).space->size() == 2);
  CHECK(coequalizer(c0, c1).space->size() == 1);
}

TEST_CASE("universal properties at desk scale") {
  auto q = make_sigma();
  auto a = random_space(q, 2, 31);
  auto b = random_space(q, 2, 32);
  std::vector<SpacePtr> zs = {random_space(q, 1, 33), random_space(q, 2, 34),
                              sigma_poset_space()};

  auto prod = product_space({a, b});
  for (const auto& z : zs) {
    for (const auto& f : all_short_maps(z, a))
      for (const auto& g : all_short_maps(z, b)) {
        int mediators = 0;
        for (const auto& m : all_short_maps(z, prod.space))
          if (same_map(compose(prod.maps[0], m), f) &&
              same_map(compose(prod.maps[1], m), g))
            ++mediators;
        CHECK(mediators == 1);
      }
  }

  auto sum = sum_space({a, b});
  for (const auto& z : zs) {
    for (const auto& f : all_short_maps(a, z))
      for (const auto& g : all_short_maps(b, z)) {
        int mediators = 0;
        for (const auto& m : all_short_maps(sum.space, z))
          if (same_map(compose(m, sum.maps[0]), f) &&
              same_map(compose(m, sum.maps[1]), g))
            ++mediators;
        CHECK(mediators == 1);
      }
  }

  auto fs = all_short_maps(a, b);
  for (const auto& f : fs)
    for (const auto& g : fs) {
      auto eq = equalizer(f, g);
      for (const auto& z : zs)
        for (const auto& h : all_short_maps(z, a)) {
          if (!same_map(compose(f, h), compose(g, h))) continue;
          int mediators = 0;
          for (const auto& k : all_short_maps(z, eq.space))
            if (same_map(compose(eq.maps[0], k), h)) ++mediators;
          CHECK(mediators == 1);
        }
      auto co = coequalizer(f, g);
      for (const auto& z : zs)
        for (const auto& h : all_short_maps(b, z)) {
          if (!same_map(compose(h, f), compose(h, g))) continue;
          int mediators = 0;
          for (const auto& k : all_short_maps(co.space, z))
            if (same_map(compose(k, co.maps[0]), h)) ++mediators;
          CHECK(mediators == 1);
        }
    }
}

TEST_CASE("reindexing along lax maps") {
  auto x = abs3_space();
  auto y = reindex(map_rplus_to_nplus(), *x);
  CHECK(y->q->name() == "nplus");
  CHECK(check_qmetric(*y).ok());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(y->dist(i, j).scalar().is_integer());

  auto rp = make_rplus();
  MonoidalMap id{"id", rp, rp, [](const Value& v) { return v; },
                 MapKind::Strict};
  auto same = reindex(id, *x);
  CHECK(same->d == x->d);

  // Over an affine base, reindexing along the collapse to sigma recovers the
  // sigma encoding of the d-preorder.
  auto c4 = make_chain(3);
  auto sp = random_space(c4, 3, 41);
  auto gz = map_mod_unit_to_sigma(c4);
  auto enc = reindex(gz, *sp, CheckMode::exhaustive_mode());
  auto sig = make_sigma();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(enc->dist(i, j) ==
            (d_preorder_leq(*sp, i, j) ? sig->top() : sig->bottom()));

  // A non-lax map is rejected.
  auto np = make_nplus();
  MonoidalMap badmap{"floor_shift", rp, np,
                     [](const Value& v) {
                       Rat r = v.scalar();
                       return Value(r.is_inf() ? r : r.ceil() + Rat(1));
                     },
                     MapKind::Lax};
  CHECK_THROWS_AS(reindex(badmap, *x), LawViolation);
}

TEST_CASE("separation") {
  CHECK(is_separated(*sigma_poset_space()).ok);
  CHECK(is_separated(*oline_space()).ok);
  auto ch = is_separated(*chaotic2_space());
  CHECK_FALSE(ch.ok);
  CHECK(ch.witness == "(a, b)");
}

TEST_CASE("separation quotient") {
  auto ch = chaotic2_space();
  auto sq = separation_quotient(ch);
  CHECK(sq.space->size() == 1);
  CHECK(is_separated(*sq.space).ok);
  CHECK(arrow_check(ArrowKind::Isometry, sq.r).ok);
  CHECK(check_equivalence_pair(sq.r, sq.s));
  CHECK(same_map(compose(sq.r, sq.s), identity_space_map(sq.space)));

  auto po = sigma_poset_space();
  auto sq2 = separation_quotient(po);
  CHECK(sq2.space->size() == po->size());
  CHECK(arrow_check(ArrowKind::Isometry, sq2.r).ok);
  CHECK(arrow_check(ArrowKind::Isometry, sq2.s).ok);
  CHECK(check_equivalence_pair(sq2.r, sq2.s));

  // Two 2-element classes: d0 does not depend on the representative choice.
  auto sig = make_sigma();
  std::vector<std::vector<Value>> d(4, std::vector<Value>(4, sig->bottom()));
  for (std::size_t i = 0; i < 4; ++i) d[i][i] = sig->top();
  auto link = [&](std::size_t i, std::size_t j) {
    d[i][j] = d[j][i] = sig->top();
  };
  link(0, 1);
  link(2, 3);
  for (std::size_t i : {0u, 1u})
    for (std::size_t j : {2u, 3u}) d[i][j] = sig->top(); // one-way across
  auto x4 = make_space(sig, {"a", "b", "c", "e"}, d);
  auto first = separation_quotient(x4, false);
  auto last = separation_quotient(x4, true);
  CHECK(first.space->size() == 2);
  CHECK(last.space->size() == 2);
  CHECK(first.space->d == last.space->d);
  CHECK(is_separated(*first.space).ok);
  CHECK(check_equivalence_pair(first.r, first.s));
  CHECK(check_equivalence_pair(last.r, last.s));
}

TEST_CASE("equivalence pair negatives") {
  auto disc = discrete2_space();
  auto one = random_space(make_sigma(), 1, 51);
  SpaceMap f{disc, one, {0, 0}};
  SpaceMap g{one, disc, {0}};
  CHECK_FALSE(check_equivalence_pair(f, g));
}

TEST_CASE("space JSON round-trip") {
  auto x = abs3_space();
  auto j = x->to_json();
  auto back = Space::from_json(j);
  CHECK(back.points == x->points);
  CHECK(back.d == x->d);
  CHECK(back.to_json() == j);

  auto bad = j;
  bad["d"][0][2] = "garbage";
  CHECK_THROWS_AS(Space::from_json(bad), ParseError);
}

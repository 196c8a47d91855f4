// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qmv/corpus.hpp"
#include "qmv/hsmonad.hpp"
#include "qmv/laws.hpp"
#include "qmv/suite.hpp"
#include "qmv/topology.hpp"
#include "qmv/transformer.hpp"

#include "oracles.hpp"

using namespace qmv;

namespace {

std::string g_detail;

bool clean(const VerificationReport& r) {
  for (const auto& e : r.entries)
    if (e.status == Status::Fail) {
      g_detail = e.id + " [" + e.witness + "]";
      return false;
    }
  return true;
}

bool c1_quantale_laws() {
  for (const auto& [name, q] : corpus_finite_quantales()) {
    auto mode = CheckMode::exhaustive_mode();
    if (!clean(check_quantale_laws(*q, mode))) return false;
    if (!clean(check_way_below_properties(*q, mode))) return false;
  }
  for (const auto& [name, q] : corpus_analytic_quantales()) {
    auto mode = CheckMode::sampled(2024, 10000);
    if (!clean(check_quantale_laws(*q, mode))) return false;
    if (!clean(check_way_below_properties(*q, mode))) return false;
  }
  return true;
}

bool c2_way_below_oracle() {
  for (const auto& [name, q] : corpus_finite_quantales()) {
    if (q->elements().size() > 6) continue;
    for (const auto& x : q->elements())
      for (const auto& y : q->elements())
        if (q->way_below(x, y) != oracle::way_below(*q, x, y)) {
          g_detail = name + ": " + q->show(x) + " << " + q->show(y);
          return false;
        }
  }
  return true;
}

bool c3_interpolation() {
  for (const auto& [name, q] : corpus_finite_quantales())
    if (!clean(check_interpolation(*q, CheckMode::exhaustive_mode())))
      return false;
  for (const auto& [name, q] : corpus_analytic_quantales())
    if (!clean(check_interpolation(*q, CheckMode::sampled(2024, 1000))))
      return false;
  return true;
}

bool c4_br_suite() {
  for (const auto& [name, sp] : corpus_spaces(2024))
    if (!clean(check_br_properties(*sp, name))) return false;
  return true;
}

bool c5_spec_preorder() {
  for (const auto& [name, sp] : corpus_spaces(2024)) {
    if (sp->size() > 3 || !sp->q->finite()) continue;
    auto robust = enumerate_robust_topology(*sp);
    const Subset all = full_subset(*sp);
    for (Subset a = 0; a <= all; ++a)
      for (Subset b = 0; b <= all; ++b) {
        bool every_open = true;
        for (auto fam : robust)
          if ((fam & (std::uint32_t{1} << a)) &&
              !(fam & (std::uint32_t{1} << b))) {
            every_open = false;
            break;
          }
        if (robust_spec_leq(*sp, a, b) != every_open) {
          g_detail = name + ": " + subset_str(*sp, a) + " vs " +
                     subset_str(*sp, b);
          return false;
        }
      }
  }
  return true;
}

bool c6_topology_theorems() {
  for (const auto& [name, sp] : corpus_spaces(2024)) {
    if (sp->size() > 3 || !sp->q->finite()) continue;
    if (!clean(check_topology_theorems(*sp, name))) return false;
  }
  if (!find_strict_inclusion_instance().has_value()) {
    g_detail = "no strict inclusion instance found over sigma x sigma";
    return false;
  }
  return true;
}

bool c7_counterexample() { return clean(run_counterexample()); }

bool c8_monad_laws() {
  std::vector<SpacePtr> universe = {discrete2_space(), chaotic2_space()};
  auto ps = ps_monad(universe);
  if (!clean(check_monad_laws(ps, "ps"))) return false;
  auto t1 = separation_transform(ps, false);
  for (const auto& x : universe)
    if (!is_separated(*t1.transformed.m(x)).ok) {
      g_detail = "transformed object not separated";
      return false;
    }
  if (!clean(check_monad_laws(t1.transformed, "tps"))) return false;
  if (!clean(check_monad_map(t1.in_t, "in_t"))) return false;
  auto t2 = separation_transform(ps, true);
  for (const auto& x : universe) {
    if (t1.transformed.unit(x).map != t2.transformed.unit(x).map) {
      g_detail = "section-dependent unit";
      return false;
    }
    for (const auto& y : universe) {
      auto m1y = t1.transformed.m(y);
      auto m2y = t2.transformed.m(y);
      std::vector<std::size_t> m(x->size(), 0);
      while (true) {
        SpaceMap f1{x, m1y, m};
        if (arrow_check(ArrowKind::Short, f1).ok &&
            t1.transformed.extend(f1).map !=
                t2.transformed.extend(SpaceMap{x, m2y, m}).map) {
          g_detail = "section-dependent extension";
          return false;
        }
        std::size_t k = 0;
        while (k < m.size() && ++m[k] == m1y->size()) m[k++] = 0;
        if (k == m.size()) break;
      }
    }
  }
  return true;
}

bool c9_star_closure_canonicity() {
  for (const auto& [name, sp] : corpus_spaces(2024)) {
    if (!clean(check_star_preorder(*sp, name))) return false;
    if (!clean(check_canonical_representative(*sp, name))) return false;
  }
  return true;
}

bool c10_determinism() {
  SuiteConfig cfg;
  cfg.suite = "all";
  cfg.seed = 99;
  auto r1 = run_suite(cfg);
  auto r2 = run_suite(cfg);
  if (emit_report(r1, "json") != emit_report(r2, "json")) {
    g_detail = "reports differ between runs";
    return false;
  }
  if (!clean(r1)) return false;
  return true;
}

} // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* what;
    long budget_ms;
    std::function<bool()> run;
  };
  const std::vector<Criterion> cs = {
      {"C1", "quantale law suite (exhaustive + 10^4 sampled)", 10000,
       c1_quantale_laws},
      {"C2", "way-below rule matches the directed-set oracle", 10000,
       c2_way_below_oracle},
      {"C3", "interpolation lemmas produce verified witnesses", 10000,
       c3_interpolation},
      {"C4", "B_R property suite on every corpus space", 30000, c4_br_suite},
      {"C5", "robust specialization preorder characterization", 120000,
       c5_spec_preorder},
      {"C6", "topology theorems + strict inclusion instance", 120000,
       c6_topology_theorems},
      {"C7", "counterexample reproduction", 1000, c7_counterexample},
      {"C8", "monad laws, transformer, section independence", 60000,
       c8_monad_laws},
      {"C9", "*-closure canonicity on every corpus space", 120000,
       c9_star_closure_canonicity},
      {"C10", "byte-identical same-seed reports, clean full run", 300000,
       c10_determinism},
  };

  int failures = 0;
  for (const auto& c : cs) {
    g_detail.clear();
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      g_detail = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (ms > c.budget_ms) {
      ok = false;
      g_detail = "over time budget (" + std::to_string(ms) + " ms)";
    }
    std::printf("%s %s: %s (%ld ms)%s%s\n", c.id, c.what,
                ok ? "pass" : "FAIL", ms, g_detail.empty() ? "" : " -- ",
                g_detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

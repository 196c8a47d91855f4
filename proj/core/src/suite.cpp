#include "qmv/suite.hpp"

#include <fstream>
#include <sstream>

#include "qmv/corpus.hpp"
#include "qmv/hsmonad.hpp"
#include "qmv/laws.hpp"
#include "qmv/monoidal_map.hpp"
#include "qmv/topology.hpp"
#include "qmv/transformer.hpp"

namespace qmv {

namespace {

void merge_prefixed(VerificationReport& dst, const VerificationReport& src,
                    const std::string& prefix) {
  for (auto e : src.entries) {
    e.id = prefix + e.id;
    dst.entries.push_back(std::move(e));
  }
}

/// Guard and precondition violations become Reported entries; the suite
/// never aborts on a single oversized instance.
template <typename F>
void guarded(VerificationReport& r, const std::string& id, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.report(id + ".skipped", "check skipped", e.what());
  }
}

void suite_laws(VerificationReport& r, const SuiteConfig& cfg) {
  for (const auto& [name, q] : corpus_finite_quantales()) {
    auto mode = CheckMode::exhaustive_mode();
    r.merge(check_quantale_laws(*q, mode));
    r.merge(check_way_below_properties(*q, mode));
    r.merge(check_interpolation(*q, mode));
  }
  for (const auto& [name, q] : corpus_analytic_quantales()) {
    auto mode = CheckMode::sampled(cfg.seed, static_cast<int>(cfg.samples));
    r.merge(check_quantale_laws(*q, mode));
    r.merge(check_way_below_properties(*q, mode));
    r.merge(check_interpolation(*q, mode));
  }
  auto mode = CheckMode::sampled(cfg.seed, static_cast<int>(cfg.samples));
  auto rel = make_relations({"0", "1"});
  for (const auto& h :
       {map_top(make_sigma()), map_bang(rel), map_mod_unit_incl(rel),
        map_mod_unit_meet(rel), map_sigma_to_mod_unit(rel),
        map_mod_unit_to_sigma(rel), map_nplus_to_rplus(),
        map_rplus_to_nplus(), map_rmeet_to_rplus()})
    r.merge(check_monoidal_map(h, mode));
  r.merge(check_adjoint_pair(map_nplus_to_rplus(), map_rplus_to_nplus(), mode));
  r.merge(
      check_adjoint_pair(map_mod_unit_incl(rel), map_mod_unit_meet(rel), mode));
}

void suite_metq(VerificationReport& r, const SuiteConfig& cfg) {
  for (const auto& [name, sp] : corpus_spaces(cfg.seed)) {
    const std::string p = "metq." + name + ".";
    merge_prefixed(r, check_qmetric(*sp), "metq." + name + ".");
    auto sep = is_separated(*sp);
    r.report(p + "separated", "antisymmetry of the d-preorder",
             sep.ok ? "separated" : "not separated at " + sep.witness);
    auto quo = separation_quotient(sp);
    r.add(p + "quotient.separated", "the separation quotient is separated",
          is_separated(*quo.space).ok);
    r.add(p + "quotient.r_short", "the quotient map is short",
          arrow_check(ArrowKind::Short, quo.r).ok);
    r.add(p + "quotient.section", "r . s is the identity",
          compose(quo.r, quo.s).map == identity_space_map(quo.space).map);
  }
}

void suite_topology(VerificationReport& r, const SuiteConfig& cfg) {
  for (const auto& [name, sp] : corpus_spaces(cfg.seed)) {
    guarded(r, "ball." + name, [&, name = name, sp = sp] {
      r.merge(check_open_ball_properties(*sp, name));
    });
    guarded(r, "br." + name, [&, name = name, sp = sp] {
      r.merge(check_br_properties(*sp, name));
    });
    if (sp->size() <= 3 && sp->q->finite()) {
      std::string w;
      auto robust = enumerate_robust_topology(*sp);
      const Subset all = full_subset(*sp);
      for (Subset a = 0; a <= all && w.empty(); ++a)
        for (Subset b = 0; b <= all; ++b) {
          bool every_open = true;
          for (auto fam : robust)
            if ((fam & (std::uint32_t{1} << a)) &&
                !(fam & (std::uint32_t{1} << b))) {
              every_open = false;
              break;
            }
          if (robust_spec_leq(*sp, a, b) != every_open) {
            w = subset_str(*sp, a) + " vs " + subset_str(*sp, b);
            break;
          }
        }
      r.add("spec." + name,
            "A <= B in the robust specialization preorder iff B lies in the "
            "dual closure of A",
            w.empty(), w);
    }
  }
}

void suite_hsmonad(VerificationReport& r, const SuiteConfig& cfg) {
  for (const auto& [name, sp] : corpus_spaces(cfg.seed)) {
    guarded(r, "starpre." + name, [&, name = name, sp = sp] {
      r.merge(check_star_preorder(*sp, name));
    });
    guarded(r, "bs." + name, [&, name = name, sp = sp] {
      r.merge(check_bs_properties(*sp, name));
    });
    if (sp->size() <= 3 && sp->q->finite())
      guarded(r, "hstop." + name, [&, name = name, sp = sp] {
        r.merge(check_topology_theorems(*sp, name));
      });
  }
  auto strict = find_strict_inclusion_instance();
  r.add("hstop.strict_inclusion",
        "a sigma x sigma instance where the *-robust topology is strictly "
        "coarser than the robust one",
        strict.has_value());
  r.merge(run_counterexample());
}

void suite_transformer(VerificationReport& r, const SuiteConfig& cfg) {
  (void)cfg;
  std::vector<SpacePtr> universe = {discrete2_space(), chaotic2_space()};
  r.merge(check_monad_laws(identity_monad(universe), "identity"));
  auto ps = ps_monad(universe);
  r.merge(check_monad_laws(ps, "ps"));
  auto t1 = separation_transform(ps, false);
  r.merge(check_monad_laws(t1.transformed, "ps_separated"));
  r.merge(check_monad_map(t1.in_t, "in_t"));
  {
    std::string w;
    for (const auto& x : universe)
      if (!is_separated(*t1.transformed.m(x)).ok) w = "at a transformed space";
    r.add("monad.ps_separated.separated",
          "every transformed object is separated", w.empty(), w);
  }
  {
    auto t2 = separation_transform(ps, true);
    std::string w;
    for (const auto& x : universe) {
      if (t1.transformed.unit(x).map != t2.transformed.unit(x).map)
        w = "units differ";
      for (const auto& y : universe) {
        auto m1y = t1.transformed.m(y);
        auto m2y = t2.transformed.m(y);
        std::vector<std::size_t> m(x->size(), 0);
        while (w.empty()) {
          SpaceMap f1{x, m1y, m};
          if (arrow_check(ArrowKind::Short, f1).ok &&
              t1.transformed.extend(f1).map !=
                  t2.transformed.extend(SpaceMap{x, m2y, m}).map)
            w = "extensions differ";
          std::size_t k = 0;
          while (k < m.size() && ++m[k] == m1y->size()) m[k++] = 0;
          if (k == m.size()) break;
        }
      }
    }
    r.add("monad.ps_separated.section_independence",
          "the transform does not depend on the chosen sections", w.empty(),
          w);
  }
  for (const auto& [name, sp] : corpus_spaces(cfg.seed))
    guarded(r, "canon." + name, [&, name = name, sp = sp] {
      r.merge(check_canonical_representative(*sp, name));
    });
}

} // namespace

VerificationReport run_suite(const SuiteConfig& cfg) {
  VerificationReport r;
  const bool all = cfg.suite == "all";
  if (!(all || cfg.suite == "laws" || cfg.suite == "metq" ||
        cfg.suite == "topology" || cfg.suite == "hsmonad" ||
        cfg.suite == "transformer"))
    throw PreconditionError("unknown suite '" + cfg.suite + "'");
  if (all || cfg.suite == "laws") suite_laws(r, cfg);
  if (all || cfg.suite == "metq") suite_metq(r, cfg);
  if (all || cfg.suite == "topology") suite_topology(r, cfg);
  if (all || cfg.suite == "hsmonad") suite_hsmonad(r, cfg);
  if (all || cfg.suite == "transformer") suite_transformer(r, cfg);
  r.sort_by_id();
  return r;
}

LoadedSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path +
                     "': " + e.what());
  }
  LoadedSpec out;
  if (j.is_object() && j.contains("points"))
    out.space = std::make_shared<const Space>(Space::from_json(j));
  else if (j.is_object() && j.contains("kind"))
    out.quantale = build_quantale(j);
  else
    throw ParseError("'" + path +
                     "' is neither a quantale descriptor nor a space");
  return out;
}

std::string emit_report(const VerificationReport& r, const std::string& format,
                        bool include_timings) {
  if (format == "json") return r.to_json(include_timings).dump(2) + "\n";
  if (format == "text") return r.to_text();
  throw PreconditionError("unknown format '" + format + "'");
}

} // namespace qmv

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmv/corpus.hpp"
#include "qmv/hsmonad.hpp"
#include "qmv/laws.hpp"
#include "qmv/suite.hpp"
#include "qmv/topology.hpp"
#include "qmv/transformer.hpp"

using namespace qmv;

namespace {

struct Output {
  std::string format = "json";
  std::string report_path;
};

int finish(const VerificationReport& r, const Output& out) {
  auto bytes = emit_report(r, out.format);
  std::cout << bytes;
  if (!out.report_path.empty()) {
    std::ofstream f(out.report_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write '" << out.report_path << "'\n";
      return 2;
    }
    f << bytes;
  }
  return r.ok() ? 0 : 1;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

SpacePtr load_space(const std::string& path) {
  auto spec = load_spec(path);
  if (!spec.space) throw ParseError("'" + path + "' does not hold a space");
  return spec.space;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for quantale-valued metric spaces"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand name

  Output out;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t max_carrier = 4;
  app.add_option("--format", out.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--report", out.report_path, "also write the report here");
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_option("--samples", samples, "sample count for analytic carriers");
  app.add_option("--max-carrier", max_carrier,
                 "carrier cap for family-level topology checks");

  std::string quantale_path, space_path, suite_name = "all";
  auto* laws = app.add_subcommand("laws", "check the laws of one quantale");
  laws->add_option("--quantale", quantale_path, "quantale descriptor file")
      ->required();

  auto* verify = app.add_subcommand(
      "verify", "run verification suites over the corpus or one space");
  verify->add_option("--suite", suite_name,
                     "laws|metq|topology|hsmonad|transformer|all");
  verify->add_option("--space", space_path,
                     "verify this space file instead of the corpus");

  auto* explore =
      app.add_subcommand("explore", "evaluate individual constructions");
  std::string op, point, set1, set2, delta_text;
  bool dual = false;
  explore->add_option("op", op, "ball|closure|br|flatten|dS|starclosure|bS")
      ->required()
      ->check(CLI::IsMember(
          {"ball", "closure", "br", "flatten", "dS", "starclosure", "bS"}));
  explore->add_option("--space", space_path, "space file")->required();
  explore->add_option("--point", point, "center point (ball)");
  explore->add_option("--set", set1, "comma-separated point names");
  explore->add_option("--set2", set2, "second subset (dS)");
  explore->add_option("--delta", delta_text, "radius as an element JSON");
  explore->add_flag("--dual", dual, "swap the metric's arguments");

  app.add_subcommand("counterexample",
                     "reproduce the non-linear counterexample");

  CLI11_PARSE(app, argc, argv);

  try {
    if (laws->parsed()) {
      auto spec = load_spec(quantale_path);
      if (!spec.quantale)
        throw ParseError("'" + quantale_path + "' does not hold a quantale");
      const auto mode = spec.quantale->finite()
                            ? CheckMode::exhaustive_mode()
                            : CheckMode::sampled(seed, static_cast<int>(samples));
      VerificationReport r = check_quantale_laws(*spec.quantale, mode);
      r.merge(check_way_below_properties(*spec.quantale, mode));
      r.merge(check_interpolation(*spec.quantale, mode));
      r.sort_by_id();
      return finish(r, out);
    }

    if (verify->parsed()) {
      if (!space_path.empty()) {
        auto sp = load_space(space_path);
        VerificationReport r;
        for (auto e : check_qmetric(*sp).entries) {
          e.id = "metq.file." + e.id;
          r.entries.push_back(std::move(e));
        }
        if (r.ok()) {
          r.merge(check_open_ball_properties(*sp, "file"));
          if (sp->size() <= max_carrier) {
            r.merge(check_br_properties(*sp, "file"));
            r.merge(check_star_preorder(*sp, "file"));
            r.merge(check_bs_properties(*sp, "file"));
            r.merge(check_canonical_representative(*sp, "file"));
          }
        }
        r.sort_by_id();
        return finish(r, out);
      }
      SuiteConfig cfg;
      cfg.suite = suite_name;
      cfg.seed = seed;
      cfg.samples = samples;
      cfg.max_carrier = max_carrier;
      return finish(run_suite(cfg), out);
    }

    if (explore->parsed()) {
      auto sp = load_space(space_path);
      auto names = split_names(set1);
      Subset a = subset_of(*sp, names);
      auto parse_delta = [&] {
        if (delta_text.empty()) throw PreconditionError("--delta is required");
        return sp->q->parse_elem(nlohmann::json::parse(delta_text));
      };
      Subset result = 0;
      if (op == "ball") {
        if (point.empty()) throw PreconditionError("--point is required");
        result = ball(*sp, sp->index_of(point), parse_delta(), dual);
      } else if (op == "closure") {
        result = closure(*sp, a, dual);
      } else if (op == "br") {
        result = b_r(*sp, a, parse_delta());
      } else if (op == "flatten") {
        result = flatten(*sp, a, parse_delta());
      } else if (op == "starclosure") {
        result = star_closure(*sp, a);
      } else if (op == "bS") {
        result = b_s(*sp, a, parse_delta());
      } else { // dS
        Subset b = subset_of(*sp, split_names(set2));
        Value v = d_s(*sp, a, b);
        if (out.format == "text")
          std::cout << sp->q->show(v) << "\n";
        else
          std::cout << sp->q->elem_json(v).dump() << "\n";
        return 0;
      }
      if (out.format == "text") {
        std::cout << subset_str(*sp, result) << "\n";
      } else {
        nlohmann::json j = nlohmann::json::array();
        for (std::size_t i = 0; i < sp->size(); ++i)
          if (result & (Subset{1} << i)) j.push_back(sp->points[i]);
        std::cout << j.dump() << "\n";
      }
      return 0;
    }

    // counterexample
    return finish(run_counterexample(), out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

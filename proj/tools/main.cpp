// Command-line front end: identity suites, partition-function evaluation and
// the multispecies TASEP solvers.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tetralat/error.hpp"
#include "tetralat/harness.hpp"
#include "tetralat/pfunc.hpp"
#include "tetralat/schubert.hpp"
#include "tetralat/symfun.hpp"
#include "tetralat/tasep.hpp"

using namespace tetralat;
using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

int run_verify(const std::string& suite, std::uint64_t seed, int cap, bool mutate,
               const std::string& json_path, bool quiet) {
  harness::CheckContext ctx;
  ctx.seed = seed;
  ctx.cap = cap;
  ctx.mutate = mutate;
  harness::SuiteResult result = harness::run_suite(suite, ctx);
  if (result.results.empty()) {
    std::cerr << "no checks match suite tag '" << suite << "'\n";
    return 2;
  }
  for (const auto& r : result.results) {
    if (quiet && r.pass) continue;
    std::cout << (r.pass ? (r.evidence_only ? "EVIDENCE " : "PASS     ") : "FAIL     ") << r.name
              << "  [" << r.mode << ", " << r.params << "]"
              << "  (" << static_cast<long>(r.millis) << " ms)\n";
    if (!r.pass || r.evidence_only) std::cout << "         " << r.detail << "\n";
  }
  std::cout << result.passed << " passed, " << result.failed << " failed\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << harness::suite_to_json(result, ctx) << "\n";
  }
  return result.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice partition functions, symmetric functions and TASEP steady states"};
  app.require_subcommand(1);

  // verify ------------------------------------------------------------
  std::string suite = "all", json_path;
  std::uint64_t seed = 1;
  int cap = 3;
  bool mutate = false, quiet = false;
  auto* verify = app.add_subcommand("verify", "run identity suites from the registry");
  verify->add_option("--suite", suite, "tag: all, q0, generic, schur, schubert, tasep, wtrace, qloop, zf, identities, conjectures");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--cap", cap, "series cap D for weighted traces");
  verify->add_flag("--mutate", mutate, "flip the -q k vertex (sensitivity check; suites must fail)");
  verify->add_flag("--quiet", quiet, "print failures only");
  verify->add_option("--json", json_path, "write the deterministic JSON report here");

  // compute -----------------------------------------------------------
  auto* compute = app.add_subcommand("compute", "evaluate one quantity");
  std::string word_text, model_name_s = "q0", shape_s, content_s, perm_s;
  int vars_n = 0, mstart = 0, mmax = 8, wcap = 4;
  bool modified = false;
  auto* vev = compute->add_subcommand("vev", "vacuum expectation of an operator word");
  vev->add_option("--word", word_text, "e.g. \"X(n=3,i=2,z=z1) X(n=3,i=1,z=z2)\"")->required();
  vev->add_option("--model", model_name_s, "q0 or generic");
  auto* trace = compute->add_subcommand("trace", "stabilized q0 trace of a word");
  trace->add_option("--word", word_text)->required();
  trace->add_option("--mstart", mstart);
  trace->add_option("--mmax", mmax);
  auto* wtrace = compute->add_subcommand("wtrace", "weighted trace (generic model)");
  wtrace->add_option("--word", word_text)->required();
  wtrace->add_option("--kind", model_name_s, "A or B")->required();
  wtrace->add_option("--cap", wcap, "per-variable series cap");
  auto* schur = compute->add_subcommand("schur", "Schur polynomial via the bialternant");
  schur->add_option("--shape", shape_s, "partition, e.g. 2,1")->required();
  schur->add_option("--vars", vars_n, "number of variables")->required();
  auto* kostka_cmd = compute->add_subcommand("kostka", "Kostka number by tableau count");
  kostka_cmd->add_option("--shape", shape_s)->required();
  kostka_cmd->add_option("--content", content_s)->required();
  auto* schubert_cmd = compute->add_subcommand("schubert", "(modified) Schubert polynomial");
  schubert_cmd->add_option("--perm", perm_s, "one-line notation, e.g. 2,3,1")->required();
  schubert_cmd->add_flag("--modified", modified);

  // tasep ---------------------------------------------------------------
  auto* tasep_cmd = app.add_subcommand("tasep", "multispecies TASEP stationary state");
  int species = 0, sites = 0;
  std::string sector_s, config_s, method = "kernel", csv_path;
  tasep_cmd->add_option("--species", species, "largest species label n")->required();
  tasep_cmd->add_option("--sites", sites, "chain length L")->required();
  tasep_cmd->add_option("--sector", sector_s, "multiplicities m_0,...,m_n")->required();
  tasep_cmd->add_option("--config", config_s, "single configuration, e.g. 3,0,0,2,1");
  tasep_cmd->add_option("--method", method, "kernel, trace or closed");
  tasep_cmd->add_option("--csv", csv_path, "write the full sector vector as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("verify")) return run_verify(suite, seed, cap, mutate, json_path, quiet);

    VarId q = var("q");
    if (app.got_subcommand("compute")) {
      json out;
      if (compute->got_subcommand("vev")) {
        Model model = model_name_s == "generic" ? Model::generic : Model::q0;
        OperatorWord word = OperatorWord::parse(word_text, model);
        LaurentPoly v = vacuum_expectation(word, q);
        out = {{"word", word.to_string()},
               {"model", model_name(model)},
               {"value", v.to_string()},
               {"cutoff", static_cast<int>(word.factors.size()) + 1}};
      } else if (compute->got_subcommand("trace")) {
        OperatorWord word = OperatorWord::parse(word_text, Model::q0);
        TraceResult r = plain_trace(word, mstart, mmax, q);
        out = {{"word", word.to_string()},
               {"model", "q0"},
               {"value", r.value.to_string()},
               {"stabilized_at", r.stabilized_at}};
      } else if (compute->got_subcommand("wtrace")) {
        OperatorWord word = OperatorWord::parse(word_text, Model::generic);
        TraceWeights weights;
        weights.kind = model_name_s == "B" ? TraceKind::B : TraceKind::A;
        DegreeCaps caps;
        int sc = word.site_count();
        FockLayout lay(word.n);
        for (int p = 0; p < sc; ++p) {
          const SiteIndex& s = lay.sites()[static_cast<std::size_t>(p)];
          weights.t.push_back(var_grid("t", s.k, s.l));
          weights.Q.push_back(var_grid("Q", s.k, s.l));
          caps[weights.t.back()] = wcap;
          caps[weights.Q.back()] = wcap;
        }
        FormalSeries r = weighted_trace(word, weights, caps, q);
        out = {{"word", word.to_string()},
               {"model", "generic"},
               {"kind", model_name_s},
               {"cap", wcap},
               {"value", r.to_string()}};
      } else if (compute->got_subcommand("schur")) {
        Partition lam(parse_int_list(shape_s));
        std::vector<VarId> vs;
        for (int i = 1; i <= vars_n; ++i) vs.push_back(var_indexed("z", i));
        out = {{"shape", shape_s}, {"vars", vars_n},
               {"value", schur_bialternant(lam, vs).to_string()}};
      } else if (compute->got_subcommand("kostka")) {
        Partition lam(parse_int_list(shape_s));
        out = {{"shape", shape_s}, {"content", content_s},
               {"value", kostka(lam, parse_int_list(content_s))}};
      } else if (compute->got_subcommand("schubert")) {
        Permutation w(parse_int_list(perm_s));
        out = {{"perm", perm_s}, {"modified", modified},
               {"value", schubert_poly(w, modified).to_string()}};
      } else {
        std::cerr << "compute needs a subcommand\n";
        return 2;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (app.got_subcommand("tasep")) {
      TasepSector sec;
      sec.species = species;
      sec.counts = parse_int_list(sector_s);
      if (static_cast<int>(sec.counts.size()) != species + 1 || sec.sites() != sites) {
        std::cerr << "sector must list m_0..m_n and sum to --sites\n";
        return 2;
      }
      json out;
      if (!csv_path.empty() || config_s.empty()) {
        auto ss = steady_state_kernel(sec);
        if (!csv_path.empty()) {
          std::ofstream csv(csv_path);
          csv << "config,value\n";
          for (const auto& [cfg, v] : ss) csv << config_to_string(cfg) << "," << v.to_string() << "\n";
        }
        if (config_s.empty()) {
          json vec = json::array();
          for (const auto& [cfg, v] : ss)
            vec.push_back({{"config", config_to_string(cfg)}, {"value", v.to_string()}});
          out = {{"method", "kernel"}, {"sector", sector_s}, {"vector", vec}};
          std::cout << out.dump(2) << "\n";
          return 0;
        }
      }
      TasepConfig cfg;
      for (int v : parse_int_list(config_s)) cfg.push_back(v);
      Rational value(0);
      if (method == "kernel") {
        value = steady_state_kernel(sec).at(cfg);
      } else if (method == "trace") {
        value = steady_state_trace(sec, cfg);
      } else if (method == "closed") {
        bool found = false;
        for (int k = 0; k <= species && !found; ++k) {
          for (int j = 0; j <= k + 1 && !found; ++j) {
            if (closed_form_config(species, j, k, sec.counts) == cfg) {
              value = steady_closed_form(species, j, k, sec.counts);
              found = true;
            }
          }
        }
        if (!found) {
          std::cerr << "configuration does not have the closed-form block shape; "
                       "use --method kernel or trace\n";
          return 2;
        }
      } else {
        std::cerr << "unknown method '" << method << "'\n";
        return 2;
      }
      out = {{"config", config_to_string(cfg)}, {"value", value.to_string()}, {"method", method}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

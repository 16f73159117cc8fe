// Command-line front end: analyze truth tables, run PSO search campaigns and
// meta-optimize the velocity parameters.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "boolpso/campaign.hpp"

using namespace boolpso;

namespace {

struct RawOptions {
  std::string mode = "search";
  std::string n = "7";
  std::string fitness = "fit1";
  std::string params;
  std::string seeds;
  std::string meta = "cga";
  std::string format = "json";
  std::string out;
  std::string input;
};

template <typename T, typename Parser>
T require(Parser parse, const std::string& text, const char* flag) {
  auto v = parse(text);
  if (!v) throw ConfigError(std::string("unknown value '") + text + "' for " + flag);
  return *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search and analysis of balanced Boolean functions with a discrete PSO"};
  app.set_config("--config", "", "Read options from a TOML/INI file; flags override it");

  RawOptions raw;
  CampaignConfig cfg;
  int runs = -1;
  int particles = -1;
  int iterations = -1;

  app.add_option("--mode", raw.mode, "analyze | search | meta")->capture_default_str();
  app.add_option("--n", raw.n, "Variable counts: 7, 7-12 or 7,9")->capture_default_str();
  app.add_option("--fitness", raw.fitness, "fit1 | fit2 | fit3")->capture_default_str();
  app.add_option("--runs", runs, "PSO runs per n (search) or per meta-fitness (meta)");
  app.add_option("--seed", cfg.seed, "Master seed; run i uses seed + i")->capture_default_str();
  app.add_option("--seeds", raw.seeds, "Explicit comma-separated per-run seeds");
  app.add_option("--particles", particles, "Swarm size");
  app.add_option("--iterations", iterations, "PSO iterations");
  app.add_option("--hc-budget", cfg.hc_budget, "Accepted hill-climbing swaps per call")
      ->capture_default_str();
  app.add_option("--params", raw.params, "Velocity constants w,phi,psi,vmax");
  app.add_flag("--shared-r", cfg.shared_r, "One uniform draw for both attraction terms");
  app.add_option("--meta", raw.meta, "Meta-optimizer: lus | cga")->capture_default_str();
  app.add_option("--meta-runs", cfg.meta_runs, "Independent meta-optimization runs")
      ->capture_default_str();
  app.add_option("--lus-beta", cfg.lus.beta, "LUS range shrink factor")->capture_default_str();
  app.add_option("--lus-tau", cfg.lus.tau, "LUS stop once the range falls below this")
      ->capture_default_str();
  app.add_option("--lus-range", cfg.lus.initial_range, "LUS initial sampling half-width")
      ->capture_default_str();
  app.add_option("--cga-population", cfg.cga.population, "CGA population size (even)")
      ->capture_default_str();
  app.add_option("--cga-generations", cfg.cga.generations, "CGA generations")
      ->capture_default_str();
  app.add_option("--cga-pc", cfg.cga.crossover_prob, "CGA crossover probability")
      ->capture_default_str();
  app.add_option("--cga-pm", cfg.cga.mutation_prob, "CGA per-gene mutation probability")
      ->capture_default_str();
  app.add_option("--k-max", cfg.k_max, "Highest cidev order reported by analyze")
      ->capture_default_str();
  app.add_option("--l-max", cfg.l_max, "Highest pcdev order reported by analyze")
      ->capture_default_str();
  app.add_option("--input", raw.input, "Truth-table file for analyze (default: stdin)");
  app.add_option("--out", raw.out, "Report file (default: stdout)");
  app.add_option("--format", raw.format, "json | tsv")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Parallel runs; results do not depend on it")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    cfg.mode = require<Mode>(parse_mode, raw.mode, "--mode");
    cfg.kind = require<FitnessKind>(parse_fitness_kind, raw.fitness, "--fitness");
    cfg.format = require<OutputFormat>(parse_format, raw.format, "--format");
    cfg.meta = require<MetaMethod>(parse_meta_method, raw.meta, "--meta");
    cfg.n_values = parse_n_range(raw.n);
    if (!raw.params.empty()) cfg.params = parse_param_list(raw.params);
    if (!raw.seeds.empty()) cfg.seeds = parse_seed_list(raw.seeds);
    if (runs >= 0) cfg.runs = runs;
    if (particles >= 0) cfg.particles = particles;
    if (iterations >= 0) cfg.iterations = iterations;

    std::unique_ptr<std::ofstream> file;
    std::unique_ptr<std::ofstream> timing_file;
    std::ostream* out = &std::cout;
    std::ostream* timing = &std::cerr;
    if (!raw.out.empty()) {
      file = std::make_unique<std::ofstream>(raw.out);
      if (!*file) throw ConfigError("cannot open output file " + raw.out);
      out = file.get();
      timing_file = std::make_unique<std::ofstream>(raw.out + ".timing.tsv");
      timing = timing_file.get();
    }

    switch (cfg.mode) {
      case Mode::kAnalyze: {
        if (cfg.k_max < 0 || cfg.l_max < 0) throw ConfigError("report orders must be non-negative");
        if (raw.input.empty()) {
          cmd_analyze(std::cin, *out, cfg.k_max, cfg.l_max, cfg.format);
        } else {
          std::ifstream in(raw.input);
          if (!in) throw InputError("cannot open input file " + raw.input);
          cmd_analyze(in, *out, cfg.k_max, cfg.l_max, cfg.format);
        }
        break;
      }
      case Mode::kSearch:
        cmd_search(cfg, *out, timing);
        break;
      case Mode::kMeta:
        cmd_meta(cfg, *out, timing);
        break;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

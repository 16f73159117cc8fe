#include "boolpso/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace boolpso {

namespace {

using Record = nlohmann::ordered_json;

// Writes records either as JSON lines or as a tab-separated table whose
// header is taken from the first record's keys.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  void write(const Record& r) {
    if (format_ == OutputFormat::kJson) {
      out_ << r.dump() << '\n';
    } else {
      if (!header_written_) {
        bool first = true;
        for (const auto& item : r.items()) {
          out_ << (first ? "" : "\t") << item.key();
          first = false;
        }
        out_ << '\n';
        header_written_ = true;
      }
      bool first = true;
      for (const auto& item : r.items()) {
        out_ << (first ? "" : "\t") << cell(item.value());
        first = false;
      }
      out_ << '\n';
    }
    out_.flush();
  }

 private:
  static std::string cell(const Record& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  std::ostream& out_;
  OutputFormat format_;
  bool header_written_ = false;
};

Record optional_int(const std::optional<int>& v) { return v ? Record(*v) : Record(nullptr); }

// Property columns in table-row order: Nl, deg, cidev, pcdev, AC_max.
void add_properties(Record& r, const PropertyReport& p, int k_max, int l_max) {
  r["nl"] = p.nonlinearity;
  r["deg"] = p.degree;
  for (int k = 1; k <= k_max; ++k) {
    const auto it = p.cidev.find(k);
    r["cidev_" + std::to_string(k)] = it == p.cidev.end() ? Record(nullptr) : Record(it->second);
  }
  for (int l = 1; l <= l_max; ++l) {
    const auto it = p.pcdev.find(l);
    r["pcdev_" + std::to_string(l)] = it == p.pcdev.end() ? Record(nullptr) : Record(it->second);
  }
  r["ac_max"] = p.absolute_indicator;
  r["resiliency"] = optional_int(p.resiliency_order);
  r["pc_order"] = optional_int(p.pc_order);
}

Record report_record(const PropertyReport& p, int k_max, int l_max) {
  Record r;
  r["n"] = p.n;
  r["balanced"] = p.balanced;
  add_properties(r, p, k_max, l_max);
  return r;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
  std::istringstream in{std::string(text)};
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) {
    throw ConfigError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

// Runs task(i) for i in [0, count) on `workers` threads and hands each result
// to sink(i, result) in index order as soon as it and its predecessors finish.
template <typename Result, typename Task, typename Sink>
void run_ordered(int count, int workers, Task task, Sink sink) {
  workers = std::clamp(workers, 1, std::max(count, 1));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) sink(i, task(i));
    return;
  }
  std::vector<std::optional<Result>> slots(count);
  std::mutex mu;
  std::condition_variable ready;
  int next = 0;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        int i;
        {
          std::lock_guard lock(mu);
          if (next >= count) return;
          i = next++;
        }
        Result r = task(i);
        {
          std::lock_guard lock(mu);
          slots[i] = std::move(r);
        }
        ready.notify_all();
      }
    });
  }
  for (int i = 0; i < count; ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return slots[i].has_value(); });
    Result r = std::move(*slots[i]);
    lock.unlock();
    sink(i, std::move(r));
  }
  for (auto& t : pool) t.join();
}

PsoParams search_params(const CampaignConfig& cfg) {
  PsoParams p = default_params(cfg.kind);
  if (cfg.params) {
    p.w = (*cfg.params)[0];
    p.phi = (*cfg.params)[1];
    p.psi = (*cfg.params)[2];
    p.v_max = (*cfg.params)[3];
  }
  p.swarm_size = resolved_particles(cfg);
  p.iterations = resolved_iterations(cfg);
  p.shared_r = cfg.shared_r;
  return p;
}

}  // namespace

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "analyze") return Mode::kAnalyze;
  if (text == "search") return Mode::kSearch;
  if (text == "meta") return Mode::kMeta;
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "tsv") return OutputFormat::kTsv;
  return std::nullopt;
}

std::optional<MetaMethod> parse_meta_method(std::string_view text) {
  if (text == "lus") return MetaMethod::kLus;
  if (text == "cga") return MetaMethod::kCga;
  return std::nullopt;
}

std::vector<int> parse_n_range(std::string_view text) {
  std::vector<int> out;
  for (auto part : split(text, ',')) {
    const auto dash = part.find('-');
    if (dash == std::string_view::npos) {
      out.push_back(parse_number<int>(part, "variable count"));
      continue;
    }
    const int lo = parse_number<int>(trim(part.substr(0, dash)), "variable count");
    const int hi = parse_number<int>(trim(part.substr(dash + 1)), "variable count");
    if (lo > hi) throw ConfigError("empty variable range '" + std::string(part) + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  }
  return out;
}

std::array<double, 4> parse_param_list(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw ConfigError("--params needs four values w,phi,psi,vmax");
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = parse_number<double>(parts[i], "parameter");
  return out;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_number<std::uint64_t>(part, "seed"));
  return out;
}

int resolved_runs(const CampaignConfig& cfg) {
  return cfg.runs.value_or(cfg.mode == Mode::kMeta ? 30 : 100);
}

int resolved_particles(const CampaignConfig& cfg) {
  return cfg.particles.value_or(cfg.mode == Mode::kMeta ? 50 : 200);
}

int resolved_iterations(const CampaignConfig& cfg) {
  return cfg.iterations.value_or(cfg.mode == Mode::kMeta ? 100 : 400);
}

std::uint64_t run_seed(const CampaignConfig& cfg, int index) {
  if (!cfg.seeds.empty()) return cfg.seeds.at(index);
  return cfg.seed + static_cast<std::uint64_t>(index);
}

void validate(const CampaignConfig& cfg) {
  if (cfg.n_values.empty()) throw ConfigError("no variable count given");
  for (int n : cfg.n_values) {
    if (n < 2 || n > kMaxVariables) {
      throw ConfigError("n = " + std::to_string(n) + " outside the supported range [2, 16]");
    }
  }
  if (resolved_runs(cfg) < 1) throw ConfigError("runs must be at least 1");
  if (resolved_particles(cfg) < 1) throw ConfigError("particles must be at least 1");
  if (resolved_iterations(cfg) < 0) throw ConfigError("iterations must be non-negative");
  if (cfg.hc_budget < 0) throw ConfigError("hc-budget must be non-negative");
  if (cfg.workers < 1) throw ConfigError("workers must be at least 1");
  if (cfg.params) {
    for (double v : *cfg.params) {
      if (!(v >= 0)) throw ConfigError("velocity parameters must be non-negative numbers");
    }
  }
  const int seeded_runs = cfg.mode == Mode::kMeta ? cfg.meta_runs : resolved_runs(cfg);
  if (!cfg.seeds.empty() && static_cast<int>(cfg.seeds.size()) != seeded_runs) {
    throw ConfigError("seed list has " + std::to_string(cfg.seeds.size()) + " entries for " +
                      std::to_string(seeded_runs) + " runs");
  }
  if (cfg.k_max < 0 || cfg.l_max < 0) throw ConfigError("report orders must be non-negative");
  if (cfg.mode == Mode::kMeta) {
    if (cfg.meta_runs < 1) throw ConfigError("meta-runs must be at least 1");
    if (!(cfg.lus.beta > 0 && cfg.lus.beta < 1)) throw ConfigError("lus-beta must lie in (0, 1)");
    if (!(cfg.lus.tau > 0)) throw ConfigError("lus-tau must be positive");
    if (!(cfg.lus.initial_range > 0)) throw ConfigError("lus-range must be positive");
    if (cfg.cga.population < 2 || cfg.cga.population % 2 != 0) {
      throw ConfigError("cga-population must be even and at least 2");
    }
    if (cfg.cga.generations < 0) throw ConfigError("cga-generations must be non-negative");
    const auto unit = [](double p) { return p >= 0 && p <= 1; };
    if (!unit(cfg.cga.crossover_prob) || !unit(cfg.cga.mutation_prob)) {
      throw ConfigError("cga probabilities must lie in [0, 1]");
    }
  }
}

void cmd_analyze(std::istream& in, std::ostream& out, int k_max, int l_max, OutputFormat format) {
  RecordWriter writer(out, format);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    BooleanFunction f;
    try {
      f = parse_truth_table(text);
    } catch (const BoolFunError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
    const auto report = property_report(f, std::min(k_max, f.n()), std::min(l_max, f.n()));
    Record r = report_record(report, k_max, l_max);
    r["table"] = f.to_hex();
    writer.write(r);
  }
}

void cmd_search(const CampaignConfig& cfg, std::ostream& out, std::ostream* timing) {
  validate(cfg);
  const PsoParams params = search_params(cfg);
  const int runs = resolved_runs(cfg);
  RecordWriter writer(out, cfg.format);

  struct Done {
    RunResult result;
    double wall_ms;
  };

  for (int n : cfg.n_values) {
    std::vector<double> finals;
    std::optional<RunResult> best;
    int best_index = 0;
    std::uint64_t total_evaluations = 0;

    auto task = [&](int i) {
      const auto start = std::chrono::steady_clock::now();
      RngStream rng(run_seed(cfg, i));
      Done d{pso_run(n, cfg.kind, params, cfg.hc_budget, rng), 0.0};
      d.wall_ms = elapsed_ms(start);
      return d;
    };
    auto sink = [&](int i, Done d) {
      const auto& res = d.result;
      const auto props = property_report(res.global_best, std::min(2, n), 1);
      Record r;
      r["record"] = "run";
      r["n"] = n;
      r["fitness"] = std::string(to_string(cfg.kind));
      r["run"] = i;
      r["seed"] = res.seed;
      r["best_fitness"] = res.global_best_fitness;
      r["mean_fitness"] = nullptr;
      add_properties(r, props, 2, 1);
      r["evaluations"] = res.evaluations;
      r["table"] = res.global_best.to_hex();
      writer.write(r);
      if (timing) {
        *timing << "search\t" << n << '\t' << to_string(cfg.kind) << '\t' << i << '\t' << res.seed
                << '\t' << d.wall_ms << '\t' << res.evaluations << '\n';
        timing->flush();
      }
      finals.push_back(res.global_best_fitness);
      total_evaluations += res.evaluations;
      if (!best || res.global_best_fitness > best->global_best_fitness) {
        best = res;
        best_index = i;
      }
    };
    run_ordered<Done>(runs, cfg.workers, task, sink);

    double mean = 0.0;
    for (double f : finals) mean += f;
    mean /= static_cast<double>(finals.size());
    const auto props = property_report(best->global_best, std::min(2, n), 1);
    Record s;
    s["record"] = "summary";
    s["n"] = n;
    s["fitness"] = std::string(to_string(cfg.kind));
    s["run"] = best_index;
    s["seed"] = best->seed;
    s["best_fitness"] = best->global_best_fitness;
    s["mean_fitness"] = mean;
    add_properties(s, props, 2, 1);
    s["evaluations"] = total_evaluations;
    s["table"] = best->global_best.to_hex();
    writer.write(s);
  }
}

void cmd_meta(const CampaignConfig& cfg, std::ostream& out, std::ostream* timing) {
  validate(cfg);
  RecordWriter writer(out, cfg.format);
  const std::string method = cfg.meta == MetaMethod::kLus ? "lus" : "cga";

  MetaFitnessSpec spec;
  spec.swarm_size = resolved_particles(cfg);
  spec.iterations = resolved_iterations(cfg);
  spec.runs = resolved_runs(cfg);
  spec.kind = cfg.kind;
  spec.hc_budget = cfg.hc_budget;
  spec.workers = cfg.workers;

  auto row = [&](const char* kind, int n, int run, std::uint64_t seed, const ParamVector& x,
                 const MetaFitness& fit, std::uint64_t evaluations) {
    Record r;
    r["record"] = kind;
    r["method"] = method;
    r["fitness"] = std::string(to_string(cfg.kind));
    r["n"] = n;
    r["run"] = run;
    r["seed"] = seed;
    r["mu_g"] = fit.mean;
    r["max_g"] = fit.max;
    r["mfit"] = fit.value;
    r["w"] = x.values[0];
    r["phi"] = x.values[1];
    r["psi"] = x.values[2];
    r["vmax"] = x.values[3];
    r["meta_evaluations"] = evaluations;
    return r;
  };

  for (int n : cfg.n_values) {
    spec.n = n;
    std::optional<Record> best_row;
    double best_mfit = 0.0;
    for (int m = 0; m < cfg.meta_runs; ++m) {
      const auto start = std::chrono::steady_clock::now();
      const std::uint64_t seed = run_seed(cfg, m);
      RngStream rng(seed);
      ParamVector x;
      MetaFitness fit;
      std::uint64_t evaluations = 0;
      if (cfg.meta == MetaMethod::kLus) {
        auto res = lus_optimize(cfg.lus, spec, rng);
        x = res.best;
        fit = res.best_fitness;
        evaluations = res.trace.size();
      } else {
        auto res = cga_optimize(cfg.cga, spec, rng);
        x = res.best;
        fit = res.best_fitness;
        evaluations = res.meta_evaluations;
      }
      const double ms = elapsed_ms(start);
      auto r = row("meta", n, m, seed, x, fit, evaluations);
      writer.write(r);
      if (timing) {
        *timing << "meta\t" << n << '\t' << method << '\t' << m << '\t' << seed << '\t' << ms << '\t'
                << evaluations << '\n';
        timing->flush();
      }
      if (!best_row || fit.value > best_mfit) {
        best_mfit = fit.value;
        r["record"] = "best";
        best_row = r;
      }
    }
    writer.write(*best_row);
  }
}

std::string run_result_json(const RunResult& result, FitnessKind kind) {
  Record r;
  r["n"] = result.global_best.n();
  r["fitness"] = std::string(to_string(kind));
  r["seed"] = result.seed;
  r["best_fitness"] = result.global_best_fitness;
  r["evaluations"] = result.evaluations;
  r["table"] = result.global_best.to_hex();
  r["trace"] = result.fitness_trace;
  return r.dump();
}

std::string property_report_json(const PropertyReport& report) {
  int k_max = 0;
  int l_max = 0;
  if (!report.cidev.empty()) k_max = report.cidev.rbegin()->first;
  if (!report.pcdev.empty()) l_max = report.pcdev.rbegin()->first;
  return report_record(report, k_max, l_max).dump();
}

}  // namespace boolpso

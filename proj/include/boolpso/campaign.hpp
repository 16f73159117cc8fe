#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boolpso/fitness.hpp"
#include "boolpso/hillclimb.hpp"
#include "boolpso/meta_opt.hpp"
#include "boolpso/properties.hpp"
#include "boolpso/pso.hpp"

namespace boolpso {

/// Bad flags or config values. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data (truth-table files). CLI exit code 3.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInput = 3;

enum class Mode { kAnalyze, kSearch, kMeta };
enum class OutputFormat { kJson, kTsv };
enum class MetaMethod { kLus, kCga };

std::optional<Mode> parse_mode(std::string_view text);
std::optional<OutputFormat> parse_format(std::string_view text);
std::optional<MetaMethod> parse_meta_method(std::string_view text);

/// "7", "7-12" or "7,9,11".
std::vector<int> parse_n_range(std::string_view text);
/// Four comma-separated reals: w,phi,psi,vmax.
std::array<double, 4> parse_param_list(std::string_view text);
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

struct CampaignConfig {
  Mode mode = Mode::kSearch;
  std::vector<int> n_values{7};
  FitnessKind kind = FitnessKind::kFit1;
  std::optional<std::array<double, 4>> params;  // default: tuned values for `kind`
  bool shared_r = false;

  // Unset values fall back to the per-mode defaults below.
  std::optional<int> runs;        // search R = 100, meta inner R = 30
  std::optional<int> particles;   // search 200, meta 50
  std::optional<int> iterations;  // search 400, meta 100
  int hc_budget = kDefaultHcBudget;

  std::uint64_t seed = 1;                // master seed; run i uses seed + i
  std::vector<std::uint64_t> seeds;      // explicit per-run seeds override the master
  int workers = 1;

  // analyze
  int k_max = 2;
  int l_max = 1;

  // meta
  MetaMethod meta = MetaMethod::kCga;
  int meta_runs = 6;
  LusConfig lus;
  CgaConfig cga;

  OutputFormat format = OutputFormat::kJson;
};

int resolved_runs(const CampaignConfig& cfg);
int resolved_particles(const CampaignConfig& cfg);
int resolved_iterations(const CampaignConfig& cfg);
/// Seed for run `index` (0-based).
std::uint64_t run_seed(const CampaignConfig& cfg, int index);

/// Throws ConfigError naming the first offending field.
void validate(const CampaignConfig& cfg);

/// One report per non-blank, non-'#' line. Throws InputError naming the line.
void cmd_analyze(std::istream& in, std::ostream& out, int k_max, int l_max, OutputFormat format);

/// Per-run records followed by one best-of-campaign summary per n. Each record
/// is flushed as soon as its run completes. Wall-clock timings go to `timing`
/// (if non-null) so the report itself stays reproducible.
void cmd_search(const CampaignConfig& cfg, std::ostream& out, std::ostream* timing);

/// One row per meta-optimization run (method, mu_g, max_g, mfit, parameters)
/// and a best-of-runs row.
void cmd_meta(const CampaignConfig& cfg, std::ostream& out, std::ostream* timing);

/// JSON rendering of a PSO run, trace included.
std::string run_result_json(const RunResult& result, FitnessKind kind);

/// Structured record for a property report with the stable field names
/// n, balanced, nl, deg, cidev_k, pcdev_l, ac_max, resiliency, pc_order.
std::string property_report_json(const PropertyReport& report);

}  // namespace boolpso

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "boolpso/boolean_function.hpp"
#include "boolpso/fitness.hpp"
#include "boolpso/hillclimb.hpp"
#include "boolpso/rng.hpp"

namespace boolpso {

struct PsoParams {
  double w = 0.0;      // inertia
  double phi = 0.0;    // social (global best) constant
  double psi = 0.0;    // cognitive (local best) constant
  double v_max = 0.0;  // velocity clamp
  int swarm_size = 50;
  int iterations = 100;
  /// Reuse one uniform draw for both attraction terms instead of two.
  bool shared_r = false;
};

/// CGA-tuned velocity constants for each fitness function (n = 7 tuning).
PsoParams default_params(FitnessKind kind);

struct Particle {
  BooleanFunction position;
  std::vector<double> velocity;
  std::vector<double> probability;
  BooleanFunction local_best;
  double local_best_fitness = 0.0;
  bool evaluated = false;
};

inline double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::vector<Particle> init_swarm(int n, const PsoParams& params, RngStream& rng);

/// Uniformly random table with 2^{n-1} ones.
BooleanFunction random_balanced(int n, RngStream& rng);

/// v' = w v + r1 phi (g - x) + r2 psi (b - x), clamped to [-v_max, v_max];
/// probability = logistic(v').
void velocity_update(Particle& p, const BooleanFunction& global_best, const PsoParams& params,
                     RngStream& rng);

/// Uniform k != j with x[k] != y[k] and x[k] != x[j], or nullopt. O(m) scan.
std::optional<std::size_t> find_cand_swap(const BooleanFunction& x, const BooleanFunction& y,
                                          std::size_t j, RngStream& rng);

struct SwapRecord {
  std::size_t j;
  std::size_t k;
};

/// Balance-preserving move of x toward y. Visits j ascending; with probability
/// prob[j] and x[j] != y[j], swaps x[j] with a uniformly chosen candidate.
/// Each executed swap shrinks d(x, y) by exactly 2. Returns the swaps made.
std::vector<SwapRecord> update_bal_pos(BooleanFunction& x, const BooleanFunction& y,
                                       std::span<const double> prob, RngStream& rng);

/// Exchanges one uniformly chosen 1-bit with one uniformly chosen 0-bit.
void anti_stagnation_swap(BooleanFunction& x, RngStream& rng);

struct RunResult {
  BooleanFunction global_best;
  double global_best_fitness = 0.0;
  std::vector<double> fitness_trace;  // entry 0 is the initial swarm
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
};

enum class PsoPhase { kPositionUpdate, kHillClimb, kEvaluation };

struct PsoObserver {
  /// Called after each phase of every iteration with the whole swarm.
  std::function<void(int iteration, PsoPhase phase, std::span<const Particle> swarm)> on_phase;
};

/// Loop: evaluate, update bests, move velocities and positions, hill-climb
/// every particle, for `params.iterations` rounds. The swarm is evaluated once
/// more after the last round so the final climb is not discarded.
RunResult pso_run(int n, FitnessKind kind, const PsoParams& params, int hc_budget,
                  RngStream& rng, const PsoObserver* observer = nullptr);

}  // namespace boolpso

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "boolpso/fitness.hpp"
#include "boolpso/hillclimb.hpp"
#include "boolpso/pso.hpp"
#include "boolpso/rng.hpp"

namespace boolpso {

inline constexpr double kParamLower = 0.0;
inline constexpr double kParamUpper = 10.0;

/// (w, phi, psi, v_max), each kept inside [0, 10].
struct ParamVector {
  std::array<double, 4> values{};

  static ParamVector clamped(std::array<double, 4> raw);
  static ParamVector uniform(RngStream& rng);
  bool in_bounds() const;
  PsoParams to_pso(int swarm_size, int iterations) const;
};

struct MetaFitnessSpec {
  int n = 7;
  int swarm_size = 50;
  int iterations = 100;
  int runs = 30;
  FitnessKind kind = FitnessKind::kFit1;
  int hc_budget = kDefaultHcBudget;
  /// Worker threads for the inner runs; results do not depend on it.
  int workers = 1;
};

struct MetaFitness {
  double mean = 0.0;  // mu_g
  double max = 0.0;   // max_g
  double value = 0.0; // mu_g + max_g
  std::vector<std::uint64_t> seeds;
};

/// Runs spec.runs PSO instances with x, seeding each from a fresh 64-bit draw
/// of `rng`, and scores the final global bests.
MetaFitness meta_fitness(const ParamVector& x, const MetaFitnessSpec& spec, RngStream& rng);

struct LusConfig {
  double beta = 0.33;
  double tau = 0.001;
  double initial_range = 5.0;
};

struct MetaSample {
  ParamVector x;
  MetaFitness fitness;
  double range = 0.0;  // neighbourhood half-width when the sample was drawn
  bool accepted = false;
};

struct LusResult {
  ParamVector best;
  MetaFitness best_fitness;
  std::vector<MetaSample> trace;  // trace[0] is the starting point
  int rejections = 0;
};

/// Local Unimodal Sampling: sample y in the box x +- d (clamped to bounds);
/// move on strict improvement, otherwise shrink d by beta; stop once d <= tau.
LusResult lus_optimize(const LusConfig& cfg, const MetaFitnessSpec& spec, RngStream& rng);

/// Upper bound on LUS rejections: ceil(log(tau / d0) / log(beta)).
int lus_max_rejections(const LusConfig& cfg);

struct CgaConfig {
  int population = 20;
  int generations = 100;
  double crossover_prob = 0.95;
  double mutation_prob = 0.05;
};

struct CgaGeneration {
  ParamVector best;
  MetaFitness best_fitness;
  std::vector<ParamVector> population;
  std::vector<double> population_fitness;
};

struct CgaResult {
  ParamVector best;
  MetaFitness best_fitness;
  std::vector<CgaGeneration> trace;  // trace[0] is the initial population
  std::uint64_t meta_evaluations = 0;
};

/// Selection probabilities proportional to fitness. Negative values shift the
/// whole population by (-min + epsilon) first.
std::vector<double> roulette_probabilities(std::span<const double> fitness);
std::size_t roulette_select(std::span<const double> probabilities, RngStream& rng);

/// Each child gene uniform in [min, max] of the parents' genes.
std::pair<ParamVector, ParamVector> flat_crossover(const ParamVector& a, const ParamVector& b,
                                                   RngStream& rng);
/// Each gene replaced by a fresh uniform value with probability p.
void random_mutation(ParamVector& x, double p, RngStream& rng);

/// Real-coded GA: roulette pairing, flat crossover with p_c, random mutation
/// with p_m per gene, and the best-so-far individual replacing the worst.
CgaResult cga_optimize(const CgaConfig& cfg, const MetaFitnessSpec& spec, RngStream& rng);

}  // namespace boolpso

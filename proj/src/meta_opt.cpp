#include "boolpso/meta_opt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace boolpso {

namespace {

constexpr double kShiftEpsilon = 1e-9;

double final_fitness(const ParamVector& x, const MetaFitnessSpec& spec, std::uint64_t seed) {
  RngStream rng(seed);
  return pso_run(spec.n, spec.kind, x.to_pso(spec.swarm_size, spec.iterations), spec.hc_budget,
                 rng)
      .global_best_fitness;
}

}  // namespace

ParamVector ParamVector::clamped(std::array<double, 4> raw) {
  ParamVector p;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    p.values[i] = std::clamp(raw[i], kParamLower, kParamUpper);
  }
  return p;
}

ParamVector ParamVector::uniform(RngStream& rng) {
  ParamVector p;
  for (auto& v : p.values) v = rng.uniform(kParamLower, kParamUpper);
  return p;
}

bool ParamVector::in_bounds() const {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return v >= kParamLower && v <= kParamUpper; });
}

PsoParams ParamVector::to_pso(int swarm_size, int iterations) const {
  PsoParams p;
  p.w = values[0];
  p.phi = values[1];
  p.psi = values[2];
  p.v_max = values[3];
  p.swarm_size = swarm_size;
  p.iterations = iterations;
  return p;
}

MetaFitness meta_fitness(const ParamVector& x, const MetaFitnessSpec& spec, RngStream& rng) {
  if (spec.runs < 1) throw BoolFunError("meta-fitness needs at least one run");
  if (!x.in_bounds()) throw BoolFunError("parameter vector outside [0, 10]^4");

  MetaFitness out;
  out.seeds.resize(spec.runs);
  for (auto& s : out.seeds) s = rng.next_u64();

  std::vector<double> finals(spec.runs);
  const int workers = std::clamp(spec.workers, 1, spec.runs);
  if (workers == 1) {
    for (int r = 0; r < spec.runs; ++r) finals[r] = final_fitness(x, spec, out.seeds[r]);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = next++; r < spec.runs; r = next++) {
          finals[r] = final_fitness(x, spec, out.seeds[r]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  out.mean = std::accumulate(finals.begin(), finals.end(), 0.0) / spec.runs;
  out.max = *std::max_element(finals.begin(), finals.end());
  out.value = out.mean + out.max;
  return out;
}

int lus_max_rejections(const LusConfig& cfg) {
  return static_cast<int>(std::ceil(std::log(cfg.tau / cfg.initial_range) / std::log(cfg.beta)));
}

LusResult lus_optimize(const LusConfig& cfg, const MetaFitnessSpec& spec, RngStream& rng) {
  if (!(cfg.beta > 0 && cfg.beta < 1)) throw BoolFunError("LUS beta must lie in (0, 1)");
  if (!(cfg.tau > 0)) throw BoolFunError("LUS tau must be positive");
  if (!(cfg.initial_range > 0)) throw BoolFunError("LUS initial range must be positive");

  LusResult result;
  double d = cfg.initial_range;
  result.best = ParamVector::uniform(rng);
  result.best_fitness = meta_fitness(result.best, spec, rng);
  result.trace.push_back({result.best, result.best_fitness, d, true});

  while (d > cfg.tau) {
    std::array<double, 4> raw{};
    for (std::size_t i = 0; i < raw.size(); ++i) {
      raw[i] = result.best.values[i] + rng.uniform(-d, d);
    }
    const auto y = ParamVector::clamped(raw);
    auto fy = meta_fitness(y, spec, rng);
    const bool accept = fy.value > result.best_fitness.value;
    result.trace.push_back({y, fy, d, accept});
    if (accept) {
      result.best = y;
      result.best_fitness = std::move(fy);
    } else {
      d *= cfg.beta;
      ++result.rejections;
    }
  }
  return result;
}

std::vector<double> roulette_probabilities(std::span<const double> fitness) {
  if (fitness.empty()) throw BoolFunError("roulette over an empty population");
  std::vector<double> weights(fitness.begin(), fitness.end());
  const double lo = *std::min_element(weights.begin(), weights.end());
  if (lo < 0) {
    for (auto& w : weights) w += -lo + kShiftEpsilon;
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0)) {
    std::fill(weights.begin(), weights.end(), 1.0 / weights.size());
    return weights;
  }
  for (auto& w : weights) w /= total;
  return weights;
}

std::size_t roulette_select(std::span<const double> probabilities, RngStream& rng) {
  const double r = rng.uniform01();
  double acc = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    acc += probabilities[i];
    if (r < acc) return i;
  }
  // Rounding can leave acc slightly below 1; fall back to the last non-zero slot.
  for (std::size_t i = probabilities.size(); i-- > 0;) {
    if (probabilities[i] > 0) return i;
  }
  return probabilities.size() - 1;
}

std::pair<ParamVector, ParamVector> flat_crossover(const ParamVector& a, const ParamVector& b,
                                                   RngStream& rng) {
  std::pair<ParamVector, ParamVector> children;
  for (auto* child : {&children.first, &children.second}) {
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      const double lo = std::min(a.values[i], b.values[i]);
      const double hi = std::max(a.values[i], b.values[i]);
      child->values[i] = rng.uniform(lo, hi);
    }
  }
  return children;
}

void random_mutation(ParamVector& x, double p, RngStream& rng) {
  for (auto& v : x.values) {
    if (rng.bernoulli(p)) v = rng.uniform(kParamLower, kParamUpper);
  }
}

CgaResult cga_optimize(const CgaConfig& cfg, const MetaFitnessSpec& spec, RngStream& rng) {
  if (cfg.population < 2 || cfg.population % 2 != 0) {
    throw BoolFunError("CGA population must be even and at least 2");
  }
  if (cfg.generations < 0) throw BoolFunError("CGA generation count must be non-negative");
  auto in_unit = [](double p) { return p >= 0 && p <= 1; };
  if (!in_unit(cfg.crossover_prob) || !in_unit(cfg.mutation_prob)) {
    throw BoolFunError("CGA probabilities must lie in [0, 1]");
  }

  CgaResult result;
  std::vector<ParamVector> population(cfg.population);
  std::vector<MetaFitness> scores(cfg.population);
  for (auto& x : population) x = ParamVector::uniform(rng);
  for (int i = 0; i < cfg.population; ++i) {
    scores[i] = meta_fitness(population[i], spec, rng);
    ++result.meta_evaluations;
  }

  auto record_generation = [&] {
    std::size_t best = 0;
    CgaGeneration gen;
    for (std::size_t i = 0; i < population.size(); ++i) {
      gen.population.push_back(population[i]);
      gen.population_fitness.push_back(scores[i].value);
      if (scores[i].value > scores[best].value) best = i;
    }
    if (result.trace.empty() || scores[best].value > result.best_fitness.value) {
      result.best = population[best];
      result.best_fitness = scores[best];
    }
    gen.best = result.best;
    gen.best_fitness = result.best_fitness;
    result.trace.push_back(std::move(gen));
  };
  record_generation();

  for (int g = 1; g <= cfg.generations; ++g) {
    std::vector<double> values;
    for (const auto& s : scores) values.push_back(s.value);
    const auto probs = roulette_probabilities(values);

    std::vector<ParamVector> next;
    next.reserve(cfg.population);
    for (int pair = 0; pair < cfg.population / 2; ++pair) {
      const auto& a = population[roulette_select(probs, rng)];
      const auto& b = population[roulette_select(probs, rng)];
      auto children = rng.bernoulli(cfg.crossover_prob) ? flat_crossover(a, b, rng)
                                                        : std::make_pair(a, b);
      random_mutation(children.first, cfg.mutation_prob, rng);
      random_mutation(children.second, cfg.mutation_prob, rng);
      next.push_back(children.first);
      next.push_back(children.second);
    }

    std::vector<MetaFitness> next_scores(cfg.population);
    for (int i = 0; i < cfg.population; ++i) {
      next_scores[i] = meta_fitness(next[i], spec, rng);
      ++result.meta_evaluations;
    }

    // The elite keeps the score it earned; it is not re-run.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < next.size(); ++i) {
      if (next_scores[i].value < next_scores[worst].value) worst = i;
    }
    next[worst] = result.best;
    next_scores[worst] = result.best_fitness;

    population = std::move(next);
    scores = std::move(next_scores);
    record_generation();
  }
  return result;
}

}  // namespace boolpso

#include "boolpso/pso.hpp"

#include <algorithm>
#include <string>

namespace boolpso {

namespace {

void check_balanced_pair(const BooleanFunction& x, const BooleanFunction& y) {
  if (x.size() != y.size()) throw BoolFunError("position update on tables of different length");
  if (!x.balanced() || !y.balanced()) throw BoolFunError("position update requires balanced tables");
}

// Index set with O(1) insert, erase and uniform pick.
class IndexSet {
 public:
  explicit IndexSet(std::size_t universe) : slot_(universe, kAbsent) {}

  void insert(std::size_t i) {
    slot_[i] = items_.size();
    items_.push_back(i);
  }
  void erase(std::size_t i) {
    const std::size_t s = slot_[i];
    const std::size_t last = items_.back();
    items_[s] = last;
    slot_[last] = s;
    items_.pop_back();
    slot_[i] = kAbsent;
  }
  bool empty() const { return items_.empty(); }
  std::size_t pick(RngStream& rng) const { return items_[rng.uniform_index(items_.size())]; }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> items_;
  std::vector<std::size_t> slot_;
};

}  // namespace

PsoParams default_params(FitnessKind kind) {
  PsoParams p;
  switch (kind) {
    case FitnessKind::kFit1:
      p.w = 0.5067, p.phi = 2.8751, p.psi = 1.3587, p.v_max = 3.5008;
      break;
    case FitnessKind::kFit2:
      p.w = 0.7614, p.phi = 2.0073, p.psi = 2.0273, p.v_max = 2.7183;
      break;
    case FitnessKind::kFit3:
      p.w = 0.2828, p.phi = 2.1824, p.psi = 0.8951, p.v_max = 4.2639;
      break;
  }
  return p;
}

BooleanFunction random_balanced(int n, RngStream& rng) {
  BooleanFunction f(n);
  std::vector<std::uint8_t> bits(f.size(), 0);
  std::fill(bits.begin(), bits.begin() + bits.size() / 2, std::uint8_t{1});
  rng.shuffle(std::span(bits));
  return BooleanFunction::from_bits(n, std::move(bits));
}

std::vector<Particle> init_swarm(int n, const PsoParams& params, RngStream& rng) {
  if (n < 2 || n > kMaxVariables) {
    throw BoolFunError("swarm search needs 2 <= n <= 16, got " + std::to_string(n));
  }
  if (params.swarm_size < 1) throw BoolFunError("swarm size must be positive");
  if (params.v_max < 0) throw BoolFunError("v_max must be non-negative");
  std::vector<Particle> swarm;
  swarm.reserve(params.swarm_size);
  for (int i = 0; i < params.swarm_size; ++i) {
    Particle p;
    p.position = random_balanced(n, rng);
    p.velocity.resize(p.position.size());
    p.probability.resize(p.position.size());
    for (std::size_t j = 0; j < p.velocity.size(); ++j) {
      p.velocity[j] = rng.uniform(-params.v_max, params.v_max);
      p.probability[j] = logistic(p.velocity[j]);
    }
    p.local_best = p.position;
    swarm.push_back(std::move(p));
  }
  return swarm;
}

void velocity_update(Particle& p, const BooleanFunction& global_best, const PsoParams& params,
                     RngStream& rng) {
  if (global_best.size() != p.position.size()) {
    throw BoolFunError("global best length differs from particle length");
  }
  for (std::size_t j = 0; j < p.velocity.size(); ++j) {
    const double r1 = rng.uniform01();
    const double r2 = params.shared_r ? r1 : rng.uniform01();
    const double x = p.position[j] ? 1.0 : 0.0;
    const double g = global_best[j] ? 1.0 : 0.0;
    const double b = p.local_best[j] ? 1.0 : 0.0;
    double v = params.w * p.velocity[j] + r1 * params.phi * (g - x) + r2 * params.psi * (b - x);
    v = std::clamp(v, -params.v_max, params.v_max);
    p.velocity[j] = v;
    p.probability[j] = logistic(v);
  }
}

std::optional<std::size_t> find_cand_swap(const BooleanFunction& x, const BooleanFunction& y,
                                          std::size_t j, RngStream& rng) {
  if (x.size() != y.size() || j >= x.size()) throw BoolFunError("candidate search out of range");
  if (x[j] == y[j]) throw BoolFunError("candidate search requires x[j] != y[j]");
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k != j && x[k] != y[k] && x[k] != x[j]) candidates.push_back(k);
  }
  if (candidates.empty()) return std::nullopt;
  return candidates[rng.uniform_index(candidates.size())];
}

std::vector<SwapRecord> update_bal_pos(BooleanFunction& x, const BooleanFunction& y,
                                       std::span<const double> prob, RngStream& rng) {
  check_balanced_pair(x, y);
  if (prob.size() != x.size()) throw BoolFunError("probability vector length mismatch");

  // Disagreeing positions split by the value x holds there. A disagreeing
  // j with x[j] = 1 can only pair with a disagreeing k holding 0, and vice
  // versa; swapping resolves both.
  IndexSet ones_off(x.size());
  IndexSet zeros_off(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) (x[i] ? ones_off : zeros_off).insert(i);
  }

  std::vector<SwapRecord> swaps;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double r = rng.uniform01();
    if (!(r < prob[j]) || x[j] == y[j]) continue;
    IndexSet& mine = x[j] ? ones_off : zeros_off;
    IndexSet& other = x[j] ? zeros_off : ones_off;
    if (other.empty()) continue;
    const std::size_t k = other.pick(rng);
    mine.erase(j);
    other.erase(k);
    x.swap_bits(j, k);
    swaps.push_back({j, k});
  }
  return swaps;
}

void anti_stagnation_swap(BooleanFunction& x, RngStream& rng) {
  if (x.weight() == 0 || x.weight() == x.size()) {
    throw BoolFunError("anti-stagnation swap needs both a 0 and a 1");
  }
  // Pick the i-th one and the j-th zero in index order.
  std::size_t one_rank = rng.uniform_index(x.weight());
  std::size_t zero_rank = rng.uniform_index(x.size() - x.weight());
  std::size_t one = x.size();
  std::size_t zero = x.size();
  for (std::size_t i = 0; i < x.size() && (one == x.size() || zero == x.size()); ++i) {
    if (x[i]) {
      if (one_rank-- == 0) one = i;
    } else {
      if (zero_rank-- == 0) zero = i;
    }
  }
  x.swap_bits(one, zero);
}

RunResult pso_run(int n, FitnessKind kind, const PsoParams& params, int hc_budget,
                  RngStream& rng, const PsoObserver* observer) {
  if (params.iterations < 0) throw BoolFunError("iteration count must be non-negative");
  if (hc_budget < 0) throw BoolFunError("hill-climbing budget must be non-negative");

  RunResult result;
  result.seed = rng.seed();
  auto swarm = init_swarm(n, params, rng);
  bool have_global = false;

  auto notify = [&](int it, PsoPhase phase) {
    if (observer && observer->on_phase) observer->on_phase(it, phase, swarm);
  };

  auto evaluate_swarm = [&] {
    for (auto& p : swarm) {
      const double fit = evaluate(kind, p.position);
      ++result.evaluations;
      if (!p.evaluated || fit > p.local_best_fitness) {
        p.local_best = p.position;
        p.local_best_fitness = fit;
        p.evaluated = true;
      }
      if (!have_global || fit > result.global_best_fitness) {
        result.global_best = p.position;
        result.global_best_fitness = fit;
        have_global = true;
      }
    }
    result.fitness_trace.push_back(result.global_best_fitness);
  };

  const int ci_order = hill_climb_ci_order(kind);
  evaluate_swarm();
  for (int it = 1; it <= params.iterations; ++it) {
    for (auto& p : swarm) velocity_update(p, result.global_best, params, rng);
    for (auto& p : swarm) {
      if (p.position == result.global_best || p.position == p.local_best) {
        anti_stagnation_swap(p.position, rng);
      } else {
        update_bal_pos(p.position, result.global_best, p.probability, rng);
        update_bal_pos(p.position, p.local_best, p.probability, rng);
      }
    }
    notify(it, PsoPhase::kPositionUpdate);

    for (auto& p : swarm) {
      auto climbed = ci_order > 0 ? nl_ci_hc(p.position, ci_order, hc_budget, rng)
                                  : nl_hc(p.position, hc_budget, rng);
      p.position = std::move(climbed.function);
      result.evaluations += climbed.stats.evaluated;
    }
    notify(it, PsoPhase::kHillClimb);

    evaluate_swarm();
    notify(it, PsoPhase::kEvaluation);
  }
  return result;
}

}  // namespace boolpso

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "boolpso/meta_opt.hpp"

using namespace boolpso;

namespace {

MetaFitnessSpec tiny_spec(int runs = 2) {
  MetaFitnessSpec spec;
  spec.n = 5;
  spec.swarm_size = 5;
  spec.iterations = 3;
  spec.runs = runs;
  spec.hc_budget = 5;
  return spec;
}

ParamVector vec(double w, double phi, double psi, double vmax) {
  return ParamVector{{w, phi, psi, vmax}};
}

}  // namespace

TEST_CASE("roulette probabilities") {
  const std::vector<double> plain{1.0, 3.0};
  const auto p = roulette_probabilities(plain);
  CHECK(p[0] == doctest::Approx(0.25));
  CHECK(p[1] == doctest::Approx(0.75));

  const std::vector<double> negative{-4.0, -2.0, 2.0};
  const auto q = roulette_probabilities(negative);
  for (double v : q) CHECK(v >= 0.0);
  CHECK(q[0] == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(q[1] == doctest::Approx(2.0 / 8.0));
  CHECK(q[2] == doctest::Approx(6.0 / 8.0));

  const std::vector<double> zeros{0.0, 0.0, 0.0, 0.0};
  for (double v : roulette_probabilities(zeros)) CHECK(v == 0.25);

  CHECK_THROWS_AS(roulette_probabilities(std::vector<double>{}), BoolFunError);
}

TEST_CASE("roulette_select follows the probabilities") {
  RngStream rng(1);
  const std::vector<double> probs{0.25, 0.0, 0.75};
  std::array<int, 3> counts{};
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) ++counts[roulette_select(probs, rng)];
  CHECK(counts[1] == 0);
  CHECK(std::abs(counts[0] / double(trials) - 0.25) < 0.02);
}

TEST_CASE("flat crossover stays between the parents") {
  RngStream rng(2);
  for (int t = 0; t < 10000; ++t) {
    const auto a = ParamVector::uniform(rng);
    const auto b = ParamVector::uniform(rng);
    const auto [c, d] = flat_crossover(a, b, rng);
    for (std::size_t i = 0; i < 4; ++i) {
      const double lo = std::min(a.values[i], b.values[i]);
      const double hi = std::max(a.values[i], b.values[i]);
      REQUIRE(c.values[i] >= lo);
      REQUIRE(c.values[i] <= hi);
      REQUIRE(d.values[i] >= lo);
      REQUIRE(d.values[i] <= hi);
    }
  }
  const auto same = vec(1, 2, 3, 4);
  CHECK(flat_crossover(same, same, rng).first.values == same.values);
}

TEST_CASE("random mutation") {
  RngStream rng(3);
  auto x = vec(1, 2, 3, 4);
  random_mutation(x, 0.0, rng);
  CHECK(x.values == vec(1, 2, 3, 4).values);
  int changed = 0;
  for (int t = 0; t < 10000; ++t) {
    auto y = vec(1, 2, 3, 4);
    random_mutation(y, 1.0, rng);
    REQUIRE(y.in_bounds());
    for (std::size_t i = 0; i < 4; ++i) changed += y.values[i] != vec(1, 2, 3, 4).values[i];
  }
  CHECK(changed == 40000);
}

TEST_CASE("ParamVector bounds") {
  const auto c = ParamVector::clamped({-1.0, 11.0, 5.0, 10.0});
  CHECK(c.values == std::array<double, 4>{0.0, 10.0, 5.0, 10.0});
  CHECK(c.in_bounds());
  CHECK_FALSE(vec(0, 0, 0, 10.5).in_bounds());
  const auto p = vec(0.5, 1.5, 2.5, 3.5).to_pso(12, 34);
  CHECK(p.w == 0.5);
  CHECK(p.v_max == 3.5);
  CHECK(p.swarm_size == 12);
  CHECK(p.iterations == 34);
}

TEST_CASE("meta fitness with one run is twice that run") {
  const auto spec = tiny_spec(1);
  const auto x = vec(0.5067, 2.8751, 1.3587, 3.5008);
  RngStream rng(4), replay(4);
  const auto m = meta_fitness(x, spec, rng);
  REQUIRE(m.seeds.size() == 1);
  CHECK(m.seeds[0] == replay.next_u64());
  RngStream inner(m.seeds[0]);
  const double single =
      pso_run(spec.n, spec.kind, x.to_pso(spec.swarm_size, spec.iterations), spec.hc_budget, inner)
          .global_best_fitness;
  CHECK(m.mean == single);
  CHECK(m.max == single);
  CHECK(m.value == 2 * single);
}

TEST_CASE("meta fitness edge cases") {
  RngStream rng(5);
  const auto degenerate = meta_fitness(vec(0, 0, 0, 0), tiny_spec(), rng);
  CHECK(std::isfinite(degenerate.value));
  CHECK(degenerate.max >= degenerate.mean);
  CHECK_THROWS_AS(meta_fitness(vec(0, 0, 0, 11), tiny_spec(), rng), BoolFunError);
  CHECK_THROWS_AS(meta_fitness(vec(1, 1, 1, 1), tiny_spec(0), rng), BoolFunError);
}

TEST_CASE("meta fitness is deterministic and independent of worker count") {
  auto spec = tiny_spec(4);
  const auto x = vec(0.7, 2.0, 2.0, 2.7);
  RngStream a(6), b(6);
  const auto serial = meta_fitness(x, spec, a);
  spec.workers = 3;
  const auto threaded = meta_fitness(x, spec, b);
  CHECK(serial.value == threaded.value);
  CHECK(serial.seeds == threaded.seeds);
}

TEST_CASE("lus_max_rejections") {
  CHECK(lus_max_rejections(LusConfig{}) == 8);
  CHECK(lus_max_rejections(LusConfig{0.5, 0.25, 1.0}) == 2);
}

TEST_CASE("LUS trace invariants") {
  RngStream rng(7);
  LusConfig cfg;
  cfg.tau = 0.01;
  const auto result = lus_optimize(cfg, tiny_spec(), rng);
  REQUIRE(!result.trace.empty());
  CHECK(result.trace[0].accepted);
  CHECK(result.trace[0].range == cfg.initial_range);
  CHECK(result.rejections <= lus_max_rejections(cfg));

  double best = result.trace[0].fitness.value;
  double range = cfg.initial_range;
  int rejections = 0;
  for (std::size_t i = 1; i < result.trace.size(); ++i) {
    const auto& s = result.trace[i];
    CHECK(s.x.in_bounds());
    CHECK(s.range == range);
    CHECK(s.accepted == (s.fitness.value > best));
    if (s.accepted) {
      best = s.fitness.value;
    } else {
      range *= cfg.beta;
      ++rejections;
    }
  }
  CHECK(rejections == result.rejections);
  CHECK(range <= cfg.tau);
  CHECK(result.best_fitness.value == best);
}

TEST_CASE("LUS shrinks the range by beta on the first rejection") {
  RngStream rng(8);
  LusConfig cfg{0.33, 0.2, 1.0};
  const auto result = lus_optimize(cfg, tiny_spec(), rng);
  for (std::size_t i = 1; i + 1 < result.trace.size(); ++i) {
    if (!result.trace[i].accepted) {
      CHECK(result.trace[i].range == 1.0);
      CHECK(result.trace[i + 1].range == 0.33);
      break;
    }
  }
  CHECK_THROWS_AS(lus_optimize(LusConfig{1.0, 0.1, 1.0}, tiny_spec(), rng), BoolFunError);
  CHECK_THROWS_AS(lus_optimize(LusConfig{0.5, 0.0, 1.0}, tiny_spec(), rng), BoolFunError);
}

TEST_CASE("CGA trace invariants") {
  RngStream rng(9);
  CgaConfig cfg{6, 4, 0.95, 0.05};
  const auto result = cga_optimize(cfg, tiny_spec(), rng);
  REQUIRE(result.trace.size() == 5);
  CHECK(result.meta_evaluations == 30);
  for (std::size_t g = 0; g < result.trace.size(); ++g) {
    const auto& gen = result.trace[g];
    REQUIRE(gen.population.size() == 6);
    for (const auto& x : gen.population) CHECK(x.in_bounds());
    for (double v : gen.population_fitness) CHECK(v <= gen.best_fitness.value);
    if (g > 0) CHECK(gen.best_fitness.value >= result.trace[g - 1].best_fitness.value);
  }
  CHECK(result.best_fitness.value == result.trace.back().best_fitness.value);
}

TEST_CASE("CGA configuration checks") {
  RngStream rng(10);
  CHECK_THROWS_AS(cga_optimize(CgaConfig{5, 1, 0.9, 0.1}, tiny_spec(), rng), BoolFunError);
  CHECK_THROWS_AS(cga_optimize(CgaConfig{4, -1, 0.9, 0.1}, tiny_spec(), rng), BoolFunError);
  CHECK_THROWS_AS(cga_optimize(CgaConfig{4, 1, 1.5, 0.1}, tiny_spec(), rng), BoolFunError);
  const auto zero_gen = cga_optimize(CgaConfig{4, 0, 0.9, 0.1}, tiny_spec(), rng);
  CHECK(zero_gen.trace.size() == 1);
}

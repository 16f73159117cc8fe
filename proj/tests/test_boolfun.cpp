#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "boolpso/boolean_function.hpp"
#include "boolpso/properties.hpp"
#include "boolpso/pso.hpp"
#include "boolpso/rng.hpp"
#include "boolpso/spectra.hpp"

using namespace boolpso;

namespace {

BooleanFunction table(int n, std::vector<std::uint8_t> bits) {
  return BooleanFunction::from_bits(n, std::move(bits));
}

BooleanFunction random_function(int n, RngStream& rng) {
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_u64() & 1);
  return BooleanFunction::from_bits(n, std::move(bits));
}

// x1 x2 + x3 x4 (+ x5 x6), x1 being the most significant index bit.
BooleanFunction quadratic_bent(int n) {
  return BooleanFunction::from_predicate(n, [n](std::uint32_t x) {
    int v = 0;
    for (int i = 0; i < n; i += 2) v ^= ((x >> (n - 1 - i)) & 1) & ((x >> (n - 2 - i)) & 1);
    return v != 0;
  });
}

// Distance to every affine function a.x + c, enumerated directly.
int brute_force_nonlinearity(const BooleanFunction& f) {
  const auto m = static_cast<std::uint32_t>(f.size());
  int best = static_cast<int>(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (int c = 0; c < 2; ++c) {
      int d = 0;
      for (std::uint32_t x = 0; x < m; ++x) d += f[x] != ((parity(a & x) ^ c) != 0);
      best = std::min(best, d);
    }
  }
  return best;
}

// a_I = XOR of f(x) over x with support inside I.
std::vector<std::uint8_t> anf_by_definition(const BooleanFunction& f) {
  const auto m = static_cast<std::uint32_t>(f.size());
  std::vector<std::uint8_t> out(m);
  for (std::uint32_t mask = 0; mask < m; ++mask) {
    int acc = 0;
    for (std::uint32_t x = 0; x < m; ++x) {
      if ((x & ~mask) == 0) acc ^= f[x] ? 1 : 0;
    }
    out[mask] = static_cast<std::uint8_t>(acc);
  }
  return out;
}

// Found by the swarm (n = 7, fit1): balanced, 1-resilient, Nl 56, degree 5.
constexpr const char* kResilientSeven = "a21c3ffa77448cc461b64b09b27ec257";

}  // namespace

TEST_CASE("parse_truth_table decodes nibbles most significant bit first") {
  CHECK(parse_truth_table("6") == table(2, {0, 1, 1, 0}));
  CHECK(parse_truth_table("8") == table(2, {1, 0, 0, 0}));
  const auto f = parse_truth_table("0001");
  CHECK(f.n() == 4);
  CHECK(f.weight() == 1);
  CHECK(f[15]);
  CHECK(parse_truth_table(" 00\n 0 1 ") == f);
  CHECK(parse_truth_table("ABCD") == parse_truth_table("abcd"));
}

TEST_CASE("parse_truth_table rejects bad input") {
  CHECK_THROWS_AS(parse_truth_table("XYZ"), BoolFunError);
  CHECK_THROWS_AS(parse_truth_table("123"), BoolFunError);
  CHECK_THROWS_AS(parse_truth_table(""), BoolFunError);
  CHECK_THROWS_AS(parse_truth_table("6g"), BoolFunError);
}

TEST_CASE("hex rendering round-trips") {
  RngStream rng(11);
  for (int n = 2; n <= 10; ++n) {
    for (int t = 0; t < 20; ++t) {
      const auto f = random_function(n, rng);
      CHECK(parse_truth_table(f.to_hex()) == f);
    }
  }
}

TEST_CASE("weight cache tracks mutations") {
  BooleanFunction f(3);
  f.set(1, true);
  f.set(1, true);
  f.set(6, true);
  CHECK(f.weight() == 2);
  f.swap_bits(1, 2);
  CHECK(f.weight() == 2);
  CHECK(f[2]);
  f.set(2, false);
  CHECK(f.weight() == 1);
  CHECK_THROWS_AS(BooleanFunction(0), BoolFunError);
  CHECK_THROWS_AS(BooleanFunction(17), BoolFunError);
  CHECK_THROWS_AS(BooleanFunction::from_bits(3, std::vector<std::uint8_t>(7)), BoolFunError);
}

TEST_CASE("Walsh transform examples") {
  const auto zero = BooleanFunction::constant(3, false);
  const std::vector<std::int32_t> expect_zero{8, 0, 0, 0, 0, 0, 0, 0};
  CHECK(walsh_transform_fast(zero).values == expect_zero);
  CHECK(walsh_transform_naive(zero).values == expect_zero);

  const auto xor2 = table(2, {0, 1, 1, 0});
  CHECK(walsh_transform_fast(xor2).values == std::vector<std::int32_t>{0, 0, 0, 4});
  CHECK(walsh_transform_naive(xor2).values == std::vector<std::int32_t>{0, 0, 0, 4});

  const auto and2 = table(2, {0, 0, 0, 1});
  CHECK(walsh_transform_fast(and2).values == std::vector<std::int32_t>{2, 2, 2, -2});
  CHECK(walsh_transform_naive(and2).values == std::vector<std::int32_t>{2, 2, 2, -2});

  const auto one = BooleanFunction::constant(3, true);
  CHECK(walsh_transform_naive(one).values == std::vector<std::int32_t>{-8, 0, 0, 0, 0, 0, 0, 0});
  CHECK(walsh_transform_fast(one) == walsh_transform_naive(one));

  CHECK_THROWS_AS(walsh_transform_naive(BooleanFunction(13)), BoolFunError);
}

TEST_CASE("fast and naive Walsh agree; Parseval; balancedness") {
  for (std::uint32_t t = 0; t < 256; ++t) {
    const auto f = BooleanFunction::from_predicate(3, [t](std::uint32_t x) { return (t >> x) & 1; });
    const auto w = walsh_transform_fast(f);
    REQUIRE(w == walsh_transform_naive(f));
  }
  RngStream rng(5);
  for (int n = 1; n <= 9; ++n) {
    for (int t = 0; t < 50; ++t) {
      const auto f = random_function(n, rng);
      const auto w = walsh_transform_fast(f);
      REQUIRE(w == walsh_transform_naive(f));
      std::int64_t energy = 0;
      for (auto v : w.values) energy += static_cast<std::int64_t>(v) * v;
      CHECK(energy == (std::int64_t{1} << (2 * n)));
      CHECK(w.values[0] == (1 << n) - 2 * static_cast<int>(f.weight()));
      CHECK((w.values[0] == 0) == f.balanced());
    }
  }
}

TEST_CASE("nonlinearity matches brute-force affine distance") {
  CHECK(nonlinearity(walsh_transform_fast(table(2, {0, 1, 1, 0}))) == 0);
  CHECK(brute_force_nonlinearity(quadratic_bent(4)) == 6);
  CHECK(nonlinearity(walsh_transform_fast(quadratic_bent(4))) == 6);
  RngStream rng(9);
  for (int n = 2; n <= 7; ++n) {
    for (int t = 0; t < 10; ++t) {
      const auto f = random_function(n, rng);
      CHECK(nonlinearity(walsh_transform_fast(f)) == brute_force_nonlinearity(f));
    }
  }
  const auto best7 = parse_truth_table(kResilientSeven);
  CHECK(brute_force_nonlinearity(best7) == 56);
  CHECK(nonlinearity(walsh_transform_fast(best7)) == 56);
}

TEST_CASE("Möbius transform and algebraic degree") {
  const auto and2 = table(2, {0, 0, 0, 1});
  CHECK(mobius_transform(and2).coefficients == std::vector<std::uint8_t>{0, 0, 0, 1});
  CHECK(algebraic_degree(mobius_transform(and2)) == 2);

  const auto xor2 = table(2, {0, 1, 1, 0});
  CHECK(mobius_transform(xor2).coefficients == std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(algebraic_degree(mobius_transform(xor2)) == 1);

  const auto one = BooleanFunction::constant(3, true);
  CHECK(mobius_transform(one).coefficients == std::vector<std::uint8_t>{1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(algebraic_degree(mobius_transform(one)) == 0);
  CHECK(algebraic_degree(mobius_transform(BooleanFunction::constant(4, false))) == 0);

  RngStream rng(21);
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t < 20; ++t) {
      const auto f = random_function(n, rng);
      const auto anf = mobius_transform(f);
      if (n <= 6) CHECK(anf.coefficients == anf_by_definition(f));
      CHECK(truth_table_from_anf(anf) == f);
    }
  }
  CHECK(algebraic_degree(mobius_transform(parse_truth_table(kResilientSeven))) == 5);
}

TEST_CASE("autocorrelation examples and oracle equivalence") {
  const auto zero = BooleanFunction::constant(3, false);
  CHECK(autocorrelation(zero).values == std::vector<std::int32_t>(8, 8));
  CHECK(absolute_indicator(autocorrelation(zero)) == 8);
  CHECK(pcdev(autocorrelation(zero), 1) == 8);

  const auto bent = quadratic_bent(4);
  auto expect = std::vector<std::int32_t>(16, 0);
  expect[0] = 16;
  CHECK(autocorrelation_naive(bent).values == expect);
  CHECK(autocorrelation(bent).values == expect);
  CHECK(absolute_indicator(autocorrelation(bent)) == 0);
  CHECK(pcdev(autocorrelation(bent), 1) == 0);

  CHECK(autocorrelation(table(2, {0, 1, 1, 0})).values == std::vector<std::int32_t>{4, -4, -4, 4});

  RngStream rng(3);
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t < 30; ++t) {
      const auto f = random_function(n, rng);
      const auto ac = autocorrelation(f);
      REQUIRE(ac == autocorrelation_naive(f));
      CHECK(ac.values[0] == (1 << n));
      if (n >= 2) {
        for (auto v : ac.values) CHECK(v % 4 == 0);
      }
    }
  }
}

TEST_CASE("cidev and pcdev") {
  CHECK(cidev(walsh_transform_fast(BooleanFunction::variable(3, 1)), 1) == 8);
  CHECK(cidev(walsh_transform_fast(table(2, {0, 1, 1, 0})), 1) == 0);
  CHECK(cidev(walsh_transform_fast(table(2, {0, 1, 1, 0})), 2) == 4);
  const auto best7 = parse_truth_table(kResilientSeven);
  CHECK(cidev(walsh_transform_fast(best7), 1) == 0);
  CHECK(pcdev(autocorrelation(best7), 1) == 8);

  const auto w = walsh_transform_fast(quadratic_bent(4));
  CHECK_THROWS_AS(cidev(w, 0), BoolFunError);
  CHECK_THROWS_AS(cidev(w, 5), BoolFunError);
  CHECK_THROWS_AS(pcdev(autocorrelation(w), 0), BoolFunError);
}

TEST_CASE("property_report aggregates every criterion") {
  const auto xor2 = property_report(table(2, {0, 1, 1, 0}), 2, 2);
  CHECK(xor2.balanced);
  CHECK(xor2.nonlinearity == 0);
  CHECK(xor2.degree == 1);
  CHECK(xor2.resiliency_order == 1);
  CHECK(xor2.cidev.at(1) == 0);
  CHECK(xor2.cidev.at(2) == 4);
  CHECK_FALSE(xor2.pc_order.has_value());

  const auto zero = property_report(BooleanFunction::constant(3, false), 1, 1);
  CHECK_FALSE(zero.balanced);
  CHECK_FALSE(zero.resiliency_order.has_value());

  const auto bent6 = property_report(quadratic_bent(6), 2, 2);
  CHECK(bent6.nonlinearity == 28);
  CHECK(bent6.absolute_indicator == 0);
  CHECK(bent6.degree == 2);
  CHECK(bent6.pc_order == 6);

  const auto best7 = property_report(parse_truth_table(kResilientSeven), 2, 1);
  CHECK(best7.balanced);
  CHECK(best7.nonlinearity == 56);
  CHECK(best7.degree == 5);
  CHECK(best7.cidev.at(1) == 0);
  CHECK(best7.resiliency_order == 1);

  CHECK_THROWS_AS(property_report(quadratic_bent(4), 5, 1), BoolFunError);
}

TEST_CASE("check_bounds equality cases") {
  PropertyReport sm;
  sm.n = 7;
  sm.balanced = true;
  sm.nonlinearity = 56;
  sm.degree = 4;
  sm.resiliency_order = 2;
  const auto f = check_bounds(sm);
  CHECK(f[1].name == "sarkar_maitra");
  CHECK(f[1].applicable);
  CHECK(f[1].satisfied);
  CHECK(f[1].tight);
  CHECK(f[0].tight);  // 4 = 7 - 1 - 2

  PropertyReport sieg = sm;
  sieg.resiliency_order = 1;
  sieg.degree = 5;
  const auto g = check_bounds(sieg);
  CHECK(g[0].name == "siegenthaler");
  CHECK(g[0].tight);
  CHECK(g[0].rhs == 5);

  PropertyReport balanced_only = sm;
  balanced_only.resiliency_order.reset();
  balanced_only.degree = 6;
  const auto h = check_bounds(balanced_only);
  CHECK(h[0].applicable);
  CHECK(h[0].rhs == 6);
  CHECK(h[0].tight);

  PropertyReport bad = sieg;
  bad.degree = 6;
  CHECK_FALSE(bounds_hold(check_bounds(bad)));

  CHECK(check_bounds(property_report(parse_truth_table(kResilientSeven), 1, 1))[0].tight);
}

TEST_CASE("bounds hold on every function of up to four variables") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t t = 0; t < count; ++t) {
      const auto f = BooleanFunction::from_predicate(n, [t](std::uint32_t x) { return (t >> x) & 1; });
      const auto r = property_report(f, n, n);
      REQUIRE(bounds_hold(check_bounds(r)));
      if (r.resiliency_order) REQUIRE(r.degree <= std::max(1, n - 1 - *r.resiliency_order));
    }
  }
}

TEST_CASE("walsh_swap_delta equals recomputation") {
  const auto and2 = table(2, {0, 0, 0, 1});
  const auto swapped = walsh_swap_delta(and2, walsh_transform_fast(and2), 3, 0);
  CHECK(swapped == walsh_transform_fast(table(2, {1, 0, 0, 0})));
  CHECK(swapped.values[0] == 2);
  CHECK(swapped.values[3] == -2);

  CHECK_THROWS_AS(walsh_swap_delta(and2, walsh_transform_fast(and2), 0, 3), BoolFunError);
  CHECK_THROWS_AS(walsh_swap_delta(and2, walsh_transform_fast(and2), 3, 3), BoolFunError);

  RngStream rng(17);
  for (int t = 0; t < 500; ++t) {
    auto f = random_balanced(6, rng);
    const auto w = walsh_transform_fast(f);
    std::size_t u, v;
    do u = rng.uniform_index(f.size()); while (!f[u]);
    do v = rng.uniform_index(f.size()); while (f[v]);
    const auto updated = walsh_swap_delta(f, w, u, v);
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      if (parity(a & u) == parity(a & v)) REQUIRE(updated.values[a] == w.values[a]);
    }
    f.swap_bits(u, v);
    REQUIRE(updated == walsh_transform_fast(f));
  }
}

#include "boolpso/spectra.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace boolpso {

namespace {

template <typename T>
void fast_walsh_hadamard(std::vector<T>& v) {
  const std::size_t m = v.size();
  for (std::size_t h = 1; h < m; h <<= 1) {
    for (std::size_t i = 0; i < m; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const T a = v[j];
        const T b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

void check_order(int order, int n, const char* what) {
  if (order < 1 || order > n) {
    throw BoolFunError(std::string(what) + " order " + std::to_string(order) +
                       " outside [1, " + std::to_string(n) + "]");
  }
}

}  // namespace

std::int32_t WalshSpectrum::max_abs() const {
  std::int32_t best = 0;
  for (auto w : values) best = std::max(best, std::abs(w));
  return best;
}

WalshSpectrum walsh_transform_fast(const BooleanFunction& f) {
  WalshSpectrum s{f.n(), std::vector<std::int32_t>(f.size())};
  const auto bits = f.bits();
  for (std::size_t x = 0; x < bits.size(); ++x) s.values[x] = bits[x] ? -1 : 1;
  fast_walsh_hadamard(s.values);
  return s;
}

WalshSpectrum walsh_transform_naive(const BooleanFunction& f) {
  if (f.n() > 12) throw BoolFunError("naive Walsh transform limited to n <= 12");
  const std::uint32_t m = static_cast<std::uint32_t>(f.size());
  WalshSpectrum s{f.n(), std::vector<std::int32_t>(m)};
  for (std::uint32_t a = 0; a < m; ++a) {
    std::int32_t sum = 0;
    for (std::uint32_t x = 0; x < m; ++x) {
      sum += ((f[x] ? 1 : 0) ^ parity(a & x)) ? -1 : 1;
    }
    s.values[a] = sum;
  }
  return s;
}

AutocorrelationSpectrum autocorrelation(const WalshSpectrum& spectrum) {
  std::vector<std::int64_t> sq(spectrum.values.size());
  for (std::size_t a = 0; a < sq.size(); ++a) {
    sq[a] = static_cast<std::int64_t>(spectrum.values[a]) * spectrum.values[a];
  }
  fast_walsh_hadamard(sq);
  AutocorrelationSpectrum ac{spectrum.n, std::vector<std::int32_t>(sq.size())};
  for (std::size_t s = 0; s < sq.size(); ++s) {
    ac.values[s] = static_cast<std::int32_t>(sq[s] >> spectrum.n);
  }
  return ac;
}

AutocorrelationSpectrum autocorrelation(const BooleanFunction& f) {
  return autocorrelation(walsh_transform_fast(f));
}

AutocorrelationSpectrum autocorrelation_naive(const BooleanFunction& f) {
  if (f.n() > 12) throw BoolFunError("naive autocorrelation limited to n <= 12");
  const std::uint32_t m = static_cast<std::uint32_t>(f.size());
  AutocorrelationSpectrum ac{f.n(), std::vector<std::int32_t>(m)};
  for (std::uint32_t s = 0; s < m; ++s) {
    std::int32_t sum = 0;
    for (std::uint32_t x = 0; x < m; ++x) sum += (f[x] != f[x ^ s]) ? -1 : 1;
    ac.values[s] = sum;
  }
  return ac;
}

AnfPolynomial mobius_transform(const BooleanFunction& f) {
  AnfPolynomial anf{f.n(), std::vector<std::uint8_t>(f.bits().begin(), f.bits().end())};
  auto& c = anf.coefficients;
  const std::size_t m = c.size();
  for (std::size_t h = 1; h < m; h <<= 1) {
    for (std::size_t i = 0; i < m; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) c[j + h] ^= c[j];
    }
  }
  return anf;
}

BooleanFunction truth_table_from_anf(const AnfPolynomial& anf) {
  auto coeffs = BooleanFunction::from_bits(anf.n, anf.coefficients);
  auto back = mobius_transform(coeffs);
  return BooleanFunction::from_bits(anf.n, std::move(back.coefficients));
}

int nonlinearity(const WalshSpectrum& spectrum) {
  return (1 << (spectrum.n - 1)) - spectrum.max_abs() / 2;
}

int algebraic_degree(const AnfPolynomial& anf) {
  int deg = 0;
  for (std::uint32_t mask = 0; mask < anf.coefficients.size(); ++mask) {
    if (anf.coefficients[mask]) deg = std::max(deg, popcount(mask));
  }
  return deg;
}

int absolute_indicator(const AutocorrelationSpectrum& ac) {
  std::int32_t best = 0;
  for (std::size_t s = 1; s < ac.values.size(); ++s) best = std::max(best, std::abs(ac.values[s]));
  return best;
}

int cidev(const WalshSpectrum& spectrum, int k) {
  check_order(k, spectrum.n, "correlation-immunity");
  std::int32_t best = 0;
  for (std::uint32_t a = 1; a < spectrum.values.size(); ++a) {
    if (popcount(a) <= k) best = std::max(best, std::abs(spectrum.values[a]));
  }
  return best;
}

int pcdev(const AutocorrelationSpectrum& ac, int l) {
  check_order(l, ac.n, "propagation-criterion");
  std::int32_t best = 0;
  for (std::uint32_t s = 1; s < ac.values.size(); ++s) {
    if (popcount(s) <= l) best = std::max(best, std::abs(ac.values[s]));
  }
  return best;
}

void apply_swap_delta(std::vector<std::int32_t>& values, std::size_t u, std::size_t v) {
  const auto uu = static_cast<std::uint32_t>(u);
  const auto vv = static_cast<std::uint32_t>(v);
  for (std::uint32_t a = 0; a < values.size(); ++a) {
    const int pu = parity(a & uu);
    const int pv = parity(a & vv);
    if (pu != pv) values[a] += pu ? -4 : 4;
  }
}

WalshSpectrum walsh_swap_delta(const BooleanFunction& f, const WalshSpectrum& spectrum,
                               std::size_t u, std::size_t v) {
  if (spectrum.values.size() != f.size()) throw BoolFunError("spectrum does not match function");
  if (u >= f.size() || v >= f.size() || !f[u] || f[v]) {
    throw BoolFunError("swap delta requires f(u) = 1 and f(v) = 0");
  }
  WalshSpectrum out = spectrum;
  apply_swap_delta(out.values, u, v);
  return out;
}

}  // namespace boolpso

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "boolpso/boolean_function.hpp"

namespace boolpso {

/// W_f(a) = sum_x (-1)^{f(x) + a.x}, indexed by a.
struct WalshSpectrum {
  int n = 0;
  std::vector<std::int32_t> values;

  std::int32_t max_abs() const;
  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

/// r_f(s) = sum_x (-1)^{f(x) + f(x ^ s)}, indexed by s.
struct AutocorrelationSpectrum {
  int n = 0;
  std::vector<std::int32_t> values;

  friend bool operator==(const AutocorrelationSpectrum&, const AutocorrelationSpectrum&) = default;
};

/// ANF coefficients; entry I is a_I with I the characteristic mask of the
/// monomial's variables (same bit convention as truth-table indices).
struct AnfPolynomial {
  int n = 0;
  std::vector<std::uint8_t> coefficients;

  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;
};

/// In-place butterfly over the sign vector, O(n 2^n).
WalshSpectrum walsh_transform_fast(const BooleanFunction& f);

/// Direct O(4^n) double sum. Test oracle; n must not exceed 12.
WalshSpectrum walsh_transform_naive(const BooleanFunction& f);

/// Wiener-Khinchin: inverse transform of W_f^2, scaled by 2^-n.
AutocorrelationSpectrum autocorrelation(const BooleanFunction& f);
AutocorrelationSpectrum autocorrelation(const WalshSpectrum& spectrum);

/// Direct O(4^n) enumeration of the derivatives. Test oracle; n <= 12.
AutocorrelationSpectrum autocorrelation_naive(const BooleanFunction& f);

AnfPolynomial mobius_transform(const BooleanFunction& f);
/// Möbius is an involution, so this recovers the truth table from the ANF.
BooleanFunction truth_table_from_anf(const AnfPolynomial& anf);

int nonlinearity(const WalshSpectrum& spectrum);
/// Constant-zero has degree 0.
int algebraic_degree(const AnfPolynomial& anf);
int absolute_indicator(const AutocorrelationSpectrum& ac);

/// Max |W_f(a)| over 1 <= wt(a) <= k. Zero iff f is CI(k).
int cidev(const WalshSpectrum& spectrum, int k);
/// Max |r_f(s)| over 1 <= wt(s) <= l. Zero iff f satisfies PC(l).
int pcdev(const AutocorrelationSpectrum& ac, int l);

/// Spectrum of f after exchanging f(u) = 1 with f(v) = 0. Each entry moves by
/// 2[(-1)^{a.u} - (-1)^{a.v}]; O(2^n).
WalshSpectrum walsh_swap_delta(const BooleanFunction& f, const WalshSpectrum& spectrum,
                               std::size_t u, std::size_t v);

/// In-place variant of walsh_swap_delta without the precondition check.
void apply_swap_delta(std::vector<std::int32_t>& values, std::size_t u, std::size_t v);

}  // namespace boolpso

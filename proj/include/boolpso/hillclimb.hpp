#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "boolpso/boolean_function.hpp"
#include "boolpso/rng.hpp"
#include "boolpso/spectra.hpp"

namespace boolpso {

inline constexpr int kDefaultHcBudget = 50;

struct ClimbStats {
  std::size_t accepted = 0;
  std::size_t evaluated = 0;  // candidate swaps judged
};

struct ClimbResult {
  BooleanFunction function;
  ClimbStats stats;
};

/// Direction of a quantity after a candidate swap: -1 down, 0 same, +1 up.
struct SwapEffect {
  int nl_change = 0;
  int cidev_change = 0;  // always 0 when the evaluator has no CI order
};

/// Judges (1-bit, 0-bit) swaps of a balanced function incrementally.
///
/// Only Walsh coefficients within 8 of the current maximum (and, for the CI
/// target, low-weight coefficients within 8 of cidev_k) can decide whether a
/// swap raises or lowers those maxima, since one swap moves every coefficient
/// by 0 or +-4. Judging a swap therefore touches only those watched entries.
class SwapEvaluator {
 public:
  /// ci_order = 0 judges nonlinearity alone; otherwise 1 <= ci_order <= n.
  SwapEvaluator(BooleanFunction f, int ci_order);

  const BooleanFunction& function() const { return f_; }
  const WalshSpectrum& spectrum() const { return walsh_; }
  int ci_order() const { return ci_order_; }
  int nonlinearity() const { return (1 << (f_.n() - 1)) - wmax_ / 2; }
  int cidev() const { return cidev_; }

  /// u must hold a 1 and v a 0.
  SwapEffect effect(std::size_t u, std::size_t v) const;

  /// Nl-only: Nl strictly rises. With a CI order: cidev_k falls and Nl does
  /// not, or cidev_k does not rise and Nl strictly rises.
  bool accepts(const SwapEffect& e) const;

  void apply(std::size_t u, std::size_t v);

  /// Groups of candidate positions. Every accepted swap (u, v) has u in the
  /// ones and v in the zeros of at least one block.
  struct CandidateBlock {
    std::vector<std::uint32_t> ones;
    std::vector<std::uint32_t> zeros;
  };
  std::vector<CandidateBlock> candidate_blocks() const;

 private:
  struct Watched {
    std::uint32_t a;
    std::int32_t w;
  };

  void rebuild();
  CandidateBlock block_lowering(const std::vector<Watched>& watched, std::int32_t level) const;

  BooleanFunction f_;
  int ci_order_;
  WalshSpectrum walsh_;
  std::vector<std::uint32_t> low_weight_;
  std::int32_t wmax_ = 0;
  std::int32_t cidev_ = 0;
  std::vector<Watched> top_;
  std::vector<Watched> ci_top_;
};

/// Raises nonlinearity by swapping a 1-bit with a 0-bit until no improving
/// swap exists or `budget` swaps were accepted. Throws on unbalanced input.
ClimbResult nl_hc(const BooleanFunction& f, int budget, RngStream& rng);

/// Lexicographic climb on (cidev_k, Nl); see SwapEvaluator::accepts.
ClimbResult nl_ci_hc(const BooleanFunction& f, int k, int budget, RngStream& rng);

}  // namespace boolpso

#include "boolpso/hillclimb.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace boolpso {

namespace {

int sign(std::int32_t v) { return (v > 0) - (v < 0); }

// Max |w + delta| over the watched entries for the swap (u, v).
template <typename Watched>
std::int32_t watched_max_after(const std::vector<Watched>& watched, std::uint32_t u,
                               std::uint32_t v) {
  std::int32_t best = 0;
  for (const auto& e : watched) {
    const int pu = parity(e.a & u);
    const int pv = parity(e.a & v);
    std::int32_t w = e.w;
    if (pu != pv) w += pu ? -4 : 4;
    best = std::max(best, std::abs(w));
  }
  return best;
}

ClimbResult climb(const BooleanFunction& f, int ci_order, int budget, RngStream& rng) {
  if (!f.balanced()) throw BoolFunError("hill climbing requires a balanced function");
  if (budget < 0) throw BoolFunError("hill-climbing budget must be non-negative");

  SwapEvaluator ev(f, ci_order);
  ClimbStats stats;
  while (stats.accepted < static_cast<std::size_t>(budget)) {
    auto blocks = ev.candidate_blocks();
    rng.shuffle(std::span(blocks));
    bool moved = false;
    for (auto& block : blocks) {
      rng.shuffle(std::span(block.ones));
      rng.shuffle(std::span(block.zeros));
      for (auto u : block.ones) {
        for (auto v : block.zeros) {
          ++stats.evaluated;
          if (ev.accepts(ev.effect(u, v))) {
            ev.apply(u, v);
            moved = true;
            break;
          }
        }
        if (moved) break;
      }
      if (moved) break;
    }
    if (!moved) break;
    ++stats.accepted;
  }
  return {ev.function(), stats};
}

}  // namespace

SwapEvaluator::SwapEvaluator(BooleanFunction f, int ci_order)
    : f_(std::move(f)), ci_order_(ci_order) {
  if (ci_order_ < 0 || ci_order_ > f_.n()) {
    throw BoolFunError("correlation-immunity order " + std::to_string(ci_order_) +
                       " outside [1, " + std::to_string(f_.n()) + "]");
  }
  walsh_ = walsh_transform_fast(f_);
  if (ci_order_ > 0) {
    for (std::uint32_t a = 1; a < f_.size(); ++a) {
      if (popcount(a) <= ci_order_) low_weight_.push_back(a);
    }
  }
  rebuild();
}

void SwapEvaluator::rebuild() {
  wmax_ = walsh_.max_abs();
  top_.clear();
  for (std::uint32_t a = 0; a < walsh_.values.size(); ++a) {
    if (std::abs(walsh_.values[a]) > wmax_ - 8) top_.push_back({a, walsh_.values[a]});
  }
  cidev_ = 0;
  ci_top_.clear();
  if (ci_order_ == 0) return;
  for (auto a : low_weight_) cidev_ = std::max(cidev_, std::abs(walsh_.values[a]));
  for (auto a : low_weight_) {
    if (std::abs(walsh_.values[a]) > cidev_ - 8) ci_top_.push_back({a, walsh_.values[a]});
  }
}

SwapEffect SwapEvaluator::effect(std::size_t u, std::size_t v) const {
  const auto uu = static_cast<std::uint32_t>(u);
  const auto vv = static_cast<std::uint32_t>(v);
  SwapEffect e;
  // A larger Walsh maximum means a smaller nonlinearity.
  e.nl_change = -sign(watched_max_after(top_, uu, vv) - wmax_);
  if (ci_order_ > 0) e.cidev_change = sign(watched_max_after(ci_top_, uu, vv) - cidev_);
  return e;
}

bool SwapEvaluator::accepts(const SwapEffect& e) const {
  if (ci_order_ == 0) return e.nl_change > 0;
  return (e.cidev_change < 0 && e.nl_change >= 0) || (e.cidev_change <= 0 && e.nl_change > 0);
}

void SwapEvaluator::apply(std::size_t u, std::size_t v) {
  if (!f_[u] || f_[v]) throw BoolFunError("swap requires f(u) = 1 and f(v) = 0");
  apply_swap_delta(walsh_.values, u, v);
  f_.swap_bits(u, v);
  rebuild();
}

SwapEvaluator::CandidateBlock SwapEvaluator::block_lowering(const std::vector<Watched>& watched,
                                                            std::int32_t level) const {
  // Lowering |W(a)| for W(a) > 0 needs a.u = 1 and a.v = 0; for W(a) < 0 the
  // reverse. The conditions on u and on v are independent.
  std::vector<Watched> peak;
  for (const auto& e : watched) {
    if (std::abs(e.w) == level) peak.push_back(e);
  }
  CandidateBlock block;
  for (std::uint32_t x = 0; x < f_.size(); ++x) {
    const bool one = f_[x];
    bool ok = true;
    for (const auto& e : peak) {
      const bool positive = e.w > 0;
      if ((parity(e.a & x) != 0) != (one ? positive : !positive)) {
        ok = false;
        break;
      }
    }
    if (ok) (one ? block.ones : block.zeros).push_back(x);
  }
  return block;
}

std::vector<SwapEvaluator::CandidateBlock> SwapEvaluator::candidate_blocks() const {
  std::vector<CandidateBlock> blocks;
  auto add = [&blocks](CandidateBlock b) {
    if (!b.ones.empty() && !b.zeros.empty()) blocks.push_back(std::move(b));
  };
  add(block_lowering(top_, wmax_));
  if (ci_order_ > 0 && cidev_ > 0) add(block_lowering(ci_top_, cidev_));
  return blocks;
}

ClimbResult nl_hc(const BooleanFunction& f, int budget, RngStream& rng) {
  return climb(f, 0, budget, rng);
}

ClimbResult nl_ci_hc(const BooleanFunction& f, int k, int budget, RngStream& rng) {
  if (k < 1 || k > f.n()) throw BoolFunError("correlation-immunity order out of range");
  return climb(f, k, budget, rng);
}

}  // namespace boolpso

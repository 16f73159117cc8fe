#include "boolpso/fitness.hpp"

#include <algorithm>

namespace boolpso {

std::string_view to_string(FitnessKind kind) {
  switch (kind) {
    case FitnessKind::kFit1:
      return "fit1";
    case FitnessKind::kFit2:
      return "fit2";
    case FitnessKind::kFit3:
      return "fit3";
  }
  return "?";
}

std::optional<FitnessKind> parse_fitness_kind(std::string_view text) {
  if (text == "fit1") return FitnessKind::kFit1;
  if (text == "fit2") return FitnessKind::kFit2;
  if (text == "fit3") return FitnessKind::kFit3;
  return std::nullopt;
}

int hill_climb_ci_order(FitnessKind kind) {
  switch (kind) {
    case FitnessKind::kFit1:
      return 1;
    case FitnessKind::kFit2:
      return 2;
    case FitnessKind::kFit3:
      return 0;
  }
  return 0;
}

double evaluate(FitnessKind kind, const WalshSpectrum& walsh) {
  if (walsh.values.empty() || walsh.values[0] != 0) {
    throw BoolFunError("fitness is only defined for balanced functions");
  }
  const int nl = nonlinearity(walsh);
  switch (kind) {
    case FitnessKind::kFit1: {
      const auto ac = autocorrelation(walsh);
      return nl - cidev(walsh, 1) / 4.0 - pcdev(ac, 1) / 8.0;
    }
    case FitnessKind::kFit2:
      return nl - cidev(walsh, std::min(2, walsh.n));
    case FitnessKind::kFit3:
      return nl - absolute_indicator(autocorrelation(walsh));
  }
  return 0.0;
}

double evaluate(FitnessKind kind, const BooleanFunction& f) {
  return evaluate(kind, walsh_transform_fast(f));
}

}  // namespace boolpso

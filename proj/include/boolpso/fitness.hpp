#pragma once

#include <optional>
#include <string_view>

#include "boolpso/boolean_function.hpp"
#include "boolpso/spectra.hpp"

namespace boolpso {

/// FIT1 = Nl - cidev_1/4 - pcdev_1/8, FIT2 = Nl - cidev_2, FIT3 = Nl - AC_max.
enum class FitnessKind { kFit1, kFit2, kFit3 };

std::string_view to_string(FitnessKind kind);
std::optional<FitnessKind> parse_fitness_kind(std::string_view text);

/// Correlation-immunity order the matching hill climber targets; 0 means the
/// plain nonlinearity climber (FIT3).
int hill_climb_ci_order(FitnessKind kind);

/// Requires a balanced function; throws BoolFunError otherwise.
double evaluate(FitnessKind kind, const BooleanFunction& f);
double evaluate(FitnessKind kind, const WalshSpectrum& walsh);

}  // namespace boolpso

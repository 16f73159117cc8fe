#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boolpso/boolean_function.hpp"
#include "boolpso/spectra.hpp"

namespace boolpso {

/// Full cryptographic profile of one function, derived from a single Walsh
/// and autocorrelation computation.
struct PropertyReport {
  int n = 0;
  bool balanced = false;
  int nonlinearity = 0;
  int degree = 0;
  std::map<int, int> cidev;  // order k -> cidev_k
  std::map<int, int> pcdev;  // order l -> pcdev_l
  int absolute_indicator = 0;
  std::optional<int> resiliency_order;
  std::optional<int> pc_order;
};

PropertyReport property_report(const BooleanFunction& f, int k_max, int l_max);

struct BoundFinding {
  std::string name;
  bool applicable = false;
  bool satisfied = true;
  bool tight = false;  // holds with equality
  long lhs = 0;
  long rhs = 0;
};

/// Siegenthaler (deg <= n-1-k), Sarkar-Maitra (Nl <= 2^{n-1} - 2^{k+1}) and
/// CI-PC (k + l <= n - 1) evaluated on the orders the report achieved. A
/// balanced function counts as 0-resilient. The two resiliency bounds apply
/// for k <= n - 2; the CI-PC bound needs k >= 1 and l >= 1.
std::vector<BoundFinding> check_bounds(const PropertyReport& report);

bool bounds_hold(const std::vector<BoundFinding>& findings);

}  // namespace boolpso

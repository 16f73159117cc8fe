#include "boolpso/properties.hpp"

#include <algorithm>
#include <cstdlib>

namespace boolpso {

namespace {

// Prefix maxima of |values| grouped by Hamming weight of the index:
// out[k] = max |values[a]| over 1 <= wt(a) <= k.
std::vector<int> prefix_max_by_weight(const std::vector<std::int32_t>& values, int n) {
  std::vector<int> by_weight(n + 1, 0);
  for (std::uint32_t a = 1; a < values.size(); ++a) {
    auto& slot = by_weight[popcount(a)];
    slot = std::max(slot, std::abs(values[a]));
  }
  for (int k = 2; k <= n; ++k) by_weight[k] = std::max(by_weight[k], by_weight[k - 1]);
  return by_weight;
}

}  // namespace

PropertyReport property_report(const BooleanFunction& f, int k_max, int l_max) {
  const int n = f.n();
  if (k_max < 0 || k_max > n || l_max < 0 || l_max > n) {
    throw BoolFunError("report orders must lie in [0, n]");
  }
  const auto walsh = walsh_transform_fast(f);
  const auto ac = autocorrelation(walsh);

  PropertyReport r;
  r.n = n;
  r.balanced = walsh.values[0] == 0;
  r.nonlinearity = nonlinearity(walsh);
  r.degree = algebraic_degree(mobius_transform(f));
  r.absolute_indicator = absolute_indicator(ac);

  const auto ci = prefix_max_by_weight(walsh.values, n);
  const auto pc = prefix_max_by_weight(ac.values, n);
  for (int k = 1; k <= k_max; ++k) r.cidev[k] = ci[k];
  for (int l = 1; l <= l_max; ++l) r.pcdev[l] = pc[l];
  for (int k = 1; k <= n; ++k) {
    if (r.balanced && ci[k] == 0) r.resiliency_order = k;
    if (pc[k] == 0) r.pc_order = k;
  }
  return r;
}

std::vector<BoundFinding> check_bounds(const PropertyReport& report) {
  const int n = report.n;
  std::vector<BoundFinding> out;

  const std::optional<int> k =
      report.resiliency_order ? report.resiliency_order : (report.balanced ? std::optional<int>(0)
                                                                           : std::nullopt);
  const bool resiliency_applies = k.has_value() && *k <= n - 2;

  BoundFinding siegenthaler{"siegenthaler"};
  siegenthaler.applicable = resiliency_applies;
  if (resiliency_applies) {
    siegenthaler.lhs = report.degree;
    siegenthaler.rhs = n - 1 - *k;
  }
  out.push_back(siegenthaler);

  BoundFinding sarkar_maitra{"sarkar_maitra"};
  sarkar_maitra.applicable = resiliency_applies;
  if (resiliency_applies) {
    sarkar_maitra.lhs = report.nonlinearity;
    sarkar_maitra.rhs = (1L << (n - 1)) - (1L << (*k + 1));
  }
  out.push_back(sarkar_maitra);

  BoundFinding ci_pc{"ci_pc"};
  ci_pc.applicable = k.has_value() && *k >= 1 && report.pc_order.has_value();
  if (ci_pc.applicable) {
    ci_pc.lhs = *k + *report.pc_order;
    ci_pc.rhs = n - 1;
  }
  out.push_back(ci_pc);

  for (auto& b : out) {
    if (!b.applicable) continue;
    b.satisfied = b.lhs <= b.rhs;
    b.tight = b.lhs == b.rhs;
  }
  return out;
}

bool bounds_hold(const std::vector<BoundFinding>& findings) {
  return std::all_of(findings.begin(), findings.end(),
                     [](const BoundFinding& b) { return !b.applicable || b.satisfied; });
}

}  // namespace boolpso

#include "featexpl/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace featexpl {

DivergenceReport diagnose(const ShapleyExplanation& shap, const MssExplanation& mss,
                          const std::vector<SubsetMask>& disjoint, GameOracle& oracle) {
  const std::size_t n = oracle.size();
  if (shap.weights.size() != n)
    throw ContractError("explanation length does not match instance length");
  for (const SubsetMask& m : mss.subsets)
    if (m.size() != n) throw ContractError("mss mask width does not match instance length");
  for (const SubsetMask& m : disjoint)
    if (m.size() != n) throw ContractError("disjoint mask width does not match instance length");

  DivergenceReport report;
  report.report_threshold = 0.05 * std::fabs(shap.prediction - shap.baseline);

  std::vector<bool> in_some_mss(n, false);
  for (const SubsetMask& m : mss.subsets)
    for (std::size_t p : m.positions()) in_some_mss[p] = true;

  const SubsetMask full = SubsetMask::full_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(shap.weights[i]) <= report.report_threshold) continue;
    if (in_some_mss[i]) continue;
    // Only report features whose redundancy the oracle confirms: occluding
    // the feature alone keeps the prediction within the tolerance.
    const double dropped = oracle.evaluate_subset(full.without(i));
    if (same_prediction(dropped, shap.prediction, mss.tolerance))
      report.redundant_features.push_back(i);
  }

  bool has_positive = false, has_negative = false;
  for (double w : shap.weights) {
    if (w > 0) report.positive_mass += w;
    if (w < 0) report.negative_mass += w;
    if (w > report.report_threshold) has_positive = true;
    if (w < -report.report_threshold) has_negative = true;
  }
  report.cancellation_present = has_positive && has_negative;

  report.mss_count = mss.subsets.size();
  report.multiple_mss = report.mss_count > 1;
  report.disjoint_count = disjoint.size();
  report.disjoint_incomplete = report.disjoint_count < report.mss_count;

  report.ranking.resize(n);
  for (std::size_t i = 0; i < n; ++i) report.ranking[i] = i;
  std::stable_sort(report.ranking.begin(), report.ranking.end(),
                   [&shap](std::size_t a, std::size_t b) {
                     return std::fabs(shap.weights[a]) > std::fabs(shap.weights[b]);
                   });
  return report;
}

}  // namespace featexpl

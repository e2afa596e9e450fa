#pragma once

#include <vector>

#include "featexpl/mss.hpp"
#include "featexpl/shapley.hpp"

namespace featexpl {

/// Cross-examination of the two explanation types for one prediction.
struct DivergenceReport {
  /// Positions whose absolute weight exceeds the report threshold, that
  /// appear in no minimal sufficient subset, and whose sole occlusion leaves
  /// the prediction within the tolerance (verified against the oracle).
  std::vector<std::size_t> redundant_features;

  /// Some weight above +threshold and some below -threshold.
  bool cancellation_present = false;
  double positive_mass = 0.0;  // sum of positive weights
  double negative_mass = 0.0;  // sum of negative weights

  bool multiple_mss = false;
  std::size_t mss_count = 0;

  /// Disjoint retrieval returned fewer subsets than the full enumeration.
  bool disjoint_incomplete = false;
  std::size_t disjoint_count = 0;

  /// All positions by descending |weight|, ties by ascending position.
  std::vector<std::size_t> ranking;

  double report_threshold = 0.0;
};

/// Pre: all three explanations were computed from this oracle. The report
/// threshold defaults to 0.05 of the prediction-baseline gap.
DivergenceReport diagnose(const ShapleyExplanation& shap, const MssExplanation& mss,
                          const std::vector<SubsetMask>& disjoint, GameOracle& oracle);

}  // namespace featexpl

#pragma once

#include <vector>

#include "featexpl/oracle.hpp"

namespace featexpl {

/// The complete set of minimal sufficient subsets under a tolerance: every
/// member S has |v(S) - v(full)| < tolerance, none of its proper subsets
/// does, no member contains another, and every mask satisfying both
/// conditions is present. Subsets are ordered by ascending cardinality, then
/// ascending position order.
struct MssExplanation {
  double tolerance = 0.0;
  double prediction = 0.0;  // v(full)
  std::vector<SubsetMask> subsets;
};

/// "Same prediction" under the tolerance: strict |a - b| < tolerance, made
/// robust to value noise at the kValueEpsilon scale. Values equal within
/// kValueEpsilon are the same prediction for any positive tolerance; a
/// difference within kValueEpsilon of the tolerance itself sits on the
/// boundary and is NOT the same prediction (the comparison stays strict).
bool same_prediction(double a, double b, double tolerance);

/// True iff |v(mask) - v(full)| < tolerance (strict, via same_prediction).
bool is_sufficient(GameOracle& oracle, const SubsetMask& mask, double tolerance);

/// Exhaustive enumeration over the relevant features; dummies never appear
/// in any minimal sufficient subset. Throws CapacityError past the cap and
/// ContractError for tolerance <= 0.
MssExplanation enumerate_mss(GameOracle& oracle, double tolerance);

/// Greedy disjoint retrieval: find one minimal sufficient subset (smallest
/// cardinality, position-order tiebreak), remove its features from the
/// available pool, repeat until the remaining pool holds no sufficient
/// subset. Sufficiency is always judged against the original full
/// prediction. The returned subsets are pairwise disjoint; the retrieval may
/// miss minimal sufficient subsets that share features with earlier picks.
std::vector<SubsetMask> disjoint_mss(GameOracle& oracle, double tolerance);

}  // namespace featexpl

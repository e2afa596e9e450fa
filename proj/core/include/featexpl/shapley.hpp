#pragma once

#include <cstdint>
#include <vector>

#include "featexpl/oracle.hpp"

namespace featexpl {

struct ShapleyMethod {
  enum class Kind { exact, sampled };
  Kind kind = Kind::exact;
  std::uint32_t permutations = 0;  // sampled only
  std::uint64_t seed = 0;          // sampled only
  bool operator==(const ShapleyMethod&) const = default;
};

/// Per-position importance weights plus the game's endpoints. Under the exact
/// method, dummy positions carry exactly 0 and the weights satisfy
/// efficiency: sum = prediction - baseline (within kValueEpsilon).
struct ShapleyExplanation {
  std::vector<double> weights;  // one per instance position
  double baseline = 0.0;        // v(empty)
  double prediction = 0.0;      // v(full)
  ShapleyMethod method;
};

/// Exact Shapley attribution: the combinatorially weighted sum of marginal
/// contributions over all coalitions of relevant features. Dummies are pruned
/// first and assigned weight 0; results are identical to enumerating the full
/// instance. Throws CapacityError past kExhaustiveCap.
ShapleyExplanation exact_shapley(GameOracle& oracle);

/// Permutation-sampling approximation: averages each relevant feature's
/// marginal contribution over uniformly drawn permutations, antithetic pairs
/// (every second permutation is the previous one reversed) for variance
/// reduction. Identical (seed, permutations) reproduce identical output
/// bit for bit; the estimate converges to exact_shapley as permutations grow.
ShapleyExplanation sampled_shapley(GameOracle& oracle, std::uint32_t permutations,
                                   std::uint64_t seed);

/// Axiom check over an exact explanation, by exhaustive enumeration of the
/// relevant coalitions:
///   local accuracy — the weights sum to prediction - baseline;
///   missingness    — provably dummy positions carry weight exactly 0;
///   symmetry       — positions with identical marginal contributions across
///                    all coalitions carry equal weights.
struct AxiomReport {
  bool local_accuracy = false;
  double accuracy_gap = 0.0;  // |sum - (prediction - baseline)|
  bool missingness = false;
  std::vector<std::size_t> offending_dummies;
  bool symmetry = false;
  std::vector<std::pair<std::size_t, std::size_t>> offending_pairs;

  bool all_pass() const { return local_accuracy && missingness && symmetry; }
};

/// Pre: expl was produced by the exact method on this oracle.
AxiomReport check_axioms(const ShapleyExplanation& expl, GameOracle& oracle);

}  // namespace featexpl

#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "featexpl/types.hpp"

namespace featexpl {

/// A subset-evaluation game's payoff function: a model scored on an instance
/// with some features eliminated. Implementations must be pure functions of
/// (instance, mask, policy) and are freely shareable across threads.
class Model {
public:
  virtual ~Model() = default;

  /// Prediction with exactly the masked-out features eliminated per policy.
  virtual double predict(const Instance& instance, const SubsetMask& mask,
                         OcclusionPolicy policy) const = 0;

  /// Rejects instances this model cannot score (wrong payload kind, wrong
  /// arity). Throws ContractError.
  virtual void check_instance(const Instance& instance) const = 0;
};

/// Memoizing wrapper around one (model, instance, policy) triple. This is the
/// set function v(S) every explainer consumes: v(full) is the prediction on
/// the unmodified instance, v(empty) the baseline.
///
/// The cache is unsynchronized single-writer. Concurrent reads of an already
/// filled cache are safe; concurrent cache-filling evaluations must be
/// serialized externally.
class GameOracle {
public:
  GameOracle(const Model& model, Instance instance,
             OcclusionPolicy policy = OcclusionPolicy::occlude);

  /// v(mask), cached. Repeated evaluation of one mask returns bit-identical
  /// values. Model failures propagate as EvalError with the mask attached.
  double evaluate_subset(const SubsetMask& mask);

  double full_value() { return evaluate_subset(SubsetMask::full_of(size())); }
  double baseline() { return evaluate_subset(SubsetMask::empty_of(size())); }

  const Instance& instance() const { return instance_; }
  const Model& model() const { return *model_; }
  OcclusionPolicy policy() const { return policy_; }
  std::size_t size() const { return instance_.size(); }

  /// Distinct model invocations so far; cache hits do not count.
  std::size_t eval_count() const { return eval_count_; }

private:
  const Model* model_;
  Instance instance_;
  OcclusionPolicy policy_;
  std::unordered_map<SubsetMask, double, SubsetMaskHash> cache_;
  std::size_t eval_count_ = 0;
};

/// Positions i for which some coalition S has v(S ∪ {i}) ≠ v(S), found by
/// exhaustive enumeration of all 2^n masks. Every excluded position is
/// provably a dummy: zero Shapley weight, member of no minimal sufficient
/// subset. Throws CapacityError when the instance exceeds kExhaustiveCap.
std::vector<std::size_t> relevant_features(GameOracle& oracle);

namespace detail {

/// Dense table of the game restricted to the relevant positions, with every
/// dummy position held present (a dummy's presence never changes the value).
/// Index: bit k of the table index is presence of positions[k].
struct RelevantGame {
  std::vector<std::size_t> positions;
  std::vector<double> value;  // size 1 << positions.size()
  double full() const { return value.back(); }
  double base() const { return value.front(); }
};

RelevantGame build_relevant_game(GameOracle& oracle);

/// Same dense layout over an explicit position set (used for pooled
/// re-enumeration); dummies and positions outside `positions` are held to
/// `outside`, which must be wide enough for the oracle.
RelevantGame build_game_over(GameOracle& oracle, const std::vector<std::size_t>& positions,
                             const SubsetMask& outside);

}  // namespace detail

}  // namespace featexpl

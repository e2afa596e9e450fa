#include "featexpl/oracle.hpp"

#include <cmath>
#include <string>

namespace featexpl {

GameOracle::GameOracle(const Model& model, Instance instance, OcclusionPolicy policy)
    : model_(&model), instance_(std::move(instance)), policy_(policy) {
  model_->check_instance(instance_);
}

double GameOracle::evaluate_subset(const SubsetMask& mask) {
  if (mask.size() != size())
    throw ContractError("mask width " + std::to_string(mask.size()) +
                        " does not match instance length " + std::to_string(size()));
  auto it = cache_.find(mask);
  if (it != cache_.end()) return it->second;
  double v = 0.0;
  try {
    v = model_->predict(instance_, mask, policy_);
  } catch (const EvalError&) {
    throw;
  } catch (const std::exception& e) {
    throw EvalError(e.what(), to_string(mask));
  }
  ++eval_count_;
  cache_.emplace(mask, v);
  return v;
}

namespace detail {

RelevantGame build_game_over(GameOracle& oracle, const std::vector<std::size_t>& positions,
                             const SubsetMask& outside) {
  if (positions.size() > kExhaustiveCap)
    throw CapacityError("exact enumeration over " + std::to_string(positions.size()) +
                        " features exceeds the cap of " + std::to_string(kExhaustiveCap));
  RelevantGame game;
  game.positions = positions;
  const std::size_t r = positions.size();
  game.value.resize(std::size_t{1} << r);
  SubsetMask mask = outside;
  for (std::size_t p : positions) mask.set(p, false);
  for (std::size_t bits = 0; bits < game.value.size(); ++bits) {
    SubsetMask m = mask;
    for (std::size_t k = 0; k < r; ++k)
      if ((bits >> k) & 1u) m.set(positions[k]);
    game.value[bits] = oracle.evaluate_subset(m);
  }
  return game;
}

RelevantGame build_relevant_game(GameOracle& oracle) {
  return build_game_over(oracle, relevant_features(oracle),
                         SubsetMask::full_of(oracle.size()));
}

}  // namespace detail

std::vector<std::size_t> relevant_features(GameOracle& oracle) {
  const std::size_t n = oracle.size();
  if (n > kExhaustiveCap)
    throw CapacityError("instance length " + std::to_string(n) + " exceeds the exhaustive cap of " +
                        std::to_string(kExhaustiveCap));
  // Full 2^n table, then a position is relevant iff some marginal is nonzero.
  std::vector<double> table(std::size_t{1} << n);
  for (std::size_t bits = 0; bits < table.size(); ++bits) {
    SubsetMask m(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((bits >> i) & 1u) m.set(i);
    table[bits] = oracle.evaluate_subset(m);
  }
  std::vector<std::size_t> relevant;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t bits = 0; bits < table.size(); ++bits) {
      if (bits & bit) continue;
      if (std::fabs(table[bits | bit] - table[bits]) > kValueEpsilon) {
        relevant.push_back(i);
        break;
      }
    }
  }
  return relevant;
}

}  // namespace featexpl

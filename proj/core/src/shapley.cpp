#include "featexpl/shapley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace featexpl {

namespace {

// |S|!(r-|S|-1)!/r! as 1/(r * C(r-1, s)); C(19, 9) < 2^17, so the division
// is exact in the integer part and correct to 1 ulp overall.
std::vector<double> subset_coefficients(std::size_t r) {
  std::vector<double> coef(r);
  for (std::size_t s = 0; s < r; ++s) {
    // C(r-1, s)
    std::uint64_t binom = 1;
    for (std::size_t k = 1; k <= s; ++k)
      binom = binom * (r - 1 - (k - 1)) / k;
    coef[s] = 1.0 / (static_cast<double>(r) * static_cast<double>(binom));
  }
  return coef;
}

}  // namespace

ShapleyExplanation exact_shapley(GameOracle& oracle) {
  const detail::RelevantGame game = detail::build_relevant_game(oracle);
  const std::size_t r = game.positions.size();

  ShapleyExplanation out;
  out.weights.assign(oracle.size(), 0.0);
  out.baseline = oracle.baseline();
  out.prediction = oracle.full_value();
  out.method = {ShapleyMethod::Kind::exact, 0, 0};

  if (r == 0) return out;
  const std::vector<double> coef = subset_coefficients(r);
  const std::size_t table_size = std::size_t{1} << r;
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t bit = std::size_t{1} << k;
    double w = 0.0;
    for (std::size_t bits = 0; bits < table_size; ++bits) {
      if (bits & bit) continue;
      const std::size_t s = static_cast<std::size_t>(std::popcount(bits));
      w += coef[s] * (game.value[bits | bit] - game.value[bits]);
    }
    out.weights[game.positions[k]] = w;
  }
  return out;
}

ShapleyExplanation sampled_shapley(GameOracle& oracle, std::uint32_t permutations,
                                   std::uint64_t seed) {
  if (permutations == 0) throw ContractError("permutations must be at least 1");
  const std::vector<std::size_t> relevant = relevant_features(oracle);

  ShapleyExplanation out;
  out.weights.assign(oracle.size(), 0.0);
  out.baseline = oracle.baseline();
  out.prediction = oracle.full_value();
  out.method = {ShapleyMethod::Kind::sampled, permutations, seed};

  const std::size_t r = relevant.size();
  if (r == 0) return out;

  // Start every walk from the dummies-present coalition; dummy presence
  // never changes the value, so marginals match the full-instance game.
  SubsetMask rest = SubsetMask::full_of(oracle.size());
  for (std::size_t p : relevant) rest.set(p, false);
  const double base_value = oracle.evaluate_subset(rest);

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order = relevant;
  std::vector<double> acc(r, 0.0);
  std::vector<std::size_t> index_of(oracle.size(), 0);
  for (std::size_t k = 0; k < r; ++k) index_of[relevant[k]] = k;

  for (std::uint32_t p = 0; p < permutations; ++p) {
    if (p % 2 == 0) {
      // Fisher-Yates with explicit bounded draws; the permutation stream
      // depends only on the engine state.
      for (std::size_t i = r - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(order[i], order[j]);
      }
    } else {
      std::reverse(order.begin(), order.end());  // antithetic partner
    }
    SubsetMask current = rest;
    double prev = base_value;
    for (std::size_t pos : order) {
      current.set(pos);
      const double v = oracle.evaluate_subset(current);
      acc[index_of[pos]] += v - prev;
      prev = v;
    }
  }
  for (std::size_t k = 0; k < r; ++k)
    out.weights[relevant[k]] = acc[k] / static_cast<double>(permutations);
  return out;
}

AxiomReport check_axioms(const ShapleyExplanation& expl, GameOracle& oracle) {
  if (expl.method.kind != ShapleyMethod::Kind::exact)
    throw ContractError("check_axioms applies to exact explanations only");
  if (expl.weights.size() != oracle.size())
    throw ContractError("explanation length does not match instance length");

  AxiomReport report;

  double sum = 0.0;
  for (double w : expl.weights) sum += w;
  report.accuracy_gap = std::fabs(sum - (expl.prediction - expl.baseline));
  report.local_accuracy = report.accuracy_gap <= kValueEpsilon;

  const detail::RelevantGame game = detail::build_relevant_game(oracle);
  const std::size_t r = game.positions.size();

  report.missingness = true;
  std::vector<bool> is_relevant(oracle.size(), false);
  for (std::size_t p : game.positions) is_relevant[p] = true;
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    if (!is_relevant[i] && expl.weights[i] != 0.0) {
      report.missingness = false;
      report.offending_dummies.push_back(i);
    }
  }

  // Symmetry over the relevant coalitions: identical marginals across all
  // masks of the others must yield equal weights.
  report.symmetry = true;
  const std::size_t table_size = std::size_t{1} << r;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      const std::size_t bit_a = std::size_t{1} << a;
      const std::size_t bit_b = std::size_t{1} << b;
      bool interchangeable = true;
      for (std::size_t bits = 0; bits < table_size && interchangeable; ++bits) {
        if (bits & (bit_a | bit_b)) continue;
        if (std::fabs(game.value[bits | bit_a] - game.value[bits | bit_b]) > kValueEpsilon)
          interchangeable = false;
      }
      if (!interchangeable) continue;
      const double wa = expl.weights[game.positions[a]];
      const double wb = expl.weights[game.positions[b]];
      if (std::fabs(wa - wb) > kValueEpsilon) {
        report.symmetry = false;
        report.offending_pairs.emplace_back(game.positions[a], game.positions[b]);
      }
    }
  }
  return report;
}

}  // namespace featexpl

#pragma once

// Test-side oracles and generators. These stay independent of the library's
// computation paths: the permutation average walks actual permutations, the
// naive MSS search tests every mask against every proper subset, and both
// only use GameOracle::evaluate_subset.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "featexpl/featexpl.hpp"

namespace testsupport {

using namespace featexpl;

// Dense table of v over subsets of `positions`, everything else absent.
inline std::vector<double> dense_table(GameOracle& oracle,
                                       const std::vector<std::size_t>& positions) {
  const std::size_t r = positions.size();
  std::vector<double> table(std::size_t{1} << r);
  for (std::size_t bits = 0; bits < table.size(); ++bits) {
    SubsetMask m(oracle.size());
    for (std::size_t k = 0; k < r; ++k)
      if ((bits >> k) & 1u) m.set(positions[k]);
    table[bits] = oracle.evaluate_subset(m);
  }
  return table;
}

// Average marginal contribution over ALL permutations of `positions`,
// walking each permutation front to back. Independent route to the Shapley
// value. Positions outside the set are held absent throughout.
inline std::vector<double> all_permutation_average(GameOracle& oracle,
                                                   const std::vector<std::size_t>& positions) {
  const std::size_t r = positions.size();
  std::vector<double> weights(oracle.size(), 0.0);
  if (r == 0) return weights;
  const std::vector<double> table = dense_table(oracle, positions);
  std::vector<std::size_t> perm(r);
  for (std::size_t k = 0; k < r; ++k) perm[k] = k;
  std::vector<long double> acc(r, 0.0L);
  std::uint64_t count = 0;
  do {
    std::size_t bits = 0;
    double prev = table[0];
    for (std::size_t k : perm) {
      bits |= std::size_t{1} << k;
      const double v = table[bits];
      acc[k] += static_cast<long double>(v - prev);
      prev = v;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t k = 0; k < r; ++k)
    weights[positions[k]] = static_cast<double>(acc[k] / static_cast<long double>(count));
  return weights;
}

// Naive minimal-sufficient search over every mask of the whole instance:
// keep the sufficient masks none of whose proper subsets is sufficient.
// Canonical order: ascending cardinality, then ascending position order.
inline std::vector<std::vector<std::size_t>> naive_minimal_sufficient(GameOracle& oracle,
                                                                      double tolerance) {
  const std::size_t n = oracle.size();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const std::vector<double> table = dense_table(oracle, all);
  const double full = table.back();
  std::vector<std::size_t> sufficient;
  for (std::size_t bits = 0; bits < table.size(); ++bits)
    if (same_prediction(table[bits], full, tolerance)) sufficient.push_back(bits);
  std::vector<std::size_t> minimal;
  for (std::size_t m : sufficient) {
    bool has_sufficient_proper_subset = false;
    for (std::size_t t : sufficient) {
      if (t != m && (t & m) == t) {
        has_sufficient_proper_subset = true;
        break;
      }
    }
    if (!has_sufficient_proper_subset) minimal.push_back(m);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t bits : minimal) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < n; ++i)
      if ((bits >> i) & 1u) positions.push_back(i);
    out.push_back(std::move(positions));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

inline std::vector<std::vector<std::size_t>> mask_positions(const std::vector<SubsetMask>& masks) {
  std::vector<std::vector<std::size_t>> out;
  for (const SubsetMask& m : masks) out.push_back(m.positions());
  return out;
}

// ---------------------------------------------------------------------------
// Seeded random rule models. Instances stay at <= 10 tokens so every game is
// exhaustively checkable.

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t pick_index(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

struct RandomCase {
  std::unique_ptr<Model> model;
  std::vector<std::string> tokens;

  Instance instance() const { return Instance::of_tokens(tokens); }
};

inline const std::vector<std::string>& content_vocab() {
  static const std::vector<std::string> v = {"alpha", "beta",  "gamma",
                                             "delta", "omega", "sigma"};
  return v;
}

inline const std::vector<std::string>& filler_vocab() {
  static const std::vector<std::string> v = {"the", "a", "and", "of"};
  return v;
}

inline RandomCase random_pattern_case(std::mt19937_64& rng) {
  RandomCase out;
  std::vector<PatternPriorityModel::Rule> rules;
  const std::size_t rule_count = 1 + pick_index(rng, 4);
  for (std::size_t r = 0; r < rule_count; ++r) {
    PatternPriorityModel::Rule rule;
    const std::size_t len = 1 + pick_index(rng, 2);
    for (std::size_t k = 0; k < len; ++k)
      rule.pattern.push_back(content_vocab()[pick_index(rng, content_vocab().size())]);
    rule.output = -1.0 + 2.0 * uniform01(rng);
    rules.push_back(std::move(rule));
  }
  const double default_output = (rng() % 2 == 0) ? 0.0 : -0.5 + uniform01(rng);
  const std::size_t n = 4 + pick_index(rng, 7);  // 4..10 tokens
  for (std::size_t i = 0; i < n; ++i) {
    if (uniform01(rng) < 0.6)
      out.tokens.push_back(content_vocab()[pick_index(rng, content_vocab().size())]);
    else
      out.tokens.push_back(filler_vocab()[pick_index(rng, filler_vocab().size())]);
  }
  // usually splice one rule's pattern into the text so the game is nontrivial;
  // the remaining draws keep a share of degenerate constant games
  if (uniform01(rng) < 0.9) {
    const auto& pattern = rules[pick_index(rng, rules.size())].pattern;
    const std::size_t at = pick_index(rng, out.tokens.size() - pattern.size() + 1);
    for (std::size_t j = 0; j < pattern.size(); ++j) out.tokens[at + j] = pattern[j];
  }
  out.model = std::make_unique<PatternPriorityModel>(std::move(rules), default_output);
  return out;
}

inline RandomCase random_aspect_case(std::mt19937_64& rng) {
  RandomCase out;
  const std::vector<AspectSentimentModel::Aspect> pool = {
      {"taste", {"taste", "Tastes", "tastes"}},
      {"smell", {"smell", "Smell", "smells"}},
      {"appearance", {"appearance", "Appearance"}},
  };
  std::vector<AspectSentimentModel::Aspect> aspects;
  const std::size_t aspect_count = 1 + pick_index(rng, 3);
  for (std::size_t k = 0; k < aspect_count; ++k) aspects.push_back(pool[k]);

  const std::vector<std::string> sentiment_pool = {"amazing", "good",     "refreshing", "bad",
                                                   "peculiar", "horrible", "stellar",    "awful"};
  std::map<std::string, double> sentiments;
  const std::size_t sentiment_count = 3 + pick_index(rng, 4);
  for (std::size_t k = 0; k < sentiment_count; ++k) {
    double score = 0.0;
    do {
      score = -1.0 + 2.0 * uniform01(rng);
    } while (std::fabs(score) < 0.05);
    sentiments[sentiment_pool[k]] = score;
  }

  AspectSentimentModel::Head head;
  if (rng() % 2 == 0) {
    head.kind = AspectSentimentModel::Head::Kind::overall_sum_clamped;
  } else {
    head.kind = AspectSentimentModel::Head::Kind::single_aspect;
    head.aspect = aspects[pick_index(rng, aspects.size())].name;
  }

  std::vector<std::string> word_pool;
  for (const auto& a : aspects)
    for (const auto& v : a.variants) word_pool.push_back(v);
  std::vector<std::string> sentiment_words;
  for (const auto& [word, score] : sentiments) {
    word_pool.push_back(word);
    sentiment_words.push_back(word);
  }
  const std::string scored_aspect_variant =
      head.kind == AspectSentimentModel::Head::Kind::single_aspect ? head.aspect
                                                                   : aspects[0].name;
  for (const auto& f : filler_vocab()) word_pool.push_back(f);

  out.model = std::make_unique<AspectSentimentModel>(std::move(aspects), std::move(sentiments),
                                                     std::move(head));
  const std::size_t n = 4 + pick_index(rng, 7);
  for (std::size_t i = 0; i < n; ++i)
    out.tokens.push_back(word_pool[pick_index(rng, word_pool.size())]);
  // usually make sure the scored aspect and one sentiment are present
  if (uniform01(rng) < 0.9 && n >= 2) {
    const std::size_t at = pick_index(rng, n - 1);
    out.tokens[at] = scored_aspect_variant;
    out.tokens[at + 1] = sentiment_words[pick_index(rng, sentiment_words.size())];
  }
  return out;
}

// k-th seeded case of a suite: even k pattern models, odd k aspect models.
inline RandomCase random_case(std::uint64_t suite_seed, std::size_t k) {
  std::mt19937_64 rng(suite_seed + 0x9e3779b97f4a7c15ull * (k + 1));
  return (k % 2 == 0) ? random_pattern_case(rng) : random_aspect_case(rng);
}

// Game-level wrapper scaling every model output by a positive factor.
class ScaledModel final : public Model {
public:
  ScaledModel(const Model& inner, double factor) : inner_(&inner), factor_(factor) {}
  double predict(const Instance& instance, const SubsetMask& mask,
                 OcclusionPolicy policy) const override {
    return factor_ * inner_->predict(instance, mask, policy);
  }
  void check_instance(const Instance& instance) const override {
    inner_->check_instance(instance);
  }

private:
  const Model* inner_;
  double factor_;
};

}  // namespace testsupport

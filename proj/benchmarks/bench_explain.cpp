#include <benchmark/benchmark.h>

#include <string>

#include "featexpl/featexpl.hpp"

namespace {

using namespace featexpl;

const char* kReview = "The beer has an amazing appearance, a good smell, a bad taste.";

void BM_oracle_cold_table(benchmark::State& state) {
  const Instance instance = tokenize(kReview);
  for (auto _ : state) {
    GameOracle oracle(builtin_model("fig2_mO"), instance);
    benchmark::DoNotOptimize(relevant_features(oracle));
  }
}
BENCHMARK(BM_oracle_cold_table);

void BM_oracle_cached_eval(benchmark::State& state) {
  GameOracle oracle(builtin_model("fig2_mO"), tokenize(kReview));
  const SubsetMask mask = SubsetMask::of_positions(oracle.size(), {4, 5, 7});
  oracle.evaluate_subset(mask);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.evaluate_subset(mask));
}
BENCHMARK(BM_oracle_cached_eval);

void BM_exact_shapley_review(benchmark::State& state) {
  for (auto _ : state) {
    GameOracle oracle(builtin_model("fig2_mO"), tokenize(kReview));
    benchmark::DoNotOptimize(exact_shapley(oracle));
  }
}
BENCHMARK(BM_exact_shapley_review);

void BM_enumerate_mss_review(benchmark::State& state) {
  for (auto _ : state) {
    GameOracle oracle(builtin_model("fig2_mO"), tokenize(kReview));
    benchmark::DoNotOptimize(enumerate_mss(oracle, 0.1));
  }
}
BENCHMARK(BM_enumerate_mss_review);

void BM_sampled_shapley_review(benchmark::State& state) {
  GameOracle oracle(builtin_model("fig2_mO"), tokenize(kReview));
  for (auto _ : state)
    benchmark::DoNotOptimize(sampled_shapley(oracle, static_cast<std::uint32_t>(state.range(0)), 1));
}
BENCHMARK(BM_sampled_shapley_review)->Arg(500)->Arg(2000)->Arg(5000);

// Widening pattern game: every token relevant, 2^n coalitions.
void BM_exact_shapley_width(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<PatternPriorityModel::Rule> rules;
  std::string text;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string tok = "tok" + std::to_string(i);
    rules.push_back({{tok}, 0.1 + 0.8 * static_cast<double>(i) / static_cast<double>(n)});
    text += tok + " ";
  }
  const PatternPriorityModel model(std::move(rules), 0.0);
  for (auto _ : state) {
    GameOracle oracle(model, tokenize(text));
    benchmark::DoNotOptimize(exact_shapley(oracle));
  }
}
BENCHMARK(BM_exact_shapley_width)->DenseRange(8, 16, 2);

}  // namespace

BENCHMARK_MAIN();

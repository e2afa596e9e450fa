#include <doctest.h>

#include "support.hpp"

using namespace featexpl;
using namespace testsupport;

namespace {

std::vector<std::string> surfaces(const Instance& instance) {
  std::vector<std::string> out;
  for (const Feature& f : instance.features()) out.push_back(f.surface());
  return out;
}

double predict_full(const Model& model, const std::string& text) {
  const Instance instance = tokenize(text);
  return model.predict(instance, SubsetMask::full_of(instance.size()),
                       OcclusionPolicy::occlude);
}

}  // namespace

TEST_CASE("tokenize: punctuation is stripped into discarded separators") {
  CHECK(surfaces(tokenize("Tastes good, refreshing.")) ==
        std::vector<std::string>{"Tastes", "good", "refreshing"});

  const Instance x2 = tokenize("The movie was nice, in fact, it was very good.");
  CHECK(x2.size() == 10);
  CHECK(x2.feature(8).surface() == "very");  // adjacent pair drives the top rule
  CHECK(x2.feature(9).surface() == "good");

  CHECK(surfaces(tokenize("...wow!! ,")) == std::vector<std::string>{"wow"});
  CHECK_THROWS_AS(tokenize("   "), ValidationError);
  CHECK_THROWS_AS(tokenize(".,;  !?"), ValidationError);
}

TEST_CASE("pattern model: first matching rule wins") {
  const Model& m = builtin_model("fig1_m");
  const Instance x2 = tokenize("The movie was nice, in fact, it was very good.");
  const std::size_t n = x2.size();

  CHECK(m.predict(x2, SubsetMask::full_of(n), OcclusionPolicy::occlude) == 0.9);
  // without "good" the chain falls through to the "nice" rule
  CHECK(m.predict(x2, SubsetMask::full_of(n).without(9), OcclusionPolicy::occlude) == 0.7);
  // without "nice" and "good" nothing matches
  CHECK(m.predict(x2, SubsetMask::full_of(n).without(9).without(3),
                  OcclusionPolicy::occlude) == 0.0);
}

TEST_CASE("pattern model: an occluded token between pattern tokens breaks the match") {
  PatternPriorityModel model({{{"very", "good"}, 0.9}}, 0.0);
  const Instance instance = tokenize("very very good");
  SubsetMask mask = SubsetMask::full_of(3);
  mask.set(1, false);  // "very _ good": not consecutive under occlusion
  CHECK(model.predict(instance, mask, OcclusionPolicy::occlude) == 0.0);
  // deletion compacts the sequence, so the pair becomes adjacent again
  CHECK(model.predict(instance, mask, OcclusionPolicy::deletion) == 0.9);
}

TEST_CASE("pattern model: occlusion only removes matches (rule-priority monotonicity)") {
  // Independent matcher: index of the first rule whose pattern occurs.
  auto firing_index = [](const PatternPriorityModel& model, const Instance& inst,
                         const SubsetMask& mask) {
    const auto& rules = model.rules();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const auto& pattern = rules[r].pattern;
      for (std::size_t start = 0; start + pattern.size() <= inst.size(); ++start) {
        bool match = true;
        for (std::size_t j = 0; j < pattern.size() && match; ++j)
          match = mask.test(start + j) && inst.feature(start + j).surface() == pattern[j];
        if (match) return r;
      }
    }
    return rules.size();
  };

  for (std::size_t k = 0; k < 40; k += 2) {  // pattern cases of the suite
    const RandomCase rc = random_case(611, k);
    const auto* model = dynamic_cast<const PatternPriorityModel*>(rc.model.get());
    REQUIRE(model != nullptr);
    const Instance inst = rc.instance();
    const std::size_t n = inst.size();
    std::mt19937_64 rng(1000 + k);
    for (int trial = 0; trial < 50; ++trial) {
      SubsetMask mask(n);
      for (std::size_t i = 0; i < n; ++i)
        if (rng() % 2) mask.set(i);
      const std::size_t before = firing_index(*model, inst, mask);
      // the model agrees with the independent matcher
      const double expected = before == model->rules().size()
                                  ? model->default_output()
                                  : model->rules()[before].output;
      CHECK(model->predict(inst, mask, OcclusionPolicy::occlude) == expected);
      for (std::size_t i = 0; i < n; ++i) {
        if (!mask.test(i)) continue;
        CHECK(firing_index(*model, inst, mask.without(i)) >= before);
      }
    }
  }
}

TEST_CASE("aspect model: fixture predictions") {
  CHECK(predict_full(builtin_model("fig2_mO"),
                     "The beer has an amazing appearance, a good smell, a bad taste.") == 1.0);
  CHECK(predict_full(builtin_model("fig2_mS"), "Tastes horrible, peculiar smell.") == -0.3);
  CHECK(predict_full(builtin_model("fig2_mT"), "Tastes good, refreshing.") == 0.6);
}

TEST_CASE("aspect model: occlusion re-routes sentiments to the nearest remaining aspect") {
  const Model& mS = builtin_model("fig2_mS");
  const Instance xS1 = tokenize("Tastes horrible, peculiar smell.");
  // with Tastes occluded both negatives associate to smell; same sign -> strongest
  const SubsetMask keep = SubsetMask::of_positions(4, {1, 2, 3});
  CHECK(mS.predict(xS1, keep, OcclusionPolicy::occlude) == -1.0);
}

TEST_CASE("aspect model: occluded tokens still count for distance") {
  const Model& mT = builtin_model("fig2_mT");
  const Instance xT2 = tokenize("Tastes amazing. The smell is also amazing.");
  // keep {Tastes, smell, amazing#2}: the second "amazing" stays closer to
  // smell (3 positions, occluded ones counted) than to Tastes (6), so the
  // taste aspect is left without sentiment.
  const SubsetMask keep = SubsetMask::of_positions(7, {0, 3, 6});
  CHECK(mT.predict(xT2, keep, OcclusionPolicy::occlude) == 0.0);
  // once smell is occluded too, it re-routes to Tastes
  const SubsetMask keep2 = SubsetMask::of_positions(7, {0, 6});
  CHECK(mT.predict(xT2, keep2, OcclusionPolicy::occlude) == 1.0);
}

TEST_CASE("aspect model: equidistant sentiment goes to the leftmost aspect") {
  const Model& mT = builtin_model("fig2_mT");
  const Model& mS = builtin_model("fig2_mS");
  const Instance inst = tokenize("taste good smell");
  const SubsetMask full = SubsetMask::full_of(3);
  CHECK(mT.predict(inst, full, OcclusionPolicy::occlude) == 0.6);
  CHECK(mS.predict(inst, full, OcclusionPolicy::occlude) == 0.0);
}

TEST_CASE("aspect model: same-sign strongest vs mixed-sign clamped sum") {
  const Model& mT = builtin_model("fig2_mT");
  // same sign: strongest of {0.6, 0.6} is 0.6, not the sum
  CHECK(predict_full(mT, "Tastes good, refreshing.") == 0.6);
  // mixed signs: 1 - 0.6 + nothing else
  CHECK(std::fabs(predict_full(mT, "taste amazing bad") - 0.4) <= 1e-12);
  // mixed signs with overflow: 1 + 0.6 + 0.6 - 0.3 clamps to 1
  CHECK(predict_full(mT, "taste amazing good refreshing peculiar") == 1.0);
}

TEST_CASE("aspect model: overall head clamps the aspect sum") {
  CHECK(predict_full(builtin_model("fig2_mO"), "appearance amazing smell good") == 1.0);
  CHECK(predict_full(builtin_model("fig2_mO"), "appearance horrible smell bad") == -1.0);
}

TEST_CASE("aspect model: neutral-occlusion identity") {
  for (std::size_t k = 1; k < 30; k += 2) {  // aspect cases of the suite
    const RandomCase rc = random_case(612, k);
    const auto* model = dynamic_cast<const AspectSentimentModel*>(rc.model.get());
    REQUIRE(model != nullptr);
    const Instance inst = rc.instance();
    const std::size_t n = inst.size();
    auto in_lexicons = [&](const std::string& s) {
      if (model->sentiments().count(s)) return true;
      for (const auto& a : model->aspects())
        for (const auto& v : a.variants)
          if (v == s) return true;
      return false;
    };
    std::mt19937_64 rng(2000 + k);
    for (int trial = 0; trial < 40; ++trial) {
      SubsetMask mask(n);
      for (std::size_t i = 0; i < n; ++i)
        if (rng() % 2) mask.set(i);
      const double before = model->predict(inst, mask, OcclusionPolicy::occlude);
      for (std::size_t i = 0; i < n; ++i) {
        if (!mask.test(i) || in_lexicons(inst.feature(i).surface())) continue;
        CHECK(model->predict(inst, mask.without(i), OcclusionPolicy::occlude) == before);
      }
    }
  }
}

TEST_CASE("aspect model: deletion is rejected as unsupported") {
  const Instance inst = tokenize("Tastes good, refreshing.");
  CHECK_THROWS_AS(builtin_model("fig2_mT").predict(inst, SubsetMask::full_of(3),
                                                   OcclusionPolicy::deletion),
                  ContractError);
}

TEST_CASE("numeric game: masked entries take baseline 0") {
  const Model& min2 = builtin_model("min2");
  const Instance x = Instance::of_values({1, 3});
  CHECK(min2.predict(x, SubsetMask::full_of(2), OcclusionPolicy::occlude) == 1.0);
  CHECK(min2.predict(x, SubsetMask::empty_of(2), OcclusionPolicy::occlude) == 0.0);

  const Model& max3 = builtin_model("max3");
  const Instance y = Instance::of_values({5, 4, 0});
  CHECK(max3.predict(y, SubsetMask::of_positions(3, {1}), OcclusionPolicy::occlude) == 4.0);
  // occlusion and deletion coincide for the per-feature baseline 0
  CHECK(max3.predict(y, SubsetMask::of_positions(3, {1}), OcclusionPolicy::deletion) == 4.0);
}

TEST_CASE("parse_model: built-in fixtures") {
  const auto* fig1 = dynamic_cast<const PatternPriorityModel*>(&builtin_model("fig1_m"));
  REQUIRE(fig1 != nullptr);
  REQUIRE(fig1->rules().size() == 3);
  CHECK(fig1->rules()[0].pattern == std::vector<std::string>{"very", "good"});
  CHECK(fig1->rules()[0].output == 0.9);
  CHECK(fig1->rules()[1].pattern == std::vector<std::string>{"nice"});
  CHECK(fig1->rules()[2].pattern == std::vector<std::string>{"good"});
  CHECK(fig1->default_output() == 0.0);

  const auto* mT = dynamic_cast<const AspectSentimentModel*>(&builtin_model("fig2_mT"));
  REQUIRE(mT != nullptr);
  CHECK(mT->head().kind == AspectSentimentModel::Head::Kind::single_aspect);
  CHECK(mT->head().aspect == "taste");

  CHECK(builtin_model_names() ==
        std::vector<std::string>{"fig1_m", "fig2_mO", "fig2_mS", "fig2_mT", "min2", "max3"});
  CHECK_THROWS_AS(builtin_model("fig9"), ValidationError);
}

TEST_CASE("parse_model: documents round through predictions") {
  const auto model = parse_model(R"(
# tiny chain
[pattern]
default = 0.05
"really bad" => -0.8
"bad" => -0.5
)");
  CHECK(predict_full(*model, "a really bad one") == -0.8);
  CHECK(predict_full(*model, "a bad one") == -0.5);
  CHECK(predict_full(*model, "fine") == 0.05);
}

TEST_CASE("parse_model: rejections") {
  // score outside [-1, 1]
  CHECK_THROWS_AS(parse_model("[aspect]\naspects = [taste]\n"
                              "sentiments = { good: 1.5 }\nhead = overall\n"),
                  ValidationError);
  // a score of exactly 0 is undecidable between the sign rules
  CHECK_THROWS_AS(parse_model("[aspect]\naspects = [taste]\n"
                              "sentiments = { meh: 0 }\nhead = overall\n"),
                  ValidationError);
  // overlapping lexicons
  CHECK_THROWS_AS(parse_model("[aspect]\naspects = [taste]\n"
                              "sentiments = { taste: 0.5 }\nhead = overall\n"),
                  ValidationError);
  // unknown head aspect
  CHECK_THROWS_AS(parse_model("[aspect]\naspects = [taste]\n"
                              "sentiments = { good: 0.5 }\nhead = aspect:color\n"),
                  ValidationError);

  CHECK_THROWS_AS(parse_model(""), ParseError);
  CHECK_THROWS_AS(parse_model("[pattern]\n"), ParseError);
  CHECK_THROWS_AS(parse_model("[sorcery]\nx = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_model("[numeric]\nkind = min\narity = 2\nextra = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_model("[numeric]\nkind = median\narity = 2\n"), ParseError);
  CHECK_THROWS_AS(parse_model("[numeric]\nkind = min\narity = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_model("[pattern]\n\"x\" => nope\n"), ParseError);
  CHECK_THROWS_AS(parse_model("[aspect]\naspects = [taste]\nhead = overall\n"), ParseError);

  try {
    parse_model("[pattern]\n\"ok\" => 0.5\nmystery = 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

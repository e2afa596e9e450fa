#include "featexpl/catalog.hpp"

#include <cmath>

#include "featexpl/mss.hpp"
#include "featexpl/shapley.hpp"

namespace featexpl {

namespace {

std::vector<FixtureCase> make_catalog() {
  std::vector<FixtureCase> cases;

  {
    FixtureCase c;
    c.name = "fig1_m_x1";
    c.model = "fig1_m";
    c.text = "The movie was good, it was actually nice.";
    c.expected_prediction = 0.7;
    c.expected_weights = {0, 0, 0, 3.0 / 10, 0, 0, 0, 2.0 / 5};
    c.expected_mss = {{7}};
    c.expected_disjoint = {{7}};
    c.note =
        "'good' carries weight 0.30 yet joins no minimal sufficient subset: "
        "it is redundant in the presence of 'nice' (occluding it alone keeps 0.7).";
    cases.push_back(std::move(c));
  }
  {
    FixtureCase c;
    c.name = "fig1_m_x2";
    c.model = "fig1_m";
    c.text = "The movie was nice, in fact, it was very good.";
    c.expected_prediction = 0.9;
    c.expected_weights = {0, 0, 0, 11.0 / 30, 0, 0, 0, 0, 7.0 / 60, 5.0 / 12};
    c.expected_mss = {{8, 9}};
    c.expected_disjoint = {{8, 9}};
    c.note =
        "the weights rank 'good' > 'nice' > 'very' while the single minimal "
        "sufficient subset is {'very','good'} with 'nice' absent: the two "
        "explanation types target different ground truths.";
    cases.push_back(std::move(c));
  }
  {
    FixtureCase c;
    c.name = "fig2_mO_xO";
    c.model = "fig2_mO";
    c.text = "The beer has an amazing appearance, a good smell, a bad taste.";
    c.expected_prediction = 1.0;
    c.expected_weights = {0, 0, 0, 0, 63.0 / 100, 23.0 / 150, 0, 33.0 / 100, 23.0 / 150,
                          0, -3.0 / 10, 1.0 / 30};
    c.expected_mss = {{4, 5}, {4, 8}, {4, 11}};
    c.expected_disjoint = {{4, 5}};
    c.note =
        "genuine cancellation: 'good'(smell) and 'bad'(taste) offset each other "
        "inside the model yet no minimal sufficient subset shows them. "
        "{amazing,smell} and {amazing,taste} are occlusion artefacts: they are "
        "sufficient only because 'amazing' re-associates once 'appearance' is "
        "occluded.";
    cases.push_back(std::move(c));
  }
  {
    FixtureCase c;
    c.name = "fig2_mS_xS1";
    c.model = "fig2_mS";
    c.text = "Tastes horrible, peculiar smell.";
    c.expected_prediction = -0.3;
    c.expected_weights = {31.0 / 120, -17.0 / 120, -1.0 / 8, -7.0 / 24};
    c.expected_mss = {{2, 3}};
    c.expected_disjoint = {{2, 3}};
    c.note =
        "occlusion artefacts inflate 'Tastes' and 'horrible': they matter only "
        "because occluding tokens re-routes 'horrible' onto smell, not because "
        "the model reads them for the smell score.";
    cases.push_back(std::move(c));
  }
  {
    FixtureCase c;
    c.name = "fig2_mS_xS2";
    c.model = "fig2_mS";
    c.text = "Tastes amazing, peculiar smell.";
    c.expected_prediction = -0.3;
    c.expected_weights = {-1.0 / 3, 1.0 / 6, -3.0 / 20, 1.0 / 60};
    c.expected_mss = {{2, 3}};
    c.expected_disjoint = {{2, 3}};
    c.note =
        "changing only the taste sentiment ('horrible' -> 'amazing') reshuffles "
        "every weight even though the smell score never depends on it; the "
        "minimal sufficient subset {'peculiar','smell'} is unchanged.";
    cases.push_back(std::move(c));
  }
  {
    FixtureCase c;
    c.name = "fig2_mT_xT1";
    c.model = "fig2_mT";
    c.text = "Tastes good, refreshing.";
    c.expected_prediction = 0.6;
    c.expected_weights = {2.0 / 5, 1.0 / 10, 1.0 / 10};
    c.expected_mss = {{0, 1}, {0, 2}};
    c.expected_disjoint = {{0, 1}};
    c.note =
        "two genuine minimal sufficient subsets share 'Tastes'; the greedy "
        "disjoint retrieval consumes it with the first pick and misses the "
        "second subset.";
    cases.push_back(std::move(c));
  }
  {
    FixtureCase c;
    c.name = "fig2_mT_xT2";
    c.model = "fig2_mT";
    c.text = "Tastes amazing. The smell is also amazing.";
    c.expected_prediction = 1.0;
    c.expected_weights = {7.0 / 12, 5.0 / 12, 0, -1.0 / 12, 0, 0, 1.0 / 12};
    c.expected_mss = {{0, 1}, {0, 6}};
    c.expected_disjoint = {{0, 1}};
    c.note =
        "prediction is 1.0: the efficiency sum of the weights, and the taste "
        "aspect takes the strongest sentiment (1), not 0.6. {Tastes,amazing#2} "
        "is an occlusion artefact: the second 'amazing' reaches taste only "
        "once 'smell' is occluded; the weights separate the two occurrences "
        "(0.42 vs 0.08) where the subset view cannot.";
    cases.push_back(std::move(c));
  }
  {
    FixtureCase c;
    c.name = "min2";
    c.model = "min2";
    c.values = {1, 3};
    c.expected_prediction = 1.0;
    c.expected_weights = {0.5, 0.5};
    c.expected_mss = {{0, 1}};
    c.expected_disjoint = {{0, 1}};
    c.note =
        "fair split: each input receives 0.5 although only x1 is critical at "
        "the point itself; the subset view needs both inputs.";
    cases.push_back(std::move(c));
  }
  {
    FixtureCase c;
    c.name = "max3";
    c.model = "max3";
    c.values = {5, 4, 0};
    c.expected_prediction = 5.0;
    c.expected_weights = {3, 2, 0};
    c.expected_mss = {{0}};
    c.expected_disjoint = {{0}};
    c.note = "the runner-up x2 earns weight 2 for the coalitions that lack x1.";
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace

const std::vector<FixtureCase>& fixture_catalog() {
  static const std::vector<FixtureCase> catalog = make_catalog();
  return catalog;
}

const FixtureCase& fixture_case(const std::string& name) {
  for (const FixtureCase& c : fixture_catalog())
    if (c.name == name) return c;
  throw ValidationError("unknown fixture case '" + name + "'");
}

Instance fixture_instance(const FixtureCase& c) {
  if (!c.values.empty()) return Instance::of_values(c.values);
  return tokenize(c.text);
}

FixtureOutcome run_fixture(const FixtureCase& c) {
  GameOracle oracle(builtin_model(c.model), fixture_instance(c));
  FixtureOutcome out;

  const ShapleyExplanation shap = exact_shapley(oracle);
  out.prediction = shap.prediction;
  out.weights = shap.weights;
  out.prediction_ok = std::fabs(out.prediction - c.expected_prediction) <= kValueEpsilon;
  out.weights_ok = out.weights.size() == c.expected_weights.size();
  if (out.weights_ok)
    for (std::size_t i = 0; i < out.weights.size(); ++i)
      if (std::fabs(out.weights[i] - c.expected_weights[i]) > kValueEpsilon)
        out.weights_ok = false;

  const MssExplanation mss = enumerate_mss(oracle, c.tolerance);
  for (const SubsetMask& m : mss.subsets) out.mss.push_back(m.positions());
  out.mss_ok = out.mss == c.expected_mss;

  for (const SubsetMask& m : disjoint_mss(oracle, c.tolerance))
    out.disjoint.push_back(m.positions());
  out.disjoint_ok = out.disjoint == c.expected_disjoint;
  return out;
}

}  // namespace featexpl

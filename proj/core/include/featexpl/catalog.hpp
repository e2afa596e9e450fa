#pragma once

#include <optional>
#include <string>
#include <vector>

#include "featexpl/models.hpp"

namespace featexpl {

/// One golden worked example: a built-in model, an input, and the exact
/// expected explanation output (weights as exact fractions, minimal
/// sufficient subsets and the disjoint retrieval as position sets).
struct FixtureCase {
  std::string name;
  std::string model;                 // built-in model name
  std::string text;                  // empty for numeric games
  std::vector<double> values;        // numeric games only
  double tolerance = 0.1;
  double expected_prediction = 0.0;
  double expected_baseline = 0.0;
  std::vector<double> expected_weights;                   // full length
  std::vector<std::vector<std::size_t>> expected_mss;     // canonical order
  std::vector<std::vector<std::size_t>> expected_disjoint;
  std::string note;  // mechanism annotations printed by the fixtures command
};

const std::vector<FixtureCase>& fixture_catalog();
const FixtureCase& fixture_case(const std::string& name);

Instance fixture_instance(const FixtureCase& c);

/// Outcome of re-deriving one case and comparing against its goldens.
struct FixtureOutcome {
  bool prediction_ok = false;
  bool weights_ok = false;
  bool mss_ok = false;
  bool disjoint_ok = false;
  double prediction = 0.0;
  std::vector<double> weights;
  std::vector<std::vector<std::size_t>> mss;
  std::vector<std::vector<std::size_t>> disjoint;
  bool all_ok() const { return prediction_ok && weights_ok && mss_ok && disjoint_ok; }
};

FixtureOutcome run_fixture(const FixtureCase& c);

}  // namespace featexpl

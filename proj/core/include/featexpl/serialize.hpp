#pragma once

#include <string>
#include <utility>
#include <vector>

#include "featexpl/analysis.hpp"
#include "featexpl/mss.hpp"
#include "featexpl/shapley.hpp"
#include "featexpl/types.hpp"

namespace featexpl {

/// Documented JSON shapes with stable field order. Weights are emitted at
/// full precision; rendering then parsing reproduces the value exactly.
///
/// Shapley:    {"positions": [{"index", "surface", "weight"}...],
///              "baseline", "prediction", "method"}
///             where method is {"name":"exact"} or
///             {"name":"sampled","permutations":N,"seed":S}.
/// MSS:        {"tolerance", "prediction",
///              "subsets": [[{"index","surface"}...]...],
///              "disjoint": [[...]...]}
/// Report:     field-for-field mirror of DivergenceReport.

std::string shapley_to_json(const ShapleyExplanation& expl, const Instance& instance,
                            int indent = 2);

std::string mss_to_json(const MssExplanation& mss, const std::vector<SubsetMask>& disjoint,
                        const Instance& instance, int indent = 2);

std::string report_to_json(const DivergenceReport& report, int indent = 2);

struct ParsedShapley {
  ShapleyExplanation explanation;
  std::vector<std::string> surfaces;  // one per position
  bool operator==(const ParsedShapley&) const = default;
};

struct ParsedMss {
  double tolerance = 0.0;
  double prediction = 0.0;
  using Member = std::pair<std::size_t, std::string>;  // index, surface
  std::vector<std::vector<Member>> subsets;
  std::vector<std::vector<Member>> disjoint;
  bool operator==(const ParsedMss&) const = default;
};

/// Throw ParseError on malformed documents.
ParsedShapley shapley_from_json(const std::string& text);
ParsedMss mss_from_json(const std::string& text);
DivergenceReport report_from_json(const std::string& text);

bool operator==(const DivergenceReport& a, const DivergenceReport& b);

}  // namespace featexpl

#include "featexpl/serialize.hpp"

#include <json.hpp>

namespace featexpl {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json method_to_json(const ShapleyMethod& m) {
  ordered_json j;
  if (m.kind == ShapleyMethod::Kind::exact) {
    j["name"] = "exact";
  } else {
    j["name"] = "sampled";
    j["permutations"] = m.permutations;
    j["seed"] = m.seed;
  }
  return j;
}

ordered_json members_to_json(const SubsetMask& mask, const Instance& instance) {
  ordered_json arr = ordered_json::array();
  for (std::size_t p : mask.positions()) {
    ordered_json member;
    member["index"] = p;
    member["surface"] = instance.feature(p).surface();
    arr.push_back(std::move(member));
  }
  return arr;
}

ordered_json parse_document(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON document");
  return j;
}

}  // namespace

std::string shapley_to_json(const ShapleyExplanation& expl, const Instance& instance,
                            int indent) {
  if (expl.weights.size() != instance.size())
    throw ContractError("explanation length does not match instance length");
  ordered_json j;
  j["positions"] = ordered_json::array();
  for (std::size_t i = 0; i < instance.size(); ++i) {
    ordered_json pos;
    pos["index"] = i;
    pos["surface"] = instance.feature(i).surface();
    pos["weight"] = expl.weights[i];
    j["positions"].push_back(std::move(pos));
  }
  j["baseline"] = expl.baseline;
  j["prediction"] = expl.prediction;
  j["method"] = method_to_json(expl.method);
  return j.dump(indent);
}

std::string mss_to_json(const MssExplanation& mss, const std::vector<SubsetMask>& disjoint,
                        const Instance& instance, int indent) {
  ordered_json j;
  j["tolerance"] = mss.tolerance;
  j["prediction"] = mss.prediction;
  j["subsets"] = ordered_json::array();
  for (const SubsetMask& m : mss.subsets) j["subsets"].push_back(members_to_json(m, instance));
  j["disjoint"] = ordered_json::array();
  for (const SubsetMask& m : disjoint) j["disjoint"].push_back(members_to_json(m, instance));
  return j.dump(indent);
}

std::string report_to_json(const DivergenceReport& report, int indent) {
  ordered_json j;
  j["redundant_features"] = report.redundant_features;
  j["cancellation_present"] = report.cancellation_present;
  j["positive_mass"] = report.positive_mass;
  j["negative_mass"] = report.negative_mass;
  j["multiple_mss"] = report.multiple_mss;
  j["mss_count"] = report.mss_count;
  j["disjoint_incomplete"] = report.disjoint_incomplete;
  j["disjoint_count"] = report.disjoint_count;
  j["ranking"] = report.ranking;
  j["report_threshold"] = report.report_threshold;
  return j.dump(indent);
}

ParsedShapley shapley_from_json(const std::string& text) {
  const ordered_json j = parse_document(text);
  try {
    ParsedShapley out;
    for (const auto& pos : j.at("positions")) {
      const std::size_t index = pos.at("index").get<std::size_t>();
      if (index != out.surfaces.size())
        throw ParseError("positions must be contiguous from 0");
      out.surfaces.push_back(pos.at("surface").get<std::string>());
      out.explanation.weights.push_back(pos.at("weight").get<double>());
    }
    out.explanation.baseline = j.at("baseline").get<double>();
    out.explanation.prediction = j.at("prediction").get<double>();
    const auto& method = j.at("method");
    const std::string name = method.at("name").get<std::string>();
    if (name == "exact") {
      out.explanation.method = {ShapleyMethod::Kind::exact, 0, 0};
    } else if (name == "sampled") {
      out.explanation.method = {ShapleyMethod::Kind::sampled,
                                method.at("permutations").get<std::uint32_t>(),
                                method.at("seed").get<std::uint64_t>()};
    } else {
      throw ParseError("unknown method '" + name + "'");
    }
    return out;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("shapley document: ") + e.what());
  }
}

namespace {

std::vector<std::vector<ParsedMss::Member>> members_from_json(const ordered_json& arr) {
  std::vector<std::vector<ParsedMss::Member>> out;
  for (const auto& subset : arr) {
    std::vector<ParsedMss::Member> members;
    for (const auto& m : subset)
      members.emplace_back(m.at("index").get<std::size_t>(), m.at("surface").get<std::string>());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

ParsedMss mss_from_json(const std::string& text) {
  const ordered_json j = parse_document(text);
  try {
    ParsedMss out;
    out.tolerance = j.at("tolerance").get<double>();
    out.prediction = j.at("prediction").get<double>();
    out.subsets = members_from_json(j.at("subsets"));
    out.disjoint = members_from_json(j.at("disjoint"));
    return out;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("mss document: ") + e.what());
  }
}

DivergenceReport report_from_json(const std::string& text) {
  const ordered_json j = parse_document(text);
  try {
    DivergenceReport out;
    out.redundant_features = j.at("redundant_features").get<std::vector<std::size_t>>();
    out.cancellation_present = j.at("cancellation_present").get<bool>();
    out.positive_mass = j.at("positive_mass").get<double>();
    out.negative_mass = j.at("negative_mass").get<double>();
    out.multiple_mss = j.at("multiple_mss").get<bool>();
    out.mss_count = j.at("mss_count").get<std::size_t>();
    out.disjoint_incomplete = j.at("disjoint_incomplete").get<bool>();
    out.disjoint_count = j.at("disjoint_count").get<std::size_t>();
    out.ranking = j.at("ranking").get<std::vector<std::size_t>>();
    out.report_threshold = j.at("report_threshold").get<double>();
    return out;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("report document: ") + e.what());
  }
}

bool operator==(const DivergenceReport& a, const DivergenceReport& b) {
  return a.redundant_features == b.redundant_features &&
         a.cancellation_present == b.cancellation_present &&
         a.positive_mass == b.positive_mass && a.negative_mass == b.negative_mass &&
         a.multiple_mss == b.multiple_mss && a.mss_count == b.mss_count &&
         a.disjoint_incomplete == b.disjoint_incomplete &&
         a.disjoint_count == b.disjoint_count && a.ranking == b.ranking &&
         a.report_threshold == b.report_threshold;
}

}  // namespace featexpl

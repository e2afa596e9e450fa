#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "featexpl/featexpl.hpp"

namespace {

using namespace featexpl;

// Round half away from zero to two decimals, then print with a fixed "%.2f".
// Locale-independent and byte-stable across runs.
std::string fmt2(double v) {
  double r = std::round(v * 100.0) / 100.0;
  if (r == 0.0) r = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", r);
  return buf;
}

std::string fmt3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string subset_text(const SubsetMask& mask, const Instance& instance) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : mask.positions()) {
    if (!first) out += ", ";
    out += quoted(instance.feature(p).surface());
    first = false;
  }
  return out + "}";
}

std::vector<double> parse_values_csv(const std::string& csv) {
  std::vector<double> values;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ValidationError("--values holds an empty entry");
    std::size_t consumed = 0;
    const double v = std::stod(cur, &consumed);
    if (consumed != cur.size()) throw ValidationError("--values entry '" + cur + "' is not a number");
    values.push_back(v);
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      cur += c;
  }
  flush();
  return values;
}

struct ExplainOptions {
  std::string model_ref;
  std::string text;
  std::string values_csv;
  double tolerance = 0.1;
  bool sampled = false;
  std::uint32_t permutations = 2000;
  std::uint64_t seed = 0;
  bool json = false;
  bool show_all = false;
};

const Model& resolve_model(const std::string& ref, std::unique_ptr<Model>& owned) {
  if (is_builtin_model(ref)) return builtin_model(ref);
  if (std::filesystem::exists(ref)) {
    owned = parse_model_file(ref);
    return *owned;
  }
  throw ValidationError("'" + ref + "' is neither a built-in model nor an existing file");
}

int cmd_explain(const ExplainOptions& opt) {
  std::unique_ptr<Model> owned;
  const Model& model = resolve_model(opt.model_ref, owned);

  Instance instance = [&] {
    if (!opt.values_csv.empty()) {
      if (!opt.text.empty())
        throw ValidationError("give either text or --values, not both");
      return Instance::of_values(parse_values_csv(opt.values_csv));
    }
    if (opt.text.empty())
      throw ValidationError("text input missing (numeric models take --values)");
    return tokenize(opt.text);
  }();

  GameOracle oracle(model, std::move(instance));
  const Instance& inst = oracle.instance();

  const ShapleyExplanation shap =
      opt.sampled ? sampled_shapley(oracle, opt.permutations, opt.seed) : exact_shapley(oracle);
  const MssExplanation mss = enumerate_mss(oracle, opt.tolerance);
  const std::vector<SubsetMask> disjoint = disjoint_mss(oracle, opt.tolerance);
  const DivergenceReport report = diagnose(shap, mss, disjoint, oracle);

  if (opt.json) {
    std::cout << "{\n  \"model\": \"" << opt.model_ref << "\",\n  \"shapley\": ";
    // Re-indent the documented shapes under one object.
    auto indented = [](const std::string& body) {
      std::string out;
      for (char c : body) {
        out += c;
        if (c == '\n') out += "  ";
      }
      return out;
    };
    std::cout << indented(shapley_to_json(shap, inst));
    std::cout << ",\n  \"mss\": " << indented(mss_to_json(mss, disjoint, inst));
    std::cout << ",\n  \"report\": " << indented(report_to_json(report));
    std::cout << "\n}\n";
    return 0;
  }

  std::cout << "model:      " << opt.model_ref << "\n";
  std::cout << "input:     ";
  for (const Feature& f : inst.features()) std::cout << " " << f.surface();
  std::cout << "\n";
  std::cout << "prediction: " << fmt2(shap.prediction) << "\n";
  std::cout << "baseline:   " << fmt2(shap.baseline) << "\n\n";

  std::cout << "Shapley explanation (";
  if (shap.method.kind == ShapleyMethod::Kind::exact)
    std::cout << "exact";
  else
    std::cout << "sampled, " << shap.method.permutations << " permutations, seed "
              << shap.method.seed;
  std::cout << ")\n";
  std::size_t rank = 0, suppressed = 0;
  for (std::size_t i : report.ranking) {
    const double w = shap.weights[i];
    const bool rounds_to_zero = std::fabs(std::round(w * 100.0)) < 0.5;
    if (rounds_to_zero && !opt.show_all) {
      ++suppressed;
      continue;
    }
    ++rank;
    std::cout << "  " << rank << ". " << quoted(inst.feature(i).surface()) << "  " << fmt2(w)
              << "\n";
  }
  if (suppressed > 0)
    std::cout << "  (" << suppressed << " zero-weight features suppressed; --all shows them)\n";

  std::cout << "\nminimal sufficient subsets (tolerance " << fmt2(mss.tolerance) << ")\n";
  for (const SubsetMask& m : mss.subsets) std::cout << "  " << subset_text(m, inst) << "\n";

  std::cout << "\ndisjoint retrieval\n";
  for (const SubsetMask& m : disjoint) std::cout << "  " << subset_text(m, inst) << "\n";
  if (disjoint.empty()) std::cout << "  (none)\n";

  std::cout << "\ndivergence report\n";
  std::cout << "  redundant features:  ";
  if (report.redundant_features.empty()) {
    std::cout << "(none)\n";
  } else {
    bool first = true;
    for (std::size_t p : report.redundant_features) {
      if (!first) std::cout << ", ";
      std::cout << quoted(inst.feature(p).surface()) << " (weight " << fmt2(shap.weights[p])
                << ", in no MSS, droppable)";
      first = false;
    }
    std::cout << "\n";
  }
  std::cout << "  cancellation:        " << (report.cancellation_present ? "yes" : "no")
            << "  (positive mass " << fmt2(report.positive_mass) << ", negative mass "
            << fmt2(report.negative_mass) << ")\n";
  std::cout << "  multiple MSS:        " << (report.multiple_mss ? "yes" : "no") << "  ("
            << report.mss_count << (report.mss_count == 1 ? " subset)" : " subsets)") << "\n";
  std::cout << "  disjoint incomplete: " << (report.disjoint_incomplete ? "yes" : "no") << "  ("
            << report.disjoint_count << " of " << report.mss_count << ")\n";
  std::cout << "  report threshold:    " << fmt3(report.report_threshold) << "\n";
  return 0;
}

std::string positions_text(const std::vector<std::size_t>& positions) {
  std::string out = "{";
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(positions[k]);
  }
  return out + "}";
}

int cmd_fixtures(const std::string& only_case) {
  std::vector<const FixtureCase*> selected;
  if (only_case.empty()) {
    for (const FixtureCase& c : fixture_catalog()) selected.push_back(&c);
  } else {
    selected.push_back(&fixture_case(only_case));  // throws on unknown name
  }

  std::size_t passed = 0;
  std::printf("%-14s %-10s %-8s %-5s %-9s %s\n", "case", "prediction", "weights", "MSS",
              "disjoint", "result");
  for (const FixtureCase* c : selected) {
    const FixtureOutcome out = run_fixture(*c);
    const char* ok = out.all_ok() ? "PASS" : "FAIL";
    std::printf("%-14s %-10s %-8s %-5s %-9s %s\n", c->name.c_str(),
                out.prediction_ok ? "ok" : "MISMATCH", out.weights_ok ? "ok" : "MISMATCH",
                out.mss_ok ? "ok" : "MISMATCH", out.disjoint_ok ? "ok" : "MISMATCH", ok);
    if (!out.prediction_ok)
      std::printf("    prediction: expected %.6f, derived %.6f\n", c->expected_prediction,
                  out.prediction);
    if (!out.weights_ok)
      for (std::size_t i = 0; i < out.weights.size() && i < c->expected_weights.size(); ++i)
        if (std::fabs(out.weights[i] - c->expected_weights[i]) > kValueEpsilon)
          std::printf("    weight[%zu]: expected %.6f, derived %.6f\n", i,
                      c->expected_weights[i], out.weights[i]);
    if (!out.mss_ok) {
      std::printf("    MSS derived:");
      for (const auto& s : out.mss) std::printf(" %s", positions_text(s).c_str());
      std::printf("\n");
    }
    if (!out.disjoint_ok) {
      std::printf("    disjoint derived:");
      for (const auto& s : out.disjoint) std::printf(" %s", positions_text(s).c_str());
      std::printf("\n");
    }
    if (!c->note.empty()) std::printf("    note: %s\n", c->note.c_str());
    if (out.all_ok()) ++passed;
  }
  std::printf("%zu cases, %zu passed\n", selected.size(), passed);
  return passed == selected.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ground-truth feature explanations for subset-evaluation games: exact "
      "Shapley attributions, complete minimal-sufficient-subset enumeration, "
      "and divergence diagnostics."};
  app.require_subcommand(1);

  ExplainOptions opt;
  CLI::App* explain =
      app.add_subcommand("explain", "Explain one (model, input) pair both ways");
  explain->add_option("model", opt.model_ref, "Built-in model name or model file path")
      ->required();
  explain->add_option("text", opt.text, "Input text (text models)");
  explain->add_option("--values", opt.values_csv, "Comma-separated inputs (numeric games)");
  explain->add_option("--tolerance", opt.tolerance,
                      "Sufficiency tolerance for the MSS enumeration (default 0.1)");
  explain->add_flag("--sampled", opt.sampled, "Permutation-sampling Shapley instead of exact");
  explain->add_option("--permutations", opt.permutations,
                      "Sampling budget for --sampled (default 2000)");
  explain->add_option("--seed", opt.seed, "Sampling seed (default 0)");
  explain->add_flag("--json", opt.json, "Emit the documented JSON shapes");
  explain->add_flag("--all", opt.show_all, "Show zero-weight rows in the table");

  std::string only_case;
  CLI::App* fixtures =
      app.add_subcommand("fixtures", "Run the golden example catalog and report pass/fail");
  fixtures->add_option("--case", only_case, "Run a single named case");

  CLI11_PARSE(app, argc, argv);

  try {
    if (explain->parsed()) return cmd_explain(opt);
    if (fixtures->parsed()) return cmd_fixtures(only_case);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

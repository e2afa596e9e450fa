#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "featexpl/oracle.hpp"
#include "featexpl/types.hpp"

namespace featexpl {

/// Whitespace split with leading/trailing punctuation (.,!?;:) stripped into
/// discarded separators; surface case preserved; positions assigned left to
/// right. Throws ValidationError when the text holds no tokens.
Instance tokenize(const std::string& text);

/// Ordered if/else-if rule chain: first rule whose pattern occurs wins.
/// A pattern matches iff all its tokens appear unoccluded at consecutive
/// instance positions (case-sensitive surface match); an occluded token
/// between pattern tokens breaks the match. Under the deletion policy,
/// adjacency is taken over the compacted remaining sequence instead.
class PatternPriorityModel final : public Model {
public:
  struct Rule {
    std::vector<std::string> pattern;  // 1+ tokens
    double output = 0.0;
  };

  PatternPriorityModel(std::vector<Rule> rules, double default_output);

  double predict(const Instance& instance, const SubsetMask& mask,
                 OcclusionPolicy policy) const override;
  void check_instance(const Instance& instance) const override;

  const std::vector<Rule>& rules() const { return rules_; }
  double default_output() const { return default_output_; }

private:
  std::vector<Rule> rules_;
  double default_output_;
};

/// Aspect-based sentiment scorer:
///   1. unoccluded aspect and sentiment tokens are identified;
///   2. each sentiment is associated to the nearest unoccluded aspect by
///      absolute position distance — occluded positions still count, and an
///      equidistant tie goes to the leftmost aspect;
///   3. per aspect: all same-sign sentiments -> strongest by absolute value;
///      mixed signs -> sum clamped to [-1, 1]; no sentiment -> 0;
///   4. head: clamped sum over aspect scores, or one named aspect's score
///      (0 when that aspect is absent).
/// Occluded tokens are neutral: they contribute no sentiment and no aspect
/// but keep their position for distance counting, so only the occlusion
/// policy is supported.
class AspectSentimentModel final : public Model {
public:
  /// Canonical aspect name plus its accepted surface variants.
  struct Aspect {
    std::string name;
    std::vector<std::string> variants;  // includes the canonical surface
  };

  struct Head {
    enum class Kind { overall_sum_clamped, single_aspect };
    Kind kind = Kind::overall_sum_clamped;
    std::string aspect;  // set for single_aspect
  };

  /// Sentiment scores must lie in [-1, 1] and must not be exactly 0; aspect
  /// and sentiment surfaces must not overlap. Throws ValidationError.
  AspectSentimentModel(std::vector<Aspect> aspects,
                       std::map<std::string, double> sentiments, Head head);

  double predict(const Instance& instance, const SubsetMask& mask,
                 OcclusionPolicy policy) const override;
  void check_instance(const Instance& instance) const override;

  const Head& head() const { return head_; }
  const std::vector<Aspect>& aspects() const { return aspects_; }
  const std::map<std::string, double>& sentiments() const { return sentiments_; }

private:
  const std::string* aspect_of(const std::string& surface) const;

  std::vector<Aspect> aspects_;
  std::map<std::string, std::string> variant_to_aspect_;
  std::map<std::string, double> sentiments_;
  Head head_;
};

/// min or max over a fixed-arity numeric input; a masked-out feature takes
/// its baseline value 0 before the reduction (deletion-equivalent).
class NumericGame final : public Model {
public:
  enum class Kind { min, max };

  NumericGame(Kind kind, std::size_t arity);

  double predict(const Instance& instance, const SubsetMask& mask,
                 OcclusionPolicy policy) const override;
  void check_instance(const Instance& instance) const override;

  Kind kind() const { return kind_; }
  std::size_t arity() const { return arity_; }

private:
  Kind kind_;
  std::size_t arity_;
};

/// Parses a model configuration document. Exactly one section per document:
///
///   [pattern]                     [aspect]                       [numeric]
///   default = 0                   aspects = [taste/Tastes, ...]  kind = min
///   "very good" => 0.9            sentiments = { good: 0.6 }     arity = 2
///   "nice" => 0.7                 head = overall | aspect:taste
///
/// '#' starts a comment. Unknown sections or keys are rejected with a
/// ParseError carrying the line number; semantic violations raise
/// ValidationError.
std::unique_ptr<Model> parse_model(const std::string& document);

/// parse_model over a file's contents.
std::unique_ptr<Model> parse_model_file(const std::string& path);

/// Built-in models: fig1_m, fig2_mO, fig2_mS, fig2_mT, min2, max3.
/// Throws ValidationError for unknown names.
const Model& builtin_model(const std::string& name);
std::vector<std::string> builtin_model_names();
bool is_builtin_model(const std::string& name);

}  // namespace featexpl

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace featexpl {

/// Absolute epsilon for "two game values are equal". The explanation-level
/// tolerance used by sufficiency checks is a separate, user-facing knob.
inline constexpr double kValueEpsilon = 1e-9;

/// Exact enumeration (Shapley, MSS, relevant-feature pruning) refuses games
/// with more than this many features: 2^20 cached evaluations keeps
/// desk-scale runtime under seconds.
inline constexpr std::size_t kExhaustiveCap = 20;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition was violated by the caller (mask length mismatch,
/// non-positive tolerance, arity mismatch, wrong explanation method, ...).
class ContractError : public Error {
public:
  using Error::Error;
};

/// An exact enumeration would exceed kExhaustiveCap.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Syntax error in a model configuration document.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  explicit ParseError(const std::string& msg) : ParseError(msg, 0) {}
  int line() const { return line_; }

private:
  int line_ = 0;
};

/// A document parsed but violates a semantic constraint (sentiment score out
/// of range, empty instance, overlapping lexicons, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A model evaluation failed; carries the offending mask rendered as text.
class EvalError : public Error {
public:
  EvalError(const std::string& msg, std::string mask_text)
      : Error(msg + " [mask " + mask_text + "]"), mask_text_(std::move(mask_text)) {}
  const std::string& mask_text() const { return mask_text_; }

private:
  std::string mask_text_;
};

/// Text-instance feature: one surface token.
struct TextToken {
  std::string surface;
  bool operator==(const TextToken&) const = default;
};

/// Numeric-instance feature: a named real value (unitless).
struct NamedValue {
  std::string name;
  double value = 0.0;
  bool operator==(const NamedValue&) const = default;
};

/// A single input feature. Position is unique within its instance and
/// contiguous from 0; payload kind is uniform within one instance.
struct Feature {
  std::size_t position = 0;
  std::variant<TextToken, NamedValue> payload;

  bool is_text() const { return std::holds_alternative<TextToken>(payload); }
  /// Token text for text features, value name for numeric ones.
  const std::string& surface() const {
    if (is_text()) return std::get<TextToken>(payload).surface;
    return std::get<NamedValue>(payload).name;
  }
  double value() const { return std::get<NamedValue>(payload).value; }
  bool operator==(const Feature&) const = default;
};

/// An ordered, nonempty sequence of features, all of one payload kind.
class Instance {
public:
  static Instance of_tokens(std::vector<std::string> tokens);
  /// Numeric instance with default names x1..xn.
  static Instance of_values(const std::vector<double>& values);
  static Instance of_named_values(const std::vector<std::pair<std::string, double>>& values);

  std::size_t size() const { return features_.size(); }
  const Feature& feature(std::size_t i) const { return features_.at(i); }
  const std::vector<Feature>& features() const { return features_; }
  bool is_text() const { return text_; }

  bool operator==(const Instance&) const = default;

private:
  Instance(std::vector<Feature> features, bool text)
      : features_(std::move(features)), text_(text) {}
  std::vector<Feature> features_;
  bool text_ = true;
};

/// Presence/absence flags over an instance's positions: the coalition.
/// Width is fixed at construction and must match the instance length.
class SubsetMask {
public:
  explicit SubsetMask(std::size_t size);
  static SubsetMask empty_of(std::size_t size) { return SubsetMask(size); }
  static SubsetMask full_of(std::size_t size);
  static SubsetMask of_positions(std::size_t size, const std::vector<std::size_t>& positions);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const;
  SubsetMask& set(std::size_t i, bool present = true);
  SubsetMask with(std::size_t i) const;
  SubsetMask without(std::size_t i) const;

  std::size_t count() const;
  bool none() const { return count() == 0; }
  bool all() const { return count() == size_; }

  bool is_subset_of(const SubsetMask& other) const;
  /// Strict partial order: proper containment of present sets.
  bool is_proper_subset_of(const SubsetMask& other) const {
    return is_subset_of(other) && words_ != other.words_;
  }
  bool intersects(const SubsetMask& other) const;

  std::vector<std::size_t> positions() const;

  bool operator==(const SubsetMask& other) const {
    return size_ == other.size_ && words_ == other.words_;
  }

  std::size_t hash() const;

private:
  void check_index(std::size_t i) const;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& m) const { return m.hash(); }
};

/// "{0,3,7}/8" — present positions over total width.
std::string to_string(const SubsetMask& mask);

/// How absent features are eliminated. Occlusion preserves positions (an
/// absent feature remains a distance-counting placeholder); deletion
/// renumbers the remaining features.
enum class OcclusionPolicy { occlude, deletion };

}  // namespace featexpl

#include "featexpl/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace featexpl {

namespace {

bool is_strippable(char c) {
  return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':';
}

}  // namespace

Instance tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string raw;
  while (in >> raw) {
    std::size_t b = 0, e = raw.size();
    while (b < e && is_strippable(raw[b])) ++b;
    while (e > b && is_strippable(raw[e - 1])) --e;
    if (e > b) tokens.push_back(raw.substr(b, e - b));
  }
  if (tokens.empty()) throw ValidationError("empty instance: text holds no tokens");
  return Instance::of_tokens(std::move(tokens));
}

// ---------------------------------------------------------------------------
// PatternPriorityModel

PatternPriorityModel::PatternPriorityModel(std::vector<Rule> rules, double default_output)
    : rules_(std::move(rules)), default_output_(default_output) {
  if (rules_.empty()) throw ValidationError("pattern model requires at least one rule");
  for (const Rule& r : rules_)
    if (r.pattern.empty()) throw ValidationError("pattern rule with empty pattern");
}

void PatternPriorityModel::check_instance(const Instance& instance) const {
  if (!instance.is_text())
    throw ContractError("pattern model requires a text instance");
}

double PatternPriorityModel::predict(const Instance& instance, const SubsetMask& mask,
                                     OcclusionPolicy policy) const {
  const std::size_t n = instance.size();
  // Surface sequence the patterns are matched against: original positions
  // with occluded slots unmatched, or the compacted remainder under deletion.
  std::vector<const std::string*> seq;
  seq.reserve(n);
  if (policy == OcclusionPolicy::occlude) {
    for (std::size_t i = 0; i < n; ++i)
      seq.push_back(mask.test(i) ? &instance.feature(i).surface() : nullptr);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      if (mask.test(i)) seq.push_back(&instance.feature(i).surface());
  }
  for (const Rule& rule : rules_) {
    const std::size_t k = rule.pattern.size();
    if (k > seq.size()) continue;
    for (std::size_t start = 0; start + k <= seq.size(); ++start) {
      bool match = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (seq[start + j] == nullptr || *seq[start + j] != rule.pattern[j]) {
          match = false;
          break;
        }
      }
      if (match) return rule.output;
    }
  }
  return default_output_;
}

// ---------------------------------------------------------------------------
// AspectSentimentModel

AspectSentimentModel::AspectSentimentModel(std::vector<Aspect> aspects,
                                           std::map<std::string, double> sentiments, Head head)
    : aspects_(std::move(aspects)), sentiments_(std::move(sentiments)), head_(std::move(head)) {
  if (aspects_.empty()) throw ValidationError("aspect model requires at least one aspect");
  for (const Aspect& a : aspects_) {
    if (a.name.empty()) throw ValidationError("aspect with empty name");
    for (const std::string& v : a.variants) {
      auto [it, inserted] = variant_to_aspect_.emplace(v, a.name);
      if (!inserted)
        throw ValidationError("aspect surface '" + v + "' listed more than once");
    }
  }
  for (const auto& [word, score] : sentiments_) {
    if (!(score >= -1.0 && score <= 1.0))
      throw ValidationError("sentiment score for '" + word + "' outside [-1, 1]: " +
                            std::to_string(score));
    if (score == 0.0)
      throw ValidationError("sentiment score for '" + word + "' must not be 0");
    if (variant_to_aspect_.count(word))
      throw ValidationError("'" + word + "' appears in both the aspect and sentiment lexicons");
  }
  if (head_.kind == Head::Kind::single_aspect) {
    bool known = std::any_of(aspects_.begin(), aspects_.end(),
                             [this](const Aspect& a) { return a.name == head_.aspect; });
    if (!known)
      throw ValidationError("head refers to unknown aspect '" + head_.aspect + "'");
  }
}

void AspectSentimentModel::check_instance(const Instance& instance) const {
  if (!instance.is_text())
    throw ContractError("aspect model requires a text instance");
}

const std::string* AspectSentimentModel::aspect_of(const std::string& surface) const {
  auto it = variant_to_aspect_.find(surface);
  return it == variant_to_aspect_.end() ? nullptr : &it->second;
}

double AspectSentimentModel::predict(const Instance& instance, const SubsetMask& mask,
                                     OcclusionPolicy policy) const {
  if (policy == OcclusionPolicy::deletion)
    throw ContractError(
        "deletion is unsupported for distance-dependent models; use occlusion");
  const std::size_t n = instance.size();
  struct AspectHit {
    std::size_t position;
    const std::string* name;
  };
  std::vector<AspectHit> aspect_hits;
  std::vector<std::pair<std::size_t, double>> sentiment_hits;
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask.test(i)) continue;  // occluded tokens are neutral
    const std::string& surface = instance.feature(i).surface();
    if (const std::string* a = aspect_of(surface)) {
      aspect_hits.push_back({i, a});
    } else if (auto it = sentiments_.find(surface); it != sentiments_.end()) {
      sentiment_hits.emplace_back(i, it->second);
    }
  }

  // Aspect name -> collected sentiment scores. Aspects with no sentiment
  // stay neutral at 0.
  std::map<std::string, std::vector<double>> buckets;
  for (const AspectHit& a : aspect_hits) buckets[*a.name];
  for (const auto& [pos, score] : sentiment_hits) {
    if (aspect_hits.empty()) continue;  // no aspect present: contributes nothing
    const AspectHit* best = nullptr;
    std::size_t best_dist = std::numeric_limits<std::size_t>::max();
    // Hits are in ascending position order, so a strict improvement keeps
    // the leftmost aspect on equidistant ties.
    for (const AspectHit& a : aspect_hits) {
      // Distance in original positions; occluded tokens between still count.
      const std::size_t dist = a.position > pos ? a.position - pos : pos - a.position;
      if (dist < best_dist) {
        best = &a;
        best_dist = dist;
      }
    }
    buckets[*best->name].push_back(score);
  }

  std::map<std::string, double> aspect_score;
  for (const auto& [name, scores] : buckets) {
    if (scores.empty()) {
      aspect_score[name] = 0.0;
      continue;
    }
    const bool any_pos = std::any_of(scores.begin(), scores.end(), [](double s) { return s > 0; });
    const bool any_neg = std::any_of(scores.begin(), scores.end(), [](double s) { return s < 0; });
    if (any_pos && any_neg) {
      double sum = 0.0;
      for (double s : scores) sum += s;
      aspect_score[name] = std::clamp(sum, -1.0, 1.0);
    } else {
      double strongest = scores.front();
      for (double s : scores)
        if (std::fabs(s) > std::fabs(strongest)) strongest = s;
      aspect_score[name] = strongest;
    }
  }

  if (head_.kind == Head::Kind::single_aspect) {
    auto it = aspect_score.find(head_.aspect);
    return it == aspect_score.end() ? 0.0 : it->second;
  }
  double sum = 0.0;
  for (const auto& [name, score] : aspect_score) sum += score;
  return std::clamp(sum, -1.0, 1.0);
}

// ---------------------------------------------------------------------------
// NumericGame

NumericGame::NumericGame(Kind kind, std::size_t arity) : kind_(kind), arity_(arity) {
  if (arity_ == 0) throw ValidationError("numeric game arity must be at least 1");
}

void NumericGame::check_instance(const Instance& instance) const {
  if (instance.is_text())
    throw ContractError("numeric game requires a numeric instance");
  if (instance.size() != arity_)
    throw ContractError("numeric game arity " + std::to_string(arity_) +
                        " does not match instance length " + std::to_string(instance.size()));
}

double NumericGame::predict(const Instance& instance, const SubsetMask& mask,
                            OcclusionPolicy) const {
  check_instance(instance);
  double acc = mask.test(0) ? instance.feature(0).value() : 0.0;
  for (std::size_t i = 1; i < instance.size(); ++i) {
    const double v = mask.test(i) ? instance.feature(i).value() : 0.0;
    acc = kind_ == Kind::min ? std::min(acc, v) : std::max(acc, v);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Configuration parser

namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
  bool in_quotes = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') in_quotes = !in_quotes;
    if (s[i] == '#' && !in_quotes) return s.substr(0, i);
  }
  return s;
}

double parse_real(const std::string& s, int line) {
  const std::string t = trim(s);
  if (t.empty()) throw ParseError("expected a number", line);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size())
    throw ParseError("malformed number '" + t + "'", line);
  if (!std::isfinite(v)) throw ParseError("number '" + t + "' is not finite", line);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::unique_ptr<Model> parse_pattern_section(const std::vector<Line>& lines) {
  std::vector<PatternPriorityModel::Rule> rules;
  std::optional<double> default_output;
  for (const Line& ln : lines) {
    if (ln.text.rfind("default", 0) == 0) {
      const std::size_t eq = ln.text.find('=');
      if (eq == std::string::npos || trim(ln.text.substr(0, eq)) != "default")
        throw ParseError("expected 'default = <value>'", ln.number);
      if (default_output) throw ParseError("duplicate 'default'", ln.number);
      default_output = parse_real(ln.text.substr(eq + 1), ln.number);
      continue;
    }
    if (ln.text.front() == '"') {
      const std::size_t close = ln.text.find('"', 1);
      if (close == std::string::npos) throw ParseError("unterminated pattern quote", ln.number);
      const std::string pattern_text = ln.text.substr(1, close - 1);
      const std::string rest = trim(ln.text.substr(close + 1));
      if (rest.rfind("=>", 0) != 0)
        throw ParseError("expected '=>' after pattern", ln.number);
      PatternPriorityModel::Rule rule;
      std::istringstream ps(pattern_text);
      std::string tok;
      while (ps >> tok) rule.pattern.push_back(tok);
      if (rule.pattern.empty()) throw ParseError("empty pattern", ln.number);
      rule.output = parse_real(rest.substr(2), ln.number);
      rules.push_back(std::move(rule));
      continue;
    }
    throw ParseError("unknown entry in [pattern] section: '" + ln.text + "'", ln.number);
  }
  if (rules.empty()) throw ParseError("[pattern] section lists no rules");
  return std::make_unique<PatternPriorityModel>(std::move(rules),
                                                default_output.value_or(0.0));
}

std::unique_ptr<Model> parse_aspect_section(const std::vector<Line>& lines) {
  std::optional<std::vector<AspectSentimentModel::Aspect>> aspects;
  std::optional<std::map<std::string, double>> sentiments;
  std::optional<AspectSentimentModel::Head> head;
  for (const Line& ln : lines) {
    const std::size_t eq = ln.text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", ln.number);
    const std::string key = trim(ln.text.substr(0, eq));
    const std::string value = trim(ln.text.substr(eq + 1));
    if (key == "aspects") {
      if (aspects) throw ParseError("duplicate 'aspects'", ln.number);
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw ParseError("aspects must be a [...] list", ln.number);
      std::vector<AspectSentimentModel::Aspect> parsed;
      for (const std::string& item : split(value.substr(1, value.size() - 2), ',')) {
        const std::string entry = trim(item);
        if (entry.empty()) throw ParseError("empty aspect entry", ln.number);
        // canonical name first, '/'-separated surface variants after it
        AspectSentimentModel::Aspect a;
        for (const std::string& var : split(entry, '/')) {
          const std::string v = trim(var);
          if (v.empty()) throw ParseError("empty aspect variant in '" + entry + "'", ln.number);
          if (a.name.empty()) a.name = v;
          a.variants.push_back(v);
        }
        parsed.push_back(std::move(a));
      }
      if (parsed.empty()) throw ParseError("aspects list is empty", ln.number);
      aspects = std::move(parsed);
    } else if (key == "sentiments") {
      if (sentiments) throw ParseError("duplicate 'sentiments'", ln.number);
      if (value.size() < 2 || value.front() != '{' || value.back() != '}')
        throw ParseError("sentiments must be a {...} map", ln.number);
      std::map<std::string, double> parsed;
      const std::string body = trim(value.substr(1, value.size() - 2));
      if (!body.empty()) {
        for (const std::string& item : split(body, ',')) {
          const auto kv = split(item, ':');
          if (kv.size() != 2)
            throw ParseError("expected 'word: score' in sentiments", ln.number);
          const std::string word = trim(kv[0]);
          if (word.empty()) throw ParseError("empty sentiment word", ln.number);
          const double score = parse_real(kv[1], ln.number);
          if (!parsed.emplace(word, score).second)
            throw ParseError("sentiment '" + word + "' listed twice", ln.number);
        }
      }
      sentiments = std::move(parsed);
    } else if (key == "head") {
      if (head) throw ParseError("duplicate 'head'", ln.number);
      AspectSentimentModel::Head h;
      if (value == "overall") {
        h.kind = AspectSentimentModel::Head::Kind::overall_sum_clamped;
      } else if (value.rfind("aspect:", 0) == 0) {
        h.kind = AspectSentimentModel::Head::Kind::single_aspect;
        h.aspect = trim(value.substr(7));
        if (h.aspect.empty()) throw ParseError("head 'aspect:' names no aspect", ln.number);
      } else {
        throw ParseError("unknown head '" + value + "' (expected overall or aspect:<name>)",
                         ln.number);
      }
      head = std::move(h);
    } else {
      throw ParseError("unknown key '" + key + "' in [aspect] section", ln.number);
    }
  }
  if (!aspects) throw ParseError("[aspect] section misses 'aspects'");
  if (!sentiments) throw ParseError("[aspect] section misses 'sentiments'");
  if (!head) throw ParseError("[aspect] section misses 'head'");
  return std::make_unique<AspectSentimentModel>(std::move(*aspects), std::move(*sentiments),
                                                std::move(*head));
}

std::unique_ptr<Model> parse_numeric_section(const std::vector<Line>& lines) {
  std::optional<NumericGame::Kind> kind;
  std::optional<std::size_t> arity;
  for (const Line& ln : lines) {
    const std::size_t eq = ln.text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", ln.number);
    const std::string key = trim(ln.text.substr(0, eq));
    const std::string value = trim(ln.text.substr(eq + 1));
    if (key == "kind") {
      if (kind) throw ParseError("duplicate 'kind'", ln.number);
      if (value == "min")
        kind = NumericGame::Kind::min;
      else if (value == "max")
        kind = NumericGame::Kind::max;
      else
        throw ParseError("unknown kind '" + value + "' (expected min or max)", ln.number);
    } else if (key == "arity") {
      if (arity) throw ParseError("duplicate 'arity'", ln.number);
      const double v = parse_real(value, ln.number);
      if (v < 1 || v != std::floor(v))
        throw ParseError("arity must be a positive integer", ln.number);
      arity = static_cast<std::size_t>(v);
    } else {
      throw ParseError("unknown key '" + key + "' in [numeric] section", ln.number);
    }
  }
  if (!kind) throw ParseError("[numeric] section misses 'kind'");
  if (!arity) throw ParseError("[numeric] section misses 'arity'");
  return std::make_unique<NumericGame>(*kind, *arity);
}

}  // namespace

std::unique_ptr<Model> parse_model(const std::string& document) {
  std::istringstream in(document);
  std::string raw;
  int number = 0;
  std::string section;
  int section_line = 0;
  std::vector<Line> body;
  while (std::getline(in, raw)) {
    ++number;
    const std::string text = trim(strip_comment(raw));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ParseError("unterminated section header", number);
      if (!section.empty()) throw ParseError("more than one section in document", number);
      section = text.substr(1, text.size() - 2);
      section_line = number;
      continue;
    }
    if (section.empty()) throw ParseError("entry before any section header", number);
    body.push_back({number, text});
  }
  if (section.empty()) throw ParseError("document holds no section");
  if (section == "pattern") return parse_pattern_section(body);
  if (section == "aspect") return parse_aspect_section(body);
  if (section == "numeric") return parse_numeric_section(body);
  throw ParseError("unknown section [" + section + "]", section_line);
}

std::unique_ptr<Model> parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

// ---------------------------------------------------------------------------
// Built-in models

namespace {

constexpr const char* kFig1M = R"(
[pattern]
default = 0
"very good" => 0.9
"nice" => 0.7
"good" => 0.6
)";

constexpr const char* kAspectCommon =
    "aspects = [ taste/Tastes/tastes, smell/Smell/smells, appearance/Appearance ]\n"
    "sentiments = { amazing: 1, good: 0.6, refreshing: 0.6, bad: -0.6, "
    "peculiar: -0.3, horrible: -1 }\n";

std::string aspect_doc(const std::string& head) {
  return std::string("[aspect]\n") + kAspectCommon + "head = " + head + "\n";
}

constexpr const char* kMin2 = R"(
[numeric]
kind = min
arity = 2
)";

constexpr const char* kMax3 = R"(
[numeric]
kind = max
arity = 3
)";

struct Builtin {
  const char* name;
  std::unique_ptr<Model> model;
};

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> table = [] {
    std::vector<Builtin> t;
    t.push_back({"fig1_m", parse_model(kFig1M)});
    t.push_back({"fig2_mO", parse_model(aspect_doc("overall"))});
    t.push_back({"fig2_mS", parse_model(aspect_doc("aspect:smell"))});
    t.push_back({"fig2_mT", parse_model(aspect_doc("aspect:taste"))});
    t.push_back({"min2", parse_model(kMin2)});
    t.push_back({"max3", parse_model(kMax3)});
    return t;
  }();
  return table;
}

}  // namespace

const Model& builtin_model(const std::string& name) {
  for (const Builtin& b : builtins())
    if (name == b.name) return *b.model;
  throw ValidationError("unknown built-in model '" + name + "'");
}

std::vector<std::string> builtin_model_names() {
  std::vector<std::string> names;
  for (const Builtin& b : builtins()) names.emplace_back(b.name);
  return names;
}

bool is_builtin_model(const std::string& name) {
  for (const Builtin& b : builtins())
    if (name == b.name) return true;
  return false;
}

}  // namespace featexpl

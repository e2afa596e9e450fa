#include "featexpl/types.hpp"

#include <bit>
#include <sstream>

namespace featexpl {

Instance Instance::of_tokens(std::vector<std::string> tokens) {
  if (tokens.empty()) throw ValidationError("empty instance: no features");
  std::vector<Feature> fs;
  fs.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i)
    fs.push_back(Feature{i, TextToken{std::move(tokens[i])}});
  return Instance(std::move(fs), true);
}

Instance Instance::of_values(const std::vector<double>& values) {
  std::vector<std::pair<std::string, double>> named;
  named.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    named.emplace_back("x" + std::to_string(i + 1), values[i]);
  return of_named_values(named);
}

Instance Instance::of_named_values(const std::vector<std::pair<std::string, double>>& values) {
  if (values.empty()) throw ValidationError("empty instance: no features");
  std::vector<Feature> fs;
  fs.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    fs.push_back(Feature{i, NamedValue{values[i].first, values[i].second}});
  return Instance(std::move(fs), false);
}

namespace {
constexpr std::size_t kWordBits = 64;
}

SubsetMask::SubsetMask(std::size_t size)
    : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

SubsetMask SubsetMask::full_of(std::size_t size) {
  SubsetMask m(size);
  for (std::size_t i = 0; i < size; ++i) m.set(i);
  return m;
}

SubsetMask SubsetMask::of_positions(std::size_t size, const std::vector<std::size_t>& positions) {
  SubsetMask m(size);
  for (std::size_t p : positions) m.set(p);
  return m;
}

void SubsetMask::check_index(std::size_t i) const {
  if (i >= size_)
    throw ContractError("mask index " + std::to_string(i) + " out of range for width " +
                        std::to_string(size_));
}

bool SubsetMask::test(std::size_t i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

SubsetMask& SubsetMask::set(std::size_t i, bool present) {
  check_index(i);
  const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
  if (present)
    words_[i / kWordBits] |= bit;
  else
    words_[i / kWordBits] &= ~bit;
  return *this;
}

SubsetMask SubsetMask::with(std::size_t i) const {
  SubsetMask m = *this;
  m.set(i);
  return m;
}

SubsetMask SubsetMask::without(std::size_t i) const {
  SubsetMask m = *this;
  m.set(i, false);
  return m;
}

std::size_t SubsetMask::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  if (size_ != other.size_)
    throw ContractError("mask width mismatch: " + std::to_string(size_) + " vs " +
                        std::to_string(other.size_));
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~other.words_[k]) return false;
  return true;
}

bool SubsetMask::intersects(const SubsetMask& other) const {
  if (size_ != other.size_)
    throw ContractError("mask width mismatch: " + std::to_string(size_) + " vs " +
                        std::to_string(other.size_));
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & other.words_[k]) return true;
  return false;
}

std::vector<std::size_t> SubsetMask::positions() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::size_t SubsetMask::hash() const {
  // FNV-1a over the words plus the width.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(size_);
  for (std::uint64_t w : words_) mix(w);
  return static_cast<std::size_t>(h);
}

std::string to_string(const SubsetMask& mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t p : mask.positions()) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << "}/" << mask.size();
  return os.str();
}

}  // namespace featexpl

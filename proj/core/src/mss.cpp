#include "featexpl/mss.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace featexpl {

namespace {

void check_tolerance(double tolerance) {
  if (!(tolerance > 0.0))
    throw ContractError("tolerance must be positive, got " + std::to_string(tolerance));
}

// Canonical order: ascending cardinality, then lexicographic on the sorted
// position lists (low bits of the relevant-game index are low positions).
bool canonical_less(std::size_t a, std::size_t b) {
  const auto ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  // Lexicographic on ascending positions == ascending lowest set bit first;
  // comparing bit-reversed... iterate shared bits from the low end.
  std::size_t xa = a, xb = b;
  while (xa && xb) {
    const std::size_t la = xa & (~xa + 1), lb = xb & (~xb + 1);
    if (la != lb) return la < lb;
    xa &= xa - 1;
    xb &= xb - 1;
  }
  return a < b;
}

SubsetMask expand(std::size_t bits, const std::vector<std::size_t>& positions, std::size_t n) {
  SubsetMask m(n);
  for (std::size_t k = 0; k < positions.size(); ++k)
    if ((bits >> k) & 1u) m.set(positions[k]);
  return m;
}

// All minimal sufficient index-sets of `game` against reference value
// `target`, in canonical order. A candidate is minimal iff it properly
// contains no already-accepted minimal set (sufficiency of any proper subset
// implies containment of some minimal one).
std::vector<std::size_t> minimal_sufficient_sets(const detail::RelevantGame& game, double target,
                                                 double tolerance) {
  std::vector<std::size_t> sufficient;
  for (std::size_t bits = 0; bits < game.value.size(); ++bits)
    if (same_prediction(game.value[bits], target, tolerance)) sufficient.push_back(bits);
  std::sort(sufficient.begin(), sufficient.end(), canonical_less);
  std::vector<std::size_t> minimal;
  for (std::size_t s : sufficient) {
    bool contains_smaller = false;
    for (std::size_t m : minimal) {
      if ((m & s) == m && m != s) {
        contains_smaller = true;
        break;
      }
    }
    if (!contains_smaller) minimal.push_back(s);
  }
  return minimal;
}

}  // namespace

bool same_prediction(double a, double b, double tolerance) {
  const double diff = std::fabs(a - b);
  if (diff <= kValueEpsilon) return true;  // equal values, any tolerance
  return diff < tolerance - kValueEpsilon;
}

bool is_sufficient(GameOracle& oracle, const SubsetMask& mask, double tolerance) {
  check_tolerance(tolerance);
  return same_prediction(oracle.evaluate_subset(mask), oracle.full_value(), tolerance);
}

MssExplanation enumerate_mss(GameOracle& oracle, double tolerance) {
  check_tolerance(tolerance);
  const detail::RelevantGame game = detail::build_relevant_game(oracle);
  MssExplanation out;
  out.tolerance = tolerance;
  out.prediction = oracle.full_value();
  for (std::size_t bits : minimal_sufficient_sets(game, out.prediction, tolerance))
    out.subsets.push_back(expand(bits, game.positions, oracle.size()));
  return out;
}

std::vector<SubsetMask> disjoint_mss(GameOracle& oracle, double tolerance) {
  check_tolerance(tolerance);
  const double target = oracle.full_value();
  std::vector<std::size_t> pool = relevant_features(oracle);
  std::vector<SubsetMask> out;
  while (true) {
    const detail::RelevantGame game =
        detail::build_game_over(oracle, pool, SubsetMask::empty_of(oracle.size()));
    const std::vector<std::size_t> minimal =
        minimal_sufficient_sets(game, target, tolerance);
    if (minimal.empty()) break;
    const std::size_t pick = minimal.front();
    out.push_back(expand(pick, game.positions, oracle.size()));
    if (pick == 0) break;  // the empty subset consumes nothing
    std::vector<std::size_t> next_pool;
    for (std::size_t k = 0; k < game.positions.size(); ++k)
      if (!((pick >> k) & 1u)) next_pool.push_back(game.positions[k]);
    pool = std::move(next_pool);
  }
  return out;
}

}  // namespace featexpl

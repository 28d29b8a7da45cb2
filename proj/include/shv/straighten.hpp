#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "shv/scalar.hpp"
#include "shv/superalgebra.hpp"

namespace shv::induced {

using superalgebra::Family;
using superalgebra::Generator;

using Word = std::vector<Generator>;
/// Opaque coordinate label of a base-module basis vector; its meaning is
/// owned by the base module.
using BaseKey = std::vector<long>;
using BaseVec = std::map<BaseKey, Scalar>;
/// Linear combination of (word, base key) pairs.
using WordTerms = std::map<std::pair<Word, BaseKey>, Scalar>;

inline constexpr long kDefaultFuel = 1'000'000;

class FuelExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Describes one induction U(g) ⊗_{U(h)} V: which letters stay in normal
/// words (the complement of h), their canonical left-to-right order, and
/// how the remaining letters act on V.
struct InductionScheme {
  std::function<bool(const Generator&)> is_basis;
  /// Canonical position of a basis letter; normal words are
  /// non-decreasing in this key.
  std::function<std::tuple<int, long>(const Generator&)> rank;
  /// Action of a non-basis letter on a base vector.
  std::function<BaseVec(const Generator&, const BaseKey&)> bottom;
};

/// Block order used by every induction here: I letters, then G, then L,
/// each by ascending index.
std::tuple<int, long> block_rank(const Generator& g);

enum class Strategy { rightmost_first, leftmost_first };

/// Rewrites words into PBW normal form. Rules, for adjacent letters X Y:
///   non-basis X before basis Y, or basis letters out of order:
///       X Y -> (-1)^{|X||Y|} Y X + [X, Y]
///   equal odd basis letters:  G_a G_a -> [G_a, G_a] / 2
///   non-basis letter at the right end: acts on the base vector.
class Straightener {
 public:
  explicit Straightener(InductionScheme scheme, long fuel = kDefaultFuel)
      : scheme_(std::move(scheme)), fuel_(fuel) {}

  [[nodiscard]] WordTerms normalize(const WordTerms& input, Strategy strategy = Strategy::rightmost_first) const;
  [[nodiscard]] WordTerms normalize(const Word& word, const BaseKey& key,
                                    Strategy strategy = Strategy::rightmost_first) const;

  [[nodiscard]] bool is_normal(const Word& word) const;
  [[nodiscard]] const InductionScheme& scheme() const { return scheme_; }
  [[nodiscard]] long fuel() const { return fuel_; }

 private:
  // position of the chosen redex, or -1 when the word is normal; a redex
  // at word.size()-1 with a non-basis last letter is an end redex
  [[nodiscard]] long find_redex(const Word& word, Strategy strategy) const;
  [[nodiscard]] bool pair_reducible(const Generator& x, const Generator& y) const;

  InductionScheme scheme_;
  long fuel_;
};

}  // namespace shv::induced

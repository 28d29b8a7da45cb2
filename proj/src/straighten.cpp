#include "shv/straighten.hpp"

namespace shv::induced {

std::tuple<int, long> block_rank(const Generator& g) {
  switch (g.family) {
    case Family::I: return {0, g.doubled};
    case Family::G: return {1, g.doubled};
    case Family::L: return {2, g.doubled};
  }
  return {3, 0};
}

bool Straightener::pair_reducible(const Generator& x, const Generator& y) const {
  const bool bx = scheme_.is_basis(x);
  const bool by = scheme_.is_basis(y);
  if (!bx) return by;
  if (!by) return false;
  auto rx = scheme_.rank(x);
  auto ry = scheme_.rank(y);
  return rx > ry || (x == y && x.odd());
}

bool Straightener::is_normal(const Word& word) const { return find_redex(word, Strategy::rightmost_first) < 0; }

long Straightener::find_redex(const Word& word, Strategy strategy) const {
  const long n = static_cast<long>(word.size());
  if (n == 0) return -1;
  const bool end_redex = !scheme_.is_basis(word.back());
  if (strategy == Strategy::rightmost_first) {
    if (end_redex) return n - 1;
    for (long k = n - 2; k >= 0; --k)
      if (pair_reducible(word[k], word[k + 1])) return k;
  } else {
    for (long k = 0; k + 1 < n; ++k)
      if (pair_reducible(word[k], word[k + 1])) return k;
    if (end_redex) return n - 1;
  }
  return -1;
}

namespace {

void add_to(WordTerms& terms, Word word, BaseKey key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace({std::move(word), std::move(key)}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

WordTerms Straightener::normalize(const Word& word, const BaseKey& key, Strategy strategy) const {
  return normalize(WordTerms{{{word, key}, Scalar(1)}}, strategy);
}

WordTerms Straightener::normalize(const WordTerms& input, Strategy strategy) const {
  WordTerms pending = input;
  WordTerms done;
  long fuel = fuel_;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& word = node.key().first;
    const BaseKey& key = node.key().second;
    const Scalar& coeff = node.mapped();
    const long pos = find_redex(word, strategy);
    if (pos < 0) {
      add_to(done, word, key, coeff);
      continue;
    }
    if (--fuel < 0) throw FuelExhausted("straightening fuel exhausted");
    const long n = static_cast<long>(word.size());
    if (pos == n - 1 && !scheme_.is_basis(word.back())) {
      Word rest(word.begin(), word.end() - 1);
      for (const auto& [k2, c2] : scheme_.bottom(word.back(), key)) add_to(pending, rest, k2, coeff * c2);
      continue;
    }
    const Generator& x = word[pos];
    const Generator& y = word[pos + 1];
    auto splice = [&](std::vector<Generator> middle) {
      Word w(word.begin(), word.begin() + pos);
      w.insert(w.end(), middle.begin(), middle.end());
      w.insert(w.end(), word.begin() + pos + 2, word.end());
      return w;
    };
    const superalgebra::Element br = superalgebra::bracket(x, y);
    if (x == y && x.odd()) {
      // G_a G_a = [G_a, G_a] / 2
      for (const auto& [g, c] : br.terms()) add_to(pending, splice({g}), key, coeff * c / Scalar(2));
      continue;
    }
    const Scalar sign = (x.odd() && y.odd()) ? Scalar(-1) : Scalar(1);
    add_to(pending, splice({y, x}), key, coeff * sign);
    for (const auto& [g, c] : br.terms()) add_to(pending, splice({g}), key, coeff * c);
  }
  return done;
}

}  // namespace shv::induced

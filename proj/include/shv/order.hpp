#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

/// Finitely supported index vectors, their weights, and the reverse
/// lexicographic and principal total orders used to define degrees in
/// induced modules.
namespace shv::order {

/// Finitely supported vector (..., i_2, i_1) of non-negative integers,
/// stored sparsely by position (positions start at 1). With `Boolean`
/// set, entries are restricted to {0, 1}.
template <bool Boolean>
class IndexVector {
 public:
  IndexVector() = default;

  static IndexVector unit(long position) {
    IndexVector v;
    v.add(position, 1);
    return v;
  }

  /// Adds `count` at `position`.
  void add(long position, long count = 1) {
    if (position < 1) throw std::invalid_argument("index vector positions start at 1");
    if (count == 0) return;
    long& e = entries_[position];
    e += count;
    if (e < 0 || (Boolean && e > 1)) {
      e -= count;
      if (e == 0) entries_.erase(position);
      throw std::domain_error("index vector entry out of range at position " + std::to_string(position));
    }
    if (e == 0) entries_.erase(position);
  }

  [[nodiscard]] long at(long position) const {
    auto it = entries_.find(position);
    return it == entries_.end() ? 0 : it->second;
  }
  [[nodiscard]] bool is_zero() const { return entries_.empty(); }
  [[nodiscard]] const std::map<long, long>& entries() const { return entries_; }

  /// Σ position * exponent.
  [[nodiscard]] long weight() const {
    long w = 0;
    for (const auto& [p, e] : entries_) w += p * e;
    return w;
  }
  /// Σ exponent, the number of letters.
  [[nodiscard]] long length() const {
    long n = 0;
    for (const auto& [p, e] : entries_) n += e;
    return n;
  }

  /// Smallest supported position.
  [[nodiscard]] long min_support() const {
    if (is_zero()) throw std::domain_error("min_support of the zero vector");
    return entries_.begin()->first;
  }

  /// The vector with one unit removed at the smallest supported position.
  [[nodiscard]] IndexVector lower_prime() const {
    IndexVector out = *this;
    out.add(min_support(), -1);
    return out;
  }

  /// "2e3+e1", "0".
  [[nodiscard]] std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
      if (!s.empty()) s += "+";
      if (it->second != 1) s += std::to_string(it->second);
      s += "e" + std::to_string(it->first);
    }
    return s;
  }

  // structural comparison, used only for container keys
  friend auto operator<=>(const IndexVector&, const IndexVector&) = default;

 private:
  std::map<long, long> entries_;
};

using MonoIndex = IndexVector<false>;
using BoolIndex = IndexVector<true>;

template <bool B>
long weight(const IndexVector<B>& v) {
  return v.weight();
}

/// j > i iff at the first position r (scanning upward from 1)
/// where they differ, j_r > i_r. The zero vector is the minimum.
template <bool B>
std::strong_ordering rev_lex_compare(const IndexVector<B>& a, const IndexVector<B>& b) {
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    long pa = ia == a.entries().end() ? -1 : ia->first;
    long pb = ib == b.entries().end() ? -1 : ib->first;
    if (pa == pb) {
      if (ia->second != ib->second) return ia->second <=> ib->second;
      ++ia;
      ++ib;
    } else if (pb == -1 || (pa != -1 && pa < pb)) {
      return std::strong_ordering::greater;  // a has a nonzero entry where b has 0
    } else {
      return std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

/// (i, j, k) triple indexing a PBW monomial I^i G^j L^k.
struct DegreeTriple {
  MonoIndex i;
  BoolIndex j;
  MonoIndex k;

  [[nodiscard]] bool is_zero() const { return i.is_zero() && j.is_zero() && k.is_zero(); }
  [[nodiscard]] std::string str() const { return "(" + i.str() + "," + j.str() + "," + k.str() + ")"; }
  friend auto operator<=>(const DegreeTriple&, const DegreeTriple&) = default;
};

/// How the 6-tuple (i, w(i), j, w(j), k, w(k)) is compared.
/// right_to_left scans it from the last slot, as the reverse
/// lexicographic order scans index vectors: w(k), k, w(j), j, w(i), i.
/// Degree lowering in induced modules is strict only for this reading;
/// left_to_right is kept for comparison.
enum class Reading { right_to_left, left_to_right };

std::strong_ordering principal_compare(const DegreeTriple& x, const DegreeTriple& y,
                                       Reading reading = Reading::right_to_left);

}  // namespace shv::order

#include <gtest/gtest.h>

#include <random>

#include "shv/order.hpp"

using namespace shv::order;

namespace {

MonoIndex e(long p, long count = 1) {
  MonoIndex v;
  v.add(p, count);
  return v;
}

BoolIndex b(long p) { return BoolIndex::unit(p); }

MonoIndex random_mono(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 3), pos(1, 4), cnt(1, 2);
  MonoIndex v;
  for (int t = terms(rng); t > 0; --t) v.add(pos(rng), cnt(rng));
  return v;
}

BoolIndex random_bool(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 2);
  BoolIndex v;
  for (long p = 1; p <= 3; ++p)
    if (bit(rng) == 0) v.add(p);
  return v;
}

DegreeTriple random_triple(std::mt19937_64& rng) { return {random_mono(rng), random_bool(rng), random_mono(rng)}; }

int sgn(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST(IndexVector, Weight) {
  EXPECT_EQ(weight(e(3)), 3);
  MonoIndex v = e(2);
  v.add(1, 3);
  EXPECT_EQ(weight(v), 5);
  EXPECT_EQ(weight(MonoIndex{}), 0);
  EXPECT_EQ(v.str(), "e2+3e1");
}

TEST(IndexVector, LowerPrime) {
  EXPECT_TRUE(e(1).lower_prime().is_zero());
  MonoIndex v = e(3, 2);
  v.add(2);
  EXPECT_EQ(v.lower_prime(), e(3, 2));
  EXPECT_EQ(e(1, 2).lower_prime(), e(1));
  EXPECT_THROW((void)MonoIndex{}.lower_prime(), std::domain_error);
}

TEST(IndexVector, MinSupport) {
  EXPECT_EQ(e(5).min_support(), 5);
  MonoIndex v = e(4);
  v.add(2, 2);
  EXPECT_EQ(v.min_support(), 2);
  MonoIndex w = e(1);
  w.add(7);
  EXPECT_EQ(w.min_support(), 1);
  EXPECT_THROW((void)MonoIndex{}.min_support(), std::domain_error);
}

TEST(IndexVector, BooleanEntries) {
  BoolIndex v = b(2);
  EXPECT_THROW(v.add(2), std::domain_error);
  EXPECT_EQ(v, b(2));
  EXPECT_THROW(MonoIndex{}.add(0), std::invalid_argument);
}

TEST(RevLex, Examples) {
  EXPECT_EQ(rev_lex_compare(e(2), e(2)), std::strong_ordering::equal);
  EXPECT_EQ(rev_lex_compare(e(1), e(2)), std::strong_ordering::greater);
  EXPECT_EQ(rev_lex_compare(MonoIndex{}, e(5)), std::strong_ordering::less);
  MonoIndex v = e(3);
  v.add(1);
  EXPECT_EQ(rev_lex_compare(e(4) , v), std::strong_ordering::less);
}

// The left-to-right reading compares (i, w(i), j, w(j), k, w(k)) from the
// front; the default reading starts from w(k).
TEST(Principal, LeftToRightReading) {
  const DegreeTriple x{{}, {}, e(1)}, y{{}, {}, e(2)};
  EXPECT_EQ(principal_compare(x, y, Reading::left_to_right), std::strong_ordering::greater);
  const DegreeTriple p{e(1), {}, {}}, q{{}, b(1), {}};
  EXPECT_EQ(principal_compare(p, q, Reading::left_to_right), std::strong_ordering::greater);
  EXPECT_EQ(principal_compare(x, x, Reading::left_to_right), std::strong_ordering::equal);
}

TEST(Principal, DefaultReading) {
  const DegreeTriple x{{}, {}, e(1)}, y{{}, {}, e(2)};
  EXPECT_EQ(principal_compare(x, y), std::strong_ordering::less);
  const DegreeTriple p{e(1), {}, {}}, q{{}, b(1), {}};
  EXPECT_EQ(principal_compare(p, q), std::strong_ordering::less);
  EXPECT_EQ(principal_compare(x, x), std::strong_ordering::equal);
  // equal k weight, then k by reverse lexicographic order
  MonoIndex k1 = e(1, 2), k2 = e(2);
  EXPECT_EQ(principal_compare({{}, {}, k1}, {{}, {}, k2}), std::strong_ordering::greater);
  // I_1 on L_{-3}L_{-1}v contains I_{-2}L_{-1}v, of degree (e2,0,e1)
  MonoIndex start_k = e(3);
  start_k.add(1);
  const DegreeTriple start{{}, {}, start_k}, after{e(2), {}, e(1)};
  EXPECT_EQ(principal_compare(after, start), std::strong_ordering::less);
  EXPECT_EQ(principal_compare(after, start, Reading::left_to_right), std::strong_ordering::greater);
}

TEST(Principal, TotalOrderProperties) {
  std::mt19937_64 rng(5);
  std::vector<DegreeTriple> xs;
  for (int t = 0; t < 500; ++t) xs.push_back(random_triple(rng));
  for (Reading r : {Reading::right_to_left, Reading::left_to_right}) {
    for (std::size_t t = 0; t + 2 < xs.size(); ++t) {
      const auto &x = xs[t], &y = xs[t + 1], &z = xs[t + 2];
      EXPECT_EQ(sgn(principal_compare(x, y, r)), -sgn(principal_compare(y, x, r)));
      EXPECT_EQ(principal_compare(x, y, r) == 0, x == y);
      if (principal_compare(x, y, r) <= 0 && principal_compare(y, z, r) <= 0) {
        EXPECT_TRUE(principal_compare(x, z, r) <= 0);
      }
      // sorted triples exercise transitivity in every configuration
      std::vector<DegreeTriple> s = {x, y, z};
      std::sort(s.begin(), s.end(), [r](const auto& a, const auto& c) { return principal_compare(a, c, r) < 0; });
      EXPECT_TRUE(principal_compare(s[0], s[2], r) <= 0);
    }
    for (std::size_t t = 0; t + 1 < xs.size(); ++t) {
      const auto &x = xs[t].i, &y = xs[t + 1].i;
      EXPECT_EQ(sgn(rev_lex_compare(x, y)), -sgn(rev_lex_compare(y, x)));
      EXPECT_EQ(rev_lex_compare(x, y) == 0, x == y);
    }
  }
}

TEST(IndexVector, LowerPrimeProperties) {
  std::mt19937_64 rng(9);
  int checked = 0;
  while (checked < 500) {
    const MonoIndex v = random_mono(rng);
    if (v.is_zero()) continue;
    ++checked;
    EXPECT_EQ(weight(v.lower_prime()), weight(v) - v.min_support());
    EXPECT_EQ(rev_lex_compare(v, v.lower_prime()), std::strong_ordering::greater);
  }
}

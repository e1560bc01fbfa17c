#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "cmon/error.hpp"
#include "cmon/pairs.hpp"

namespace cmon {
namespace {

// McCarthy's tables written out by hand, indexed T=0, F=1, U=2.
constexpr std::array<int, 3> kNeg = {1, 0, 2};
constexpr std::array<std::array<int, 3>, 3> kAnd = {{{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}};
constexpr std::array<std::array<int, 3>, 3> kOr = {{{0, 0, 0}, {0, 1, 2}, {2, 2, 2}}};
constexpr std::array<int, 3> kDown = {0, 1, 1};

std::vector<int> digits(std::size_t n, std::size_t index) {
  std::vector<int> d(n);
  for (std::size_t x = n; x-- > 0;) {
    d[x] = static_cast<int>(index % 3);
    index /= 3;
  }
  return d;
}

std::size_t count(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c *= 3;
  return c;
}

PairOfSets from_digits(const std::vector<int>& d) {
  std::vector<Tri> v;
  for (int x : d) v.push_back(static_cast<Tri>(x));
  return pair_from_function(v);
}

void expect_pointwise(const PairOfSets& got, const std::vector<int>& want) {
  ASSERT_EQ(got.ground_size(), want.size());
  EXPECT_FALSE(got.a.intersects(got.b));
  for (std::size_t x = 0; x < want.size(); ++x) {
    EXPECT_EQ(static_cast<int>(got.at(x)), want[x]) << "point " << x;
  }
}

class PairsOracle : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PairsOracle, UnaryOpsMatchPointwiseThree) {
  const std::size_t n = GetParam();
  for (std::size_t i = 0; i < count(n); ++i) {
    const auto d = digits(n, i);
    const auto p = from_digits(d);
    std::vector<int> neg(n), down(n);
    for (std::size_t x = 0; x < n; ++x) {
      neg[x] = kNeg[d[x]];
      down[x] = kDown[d[x]];
    }
    expect_pointwise(pair_neg(p), neg);
    expect_pointwise(pair_down(p), down);
  }
}

TEST_P(PairsOracle, BinaryOpsMatchPointwiseThree) {
  const std::size_t n = GetParam();
  for (std::size_t i = 0; i < count(n); ++i) {
    const auto di = digits(n, i);
    const auto p = from_digits(di);
    for (std::size_t j = 0; j < count(n); ++j) {
      const auto dj = digits(n, j);
      const auto q = from_digits(dj);
      std::vector<int> conj(n), disj(n);
      for (std::size_t x = 0; x < n; ++x) {
        conj[x] = kAnd[di[x]][dj[x]];
        disj[x] = kOr[di[x]][dj[x]];
      }
      expect_pointwise(pair_and(p, q), conj);
      expect_pointwise(pair_or(p, q), disj);
    }
  }
}

TEST_P(PairsOracle, IndexRoundTrip) {
  const std::size_t n = GetParam();
  for (std::size_t i = 0; i < count(n); ++i) {
    const auto p = pair_at_index(n, static_cast<std::uint32_t>(i));
    EXPECT_EQ(pair_index(p), i);
    EXPECT_EQ(p, from_digits(digits(n, i)));
    EXPECT_EQ(pair_from_function(function_from_pair(p)), p);
  }
}

INSTANTIATE_TEST_SUITE_P(GroundSizes, PairsOracle, ::testing::Values(0, 1, 2, 3, 4));

TEST(Pairs, Constants) {
  const auto t = pair_const(3, Tri::T);
  EXPECT_TRUE(t.a.all());
  EXPECT_TRUE(t.b.none());
  const auto f = pair_const(3, Tri::F);
  EXPECT_TRUE(f.a.none());
  EXPECT_TRUE(f.b.all());
  const auto u = pair_const(3, Tri::U);
  EXPECT_TRUE(u.a.none());
  EXPECT_TRUE(u.b.none());
}

TEST(Pairs, DownIsComplementOfFirst) {
  Bits a(4), b(4);
  a.set(0);
  b.set(1);
  const auto d = pair_down(PairOfSets(a, b));
  EXPECT_EQ(d.a, a);
  EXPECT_EQ(d.b, ~a);
}

TEST(Pairs, Names) {
  EXPECT_EQ(pair_name(pair_const(0, Tri::U)), "e");
  EXPECT_EQ(pair_name(from_digits({0, 2, 1})), "TUF");
}

TEST(Pairs, GroundMismatch) {
  EXPECT_THROW(pair_and(pair_const(1, Tri::T), pair_const(2, Tri::T)), GroundMismatch);
  EXPECT_THROW(pair_or(pair_const(3, Tri::F), pair_const(2, Tri::F)), GroundMismatch);
  EXPECT_THROW(PairOfSets(Bits(2), Bits(3)), GroundMismatch);
}

TEST(Pairs, OverlappingComponentsRejected) {
  Bits a(2), b(2);
  a.set(1);
  b.set(1);
  EXPECT_THROW(PairOfSets(a, b), StructuralError);
}

}  // namespace
}  // namespace cmon

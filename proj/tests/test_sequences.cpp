#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "propus/error.hpp"
#include "propus/families.hpp"
#include "propus/search.hpp"
#include "propus/sequences.hpp"

using namespace propus;

namespace {

const std::vector<std::int64_t> kX2v49 = {3,  5,  7,  8,  9,  13, 14, 15, 16, 21, 25, 28,
                                          29, 32, 35, 37, 38, 39, 41, 42, 43, 44, 46, 47};
const std::vector<std::int64_t> kX2v49Fourth = {0,  1,  6,  7,  9,  10, 12, 14, 15, 16, 17,
                                                18, 20, 25, 28, 29, 30, 32, 33, 37, 39, 43};
const std::vector<std::int64_t> kX2v61 = {1,  2,  3,  9,  12, 13, 15, 19, 22, 26, 27, 28, 31, 33, 34,
                                          35, 36, 37, 39, 41, 42, 45, 46, 47, 49, 54, 56, 57, 58, 59};

std::vector<std::int64_t> head(const PafProfile& p, std::size_t n) {
  return {p.values.begin(), p.values.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace

TEST(ToSequence, Encoding) {
  const Modulus v(7);
  EXPECT_EQ(to_sequence(ResidueSet(v)).entries(), std::vector<std::int8_t>(7, 1));
  EXPECT_EQ(to_sequence(ResidueSet(v, {0})).entries(),
            (std::vector<std::int8_t>{-1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(to_sequence(ResidueSet(Modulus(49), kX2v49)).sum(), 1);
}

TEST(Paf, BalancedOptimal49) {
  const auto p = paf(to_sequence(ResidueSet(Modulus(49), kX2v49)));
  EXPECT_EQ(head(p, 25), (std::vector<std::int64_t>{49, 1, -3, -3, 1, -3, 1, 1, -3, -3, 1, -3, -3,
                                                    -3, 1, -3, 1, -3, 1, 1, -3, 1, 1, 1, -3}));
  ASSERT_TRUE(p.optimal.has_value());
  EXPECT_TRUE(*p.optimal);
  EXPECT_TRUE(p.balanced);
  EXPECT_TRUE(p.three_level);
}

TEST(Paf, OptimalNotBalanced49) {
  const auto seq = to_sequence(ResidueSet(Modulus(49), kX2v49Fourth));
  EXPECT_EQ(seq.sum(), 5);
  const auto p = paf(seq);
  EXPECT_EQ(head(p, 25), (std::vector<std::int64_t>{49, 1, 1, 1, 1, 1, 1, -3, 1, -3, 1, 1, -3, 1,
                                                    -3, -3, 1, -3, 1, 1, -3, -3, 1, 1, -3}));
  EXPECT_TRUE(*p.optimal);
  EXPECT_FALSE(p.balanced);
}

TEST(Paf, BalancedOptimal61) {
  const auto p = paf(to_sequence(ResidueSet(Modulus(61), kX2v61)));
  EXPECT_EQ(head(p, 31), (std::vector<std::int64_t>{61, 1,  -3, -3, -3, -3, 1,  1,  1,  -3, 1,
                                                    -3, 1,  1,  1,  1,  -3, 1,  1,  -3, -3, -3,
                                                    -3, 1,  1,  -3, -3, 1,  -3, -3, 1}));
  EXPECT_TRUE(*p.optimal);
  EXPECT_TRUE(p.balanced);
}

TEST(Paf, FourLevelBlock61) {
  const std::vector<Residue> g{13};
  const OrbitTable t(generate_subgroup(Modulus(61), g));
  const auto x = expand_block({Modulus(61), {0, 3, 4, 9, 14, 16, 18, 22, 28, 32}}, t);
  const auto p = paf(to_sequence(x));
  EXPECT_EQ(p.levels(), (std::vector<std::int64_t>{-11, -3, 1, 61}));
  EXPECT_FALSE(p.three_level);
  EXPECT_FALSE(*p.optimal);
}

TEST(Paf, AllOnes) {
  const auto p = paf(to_sequence(ResidueSet(Modulus(9))));
  EXPECT_EQ(p.values, std::vector<std::int64_t>(9, 9));
  EXPECT_EQ(p.levels(), (std::vector<std::int64_t>{9}));
}

TEST(Paf, OptimalityOnlyForOneModFour) {
  EXPECT_FALSE(paf(to_sequence(ResidueSet(Modulus(7), {3, 5, 6}))).optimal.has_value());
  EXPECT_TRUE(paf(to_sequence(ResidueSet(Modulus(13), {1}))).optimal.has_value());
}

TEST(SetAutocorrelation, Examples) {
  const Modulus v(7);
  for (Residue s = 1; s < 7; ++s) {
    EXPECT_EQ(set_autocorrelation(ResidueSet(v, {3, 5, 6}), s), 1);
    EXPECT_EQ(set_autocorrelation(ResidueSet(v, {0}), s), 0);
  }
  EXPECT_EQ(set_autocorrelation(ResidueSet(Modulus(49), kX2v49), 1), 12);  // PAF(1) = 1 = 49 - 4 * (24 - N)
}

TEST(SetAutocorrelation, ZeroShift) {
  try {
    set_autocorrelation(ResidueSet(Modulus(7), {1}), 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroShift);
  }
}

TEST(Paf, PropertiesOnRandomSets) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int v = std::uniform_int_distribution<int>(2, 90)(rng);
    std::vector<std::int64_t> xs;
    for (int i = 0; i < v; ++i) {
      if (rng() % 3 == 0) xs.push_back(i);
    }
    const ResidueSet x(Modulus(v), xs);
    const auto p = paf(to_sequence(x));
    const auto ref = oracle::paf(oracle::sequence(oracle::Set(xs.begin(), xs.end()), v));
    const auto n = set_autocorrelations(x);
    EXPECT_EQ(p.values[0], v);
    for (int s = 1; s < v; ++s) {
      EXPECT_EQ(p.values[s], ref[s]);
      EXPECT_EQ(p.values[s], p.values[v - s]);
      EXPECT_EQ(((p.values[s] - v) % 4 + 4) % 4, 0);
      const std::int64_t k = static_cast<std::int64_t>(x.size());
      EXPECT_EQ(p.values[s], v - 4 * (k - set_autocorrelation(x, s)));
      EXPECT_EQ(n[s], set_autocorrelation(x, s));
    }
  }
}

TEST(Paf, ConstantOnShiftOrbitsForInvariantSets) {
  const std::vector<std::pair<int, Residue>> cases = {{49, 18}, {61, 13}, {73, 8}, {43, 6}};
  for (const auto& [v, gen] : cases) {
    const std::vector<Residue> g{gen};
    const auto h = generate_subgroup(Modulus(v), g);
    const OrbitTable t(h);
    for (const auto& reps : enumerate_invariant_subsets(t, 3 * 5, false)) {
      const auto p = paf(to_sequence(expand_block(reps, t)));
      for (Residue s = 1; s < static_cast<Residue>(v); ++s) {
        for (auto e : h.elements()) EXPECT_EQ(p.values[s], p.values[Modulus(v).mul(e, s)]);
      }
      break;
    }
  }
}

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "propus/corpus.hpp"
#include "propus/error.hpp"
#include "propus/hadamard.hpp"

using namespace propus;

namespace {

std::vector<DifferenceFamily> table_families(int table) {
  std::vector<DifferenceFamily> out;
  for (const auto& rec : parse_families(bundled_table(table))) {
    for (auto& f : rec.expand()) out.push_back(std::move(f));
  }
  return out;
}

ResidueSet random_set(int v, std::mt19937_64& rng) {
  std::vector<std::int64_t> xs;
  for (int i = 0; i < v; ++i) {
    if (rng() & 1) xs.push_back(i);
  }
  return ResidueSet(Modulus(v), xs);
}

oracle::Set as_set(const ResidueSet& x) { return {x.begin(), x.end()}; }

}  // namespace

TEST(BackDiagonal, InvolutionAndTransposeIdentity) {
  std::mt19937_64 rng(8);
  for (int v = 1; v <= 20; ++v) {
    const auto r = BackDiagonal(static_cast<std::size_t>(v)).dense();
    EXPECT_EQ(r * r, IntMatrix::identity(v));
    if (v < 2) continue;
    const auto a = Circulant(to_sequence(random_set(v, rng))).dense();
    EXPECT_EQ((a * r).transpose(), r * a.transpose());
  }
}

TEST(Circulant, EntryRule) {
  const Circulant c(to_sequence(ResidueSet(Modulus(5), {1})));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(c(i, j), (j + 5 - i) % 5 == 1 ? -1 : 1);
  }
}

TEST(VerifyHadamard, OrderTwo) {
  const auto h = SignMatrix::from_rows({{1, 1}, {1, -1}});
  const auto v = verify_hadamard(h);
  EXPECT_TRUE(v.is_hadamard);
  EXPECT_TRUE(v.is_symmetric);
  EXPECT_EQ(matrix_to_string(h), "2\n++\n+-\n");
}

TEST(VerifyHadamard, NotHadamard) {
  const auto h = SignMatrix::from_rows({{1, 1}, {1, 1}});
  EXPECT_FALSE(verify_hadamard(h).is_hadamard);
  const auto k = SignMatrix::from_rows({{1, -1}, {1, 1}});
  const auto v = verify_hadamard(k, 1);
  EXPECT_TRUE(v.is_hadamard);
  EXPECT_FALSE(v.is_symmetric);
}

TEST(ArrangeForPropus, Examples) {
  const auto t1 = table_families(1);
  const auto a = arrange_for_propus(t1[0]);
  EXPECT_EQ(a.source, (std::array<int, 4>{4, 2, 3, 1}));
  EXPECT_EQ(a.blocks[0], t1[0].block(4));
  EXPECT_EQ(a.blocks[3], t1[0].block(1));
  EXPECT_EQ(arrange_for_propus(t1[2]).source, (std::array<int, 4>{1, 2, 3, 4}));

  const auto t3 = table_families(3);
  const auto s = arrange_for_propus(t3[0]);
  EXPECT_EQ(s.blocks[0], ResidueSet(Modulus(7), {0}));
}

TEST(ArrangeForPropus, NoValidArrangement) {
  const Modulus v(7);
  const auto f = DifferenceFamily::from_blocks(
      {v, {1, 1, 3, 3}, 1}, {ResidueSet(v, {0}), ResidueSet(v, {0}), ResidueSet(v, {1, 2, 4}),
                             ResidueSet(v, {3, 5, 6})});
  try {
    arrange_for_propus(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoValidArrangement);
  }
}

TEST(BuildPropus, SevenMatchesOracleAndGolden) {
  const auto f = table_families(3).front();
  const auto arr = arrange_for_propus(f);
  const auto h = build_propus(arr.blocks, f.modulus(), 1);
  EXPECT_EQ(h.order(), 28u);
  EXPECT_TRUE(h.verdict.is_symmetric);
  EXPECT_TRUE(h.verdict.is_hadamard);
  const auto ref = oracle::propus_array(
      {as_set(arr.blocks[0]), as_set(arr.blocks[1]), as_set(arr.blocks[2]), as_set(arr.blocks[3])}, 7);
  for (std::size_t i = 0; i < 28; ++i) {
    for (std::size_t j = 0; j < 28; ++j) ASSERT_EQ(h.matrix(i, j), ref[i][j]);
  }
  const auto text = matrix_to_string(h.matrix);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 29);
  EXPECT_EQ(text.substr(0, 3), "28\n");
}

TEST(BuildPropus, DimensionMismatch) {
  const Modulus v(7);
  try {
    build_propus({ResidueSet(v), ResidueSet(v), ResidueSet(Modulus(5)), ResidueSet(v)}, v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(BuildPropus, SymmetricForAnySymmetricA1AndEqualPair) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int v = std::uniform_int_distribution<int>(2, 15)(rng);
    auto a1 = random_set(v, rng);
    std::vector<std::int64_t> sym(a1.begin(), a1.end());
    for (auto x : a1) sym.push_back(v - static_cast<std::int64_t>(x));
    a1 = ResidueSet(Modulus(v), sym);
    const auto a2 = random_set(v, rng);
    const auto a4 = random_set(v, rng);
    const auto h = build_propus({a1, a2, a2, a4}, Modulus(v), 1);
    EXPECT_TRUE(h.verdict.is_symmetric);
    // Same layout through explicit products.
    const auto ref = oracle::propus_array({as_set(a1), as_set(a2), as_set(a2), as_set(a4)}, v);
    for (int i = 0; i < 4 * v; ++i) {
      for (int j = 0; j < 4 * v; ++j) ASSERT_EQ(h.matrix(i, j), ref[i][j]);
    }
  }
}

TEST(BuildPropus, CorruptedFamilyIsNotHadamard) {
  const auto f = table_families(1).front();
  auto arr = arrange_for_propus(f);
  std::vector<std::int64_t> x(arr.blocks[3].begin(), arr.blocks[3].end());
  x[0] = (x[0] + 1) % 67;
  while (arr.blocks[3].contains(static_cast<Residue>(x[0]))) x[0] = (x[0] + 1) % 67;
  arr.blocks[3] = ResidueSet(Modulus(67), x);
  const auto h = build_propus(arr.blocks, f.modulus());
  EXPECT_FALSE(h.verdict.is_hadamard);
}

TEST(GsCondition, Examples) {
  const Modulus v(9);
  EXPECT_FALSE(gs_condition({ResidueSet(v), ResidueSet(v), ResidueSet(v), ResidueSet(v)}));
  EXPECT_TRUE(gs_condition(table_families(3).front().blocks()));
  for (const auto& f : table_families(2)) EXPECT_TRUE(gs_condition(f.blocks()));
}

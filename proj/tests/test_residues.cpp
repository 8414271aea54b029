#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "propus/error.hpp"
#include "propus/residues.hpp"

using namespace propus;

namespace {

std::vector<Residue> elems(const ResidueSet& s) { return {s.begin(), s.end()}; }
std::vector<Residue> elems(const SubgroupH& h) { return {h.elements().begin(), h.elements().end()}; }

}  // namespace

TEST(Modulus, RejectsOutOfRange) {
  EXPECT_THROW(Modulus(1), Error);
  EXPECT_THROW(Modulus(0), Error);
  EXPECT_THROW(Modulus(1'000'001), Error);
  EXPECT_NO_THROW(Modulus(2));
}

TEST(Modulus, ArithmeticReducesIntoRange) {
  const Modulus v(1'000'000);
  EXPECT_EQ(v.mul(999'999, 999'999), 1u);  // (-1)^2, needs 64-bit product
  EXPECT_EQ(v.reduce(-1), 999'999u);
  EXPECT_EQ(v.add(999'999, 2), 1u);
  EXPECT_EQ(v.sub(0, 1), 999'999u);
  EXPECT_EQ(v.neg(0), 0u);
}

TEST(UnitGroup, SmallModuli) {
  EXPECT_EQ(unit_group(Modulus(7)), (std::vector<Residue>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(unit_group(Modulus(2)), (std::vector<Residue>{1}));
  EXPECT_EQ(unit_group(Modulus(49)).size(), 42u);
}

TEST(UnitGroup, MatchesGcdScan) {
  for (int v = 2; v < 200; ++v) {
    std::size_t phi = 0;
    for (int u = 1; u < v; ++u) phi += std::gcd(u, v) == 1;
    EXPECT_EQ(unit_group(Modulus(v)).size(), phi) << v;
  }
}

TEST(GenerateSubgroup, TableSubgroups) {
  const std::vector<Residue> g7{2}, g67{29}, g151{8};
  EXPECT_EQ(elems(generate_subgroup(Modulus(7), g7)), (std::vector<Residue>{1, 2, 4}));
  EXPECT_EQ(elems(generate_subgroup(Modulus(67), g67)), (std::vector<Residue>{1, 29, 37}));
  EXPECT_EQ(elems(generate_subgroup(Modulus(151), g151)), (std::vector<Residue>{1, 8, 19, 59, 64}));
}

TEST(GenerateSubgroup, NonUnitGenerator) {
  const std::vector<Residue> g{7};
  try {
    generate_subgroup(Modulus(49), g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonUnitGenerator);
  }
}

TEST(GenerateSubgroup, EmptyGeneratorsGiveTrivialGroup) {
  const auto h = generate_subgroup(Modulus(13), {});
  EXPECT_TRUE(h.is_trivial());
}

TEST(SubgroupH, FromElementsChecksClosure) {
  const std::vector<Residue> bad{1, 2, 5};
  try {
    SubgroupH::from_elements(Modulus(7), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SubgroupNotClosed);
  }
  const std::vector<Residue> unordered{1, 9, 81, 115, 114, 105, 24, 216, 102,
                                       304, 280, 64, 269, 272, 299, 235, 273};
  EXPECT_EQ(SubgroupH::from_elements(Modulus(307), unordered).order(), 17u);
}

TEST(OrbitTable, SevenUnderOrderThree) {
  const std::vector<Residue> g{2};
  const OrbitTable t(generate_subgroup(Modulus(7), g));
  ASSERT_EQ(t.orbit_count(), 3u);
  EXPECT_EQ(std::vector<Residue>(t.orbit(0).begin(), t.orbit(0).end()), (std::vector<Residue>{0}));
  EXPECT_EQ(std::vector<Residue>(t.orbit(1).begin(), t.orbit(1).end()), (std::vector<Residue>{1, 2, 4}));
  EXPECT_EQ(std::vector<Residue>(t.orbit(2).begin(), t.orbit(2).end()), (std::vector<Residue>{3, 5, 6}));
  EXPECT_EQ(t.negation_partner(1), 2u);
  EXPECT_EQ(t.negation_partner(0), 0u);
}

TEST(OrbitTable, OrbitSizeProfiles) {
  const std::vector<Residue> g67{29}, g49{18};
  const OrbitTable t67(generate_subgroup(Modulus(67), g67));
  EXPECT_EQ(t67.orbit_count(), 23u);
  const auto s67 = t67.orbit_sizes();
  EXPECT_EQ(std::count(s67.begin(), s67.end(), 3u), 22);
  EXPECT_EQ(s67.front(), 1u);

  const OrbitTable t49(generate_subgroup(Modulus(49), g49));
  const auto s49 = t49.orbit_sizes();
  EXPECT_EQ(s49.size(), 17u);
  EXPECT_EQ(std::count(s49.begin(), s49.end(), 3u), 16);
}

TEST(OrbitTable, AgreesWithOracle) {
  const std::vector<std::pair<int, std::vector<int>>> cases = {
      {7, {2}}, {13, {3}}, {49, {18}}, {61, {13}}, {61, {9}}, {43, {4}}, {45, {2}}, {100, {3}}};
  for (const auto& [v, gens] : cases) {
    const std::vector<Residue> g(gens.begin(), gens.end());
    const auto h = generate_subgroup(Modulus(v), g);
    const OrbitTable t(h);
    const auto ref = oracle::orbits(v, gens);
    ASSERT_EQ(t.orbit_count(), ref.size()) << v;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      const std::vector<int> got(t.orbit(i).begin(), t.orbit(i).end());
      EXPECT_EQ(got, ref[i]);
      EXPECT_EQ(t.representative(i), static_cast<Residue>(ref[i].front()));
    }
  }
}

TEST(OrbitTable, InvariantsOnRandomSubgroups) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int v = std::uniform_int_distribution<int>(2, 400)(rng);
    const auto units = unit_group(Modulus(v));
    const std::vector<Residue> g{units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)]};
    const auto h = generate_subgroup(Modulus(v), g);
    EXPECT_EQ(units.size() % h.order(), 0u);  // Lagrange
    const OrbitTable t(h);
    std::vector<int> hits(v, 0);
    for (std::size_t i = 0; i < t.orbit_count(); ++i) {
      const auto orbit = t.orbit(i);
      for (auto x : orbit) ++hits[x];
      EXPECT_EQ(orbit.front(), *std::min_element(orbit.begin(), orbit.end()));
      for (auto e : h.elements()) {
        const ResidueSet o(Modulus(v), std::vector<std::int64_t>(orbit.begin(), orbit.end()));
        EXPECT_EQ(scale_set(o, e), o);
      }
    }
    EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; }));
  }
}

TEST(NegateSet, Examples) {
  const Modulus v(7);
  EXPECT_EQ(elems(negate_set(ResidueSet(v, {0}))), (std::vector<Residue>{0}));
  EXPECT_EQ(elems(negate_set(ResidueSet(v, {1, 2, 4}))), (std::vector<Residue>{3, 5, 6}));
}

TEST(NegateSet, Involution) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int v = std::uniform_int_distribution<int>(2, 120)(rng);
    std::vector<std::int64_t> xs;
    for (int i = 0; i < v; ++i) {
      if (rng() & 1) xs.push_back(i);
    }
    const ResidueSet x(Modulus(v), xs);
    EXPECT_EQ(negate_set(negate_set(x)), x);
  }
}

TEST(ResidueSet, NormalizesInput) {
  const ResidueSet x(Modulus(7), {9, -1, 2, 6});
  EXPECT_EQ(elems(x), (std::vector<Residue>{2, 6}));
  EXPECT_EQ(complement_set(x).size(), 5u);
  EXPECT_EQ(elems(translate_set(x, 3)), (std::vector<Residue>{2, 5}));
}

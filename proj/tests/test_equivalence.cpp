#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "propus/corpus.hpp"
#include "propus/equivalence.hpp"
#include "propus/error.hpp"

using namespace propus;

namespace {

std::vector<DifferenceFamily> corpus_families(int table) {
  std::vector<DifferenceFamily> out;
  for (const auto& rec : parse_families(bundled_table(table))) {
    for (auto& f : rec.expand()) out.push_back(std::move(f));
  }
  return out;
}

DifferenceFamily random_walk(DifferenceFamily f, std::mt19937_64& rng, int steps) {
  for (int i = 0; i < steps; ++i) f = apply_move(f, random_move(f, rng));
  return f;
}

}  // namespace

TEST(LeastTranslate, MatchesExhaustiveTranslates) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int v = std::uniform_int_distribution<int>(2, 60)(rng);
    std::vector<std::int64_t> xs;
    for (int i = 0; i < v; ++i) {
      if (rng() % 3 == 0) xs.push_back(i);
    }
    const ResidueSet x(Modulus(v), xs);
    ResidueSet best = x;
    for (int g = 0; g < v; ++g) best = std::min(best, translate_set(x, static_cast<Residue>(g)));
    Residue shift = 0;
    EXPECT_EQ(least_translate(x, &shift), best);
    EXPECT_EQ(translate_set(x, shift), best);
  }
}

TEST(CanonicalForm, IsAFixedPoint) {
  for (const auto& f : corpus_families(3)) {
    const auto cf = canonical_form(f);
    EXPECT_EQ(canonical_form(cf.v, cf.blocks), cf);
  }
}

TEST(CanonicalForm, WitnessReproducesBlocks) {
  for (const auto& f : corpus_families(1)) {
    const auto cf = canonical_form(f);
    const Modulus v = f.modulus();
    for (int j = 0; j < 4; ++j) {
      const auto& m = cf.witness.moves[j];
      const Residue mult = m.negated ? v.neg(cf.witness.multiplier) : cf.witness.multiplier;
      EXPECT_EQ(translate_set(scale_set(f.block(m.source), mult), m.translate), cf.blocks[j]);
    }
  }
}

TEST(CanonicalForm, InvariantUnderEachMoveKind) {
  const auto fams = corpus_families(3);
  const auto& f = fams[3];  // (19;7,9,9,6;12) first family
  const auto cf = canonical_form(f);
  EXPECT_EQ(canonical_form(apply_move(f, {MoveKind::Translate, 2, 1, 5})), cf);
  EXPECT_EQ(canonical_form(apply_move(f, {MoveKind::Negate, 4, 1, 0})), cf);
  EXPECT_EQ(canonical_form(apply_move(f, {MoveKind::Automorphism, 1, 1, 2})), cf);
  EXPECT_EQ(canonical_form(apply_move(f, {MoveKind::Swap, 2, 3, 0})), cf);
}

TEST(CanonicalForm, SixInequivalentFamiliesOf67) {
  const auto fams = corpus_families(1);
  std::vector<CanonicalForm> forms;
  for (std::size_t i = 0; i < 6; ++i) {
    ASSERT_EQ(fams[i].modulus().value(), 67u);
    forms.push_back(canonical_form(fams[i]));
  }
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) EXPECT_FALSE(forms[i] == forms[j]) << i << "," << j;
  }
  EXPECT_FALSE(equivalent(fams[0], fams[1]));
}

TEST(CanonicalForm, TwoFamiliesOf19Differ) {
  const auto fams = corpus_families(3);
  ASSERT_EQ(fams[3].params().to_string(), "(19;7,9,9,6;12)");
  ASSERT_EQ(fams[4].params().to_string(), "(19;7,9,9,6;12)");
  EXPECT_FALSE(canonical_form(fams[3]) == canonical_form(fams[4]));
}

TEST(Equivalent, RandomWalks) {
  std::mt19937_64 rng(123);
  for (const auto& f : corpus_families(3)) {
    if (f.modulus().value() > 100) continue;
    EXPECT_TRUE(equivalent(f, f));
    const auto g = random_walk(f, rng, 20);
    EXPECT_TRUE(equivalent(f, g)) << f.params().to_string();
    EXPECT_TRUE(equivalent(g, f));
    const auto h = random_walk(g, rng, 20);
    EXPECT_TRUE(equivalent(f, h));
  }
}

TEST(Equivalent, DifferentSizeMultisets) {
  const auto fams = corpus_families(1);
  EXPECT_FALSE(equivalent(fams[0], fams[2]));
  EXPECT_FALSE(equivalent(fams[0], fams[6]));
}

TEST(Equivalent, ComplementIsNotAnEquivalenceMove) {
  const auto f = corpus_families(3).front();  // (7;3,3,3,1;3)
  const auto g = complement_normalized(apply_move(f, {MoveKind::Negate, 1, 1, 0}));
  EXPECT_EQ(g.params(), f.params());  // nothing exceeds v/2
  const Modulus v = f.modulus();
  const auto c = DifferenceFamily::from_blocks(
      {v, {4, 3, 3, 1}, 4}, {complement_set(f.block(1)), f.block(2), f.block(3), f.block(4)});
  EXPECT_FALSE(equivalent(f, c));
  EXPECT_TRUE(equivalent(f, complement_normalized(c)));
}

TEST(ApplyMove, Errors) {
  const auto f = corpus_families(3).front();
  EXPECT_THROW(apply_move(f, {MoveKind::Swap, 1, 4, 0}), Error);
  EXPECT_THROW(apply_move(f, {MoveKind::Automorphism, 1, 1, 7}), Error);
}

TEST(CanonicalForm, FastAt307) {
  const auto fams = corpus_families(3);
  const auto& f = fams.back();
  ASSERT_EQ(f.modulus().value(), 307u);
  const auto start = std::chrono::steady_clock::now();
  const auto cf = canonical_form(f);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 5.0);
  EXPECT_EQ(cf.sizes, (std::array<std::uint32_t, 4>{136, 153, 153, 153}));
}

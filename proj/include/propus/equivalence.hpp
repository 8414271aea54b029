#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "propus/families.hpp"

namespace propus {

/// How canonical block j arises from the input: sign * multiplier * X_source + translate.
struct BlockMove {
  int source = 0;  // 1-based index of the input block
  bool negated = false;
  Residue translate = 0;

  friend bool operator==(const BlockMove&, const BlockMove&) = default;
};

struct TransformWitness {
  Residue multiplier = 1;
  std::array<BlockMove, 4> moves{};
};

/// Representative of a family's class under translates of single blocks,
/// negation of single blocks, unit automorphisms, and exchange of equal-size
/// blocks. Blocks are ordered by (size, lexicographic).
struct CanonicalForm {
  Modulus v;
  std::array<std::uint32_t, 4> sizes;
  std::array<ResidueSet, 4> blocks;
  TransformWitness witness;

  /// Compares the class representative only, not the witness.
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.v == b.v && a.sizes == b.sizes && a.blocks == b.blocks;
  }
};

/// Lexicographically least set among all translates of x. The least
/// translate always contains 0, so only the k translates x - x_i are
/// candidates, and each is a rotation of the sorted list.
ResidueSet least_translate(const ResidueSet& x, Residue* shift = nullptr);

CanonicalForm canonical_form(Modulus v, const std::array<ResidueSet, 4>& blocks);
CanonicalForm canonical_form(const DifferenceFamily& f);

/// Families with different v or block-size multisets are never equivalent.
bool equivalent(const DifferenceFamily& f, const DifferenceFamily& g);

enum class MoveKind { Translate, Negate, Automorphism, Swap };

struct ElementaryMove {
  MoveKind kind;
  int block = 1;      // 1-based; Translate, Negate, Swap
  int other = 1;      // Swap partner (equal size required)
  Residue value = 0;  // translate amount or unit multiplier
};

/// Throws InvalidArgument for a swap of unequal sizes, NonUnit for a
/// non-unit automorphism.
DifferenceFamily apply_move(const DifferenceFamily& f, const ElementaryMove& move);

/// Draws a uniformly chosen elementary move valid for f.
ElementaryMove random_move(const DifferenceFamily& f, std::mt19937_64& rng);

/// Replaces every block larger than v/2 by its complement. This changes the
/// parameter set and is not an equivalence move.
DifferenceFamily complement_normalized(const DifferenceFamily& f);

}  // namespace propus

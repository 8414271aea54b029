#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "propus/paramsets.hpp"
#include "propus/residues.hpp"

namespace propus {

/// Orbit representatives naming an H-invariant block.
struct BlockReps {
  Modulus v;
  std::vector<Residue> reps;

  friend auto operator<=>(const BlockReps&, const BlockReps&) = default;
};

/// Union of the named orbits. Throws NotARepresentative when an entry is
/// not the minimum of its orbit.
ResidueSet expand_block(const BlockReps& reps, const OrbitTable& t);

/// Inverse of expand_block. Throws NotInvariant when x splits an orbit.
BlockReps contract_block(const ResidueSet& x, const OrbitTable& t);

/// Four base blocks X1..X4 over Z_v with their parameter set.
class DifferenceFamily {
 public:
  /// Three-block encoding (X1, X2 = X3, X4) as unions of H-orbits.
  static DifferenceFamily from_reps(const PropusParameterSet& params, const OrbitTable& t,
                                    const std::array<BlockReps, 3>& reps);

  /// Four explicit blocks; no orbit structure is assumed.
  static DifferenceFamily from_blocks(const PropusParameterSet& params,
                                      std::array<ResidueSet, 4> blocks,
                                      std::optional<SubgroupH> subgroup = std::nullopt);

  const PropusParameterSet& params() const noexcept { return params_; }
  Modulus modulus() const noexcept { return params_.v; }
  const std::optional<SubgroupH>& subgroup() const noexcept { return subgroup_; }
  const std::array<ResidueSet, 4>& blocks() const noexcept { return blocks_; }
  /// 1-based, matching X1..X4.
  const ResidueSet& block(int i) const { return blocks_.at(static_cast<std::size_t>(i - 1)); }
  const std::optional<std::array<BlockReps, 3>>& reps() const noexcept { return reps_; }

  friend bool operator==(const DifferenceFamily& a, const DifferenceFamily& b) {
    return a.params_ == b.params_ && a.blocks_ == b.blocks_;
  }

 private:
  DifferenceFamily(PropusParameterSet params, std::array<ResidueSet, 4> blocks)
      : params_(params), blocks_(std::move(blocks)) {}

  PropusParameterSet params_;
  std::optional<SubgroupH> subgroup_;
  std::array<ResidueSet, 4> blocks_;
  std::optional<std::array<BlockReps, 3>> reps_;
};

/// counts[d] = sum_i |{(a, b) in X_i x X_i : a - b = d}| for d in [1, v);
/// counts[0] is left at 0.
struct DifferenceCountTable {
  Modulus v;
  std::vector<std::int64_t> counts;

  std::int64_t at(Residue d) const { return counts.at(d); }
};

DifferenceCountTable difference_counts(const DifferenceFamily& f);
DifferenceCountTable difference_counts(Modulus v, const std::array<ResidueSet, 4>& blocks);

struct FamilyVerdict {
  ParamVerdict params;
  bool sizes_match = false;
  bool is_gs = false;
  bool is_propus = false;
  std::vector<int> symmetric_blocks;            // 1-based indices i with -X_i = X_i
  std::optional<std::pair<int, int>> equal_pair;  // first (i, j), i < j, with X_i = X_j
  std::optional<Residue> first_bad_shift;       // first d with N(d) != lambda
  std::int64_t bad_count = 0;                   // N(first_bad_shift)

  std::string details() const;
};

FamilyVerdict verify_family(const DifferenceFamily& f);

bool is_symmetric(const ResidueSet& x);

/// True iff y = x + g for some g.
bool is_translate_of(const ResidueSet& x, const ResidueSet& y);

/// Throws NonUnit when gcd(m, v) != 1.
bool is_multiplier(const DifferenceFamily& f, Residue m);

}  // namespace propus

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "propus/residues.hpp"

namespace propus {

/// ±1 sequence of length v. Entry i is -1 exactly when i belongs to the
/// originating residue set.
class BinarySequence {
 public:
  explicit BinarySequence(std::vector<std::int8_t> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  std::int8_t operator[](std::size_t i) const noexcept { return entries_[i]; }
  const std::vector<std::int8_t>& entries() const noexcept { return entries_; }
  std::int64_t sum() const noexcept;

 private:
  std::vector<std::int8_t> entries_;
};

BinarySequence to_sequence(const ResidueSet& x);

struct PafProfile {
  std::vector<std::int64_t> values;            // PAF(s), s = 0..v-1
  std::vector<std::int64_t> off_peak_levels;   // distinct PAF(s), s >= 1, ascending
  bool three_level = false;
  std::optional<bool> optimal;                 // only defined for v = 1 (mod 4)
  bool balanced = false;

  /// Distinct values over all shifts including the peak, ascending.
  std::vector<std::int64_t> levels() const;
};

/// Periodic autocorrelation by direct O(v^2) summation, with the
/// three-level, optimal and balanced classification.
PafProfile paf(const BinarySequence& seq);

/// N_X(s) = |X ∩ (X + s)|. Relates to the sequence PAF by
/// PAF(s) = v - 4(|X| - N_X(s)). Throws ZeroShift for s = 0 mod v.
std::int64_t set_autocorrelation(const ResidueSet& x, Residue s);

/// N_X(s) for every s in [0, v); entry 0 holds |X|.
std::vector<std::int64_t> set_autocorrelations(const ResidueSet& x);

}  // namespace propus

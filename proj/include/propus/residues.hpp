#pragma once

/**
 * @file residues.hpp
 * @brief Arithmetic in Z_v, its unit group, and orbit partitions.
 *
 * Every block of a difference family lives in the additive group Z_v.
 * Automorphisms of Z_v are multiplications by units, so a subgroup H of
 * the unit group acts on Z_v and splits it into orbits. The orbit method
 * builds base blocks as unions of those orbits; each orbit is named by its
 * smallest element.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace propus {

using Residue = std::uint32_t;

/// Modulus v of the cyclic group Z_v, 2 <= v <= 10^6.
class Modulus {
 public:
  static constexpr std::uint32_t kMax = 1'000'000;

  explicit Modulus(std::int64_t v);

  std::uint32_t value() const noexcept { return v_; }

  Residue reduce(std::int64_t a) const noexcept {
    const std::int64_t r = a % static_cast<std::int64_t>(v_);
    return static_cast<Residue>(r < 0 ? r + v_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= v_ ? s - v_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + v_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : v_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(std::uint64_t{a} * b % v_);
  }

  bool is_unit(Residue a) const noexcept;

  friend auto operator<=>(const Modulus&, const Modulus&) = default;

 private:
  std::uint32_t v_;
};

/// A subset of Z_v kept as sorted distinct residues.
class ResidueSet {
 public:
  explicit ResidueSet(Modulus v) : v_(v) {}
  /// Reduces every value mod v, then sorts and removes duplicates.
  ResidueSet(Modulus v, std::span<const std::int64_t> values);
  ResidueSet(Modulus v, std::initializer_list<std::int64_t> values);
  /// Takes ownership of a vector already sorted, distinct and in [0, v).
  static ResidueSet from_sorted(Modulus v, std::vector<Residue> sorted);

  Modulus modulus() const noexcept { return v_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  std::span<const Residue> elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  Residue operator[](std::size_t i) const noexcept { return elems_[i]; }
  bool contains(Residue r) const noexcept;

  /// Membership mask of length v.
  std::vector<std::uint8_t> indicator() const;

  std::string to_string() const;

  friend bool operator==(const ResidueSet& a, const ResidueSet& b) {
    return a.v_ == b.v_ && a.elems_ == b.elems_;
  }
  /// Lexicographic on the sorted element lists.
  friend std::strong_ordering operator<=>(const ResidueSet& a, const ResidueSet& b) {
    if (auto c = a.v_ <=> b.v_; c != 0) return c;
    return a.elems_ <=> b.elems_;
  }

 private:
  Modulus v_;
  std::vector<Residue> elems_;
};

ResidueSet negate_set(const ResidueSet& x);
ResidueSet scale_set(const ResidueSet& x, Residue m);
ResidueSet translate_set(const ResidueSet& x, Residue g);
ResidueSet complement_set(const ResidueSet& x);

/// All units of Z_v in ascending order; length is Euler's phi(v).
std::vector<Residue> unit_group(Modulus v);

/// A multiplicative subgroup of the unit group, elements sorted.
class SubgroupH {
 public:
  /// Validates that `elements` is exactly a subgroup (contains 1, units only,
  /// closed under multiplication). Throws SubgroupNotClosed or NonUnit.
  static SubgroupH from_elements(Modulus v, std::span<const Residue> elements);

  Modulus modulus() const noexcept { return v_; }
  std::span<const Residue> elements() const noexcept { return elems_; }
  std::size_t order() const noexcept { return elems_.size(); }
  bool is_trivial() const noexcept { return elems_.size() == 1; }
  bool contains(Residue r) const noexcept;

  std::string to_string() const;

  friend bool operator==(const SubgroupH&, const SubgroupH&) = default;

 private:
  SubgroupH(Modulus v, std::vector<Residue> elems) : v_(v), elems_(std::move(elems)) {}
  friend SubgroupH generate_subgroup(Modulus, std::span<const Residue>);

  Modulus v_;
  std::vector<Residue> elems_;
};

/// Smallest subgroup of Z_v^* containing the generators.
/// Throws NonUnitGenerator for a generator not coprime to v.
SubgroupH generate_subgroup(Modulus v, std::span<const Residue> generators);

/// Partition of Z_v into H-orbits, ordered by representative (orbit minimum).
class OrbitTable {
 public:
  OrbitTable(const SubgroupH& h);

  Modulus modulus() const noexcept { return h_.modulus(); }
  const SubgroupH& subgroup() const noexcept { return h_; }

  std::size_t orbit_count() const noexcept { return orbits_.size(); }
  std::span<const Residue> orbit(std::size_t index) const noexcept { return orbits_[index]; }
  Residue representative(std::size_t index) const noexcept { return orbits_[index].front(); }
  std::size_t orbit_index_of(Residue r) const noexcept { return index_of_[r]; }
  Residue rep_of(Residue r) const noexcept { return representative(index_of_[r]); }
  bool is_representative(Residue r) const noexcept {
    return r < index_of_.size() && representative(index_of_[r]) == r;
  }
  /// Index of the orbit -O for orbit O; equal to `index` when O = -O.
  std::size_t negation_partner(std::size_t index) const noexcept { return neg_partner_[index]; }

  std::vector<std::size_t> orbit_sizes() const;

 private:
  SubgroupH h_;
  std::vector<std::vector<Residue>> orbits_;
  std::vector<std::size_t> index_of_;
  std::vector<std::size_t> neg_partner_;
};

inline OrbitTable orbit_table(const SubgroupH& h) { return OrbitTable(h); }

}  // namespace propus

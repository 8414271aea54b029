#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "propus/families.hpp"
#include "propus/sequences.hpp"

namespace propus {

/// Dense integer matrix, used for small exact identities.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  static IntMatrix identity(std::size_t n);

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// entry(i, j) = first_row[(j - i) mod v].
class Circulant {
 public:
  explicit Circulant(BinarySequence first_row) : row_(std::move(first_row)) {}

  std::size_t size() const noexcept { return row_.size(); }
  std::int8_t operator()(std::size_t i, std::size_t j) const noexcept {
    const std::size_t v = row_.size();
    return row_[(j + v - i) % v];
  }
  const BinarySequence& first_row() const noexcept { return row_; }
  IntMatrix dense() const;

 private:
  BinarySequence row_;
};

/// Back-diagonal permutation: entry(i, j) = 1 iff i + j = v - 1, so R maps
/// index i to v - 1 - i. With this convention the propus array built from a
/// symmetric A1 and A2 = A3 is itself symmetric.
class BackDiagonal {
 public:
  explicit BackDiagonal(std::size_t v) : v_(v) {}

  std::size_t size() const noexcept { return v_; }
  int operator()(std::size_t i, std::size_t j) const noexcept { return i + j == v_ - 1 ? 1 : 0; }
  std::size_t image(std::size_t i) const noexcept { return v_ - 1 - i; }
  IntMatrix dense() const;

 private:
  std::size_t v_;
};

/// Square matrix with entries +1/-1, stored row-major as 8-bit values.
class SignMatrix {
 public:
  explicit SignMatrix(std::size_t n) : n_(n), data_(n * n, 1) {}
  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t order() const noexcept { return n_; }
  std::int8_t operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::int8_t value) noexcept { data_[i * n_ + j] = value; }
  const std::int8_t* row(std::size_t i) const noexcept { return data_.data() + i * n_; }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int8_t> data_;
};

struct HadamardVerdict {
  bool is_symmetric = false;
  bool is_hadamard = false;
};

struct HadamardCandidate {
  SignMatrix matrix;
  HadamardVerdict verdict;

  std::size_t order() const noexcept { return matrix.order(); }
};

/// Blocks in array order A1..A4 plus the 1-based family index each came from.
struct PropusArrangement {
  std::array<ResidueSet, 4> blocks;
  std::array<int, 4> source;
};

/// Orders the blocks so that A2 = A3 is the equal pair and A1 is symmetric.
/// Among the two blocks outside the pair, the one listed first wins.
/// Throws NoValidArrangement when no such ordering exists.
PropusArrangement arrange_for_propus(const DifferenceFamily& f);

/// The 4v x 4v array
///   [ -A1   A2R   A3R   A4R ]
///   [ A3R   RA4   A1   -RA2 ]
///   [ A2R   A1   -RA4   RA3 ]
///   [ A4R  -RA3   RA2   A1  ]
/// with circulants A_i and back-diagonal R; verdicts are filled in.
/// Throws DimensionMismatch when the blocks do not all live in Z_v.
HadamardCandidate build_propus(const std::array<ResidueSet, 4>& blocks, Modulus v,
                               unsigned threads = 0);

/// Exact check of H H^T = nI over every row pair, and of H = H^T.
/// threads = 0 picks the hardware concurrency.
HadamardVerdict verify_hadamard(const SignMatrix& h, unsigned threads = 0);

/// True iff sum_i PAF_i(s) = 0 for every s in [1, v).
bool gs_condition(const std::array<ResidueSet, 4>& blocks);

}  // namespace propus

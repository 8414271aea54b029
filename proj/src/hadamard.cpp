#include "propus/hadamard.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "propus/error.hpp"

namespace propus {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

IntMatrix Circulant::dense() const {
  IntMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

IntMatrix BackDiagonal::dense() const {
  IntMatrix m(v_, v_);
  for (std::size_t i = 0; i < v_; ++i) m(i, image(i)) = 1;
  return m;
}

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  SignMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(Errc::DimensionMismatch, "matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != 1 && rows[i][j] != -1) {
        throw Error(Errc::InvalidArgument, "entries must be +1 or -1");
      }
      m.set(i, j, static_cast<std::int8_t>(rows[i][j]));
    }
  }
  return m;
}

PropusArrangement arrange_for_propus(const DifferenceFamily& f) {
  const auto& x = f.blocks();
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (x[i] != x[j]) continue;
      std::array<int, 2> rest{};
      int n = 0;
      for (int r = 0; r < 4; ++r) {
        if (r != i && r != j) rest[n++] = r;
      }
      for (int s = 0; s < 2; ++s) {
        const int sym = rest[s], other = rest[1 - s];
        if (!is_symmetric(x[sym])) continue;
        return {{x[sym], x[i], x[j], x[other]}, {sym + 1, i + 1, j + 1, other + 1}};
      }
    }
  }
  throw Error(Errc::NoValidArrangement,
              "no equal pair with a symmetric block outside it in " + f.params().to_string());
}

HadamardCandidate build_propus(const std::array<ResidueSet, 4>& blocks, Modulus v,
                               unsigned threads) {
  for (const auto& b : blocks) {
    if (b.modulus() != v) throw Error(Errc::DimensionMismatch, "block is not a subset of Z_v");
  }
  const std::size_t m = v.value();
  const std::array<Circulant, 4> a = {Circulant(to_sequence(blocks[0])),
                                      Circulant(to_sequence(blocks[1])),
                                      Circulant(to_sequence(blocks[2])),
                                      Circulant(to_sequence(blocks[3]))};
  const BackDiagonal r(m);
  // (A R)(i, j) = A(i, R(j)) and (R A)(i, j) = A(R(i), j).
  enum class Form { Plain, RightR, LeftR };
  struct Cell {
    int block;  // 0-based index into a
    Form form;
    int sign;
  };
  static constexpr std::array<std::array<Cell, 4>, 4> layout = {{
      {{{0, Form::Plain, -1}, {1, Form::RightR, 1}, {2, Form::RightR, 1}, {3, Form::RightR, 1}}},
      {{{2, Form::RightR, 1}, {3, Form::LeftR, 1}, {0, Form::Plain, 1}, {1, Form::LeftR, -1}}},
      {{{1, Form::RightR, 1}, {0, Form::Plain, 1}, {3, Form::LeftR, -1}, {2, Form::LeftR, 1}}},
      {{{3, Form::RightR, 1}, {2, Form::LeftR, -1}, {1, Form::LeftR, 1}, {0, Form::Plain, 1}}},
  }};

  SignMatrix h(4 * m);
  for (std::size_t bi = 0; bi < 4; ++bi) {
    for (std::size_t bj = 0; bj < 4; ++bj) {
      const Cell cell = layout[bi][bj];
      const Circulant& c = a[cell.block];
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          int e = 0;
          switch (cell.form) {
            case Form::Plain: e = c(i, j); break;
            case Form::RightR: e = c(i, r.image(j)); break;
            case Form::LeftR: e = c(r.image(i), j); break;
          }
          h.set(bi * m + i, bj * m + j, static_cast<std::int8_t>(cell.sign * e));
        }
      }
    }
  }
  HadamardVerdict verdict = verify_hadamard(h, threads);
  return {std::move(h), verdict};
}

HadamardVerdict verify_hadamard(const SignMatrix& h, unsigned threads) {
  const std::size_t n = h.order();
  HadamardVerdict verdict;
  verdict.is_symmetric = true;
  for (std::size_t i = 0; i < n && verdict.is_symmetric; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (h(i, j) != h(j, i)) {
        verdict.is_symmetric = false;
        break;
      }
    }
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<bool> ok{true};
  std::atomic<std::size_t> next_row{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_row.fetch_add(1);
      if (i >= n || !ok.load(std::memory_order_relaxed)) return;
      const std::int8_t* ri = h.row(i);
      for (std::size_t j = i; j < n; ++j) {
        const std::int8_t* rj = h.row(j);
        std::int64_t dot = 0;
        for (std::size_t t = 0; t < n; ++t) dot += ri[t] * rj[t];
        if (dot != (i == j ? static_cast<std::int64_t>(n) : 0)) {
          ok.store(false);
          return;
        }
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  verdict.is_hadamard = ok.load();
  return verdict;
}

bool gs_condition(const std::array<ResidueSet, 4>& blocks) {
  const std::size_t v = blocks[0].modulus().value();
  std::vector<std::int64_t> total(v, 0);
  for (const auto& b : blocks) {
    if (b.modulus().value() != v) throw Error(Errc::DimensionMismatch, "blocks differ in modulus");
    const auto profile = paf(to_sequence(b));
    for (std::size_t s = 0; s < v; ++s) total[s] += profile.values[s];
  }
  for (std::size_t s = 1; s < v; ++s) {
    if (total[s] != 0) return false;
  }
  return true;
}

}  // namespace propus

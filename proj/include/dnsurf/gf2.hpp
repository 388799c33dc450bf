#pragma once

#include <cstdint>
#include <vector>

namespace dnsurf::gf2 {

// Bit vector over GF(2), packed into 64-bit words, bit i = (words[i/64] >> (i%64)) & 1.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool get(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool v) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (v)
      w_[static_cast<size_t>(i) >> 6] |= m;
    else
      w_[static_cast<size_t>(i) >> 6] &= ~m;
  }
  void flip(int i) { w_[static_cast<size_t>(i) >> 6] ^= uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  int popcount() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  // Index of the lowest set bit, or -1.
  int lowest_set() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64 + static_cast<size_t>(__builtin_ctzll(w_[k])));
    return -1;
  }

  // Lexicographic order on the bit string b_0 b_1 ... (index 0 most significant, 0 < 1).
  bool lex_less(const BitVec& o) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t d = w_[k] ^ o.w_[k];
      if (d) {
        int bit = __builtin_ctzll(d);
        return !((w_[k] >> bit) & 1u);
      }
    }
    return false;
  }

  bool operator==(const BitVec& o) const = default;

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Row-major GF(2) matrix with Gauss-Jordan reduction. Sizes here are at most a few
// hundred columns, so no blocking or pivoting tricks.
class Matrix {
 public:
  Matrix(int rows, int cols) : cols_(cols), rows_(static_cast<size_t>(rows), BitVec(cols)) {}

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  BitVec& row(int i) { return rows_[static_cast<size_t>(i)]; }
  const BitVec& row(int i) const { return rows_[static_cast<size_t>(i)]; }
  void set(int i, int j, bool v) { rows_[static_cast<size_t>(i)].set(j, v); }
  bool get(int i, int j) const { return rows_[static_cast<size_t>(i)].get(j); }

  // In-place reduced row echelon form; returns the pivot column of each of the
  // first rank() rows, in increasing order. Zero rows sink to the bottom.
  std::vector<int> rref();

  int rank() const { return rank_; }

  // Basis of the null space {x : M x = 0}, in increasing order of free column.
  // Calls rref() internally on a copy.
  static std::vector<BitVec> kernel_basis(const Matrix& m);

 private:
  int cols_;
  int rank_ = -1;
  std::vector<BitVec> rows_;
};

// A row space in RREF, supporting membership tests and coset canonicalization.
// reduce() maps a vector to the lexicographically smallest element of its coset.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(Matrix m);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BitVec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  BitVec reduce(BitVec v) const {
    for (size_t r = 0; r < basis_.size(); ++r)
      if (v.get(pivots_[r])) v ^= basis_[r];
    return v;
  }

  bool contains(const BitVec& v) const { return !reduce(v).any(); }

 private:
  std::vector<BitVec> basis_;
  std::vector<int> pivots_;
};

}  // namespace dnsurf::gf2

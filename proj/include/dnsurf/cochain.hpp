#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnsurf/errors.hpp"
#include "dnsurf/gf2.hpp"
#include "dnsurf/poset.hpp"

namespace dnsurf {

// A mod-2 k-cochain, keyed to the complex it lives on by content hash. All
// binary operations insist on matching keys and dimensions.
class Cochain {
 public:
  Cochain() = default;
  Cochain(const FacePoset& p, int dim)
      : dim_(check_dim(p, dim)),
        n_(static_cast<int>(p.size(dim))),
        complex_hash_(p.hash()),
        bits_(static_cast<int>(p.size(dim))) {}

  static Cochain from_bits(const FacePoset& p, int dim, gf2::BitVec bits) {
    Cochain c(p, dim);
    if (bits.size() != c.n_) fail(ErrorCode::InvalidComplexData, "cochain bit count mismatch");
    c.bits_ = std::move(bits);
    return c;
  }

  static Cochain indicator(const FacePoset& p, int dim, const std::vector<FaceId>& support) {
    Cochain c(p, dim);
    for (FaceId i : support) {
      if (i < 0 || i >= c.n_) fail(ErrorCode::InvalidComplexData, "cochain support out of range");
      c.bits_.set(i, true);
    }
    return c;
  }

  int dim() const { return dim_; }
  int size() const { return n_; }
  uint64_t complex_hash() const { return complex_hash_; }
  const gf2::BitVec& bits() const { return bits_; }

  bool get(FaceId i) const { return bits_.get(i); }
  void set(FaceId i, bool v) { bits_.set(i, v); }
  void flip(FaceId i) { bits_.flip(i); }

  bool is_zero() const { return !bits_.any(); }
  int popcount() const { return bits_.popcount(); }

  void require_on(const FacePoset& p, int dim) const {
    if (complex_hash_ != p.hash()) fail(ErrorCode::ComplexMismatch, "cochain belongs to a different complex");
    if (dim_ != dim) fail(ErrorCode::ComplexMismatch, "cochain has dimension " + std::to_string(dim_));
  }

  Cochain& operator^=(const Cochain& o) {
    if (complex_hash_ != o.complex_hash_) fail(ErrorCode::ComplexMismatch, "cochains from different complexes");
    if (dim_ != o.dim_) fail(ErrorCode::ComplexMismatch, "cochain dimension mismatch");
    bits_ ^= o.bits_;
    return *this;
  }
  friend Cochain operator^(Cochain a, const Cochain& b) {
    a ^= b;
    return a;
  }

  bool operator==(const Cochain& o) const {
    return dim_ == o.dim_ && complex_hash_ == o.complex_hash_ && bits_ == o.bits_;
  }

  // Bit 0 is the most significant position; among equal prefixes 0 sorts first.
  bool lex_less(const Cochain& o) const { return bits_.lex_less(o.bits_); }

 private:
  static int check_dim(const FacePoset& p, int dim) {
    if (dim < 0 || dim > p.dimension()) fail(ErrorCode::InvalidComplexData, "cochain dimension out of range");
    return dim;
  }

  int dim_ = 0;
  int n_ = 0;
  uint64_t complex_hash_ = 0;
  gf2::BitVec bits_;
};

}  // namespace dnsurf

#pragma once

#include <cstdint>
#include <vector>

#include "dnsurf/cochain.hpp"
#include "dnsurf/gf2.hpp"
#include "dnsurf/poset.hpp"

namespace dnsurf {

// delta^0: value on an edge = sum of the values on its two endpoints.
Cochain coboundary0(const FacePoset& p, const Cochain& u);
// delta^1: value on a triangle = sum of the values on its three boundary edges.
Cochain coboundary1(const FacePoset& p, const Cochain& psi);

bool is_cocycle(const FacePoset& p, const Cochain& psi);

struct CohomologyBasis {
  int h1_dim = 0;
  // Canonical class representatives: each is the lexicographically smallest
  // cocycle of its class, listed in RREF pivot order. XOR-combinations of the
  // representatives meet every class exactly once.
  std::vector<Cochain> representatives;
  // dim ker delta^0 = number of connected components.
  int kernel_dim_delta0 = 0;
};

CohomologyBasis h1(const FacePoset& p);

// Lexicographically smallest cocycle cohomologous to psi. Throws NotACocycle.
Cochain canonical_representative(const FacePoset& p, const Cochain& psi);

bool same_class(const FacePoset& p, const Cochain& a, const Cochain& b);

// Walks the cohomology class of a cocycle: { sigma + delta^0(u) } with one free
// bit per non-anchor vertex (the lowest vertex of each component is anchored to
// zero), 2^free_bits() distinct members. Enumeration follows the binary counter
// on the free bits, so consecutive indices differ by one vertex star.
class ClassEnumerator {
 public:
  ClassEnumerator(const FacePoset& p, Cochain sigma);

  int free_bits() const { return static_cast<int>(free_.size()); }
  const std::vector<FaceId>& free_vertices() const { return free_; }
  // Saturates at 2^64-1; callers enforce budgets on free_bits() first.
  uint64_t size() const { return free_.size() >= 64 ? ~uint64_t(0) : uint64_t(1) << free_.size(); }

  Cochain at(uint64_t index) const;

  // Visits indices [begin, end) in order. The callback sees the index and the
  // current cochain; successive steps flip a single vertex star.
  template <typename F>
  void for_each_range(uint64_t begin, uint64_t end, F&& f) const {
    Cochain cur = at(begin);
    for (uint64_t idx = begin;;) {
      f(idx, static_cast<const Cochain&>(cur));
      if (++idx >= end) break;
      // Gray-free stepping: flip the stars marked by the bits that changed.
      uint64_t changed = idx ^ (idx - 1);
      for (int b = 0; changed; ++b, changed >>= 1)
        if (changed & 1) cur ^= star_[static_cast<size_t>(b)];
    }
  }

 private:
  const FacePoset* p_;
  Cochain sigma_;
  std::vector<FaceId> free_;
  std::vector<Cochain> star_;  // star_[b]: delta^0 of the b-th free vertex
};

}  // namespace dnsurf

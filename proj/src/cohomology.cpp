#include "dnsurf/cohomology.hpp"

#include <algorithm>
#include <utility>

namespace dnsurf {

namespace {

gf2::Matrix delta0_matrix(const FacePoset& p) {
  // Rows span the image of delta^0: row v = indicator of the edges at v.
  gf2::Matrix m(static_cast<int>(p.size(0)), static_cast<int>(p.size(1)));
  for (FaceId e = 0; e < p.size(1); ++e) {
    const auto& verts = p.face(1, e).vertices;
    m.row(verts[0]).flip(e);
    m.row(verts[1]).flip(e);
  }
  return m;
}

gf2::Matrix delta1_matrix(const FacePoset& p) {
  // Rows are triangles; kernel vectors are the 1-cocycles.
  gf2::Matrix m(static_cast<int>(p.size(2)), static_cast<int>(p.size(1)));
  for (FaceId t = 0; t < p.size(2); ++t)
    for (FaceId e : p.face(2, t).boundary) m.row(t).flip(e);
  return m;
}

}  // namespace

Cochain coboundary0(const FacePoset& p, const Cochain& u) {
  u.require_on(p, 0);
  Cochain out(p, 1);
  for (FaceId e = 0; e < p.size(1); ++e) {
    const auto& verts = p.face(1, e).vertices;
    if (u.get(verts[0]) != u.get(verts[1])) out.set(e, true);
  }
  return out;
}

Cochain coboundary1(const FacePoset& p, const Cochain& psi) {
  psi.require_on(p, 1);
  if (p.dimension() < 2) fail(ErrorCode::InvalidComplexData, "coboundary1 needs a complex with triangles");
  Cochain out(p, 2);
  for (FaceId t = 0; t < p.size(2); ++t) {
    bool v = false;
    for (FaceId e : p.face(2, t).boundary) v ^= psi.get(e);
    out.set(t, v);
  }
  return out;
}

bool is_cocycle(const FacePoset& p, const Cochain& psi) {
  psi.require_on(p, 1);
  if (p.dimension() < 2) return true;  // no triangles, no constraint
  return coboundary1(p, psi).is_zero();
}

CohomologyBasis h1(const FacePoset& p) {
  const gf2::RowSpace image(delta0_matrix(p));
  std::vector<gf2::BitVec> kernel = gf2::Matrix::kernel_basis(delta1_matrix(p));

  // Quotient basis: reduce the kernel vectors modulo the image, then a second
  // RREF picks an independent set. Reducing each chosen row modulo the image a
  // final time makes every representative the lex-min cocycle of its class.
  gf2::Matrix q(static_cast<int>(kernel.size()), static_cast<int>(p.size(1)));
  for (size_t i = 0; i < kernel.size(); ++i) q.row(static_cast<int>(i)) = image.reduce(kernel[i]);
  q.rref();

  CohomologyBasis basis;
  basis.kernel_dim_delta0 = p.components();
  basis.h1_dim = q.rank();
  for (int r = 0; r < q.rank(); ++r)
    basis.representatives.push_back(Cochain::from_bits(p, 1, image.reduce(q.row(r))));
  return basis;
}

Cochain canonical_representative(const FacePoset& p, const Cochain& psi) {
  if (!is_cocycle(p, psi)) fail(ErrorCode::NotACocycle, "coboundary is nonzero");
  const gf2::RowSpace image(delta0_matrix(p));
  return Cochain::from_bits(p, 1, image.reduce(psi.bits()));
}

bool same_class(const FacePoset& p, const Cochain& a, const Cochain& b) {
  if (!is_cocycle(p, a) || !is_cocycle(p, b)) fail(ErrorCode::NotACocycle, "coboundary is nonzero");
  const gf2::RowSpace image(delta0_matrix(p));
  gf2::BitVec d = a.bits();
  d ^= b.bits();
  return image.contains(d);
}

ClassEnumerator::ClassEnumerator(const FacePoset& p, Cochain sigma) : p_(&p), sigma_(std::move(sigma)) {
  if (!is_cocycle(p, sigma_)) fail(ErrorCode::NotACocycle, "coboundary is nonzero");

  // One anchor vertex per connected component (the least); the rest are free.
  // Distinct assignments on the free vertices give distinct coboundaries.
  std::vector<FaceId> comp_min;
  {
    std::vector<int> comp(static_cast<size_t>(p.size(0)), -1);
    std::vector<FaceId> stack;
    int c = 0;
    std::vector<std::vector<FaceId>> adj(static_cast<size_t>(p.size(0)));
    for (FaceId e = 0; e < p.size(1); ++e) {
      const auto& verts = p.face(1, e).vertices;
      adj[static_cast<size_t>(verts[0])].push_back(verts[1]);
      adj[static_cast<size_t>(verts[1])].push_back(verts[0]);
    }
    for (FaceId v = 0; v < p.size(0); ++v) {
      if (comp[static_cast<size_t>(v)] != -1) continue;
      comp_min.push_back(v);
      stack.push_back(v);
      comp[static_cast<size_t>(v)] = c;
      while (!stack.empty()) {
        FaceId x = stack.back();
        stack.pop_back();
        for (FaceId y : adj[static_cast<size_t>(x)])
          if (comp[static_cast<size_t>(y)] == -1) {
            comp[static_cast<size_t>(y)] = c;
            stack.push_back(y);
          }
      }
      ++c;
    }
  }

  std::vector<bool> anchored(static_cast<size_t>(p.size(0)), false);
  for (FaceId v : comp_min) anchored[static_cast<size_t>(v)] = true;
  for (FaceId v = 0; v < p.size(0); ++v)
    if (!anchored[static_cast<size_t>(v)]) free_.push_back(v);

  star_.reserve(free_.size());
  for (FaceId v : free_) {
    Cochain u(p, 0);
    u.set(v, true);
    star_.push_back(coboundary0(p, u));
  }
}

Cochain ClassEnumerator::at(uint64_t index) const {
  Cochain c = sigma_;
  for (size_t b = 0; b < free_.size(); ++b)
    if (index & (uint64_t(1) << b)) c ^= star_[b];
  return c;
}

}  // namespace dnsurf

#include "dnsurf/generators.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace dnsurf {

FacePoset point() { return FacePoset::from_parts(0, {{Face{{}, {0}}}}); }

FacePoset cycle(long long m) {
  if (m < 2) fail(ErrorCode::TooSmall, "cycle needs at least 2 vertices");
  const auto n = static_cast<FaceId>(m);
  std::vector<std::vector<Face>> levels(2);
  for (FaceId v = 0; v < n; ++v) levels[0].push_back(Face{{}, {v}});
  for (FaceId i = 0; i < n; ++i) {
    const FaceId u = std::min(i, static_cast<FaceId>((i + 1) % n));
    const FaceId v = std::max(i, static_cast<FaceId>((i + 1) % n));
    levels[1].push_back(Face{{v, u}, {u, v}});
  }
  return FacePoset::from_parts(1, std::move(levels));
}

FacePoset join(const FacePoset& a, const FacePoset& b) {
  const int da = a.dimension(), db = b.dimension();
  const int dj = da + db + 1;
  const auto na = static_cast<FaceId>(a.size(0));

  // Pairs (sigma, tau) with sigma from a or empty, tau from b or empty. A level
  // is laid out in blocks of descending sigma dimension (a-faces lead), each
  // block sigma-major.
  auto side_size = [](const FacePoset& x, int k) -> long long { return k == -1 ? 1 : x.size(k); };
  auto block_valid = [&](int k, int sa) {
    const int sb = k - 1 - sa;
    return sa >= -1 && sa <= da && sb >= -1 && sb <= db && !(sa == -1 && sb == -1);
  };
  auto pair_id = [&](int k, int sa, FaceId i, FaceId j) -> FaceId {
    long long off = 0;
    for (int s = da; s > sa; --s)
      if (block_valid(k, s)) off += side_size(a, s) * side_size(b, k - 1 - s);
    const int sb = k - 1 - sa;
    return static_cast<FaceId>(off + static_cast<long long>(i) * side_size(b, sb) + j);
  };

  std::vector<std::vector<Face>> levels(static_cast<size_t>(dj) + 1);
  for (int k = 0; k <= dj; ++k) {
    for (int sa = da; sa >= -1; --sa) {
      if (!block_valid(k, sa)) continue;
      const int sb = k - 1 - sa;
      for (FaceId i = 0; i < side_size(a, sa); ++i) {
        for (FaceId j = 0; j < side_size(b, sb); ++j) {
          Face f;
          if (sa >= 0)
            for (FaceId v : a.face(sa, i).vertices) f.vertices.push_back(v);
          if (sb >= 0)
            for (FaceId v : b.face(sb, j).vertices) f.vertices.push_back(static_cast<FaceId>(v + na));
          if (k == 0) {
            f.vertices = {pair_id(k, sa, i, j)};
            levels[0].push_back(std::move(f));
            continue;
          }
          for (int r = 0; r <= k; ++r) {
            if (r <= sa) {
              f.boundary.push_back(
                  sa == 0 ? pair_id(k - 1, -1, 0, j)
                          : pair_id(k - 1, sa - 1, a.face(sa, i).boundary[static_cast<size_t>(r)], j));
            } else {
              const int rt = r - sa - 1;
              f.boundary.push_back(
                  sb == 0 ? pair_id(k - 1, sa, i, 0)
                          : pair_id(k - 1, sa, i, b.face(sb, j).boundary[static_cast<size_t>(rt)]));
            }
          }
          levels[static_cast<size_t>(k)].push_back(std::move(f));
        }
      }
    }
  }
  return FacePoset::from_parts(dj, std::move(levels));
}

FacePoset lens_standard(long long p, long long q) {
  if (p < 1) fail(ErrorCode::TooSmall, "lens order must be at least 1");
  const FacePoset ring = cycle(2 * p);
  const FacePoset j = join(ring, ring);
  const long long m = 2 * p;
  const long long shift = ((2 * q) % m + m) % m;
  std::vector<FaceId> g(static_cast<size_t>(2 * m));
  for (long long i = 0; i < m; ++i) g[static_cast<size_t>(i)] = static_cast<FaceId>((i + 2) % m);
  for (long long i = 0; i < m; ++i)
    g[static_cast<size_t>(m + i)] = static_cast<FaceId>(m + (i + shift) % m);
  return quotient_by_group(j, g, static_cast<int>(p));
}

FacePoset cyclic_polytope_boundary(int n) {
  if (n < 5) fail(ErrorCode::TooSmall, "cyclic polytope boundary needs at least 5 vertices");
  std::vector<std::vector<FaceId>> facets;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          // Gale evenness: between any two non-members lies an even number of
          // members.
          const std::array<int, 4> s{a, b, c, d};
          auto member = [&](int x) { return x == a || x == b || x == c || x == d; };
          bool even = true;
          for (int u = 0; u < n && even; ++u) {
            if (member(u)) continue;
            for (int v = u + 1; v < n && even; ++v) {
              if (member(v)) continue;
              int cnt = 0;
              for (int x : s)
                if (u < x && x < v) ++cnt;
              if (cnt % 2) even = false;
            }
          }
          if (even) facets.push_back({a, b, c, d});
        }
  return FacePoset::from_facets(n, facets);
}

FacePoset two_tet_sphere() {
  GluingSpec spec;
  spec.n_facets = 2;
  spec.gluings.resize(2);
  for (int i = 0; i < 4; ++i) {
    spec.gluings[0][static_cast<size_t>(i)] = FaceGluing{1, i, {0, 1, 2, 3}};
    spec.gluings[1][static_cast<size_t>(i)] = FaceGluing{0, i, {0, 1, 2, 3}};
  }
  return build_complex(spec);
}

FacePoset four_simplex_boundary() {
  std::vector<std::vector<FaceId>> facets;
  for (int drop = 4; drop >= 0; --drop) {
    std::vector<FaceId> f;
    for (FaceId v = 0; v < 5; ++v)
      if (v != drop) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return FacePoset::from_facets(5, facets);
}

FacePoset single_tet() {
  GluingSpec spec;
  spec.n_facets = 1;
  spec.gluings.resize(1);
  return build_complex(spec);
}

}  // namespace dnsurf

#include "dnsurf/surface.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace dnsurf {

namespace {

// Global edge ids of the six local edges of tetrahedron t; edge_of[i][j] spans
// local positions i and j.
std::array<std::array<FaceId, 4>, 4> local_edges(const FacePoset& p, FaceId t) {
  std::array<std::array<FaceId, 4>, 4> e{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const FaceId id = subface(p, 3, t, (1u << i) | (1u << j)).second;
      e[static_cast<size_t>(i)][static_cast<size_t>(j)] = id;
      e[static_cast<size_t>(j)][static_cast<size_t>(i)] = id;
    }
  return e;
}

}  // namespace

TetPattern tet_pattern(const FacePoset& p, const Cochain& psi, FaceId t) {
  psi.require_on(p, 1);
  if (p.dimension() != 3) fail(ErrorCode::InvalidComplexData, "tet_pattern: dimension 3 required");
  if (t < 0 || t >= p.size(3)) fail(ErrorCode::InvalidComplexData, "tet_pattern: no such tetrahedron");
  const auto edges = local_edges(p, t);

  // 2-color the corners from the edges at corner 0, then check the rest.
  std::array<int, 4> col{0, 0, 0, 0};
  for (int j = 1; j < 4; ++j) col[static_cast<size_t>(j)] = psi.get(edges[0][static_cast<size_t>(j)]) ? 1 : 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (psi.get(edges[static_cast<size_t>(i)][static_cast<size_t>(j)]) !=
          (col[static_cast<size_t>(i)] != col[static_cast<size_t>(j)]))
        fail(ErrorCode::NotACutFunction, "tetrahedron " + std::to_string(t));

  std::array<int, 4> ones_side{}, zeros_side{};
  int ones = 0, zeros = 0;
  for (int v = 0; v < 4; ++v)
    (col[static_cast<size_t>(v)] ? ones_side[static_cast<size_t>(ones++)] : zeros_side[static_cast<size_t>(zeros++)]) = v;

  TetPattern pat;
  if (ones == 0 || ones == 4) return pat;  // Empty
  if (ones == 1 || ones == 3) {
    pat.kind = TetPattern::Kind::Triangle;
    pat.apex = ones == 1 ? ones_side[0] : zeros_side[0];
    return pat;
  }
  pat.kind = TetPattern::Kind::Quad;
  pat.side = {zeros_side[0], zeros_side[1]};  // the side holding corner 0
  return pat;
}

Surface extract_surface(const FacePoset& p, const Cochain& psi) {
  psi.require_on(p, 1);
  if (p.dimension() != 3) fail(ErrorCode::InvalidComplexData, "extract_surface: dimension 3 required");
  {
    Cochain d(p, 2);
    for (FaceId t = 0; t < p.size(2); ++t) {
      bool v = false;
      for (FaceId e : p.face(2, t).boundary) v ^= psi.get(e);
      if (v) fail(ErrorCode::NotACocycle, "triangle " + std::to_string(t));
    }
  }
  {
    std::vector<int> slots(static_cast<size_t>(p.size(2)), 0);
    for (FaceId t = 0; t < p.size(3); ++t)
      for (FaceId b : p.face(3, t).boundary) ++slots[static_cast<size_t>(b)];
    for (int c : slots)
      if (c != 2) fail(ErrorCode::NotClosed, "triangle not in exactly two tetrahedron slots");
  }

  Surface s;
  s.complex_hash = p.hash();
  for (FaceId e = 0; e < p.size(1); ++e)
    if (psi.get(e)) s.points.push_back(e);

  std::vector<int> arc_index(static_cast<size_t>(p.size(2)), -1);
  for (FaceId tr = 0; tr < p.size(2); ++tr) {
    int odd = 0;
    for (FaceId e : p.face(2, tr).boundary)
      if (psi.get(e)) ++odd;
    if (odd == 2) {
      arc_index[static_cast<size_t>(tr)] = static_cast<int>(s.arcs.size());
      s.arcs.push_back(tr);
    }
  }

  for (FaceId t = 0; t < p.size(3); ++t) {
    const TetPattern pat = tet_pattern(p, psi, t);
    if (pat.kind == TetPattern::Kind::Empty) continue;
    const auto edges = local_edges(p, t);
    const auto& tris = p.face(3, t).boundary;
    auto E = [&](int i, int j) { return edges[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
    auto T = [&](int omitted) { return tris[static_cast<size_t>(omitted)]; };

    Piece piece;
    piece.tet = t;
    piece.pattern = pat;
    if (pat.kind == TetPattern::Kind::Triangle) {
      const int a = pat.apex;
      std::array<int, 3> rest{};
      int r = 0;
      for (int v = 0; v < 4; ++v)
        if (v != a) rest[static_cast<size_t>(r++)] = v;
      const auto [x, y, z] = rest;
      piece.walk = {{E(a, x), T(z)}, {E(a, y), T(x)}, {E(a, z), T(y)}};
    } else {
      const int x = pat.side[0], y = pat.side[1];
      std::array<int, 2> other{};
      int r = 0;
      for (int v = 0; v < 4; ++v)
        if (v != x && v != y) other[static_cast<size_t>(r++)] = v;
      const auto [z, w] = other;
      piece.walk = {{E(x, z), T(y)}, {E(x, w), T(z)}, {E(y, w), T(x)}, {E(y, z), T(w)}};
    }
    s.pieces.push_back(std::move(piece));
  }

  std::vector<std::vector<ArcTraversal>> traversals(s.arcs.size());
  for (size_t pi = 0; pi < s.pieces.size(); ++pi) {
    const auto& walk = s.pieces[pi].walk;
    for (size_t step = 0; step < walk.size(); ++step) {
      const auto& cur = walk[step];
      const auto& next = walk[(step + 1) % walk.size()];
      const int k = arc_index[static_cast<size_t>(cur.arc_triangle)];
      if (k < 0) fail(ErrorCode::InvalidComplexData, "internal: piece walk crosses an even triangle");
      traversals[static_cast<size_t>(k)].push_back({static_cast<int>(pi), cur.point_edge, next.point_edge});
    }
  }
  s.arc_traversals.reserve(s.arcs.size());
  for (size_t k = 0; k < s.arcs.size(); ++k) {
    if (traversals[k].size() != 2) fail(ErrorCode::InvalidComplexData, "internal: arc traversal count");
    s.arc_traversals.push_back({traversals[k][0], traversals[k][1]});
  }

  // Components by arc adjacency, numbered in order of least piece.
  std::vector<int> parent(s.pieces.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const auto& tv : s.arc_traversals) {
    const int a = find(tv[0].piece), b = find(tv[1].piece);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
  s.piece_component.assign(s.pieces.size(), -1);
  for (size_t i = 0; i < s.pieces.size(); ++i) {
    const int root = find(static_cast<int>(i));
    if (s.piece_component[static_cast<size_t>(root)] == -1)
      s.piece_component[static_cast<size_t>(root)] = s.n_components++;
    s.piece_component[i] = s.piece_component[static_cast<size_t>(root)];
  }
  return s;
}

std::vector<ComponentClass> classify_components(const Surface& s, std::optional<uint64_t> shuffle_seed) {
  std::vector<ComponentClass> out(static_cast<size_t>(s.n_components));

  // Pieces and arcs per component.
  for (size_t i = 0; i < s.pieces.size(); ++i) ++out[static_cast<size_t>(s.piece_component[i])].pieces;
  std::vector<long long> arc_count(static_cast<size_t>(s.n_components), 0);
  for (const auto& tv : s.arc_traversals) {
    const int c = s.piece_component[static_cast<size_t>(tv[0].piece)];
    if (c != s.piece_component[static_cast<size_t>(tv[1].piece)])
      fail(ErrorCode::InvalidComplexData, "internal: arc spans two components");
    ++arc_count[static_cast<size_t>(c)];
  }
  // Distinct point edges per component.
  std::vector<long long> point_count(static_cast<size_t>(s.n_components), 0);
  {
    std::vector<std::vector<FaceId>> pts(static_cast<size_t>(s.n_components));
    for (size_t i = 0; i < s.pieces.size(); ++i)
      for (const auto& step : s.pieces[i].walk)
        pts[static_cast<size_t>(s.piece_component[i])].push_back(step.point_edge);
    for (size_t c = 0; c < pts.size(); ++c) {
      auto& v = pts[c];
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      point_count[c] = static_cast<long long>(v.size());
    }
  }

  // Orientation signs: adjacent pieces traversing an arc in opposite directions
  // carry the same sign, in the same direction opposite signs.
  std::vector<std::vector<std::pair<int, bool>>> adj(s.pieces.size());  // (other piece, same_direction)
  std::vector<bool> orientable(static_cast<size_t>(s.n_components), true);
  for (const auto& tv : s.arc_traversals) {
    const bool same_dir = tv[0].from_edge == tv[1].from_edge && tv[0].to_edge == tv[1].to_edge;
    if (tv[0].piece == tv[1].piece) {
      if (same_dir) orientable[static_cast<size_t>(s.piece_component[static_cast<size_t>(tv[0].piece)])] = false;
      continue;
    }
    adj[static_cast<size_t>(tv[0].piece)].emplace_back(tv[1].piece, same_dir);
    adj[static_cast<size_t>(tv[1].piece)].emplace_back(tv[0].piece, same_dir);
  }

  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) {
    rng.emplace(*shuffle_seed);
    for (auto& lst : adj) std::shuffle(lst.begin(), lst.end(), *rng);
  }
  std::vector<int> order(s.pieces.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (rng) std::shuffle(order.begin(), order.end(), *rng);

  std::vector<int> sign(s.pieces.size(), 0);
  std::vector<int> stack;
  for (int start : order) {
    if (sign[static_cast<size_t>(start)] != 0) continue;
    sign[static_cast<size_t>(start)] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [y, same_dir] : adj[static_cast<size_t>(x)]) {
        const int want = same_dir ? -sign[static_cast<size_t>(x)] : sign[static_cast<size_t>(x)];
        if (sign[static_cast<size_t>(y)] == 0) {
          sign[static_cast<size_t>(y)] = want;
          stack.push_back(y);
        } else if (sign[static_cast<size_t>(y)] != want) {
          orientable[static_cast<size_t>(s.piece_component[static_cast<size_t>(y)])] = false;
        }
      }
    }
  }

  for (int c = 0; c < s.n_components; ++c) {
    auto& cls = out[static_cast<size_t>(c)];
    cls.chi = point_count[static_cast<size_t>(c)] - arc_count[static_cast<size_t>(c)] + cls.pieces;
    cls.orientable = orientable[static_cast<size_t>(c)];
    cls.genus_or_crosscaps = cls.orientable ? (2 - cls.chi) / 2 : 2 - cls.chi;
  }
  return out;
}

SlicingSubcomplex slicing_subcomplex(const FacePoset& p, const Cochain& psi) {
  psi.require_on(p, 1);
  SlicingSubcomplex sub;
  sub.complex_hash = p.hash();
  const int d = p.dimension();
  sub.faces.resize(static_cast<size_t>(d) + 1);
  sub.f.counts.assign(static_cast<size_t>(d) + 1, 0);

  std::vector<std::vector<bool>> has_odd(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    has_odd[static_cast<size_t>(k)].assign(static_cast<size_t>(p.size(k)), false);
    for (FaceId i = 0; i < p.size(k); ++i) {
      bool odd = false;
      if (k == 1) {
        odd = psi.get(i);
      } else if (k >= 2) {
        for (FaceId b : p.face(k, i).boundary)
          if (has_odd[static_cast<size_t>(k - 1)][static_cast<size_t>(b)]) odd = true;
      }
      has_odd[static_cast<size_t>(k)][static_cast<size_t>(i)] = odd;
      if (!odd) {
        sub.faces[static_cast<size_t>(k)].push_back(i);
        ++sub.f.counts[static_cast<size_t>(k)];
      }
    }
  }
  sub.chi = sub.f.euler();
  return sub;
}

long long slicing_euler(const FacePoset& p, const Cochain& psi) {
  psi.require_on(p, 1);
  const int d = p.dimension();
  long long chi = 0;
  std::vector<std::vector<bool>> has_odd(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    has_odd[static_cast<size_t>(k)].assign(static_cast<size_t>(p.size(k)), false);
    long long kept = 0;
    for (FaceId i = 0; i < p.size(k); ++i) {
      bool odd = false;
      if (k == 1) {
        odd = psi.get(i);
      } else if (k >= 2) {
        for (FaceId b : p.face(k, i).boundary)
          if (has_odd[static_cast<size_t>(k - 1)][static_cast<size_t>(b)]) odd = true;
      }
      has_odd[static_cast<size_t>(k)][static_cast<size_t>(i)] = odd;
      if (!odd) ++kept;
    }
    chi += (k % 2 == 0) ? kept : -kept;
  }
  return chi;
}

bool cross_check(const FacePoset& p, const Cochain& psi) {
  const Surface s = extract_surface(p, psi);
  return s.euler() == slicing_euler(p, psi) - p.euler_char();
}

}  // namespace dnsurf

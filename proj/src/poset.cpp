#include "dnsurf/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dnsurf {

namespace {

using ordered_json = nlohmann::ordered_json;

class Dsu {
 public:
  explicit Dsu(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), size_t{0}); }

  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

int count_components(const std::vector<std::vector<Face>>& levels) {
  if (levels.empty() || levels[0].empty()) return 0;
  Dsu dsu(levels[0].size());
  if (levels.size() > 1) {
    for (const Face& e : levels[1]) dsu.unite(static_cast<size_t>(e.vertices[0]), static_cast<size_t>(e.vertices[1]));
  }
  int c = 0;
  for (size_t v = 0; v < levels[0].size(); ++v)
    if (dsu.find(v) == v) ++c;
  return c;
}

}  // namespace

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::DuplicateVertex: return "DuplicateVertex";
    case ViolationKind::BoundaryVertexMismatch: return "BoundaryVertexMismatch";
    case ViolationKind::SimplicialIdentity: return "SimplicialIdentity";
    case ViolationKind::BooleanInterval: return "BooleanInterval";
    case ViolationKind::NotClosedFace: return "NotClosedFace";
    case ViolationKind::BadLink: return "BadLink";
  }
  return "?";
}

FVector FacePoset::f_vector() const {
  FVector f;
  f.counts.reserve(levels_.size());
  for (const auto& lv : levels_) f.counts.push_back(static_cast<long long>(lv.size()));
  return f;
}

long long FacePoset::euler_char() const { return f_vector().euler(); }

FacePoset FacePoset::from_parts(int dimension, std::vector<std::vector<Face>> levels,
                                std::optional<GluingSpec> gluing_echo) {
  if (dimension < 0) fail(ErrorCode::InvalidComplexData, "negative dimension");
  if (levels.size() != static_cast<size_t>(dimension) + 1)
    fail(ErrorCode::InvalidComplexData, "level count does not match dimension");
  for (size_t i = 0; i < levels[0].size(); ++i) {
    const Face& v = levels[0][i];
    if (!v.boundary.empty() || v.vertices != std::vector<FaceId>{static_cast<FaceId>(i)})
      fail(ErrorCode::InvalidComplexData, "malformed vertex record " + std::to_string(i));
  }
  const auto n0 = static_cast<FaceId>(levels[0].size());
  for (size_t k = 1; k < levels.size(); ++k) {
    const auto below = static_cast<FaceId>(levels[k - 1].size());
    for (size_t i = 0; i < levels[k].size(); ++i) {
      const Face& f = levels[k][i];
      const std::string where = "face (" + std::to_string(k) + "," + std::to_string(i) + ")";
      if (f.boundary.size() != k + 1 || f.vertices.size() != k + 1)
        fail(ErrorCode::InvalidComplexData, where + ": tuple arity");
      for (FaceId b : f.boundary)
        if (b < 0 || b >= below) fail(ErrorCode::InvalidComplexData, where + ": boundary id out of range");
      for (FaceId v : f.vertices)
        if (v < 0 || v >= n0) fail(ErrorCode::InvalidComplexData, where + ": vertex id out of range");
      if (!std::is_sorted(f.vertices.begin(), f.vertices.end()))
        fail(ErrorCode::InvalidComplexData, where + ": vertex tuple not sorted");
    }
  }

  FacePoset p;
  p.dim_ = dimension;
  p.levels_ = std::move(levels);
  p.components_ = count_components(p.levels_);
  p.gluing_echo_ = std::move(gluing_echo);
  p.hash_ = detail::fnv1a64(detail::poset_json_text(p, false));
  return p;
}

FacePoset FacePoset::from_facets(int n_vertices, const std::vector<std::vector<FaceId>>& facets) {
  if (n_vertices < 0) fail(ErrorCode::InvalidComplexData, "negative vertex count");
  if (facets.empty()) fail(ErrorCode::InvalidComplexData, "no facets");
  const size_t arity = facets[0].size();
  if (arity == 0) fail(ErrorCode::InvalidComplexData, "empty facet");
  for (const auto& f : facets) {
    if (f.size() != arity) fail(ErrorCode::InvalidComplexData, "facet arity mismatch");
    for (FaceId v : f)
      if (v < 0 || v >= n_vertices) fail(ErrorCode::InvalidComplexData, "facet vertex out of range");
    for (size_t i = 0; i + 1 < f.size(); ++i)
      if (f[i] >= f[i + 1]) fail(ErrorCode::InvalidComplexData, "facet vertices not strictly increasing");
  }

  const int dim = static_cast<int>(arity) - 1;
  // tuples[k] holds the sorted distinct vertex tuples of the dimension-k faces.
  std::vector<std::vector<std::vector<FaceId>>> tuples(static_cast<size_t>(dim) + 1);
  for (int k = 1; k <= dim; ++k) {
    auto& out = tuples[static_cast<size_t>(k)];
    std::vector<FaceId> sub(static_cast<size_t>(k) + 1);
    for (const auto& f : facets) {
      // All (k+1)-subsets of the facet, in lex order of position masks.
      const unsigned top = 1u << arity;
      for (unsigned mask = 0; mask < top; ++mask) {
        if (std::popcount(mask) != k + 1) continue;
        size_t j = 0;
        for (size_t pos = 0; pos < arity; ++pos)
          if (mask & (1u << pos)) sub[j++] = f[pos];
        out.push_back(sub);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  std::vector<std::vector<Face>> levels(static_cast<size_t>(dim) + 1);
  for (FaceId v = 0; v < n_vertices; ++v) levels[0].push_back(Face{{}, {v}});
  for (int k = 1; k <= dim; ++k) {
    const auto& below = tuples[static_cast<size_t>(k - 1)];
    auto lookup = [&](const std::vector<FaceId>& t) -> FaceId {
      if (k == 1) return t[0];
      auto it = std::lower_bound(below.begin(), below.end(), t);
      return static_cast<FaceId>(it - below.begin());
    };
    for (const auto& t : tuples[static_cast<size_t>(k)]) {
      Face f;
      f.vertices = t;
      for (size_t drop = 0; drop < t.size(); ++drop) {
        std::vector<FaceId> bt;
        bt.reserve(t.size() - 1);
        for (size_t j = 0; j < t.size(); ++j)
          if (j != drop) bt.push_back(t[j]);
        f.boundary.push_back(lookup(bt));
      }
      levels[static_cast<size_t>(k)].push_back(std::move(f));
    }
  }
  return from_parts(dim, std::move(levels));
}

void check_gluing_spec(const GluingSpec& spec) {
  if (spec.n_facets <= 0) fail(ErrorCode::InvalidComplexData, "gluing spec needs at least one facet");
  if (spec.gluings.size() != static_cast<size_t>(spec.n_facets))
    fail(ErrorCode::InvalidComplexData, "gluing table size does not match facet count");
  for (int t = 0; t < spec.n_facets; ++t) {
    for (int i = 0; i < 4; ++i) {
      const auto& g = spec.gluings[static_cast<size_t>(t)][static_cast<size_t>(i)];
      if (!g) continue;
      const std::string where = "gluing (" + std::to_string(t) + "," + std::to_string(i) + ")";
      if (g->target < 0 || g->target >= spec.n_facets || g->target_face < 0 || g->target_face > 3)
        fail(ErrorCode::InvalidComplexData, where + ": target out of range");
      std::array<bool, 4> seen{};
      for (uint8_t v : g->perm) {
        if (v > 3 || seen[v]) fail(ErrorCode::InvalidComplexData, where + ": not a permutation");
        seen[v] = true;
      }
      if (g->perm[static_cast<size_t>(i)] != g->target_face)
        fail(ErrorCode::InvalidComplexData, where + ": permutation does not send omitted vertex across");
      if (g->target == t && g->target_face == i) fail(ErrorCode::SelfGluedFace, where);
      const auto& back = spec.gluings[static_cast<size_t>(g->target)][static_cast<size_t>(g->target_face)];
      bool ok = back.has_value() && back->target == t && back->target_face == i;
      if (ok)
        for (int v = 0; v < 4; ++v)
          if (back->perm[g->perm[static_cast<size_t>(v)]] != v) ok = false;
      if (!ok) fail(ErrorCode::NonInvolutiveGluing, where);
    }
  }
}

FacePoset build_complex(const GluingSpec& spec) {
  check_gluing_spec(spec);
  const size_t n = static_cast<size_t>(spec.n_facets);

  // Code t*16+mask names the subface of facet t spanned by the local vertex
  // positions in mask. Gluing (t,i)->(t',i',perm) identifies every code whose
  // mask avoids position i with its perm image.
  Dsu dsu(n * 16);
  for (size_t t = 0; t < n; ++t) {
    for (int i = 0; i < 4; ++i) {
      const auto& g = spec.gluings[t][static_cast<size_t>(i)];
      if (!g) continue;
      for (unsigned mask = 1; mask < 16; ++mask) {
        if (mask & (1u << i)) continue;
        unsigned image = 0;
        for (int v = 0; v < 4; ++v)
          if (mask & (1u << v)) image |= 1u << g->perm[static_cast<size_t>(v)];
        dsu.unite(t * 16 + mask, static_cast<size_t>(g->target) * 16 + image);
      }
    }
  }

  // Classes per dimension, ordered by minimal code. An ascending scan meets the
  // minimal code of every class first.
  std::vector<FaceId> class_id(n * 16, -1);
  std::vector<std::vector<size_t>> class_min(4);
  for (size_t t = 0; t < n; ++t) {
    for (unsigned mask = 1; mask < 16; ++mask) {
      const size_t code = t * 16 + mask;
      const size_t root = dsu.find(code);
      if (class_id[root] == -1) {
        const int k = std::popcount(mask) - 1;
        class_id[root] = static_cast<FaceId>(class_min[static_cast<size_t>(k)].size());
        class_min[static_cast<size_t>(k)].push_back(code);
      }
      class_id[code] = class_id[root];
    }
  }

  auto id_of = [&](size_t t, unsigned mask) { return class_id[dsu.find(t * 16 + mask)]; };

  std::vector<std::vector<Face>> levels(4);
  for (size_t i = 0; i < class_min[0].size(); ++i) levels[0].push_back(Face{{}, {static_cast<FaceId>(i)}});
  for (int k = 1; k <= 3; ++k) {
    for (size_t code : class_min[static_cast<size_t>(k)]) {
      const size_t t = code / 16;
      const unsigned mask = static_cast<unsigned>(code % 16);
      std::vector<int> pos;
      for (int v = 0; v < 4; ++v)
        if (mask & (1u << v)) pos.push_back(v);
      // Order positions by (global vertex, position); boundary entry r drops the
      // r-th vertex of the sorted tuple.
      std::vector<std::pair<FaceId, int>> order;
      for (int v : pos) order.emplace_back(id_of(t, 1u << v), v);
      std::sort(order.begin(), order.end());
      Face f;
      for (const auto& [gv, v] : order) {
        f.vertices.push_back(gv);
        f.boundary.push_back(id_of(t, mask & ~(1u << v)));
      }
      levels[static_cast<size_t>(k)].push_back(std::move(f));
    }
  }
  return FacePoset::from_parts(3, std::move(levels), spec);
}

std::pair<int, FaceId> subface(const FacePoset& p, int k, FaceId id, unsigned mask) {
  if (k < 0 || k > p.dimension() || id < 0 || id >= p.size(k))
    fail(ErrorCode::InvalidComplexData, "subface: face out of range");
  if (mask == 0 || (mask >> (k + 1)) != 0) fail(ErrorCode::InvalidComplexData, "subface: bad position mask");
  int cur_k = k;
  FaceId cur = id;
  // Delete positions from the top so lower deletions keep their indices.
  for (int posn = k; posn >= 0; --posn) {
    if (mask & (1u << posn)) continue;
    cur = p.face(cur_k, cur).boundary[static_cast<size_t>(posn)];
    --cur_k;
  }
  return {cur_k, cur};
}

ValidationReport validate(const FacePoset& p) {
  ValidationReport rep;
  const int d = p.dimension();

  for (int k = 1; k <= d; ++k) {
    for (FaceId i = 0; i < p.size(k); ++i) {
      const Face& f = p.face(k, i);
      bool dup = false;
      for (size_t j = 0; j + 1 < f.vertices.size(); ++j)
        if (f.vertices[j] == f.vertices[j + 1]) dup = true;
      if (dup) rep.violations.push_back({k, i, ViolationKind::DuplicateVertex});

      for (size_t j = 0; j < f.boundary.size(); ++j) {
        std::vector<FaceId> want;
        for (size_t r = 0; r < f.vertices.size(); ++r)
          if (r != j) want.push_back(f.vertices[r]);
        if (p.face(k - 1, f.boundary[j]).vertices != want) {
          rep.violations.push_back({k, i, ViolationKind::BoundaryVertexMismatch});
          break;
        }
      }

      if (k >= 2) {
        bool broken = false;
        for (size_t jj = 0; jj < f.boundary.size() && !broken; ++jj)
          for (size_t ii = 0; ii < jj && !broken; ++ii) {
            // d_i d_j = d_{j-1} d_i for i < j.
            const FaceId left = p.face(k - 1, f.boundary[jj]).boundary[ii];
            const FaceId right = p.face(k - 1, f.boundary[ii]).boundary[jj - 1];
            if (left != right) broken = true;
          }
        if (broken) rep.violations.push_back({k, i, ViolationKind::SimplicialIdentity});
      }

      // The proper subfaces must form a Boolean lattice: all 2^(k+1)-2 position
      // subsets distinct.
      bool interval_ok = true;
      const unsigned top = 1u << (k + 1);
      std::vector<std::vector<FaceId>> subs(static_cast<size_t>(k) + 1);
      for (unsigned mask = 1; mask + 1 < top; ++mask) {
        auto [sk, sid] = subface(p, k, i, mask);
        subs[static_cast<size_t>(sk)].push_back(sid);
      }
      for (auto& ids : subs) {
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) interval_ok = false;
      }
      if (!interval_ok) rep.violations.push_back({k, i, ViolationKind::BooleanInterval});
    }
  }

  rep.is_simplicial_poset = rep.violations.empty();
  rep.is_connected = p.components() == 1;

  if (d >= 1) {
    std::vector<int> slots(static_cast<size_t>(p.size(d - 1)), 0);
    for (FaceId i = 0; i < p.size(d); ++i)
      for (FaceId b : p.face(d, i).boundary) ++slots[static_cast<size_t>(b)];
    bool closed = p.size(d) > 0;
    for (FaceId i = 0; i < p.size(d - 1); ++i)
      if (slots[static_cast<size_t>(i)] != 2) {
        closed = false;
        rep.violations.push_back({d - 1, i, ViolationKind::NotClosedFace});
      }
    rep.is_closed = closed;
  }

  if (d == 3 && rep.is_simplicial_poset && rep.is_closed) {
    bool manifold = true;
    for (FaceId v = 0; v < p.size(0); ++v) {
      const FacePoset link = vertex_link(p, v);
      if (!(link.components() == 1 && is_closed_surface(link) && link.euler_char() == 2)) {
        manifold = false;
        rep.violations.push_back({0, v, ViolationKind::BadLink});
      }
    }
    rep.is_closed_3_manifold = manifold;
  }
  return rep;
}

bool is_closed_surface(const FacePoset& p) {
  if (p.dimension() != 2 || p.size(2) == 0) return false;
  std::vector<int> slots(static_cast<size_t>(p.size(1)), 0);
  for (FaceId i = 0; i < p.size(2); ++i)
    for (FaceId b : p.face(2, i).boundary) ++slots[static_cast<size_t>(b)];
  for (int c : slots)
    if (c != 2) return false;
  // Stars must be single circles: in each vertex link, every vertex lies in
  // exactly two edge slots and the link is connected.
  for (FaceId v = 0; v < p.size(0); ++v) {
    const FacePoset link = vertex_link(p, v);
    if (link.dimension() != 1 || link.size(0) == 0 || link.size(1) == 0) return false;
    if (link.components() != 1) return false;
    std::vector<int> deg(static_cast<size_t>(link.size(0)), 0);
    for (FaceId e = 0; e < link.size(1); ++e)
      for (FaceId b : link.face(1, e).boundary) ++deg[static_cast<size_t>(b)];
    for (int c : deg)
      if (c != 2) return false;
  }
  return true;
}

FacePoset vertex_link(const FacePoset& p, FaceId v) {
  if (p.dimension() < 1) fail(ErrorCode::InvalidComplexData, "vertex_link: dimension 0 complex");
  if (v < 0 || v >= p.size(0)) fail(ErrorCode::UnknownVertex, std::to_string(v));
  const int d = p.dimension();

  // link_id[k][i]: id in the link (at dimension k-1) of the dimension-k face i
  // of p, or -1 when the face does not contain v.
  std::vector<std::vector<FaceId>> link_id(static_cast<size_t>(d) + 1);
  std::vector<std::vector<FaceId>> members(static_cast<size_t>(d) + 1);
  for (int k = 1; k <= d; ++k) {
    link_id[static_cast<size_t>(k)].assign(static_cast<size_t>(p.size(k)), -1);
    for (FaceId i = 0; i < p.size(k); ++i) {
      const auto& verts = p.face(k, i).vertices;
      if (std::find(verts.begin(), verts.end(), v) == verts.end()) continue;
      link_id[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          static_cast<FaceId>(members[static_cast<size_t>(k)].size());
      members[static_cast<size_t>(k)].push_back(i);
    }
  }

  std::vector<std::vector<Face>> levels(static_cast<size_t>(d));
  for (size_t i = 0; i < members[1].size(); ++i) levels[0].push_back(Face{{}, {static_cast<FaceId>(i)}});
  for (int k = 2; k <= d; ++k) {
    for (FaceId i : members[static_cast<size_t>(k)]) {
      const Face& f = p.face(k, i);
      // Lowest position of v (they are all interchangeable for a valid poset).
      size_t vpos = 0;
      while (f.vertices[vpos] != v) ++vpos;
      // Link vertex at position j is the edge of p spanned by positions {vpos, j}.
      std::vector<std::pair<FaceId, size_t>> order;
      for (size_t j = 0; j < f.vertices.size(); ++j) {
        if (j == vpos) continue;
        auto [ek, eid] = subface(p, k, i, (1u << vpos) | (1u << j));
        (void)ek;
        order.emplace_back(link_id[1][static_cast<size_t>(eid)], j);
      }
      std::sort(order.begin(), order.end());
      Face lf;
      for (const auto& [lv, j] : order) {
        lf.vertices.push_back(lv);
        lf.boundary.push_back(link_id[static_cast<size_t>(k - 1)][static_cast<size_t>(f.boundary[j])]);
      }
      levels[static_cast<size_t>(k - 1)].push_back(std::move(lf));
    }
  }
  return FacePoset::from_parts(d - 1, std::move(levels));
}

FacePoset quotient_by_group(const FacePoset& p, const std::vector<FaceId>& g, int order) {
  if (order < 1) fail(ErrorCode::InvalidComplexData, "quotient: order must be positive");
  if (order == 1) return p;
  const int d = p.dimension();
  const auto n0 = static_cast<size_t>(p.size(0));
  if (g.size() != n0) fail(ErrorCode::NotAnAutomorphism, "vertex map size mismatch");
  {
    std::vector<bool> hit(n0, false);
    for (FaceId w : g) {
      if (w < 0 || static_cast<size_t>(w) >= n0 || hit[static_cast<size_t>(w)])
        fail(ErrorCode::NotAnAutomorphism, "vertex map is not a permutation");
      hit[static_cast<size_t>(w)] = true;
    }
  }
  for (size_t v = 0; v < n0; ++v) {
    FaceId w = static_cast<FaceId>(v);
    for (int j = 0; j < order; ++j) w = g[static_cast<size_t>(w)];
    if (w != static_cast<FaceId>(v)) fail(ErrorCode::NotAnAutomorphism, "permutation order does not divide " + std::to_string(order));
  }

  // Faces must be determined by their vertex sets for the orbit construction.
  std::vector<std::map<std::vector<FaceId>, FaceId>> by_verts(static_cast<size_t>(d) + 1);
  for (int k = 1; k <= d; ++k) {
    for (FaceId i = 0; i < p.size(k); ++i) {
      const auto& verts = p.face(k, i).vertices;
      for (size_t j = 0; j + 1 < verts.size(); ++j)
        if (verts[j] == verts[j + 1]) fail(ErrorCode::NotVertexDetermined, "face with repeated vertex");
      if (!by_verts[static_cast<size_t>(k)].emplace(verts, i).second)
        fail(ErrorCode::NotVertexDetermined, "faces sharing a vertex set");
    }
  }

  // image[k][i]: the face carried to by g, which must exist.
  std::vector<std::vector<FaceId>> image(static_cast<size_t>(d) + 1);
  image[0].assign(g.begin(), g.end());
  for (int k = 1; k <= d; ++k) {
    image[static_cast<size_t>(k)].resize(static_cast<size_t>(p.size(k)));
    for (FaceId i = 0; i < p.size(k); ++i) {
      std::vector<FaceId> mapped;
      for (FaceId v : p.face(k, i).vertices) mapped.push_back(g[static_cast<size_t>(v)]);
      std::sort(mapped.begin(), mapped.end());
      auto it = by_verts[static_cast<size_t>(k)].find(mapped);
      if (it == by_verts[static_cast<size_t>(k)].end())
        fail(ErrorCode::NotAnAutomorphism, "image face missing at dimension " + std::to_string(k));
      image[static_cast<size_t>(k)][static_cast<size_t>(i)] = it->second;
    }
  }

  // Orbits per dimension, indexed in order of their minimal member. The action
  // must be free: no face may return to itself before `order` steps.
  std::vector<std::vector<FaceId>> orbit(static_cast<size_t>(d) + 1);
  std::vector<std::vector<FaceId>> reps(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    orbit[static_cast<size_t>(k)].assign(static_cast<size_t>(p.size(k)), -1);
    for (FaceId i = 0; i < p.size(k); ++i) {
      if (orbit[static_cast<size_t>(k)][static_cast<size_t>(i)] != -1) continue;
      const auto ob = static_cast<FaceId>(reps[static_cast<size_t>(k)].size());
      reps[static_cast<size_t>(k)].push_back(i);
      FaceId cur = i;
      for (int j = 0; j < order; ++j) {
        if (j > 0 && cur == i)
          fail(ErrorCode::FixedFace, "dimension " + std::to_string(k) + " face " + std::to_string(i) +
                                         " fixed by a power of the action");
        orbit[static_cast<size_t>(k)][static_cast<size_t>(cur)] = ob;
        cur = image[static_cast<size_t>(k)][static_cast<size_t>(cur)];
      }
      if (cur != i) fail(ErrorCode::NotAnAutomorphism, "orbit does not close");
    }
  }

  std::vector<std::vector<Face>> levels(static_cast<size_t>(d) + 1);
  for (size_t i = 0; i < reps[0].size(); ++i) levels[0].push_back(Face{{}, {static_cast<FaceId>(i)}});
  for (int k = 1; k <= d; ++k) {
    for (FaceId rep : reps[static_cast<size_t>(k)]) {
      const Face& f = p.face(k, rep);
      std::vector<std::pair<FaceId, size_t>> order_pos;
      for (size_t j = 0; j < f.vertices.size(); ++j)
        order_pos.emplace_back(orbit[0][static_cast<size_t>(f.vertices[j])], j);
      std::sort(order_pos.begin(), order_pos.end());
      for (size_t j = 0; j + 1 < order_pos.size(); ++j)
        if (order_pos[j].first == order_pos[j + 1].first)
          fail(ErrorCode::DegenerateOrbitFace, "vertex orbits collide inside a face");
      Face qf;
      for (const auto& [ov, j] : order_pos) {
        qf.vertices.push_back(ov);
        qf.boundary.push_back(orbit[static_cast<size_t>(k) - 1][static_cast<size_t>(f.boundary[j])]);
      }
      levels[static_cast<size_t>(k)].push_back(std::move(qf));
    }
  }
  return FacePoset::from_parts(d, std::move(levels));
}

FacePoset disjoint_union(const FacePoset& a, const FacePoset& b) {
  const int d = std::max(a.dimension(), b.dimension());
  std::vector<std::vector<Face>> levels(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    for (FaceId i = 0; i < a.size(k); ++i) levels[static_cast<size_t>(k)].push_back(a.face(k, i));
    const auto vshift = static_cast<FaceId>(a.size(0));
    const auto bshift = static_cast<FaceId>(a.size(k - 1));
    for (FaceId i = 0; i < b.size(k); ++i) {
      Face f = b.face(k, i);
      if (k == 0) {
        f.vertices[0] = static_cast<FaceId>(levels[0].size());
      } else {
        for (auto& v : f.vertices) v += vshift;
        for (auto& x : f.boundary) x += bshift;
      }
      levels[static_cast<size_t>(k)].push_back(std::move(f));
    }
  }
  return FacePoset::from_parts(d, std::move(levels));
}

GluingSpec gluing_of(const FacePoset& p) {
  if (p.dimension() != 3) fail(ErrorCode::InvalidComplexData, "gluing_of: dimension 3 required");
  const auto n = static_cast<int>(p.size(3));
  if (n == 0) fail(ErrorCode::InvalidComplexData, "gluing_of: no tetrahedra");
  std::vector<std::vector<std::pair<int, int>>> slots(static_cast<size_t>(p.size(2)));
  for (int t = 0; t < n; ++t)
    for (int i = 0; i < 4; ++i)
      slots[static_cast<size_t>(p.face(3, t).boundary[static_cast<size_t>(i)])].emplace_back(t, i);
  for (const auto& s : slots)
    if (s.size() > 2) fail(ErrorCode::NotClosed, "triangle in more than two tetrahedron slots");

  GluingSpec spec;
  spec.n_facets = n;
  spec.gluings.resize(static_cast<size_t>(n));
  for (const auto& s : slots) {
    if (s.size() != 2) continue;
    for (int side = 0; side < 2; ++side) {
      const auto [t, i] = s[static_cast<size_t>(side)];
      const auto [u, j] = s[static_cast<size_t>(1 - side)];
      FaceGluing g;
      g.target = u;
      g.target_face = j;
      // Triangle position r sits at tetrahedron position r (+1 past the omitted
      // slot); matching positions across the shared triangle gives the map.
      g.perm[static_cast<size_t>(i)] = static_cast<uint8_t>(j);
      for (int v = 0; v < 4; ++v) {
        if (v == i) continue;
        const int r = v < i ? v : v - 1;
        const int w = r < j ? r : r + 1;
        g.perm[static_cast<size_t>(v)] = static_cast<uint8_t>(w);
      }
      spec.gluings[static_cast<size_t>(t)][static_cast<size_t>(i)] = g;
    }
  }
  return spec;
}

namespace detail {

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string poset_json_text(const FacePoset& p, bool include_echo) {
  ordered_json doc;
  doc["format"] = "dnsurf-poset/1";
  doc["dimension"] = p.dimension();
  ordered_json levels = ordered_json::array();
  for (int k = 0; k <= p.dimension(); ++k) {
    ordered_json lv = ordered_json::array();
    for (FaceId i = 0; i < p.size(k); ++i) {
      const Face& f = p.face(k, i);
      ordered_json rec;
      rec["b"] = f.boundary;
      rec["v"] = f.vertices;
      lv.push_back(std::move(rec));
    }
    levels.push_back(std::move(lv));
  }
  doc["faces"] = std::move(levels);
  if (include_echo && p.gluing_echo().has_value()) {
    const GluingSpec& spec = *p.gluing_echo();
    ordered_json js;
    js["n_facets"] = spec.n_facets;
    ordered_json table = ordered_json::array();
    for (const auto& row : spec.gluings) {
      ordered_json jr = ordered_json::array();
      for (const auto& g : row) {
        if (!g) {
          jr.push_back(nullptr);
        } else {
          ordered_json jg;
          jg["t"] = g->target;
          jg["f"] = g->target_face;
          jg["p"] = std::vector<int>(g->perm.begin(), g->perm.end());
          jr.push_back(std::move(jg));
        }
      }
      table.push_back(std::move(jr));
    }
    js["gluings"] = std::move(table);
    doc["gluing_spec"] = std::move(js);
  }
  return doc.dump(2) + "\n";
}

}  // namespace detail

}  // namespace dnsurf

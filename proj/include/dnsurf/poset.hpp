#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dnsurf/errors.hpp"
#include "dnsurf/fvector.hpp"

namespace dnsurf {

using FaceId = int32_t;

// One face of a simplicial poset. `vertices` is the tuple of global vertex ids in
// non-decreasing order; `boundary[i]` is the (k-1)-face obtained by deleting
// vertices[i]. Vertices themselves (k = 0) carry an empty boundary tuple and
// vertices = {own id}.
struct Face {
  std::vector<FaceId> boundary;
  std::vector<FaceId> vertices;

  bool operator==(const Face&) const = default;
};

// Facet-gluing input for dimension-3 complexes. Local face i of facet t is the
// triangle omitting local vertex i. A gluing carries a permutation of {0,1,2,3}
// with perm[i] = target_face, i.e. the omitted vertex of the source face maps to
// the omitted vertex of the target face and the three remaining local vertices
// map across the shared triangle.
struct FaceGluing {
  int target = -1;
  int target_face = -1;
  std::array<uint8_t, 4> perm{0, 1, 2, 3};

  bool operator==(const FaceGluing&) const = default;
};

struct GluingSpec {
  int n_facets = 0;
  // gluings[t][i]; nullopt marks an unglued (boundary) slot.
  std::vector<std::array<std::optional<FaceGluing>, 4>> gluings;

  bool operator==(const GluingSpec&) const = default;
};

// Throws NonInvolutiveGluing / SelfGluedFace / InvalidComplexData.
void check_gluing_spec(const GluingSpec& spec);

enum class ViolationKind {
  DuplicateVertex,
  BoundaryVertexMismatch,
  SimplicialIdentity,
  BooleanInterval,
  NotClosedFace,
  BadLink,
};

const char* violation_kind_name(ViolationKind k);

struct Violation {
  int dim;
  FaceId id;
  ViolationKind kind;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  bool is_simplicial_poset = false;
  bool is_closed = false;
  bool is_connected = false;
  bool is_closed_3_manifold = false;
  std::vector<Violation> violations;
};

// Immutable simplicial poset, stored one level per dimension. Faces are indexed
// contiguously within each dimension. Safe to share across threads after
// construction.
class FacePoset {
 public:
  FacePoset() = default;

  // Structural checks only (tuple sizes, id ranges, sortedness); semantic
  // validity is the job of validate(). Throws InvalidComplexData.
  static FacePoset from_parts(int dimension, std::vector<std::vector<Face>> levels,
                              std::optional<GluingSpec> gluing_echo = std::nullopt);

  // Abstract simplicial complex from facet vertex sets. All facets must have the
  // same arity; vertex ids below n_vertices. Faces of every dimension are the
  // distinct vertex subsets, ordered lexicographically.
  static FacePoset from_facets(int n_vertices, const std::vector<std::vector<FaceId>>& facets);

  int dimension() const { return dim_; }
  long long size(int k) const {
    if (k < 0 || k > dim_) return 0;
    return static_cast<long long>(levels_[static_cast<size_t>(k)].size());
  }
  const std::vector<Face>& level(int k) const { return levels_[static_cast<size_t>(k)]; }
  const Face& face(int k, FaceId i) const {
    return levels_[static_cast<size_t>(k)][static_cast<size_t>(i)];
  }
  int components() const { return components_; }
  const std::optional<GluingSpec>& gluing_echo() const { return gluing_echo_; }

  FVector f_vector() const;
  long long euler_char() const;

  // FNV-1a over the canonical face-structure serialization (gluing echo
  // excluded). Cochains are keyed to this value.
  uint64_t hash() const { return hash_; }

  bool same_structure(const FacePoset& o) const { return dim_ == o.dim_ && levels_ == o.levels_; }

 private:
  int dim_ = 0;
  std::vector<std::vector<Face>> levels_{{}};
  int components_ = 0;
  uint64_t hash_ = 0;
  std::optional<GluingSpec> gluing_echo_;
};

namespace detail {
// Canonical JSON text of the face structure / full file body. Implemented with
// the same writer so the hashed bytes and the interchange file cannot drift.
std::string poset_json_text(const FacePoset& p, bool include_echo);
uint64_t fnv1a64(std::string_view bytes);
}  // namespace detail

// ---- operations ----

// Face identification by union-find closure over (facet, vertex-subset) pairs,
// canonical renumbering by (dimension, minimal representative).
FacePoset build_complex(const GluingSpec& spec);

ValidationReport validate(const FacePoset& p);

// Faces of p strictly containing v, reindexed as a poset of dimension dim-1.
FacePoset vertex_link(const FacePoset& p, FaceId v);

// Quotient of a vertex-determined complex by the order-m vertex permutation g.
// The action must be free on faces of every dimension.
FacePoset quotient_by_group(const FacePoset& p, const std::vector<FaceId>& g, int order);

FacePoset disjoint_union(const FacePoset& a, const FacePoset& b);

// Recover a facet-gluing description of a dimension-3 poset (boundary slots for
// triangles in a single tetrahedron slot). Requires a valid poset whose
// triangles lie in at most two slots.
GluingSpec gluing_of(const FacePoset& p);

// Subface of (k, id) spanned by the local vertex positions in `mask`
// (bit j = keep position j; mask must be a nonempty subset of {0..k}).
std::pair<int, FaceId> subface(const FacePoset& p, int k, FaceId id, unsigned mask);

// True for 2-dimensional posets in which every edge lies in exactly two triangle
// slots and the star of every vertex is a single circle.
bool is_closed_surface(const FacePoset& p);

inline FVector f_vector(const FacePoset& p) { return p.f_vector(); }
inline long long euler_char(const FacePoset& p) { return p.euler_char(); }

}  // namespace dnsurf

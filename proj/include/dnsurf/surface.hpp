#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dnsurf/cochain.hpp"
#include "dnsurf/fvector.hpp"
#include "dnsurf/poset.hpp"

namespace dnsurf {

// How a 1-cocycle cuts one tetrahedron. The cocycle 2-colors the local
// vertices (an edge is odd exactly when its endpoints differ); the piece is
// empty for the 4+0 split, a triangle for 3+1, a quad for 2+2.
struct TetPattern {
  enum class Kind { Empty, Triangle, Quad };

  Kind kind = Kind::Empty;
  // Triangle: the local vertex cut off by the piece.
  int apex = -1;
  // Quad: the partition side containing local vertex 0, ascending.
  std::array<int, 2> side{-1, -1};

  bool operator==(const TetPattern&) const = default;
};

TetPattern tet_pattern(const FacePoset& p, const Cochain& psi, FaceId t);

// One step of a piece's boundary walk: leave point `point_edge` along the arc
// inside `arc_triangle`, arriving at the next step's point.
struct BoundaryStep {
  FaceId point_edge;
  FaceId arc_triangle;

  bool operator==(const BoundaryStep&) const = default;
};

struct Piece {
  FaceId tet;
  TetPattern pattern;
  std::vector<BoundaryStep> walk;  // cyclic; 3 steps for a triangle, 4 for a quad
};

// One traversal of an arc by a piece boundary walk, directed from one endpoint
// of the arc to the other. Every arc is traversed exactly twice (possibly by
// the same piece).
struct ArcTraversal {
  int piece;
  FaceId from_edge;
  FaceId to_edge;
};

struct Surface {
  uint64_t complex_hash = 0;
  std::vector<FaceId> points;  // odd edges, ascending
  std::vector<FaceId> arcs;    // triangles with exactly two odd edges, ascending
  std::vector<Piece> pieces;   // ascending tetrahedron id
  std::vector<std::array<ArcTraversal, 2>> arc_traversals;  // parallel to arcs
  std::vector<int> piece_component;  // component ids in order of least piece
  int n_components = 0;

  long long euler() const {
    return static_cast<long long>(points.size()) - static_cast<long long>(arcs.size()) +
           static_cast<long long>(pieces.size());
  }
};

// Cuts the closed dimension-3 poset along the cocycle. Throws NotACocycle /
// NotClosed / ComplexMismatch.
Surface extract_surface(const FacePoset& p, const Cochain& psi);

struct ComponentClass {
  long long chi = 0;
  bool orientable = true;
  // Genus when orientable, crosscap count otherwise.
  long long genus_or_crosscaps = 0;
  long long pieces = 0;

  bool operator==(const ComponentClass&) const = default;
  auto operator<=>(const ComponentClass&) const = default;
};

// Euler characteristic and orientability per component, in component order.
// The verdict is traversal-invariant; a seed reshuffles the propagation order
// (used by tests to demonstrate that).
std::vector<ComponentClass> classify_components(const Surface& s,
                                                std::optional<uint64_t> shuffle_seed = std::nullopt);

struct SlicingSubcomplex {
  uint64_t complex_hash = 0;
  std::vector<std::vector<FaceId>> faces;  // kept face ids per dimension
  FVector f;
  long long chi = 0;
};

// Faces containing no odd edge.
SlicingSubcomplex slicing_subcomplex(const FacePoset& p, const Cochain& psi);

// chi of the slicing subcomplex without materializing the face lists.
long long slicing_euler(const FacePoset& p, const Cochain& psi);

// Exact identity linking the two Euler characteristics:
//   chi(surface) == chi(slicing subcomplex) - chi(p).
bool cross_check(const FacePoset& p, const Cochain& psi);

}  // namespace dnsurf

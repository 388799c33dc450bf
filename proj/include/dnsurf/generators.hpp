#pragma once

#include "dnsurf/poset.hpp"

namespace dnsurf {

// Single vertex, dimension 0.
FacePoset point();

// Cycle with m vertices and m edges (m >= 2; m = 2 uses a doubled edge).
FacePoset cycle(long long m);

// Join: faces are the unions of one (possibly empty) face of each side, minus
// the empty pair. Works for arbitrary simplicial posets; dim = dim_a + dim_b + 1.
FacePoset join(const FacePoset& a, const FacePoset& b);

// The standard lens space complex: join of two 2p-cycles quotiented by the free
// rotation (a_i -> a_{i+2}, b_j -> b_{j+2q}) of order p. Four vertices,
// f = (4, 4p+4, 8p, 4p). Invalid parameters surface as FixedFace from the
// quotient; p < 1 is TooSmall.
FacePoset lens_standard(long long p, long long q);

// Boundary of the cyclic 4-polytope on n >= 5 vertices (Gale evenness).
FacePoset cyclic_polytope_boundary(int n);

// The 3-sphere as two tetrahedra glued along their boundaries by the identity.
FacePoset two_tet_sphere();

// Boundary of the 4-simplex.
FacePoset four_simplex_boundary();

// One free-standing tetrahedron (not closed).
FacePoset single_tet();

}  // namespace dnsurf

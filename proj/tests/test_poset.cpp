#include <algorithm>
#include <optional>
#include <vector>

#include "doctest.h"
#include "dnsurf/generators.hpp"
#include "dnsurf/poset.hpp"
#include "helpers.hpp"

using namespace dnsurf;

namespace {

bool has_violation(const ValidationReport& r, ViolationKind k) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.kind == k; });
}

GluingSpec identity_two_tet_spec() {
  GluingSpec spec;
  spec.n_facets = 2;
  spec.gluings.resize(2);
  for (int i = 0; i < 4; ++i) {
    spec.gluings[0][static_cast<size_t>(i)] = FaceGluing{1, i, {0, 1, 2, 3}};
    spec.gluings[1][static_cast<size_t>(i)] = FaceGluing{0, i, {0, 1, 2, 3}};
  }
  return spec;
}

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("from_parts rejects malformed levels") {
  // Vertex record must be {{}, {own id}}.
  CHECK_THROWS_AS(FacePoset::from_parts(0, {{Face{{}, {1}}}}), Error);
  // Edge boundary arity must be 2.
  CHECK_THROWS_AS(FacePoset::from_parts(1, {{Face{{}, {0}}, Face{{}, {1}}},
                                            {Face{{0}, {0, 1}}}}),
                  Error);
  // Boundary ids must be in range.
  CHECK_THROWS_AS(FacePoset::from_parts(1, {{Face{{}, {0}}, Face{{}, {1}}},
                                            {Face{{5, 0}, {0, 1}}}}),
                  Error);
  // Vertex tuples must be non-decreasing.
  CHECK_THROWS_AS(FacePoset::from_parts(1, {{Face{{}, {0}}, Face{{}, {1}}},
                                            {Face{{1, 0}, {1, 0}}}}),
                  Error);
}

TEST_CASE("two tetrahedra glued by the identity form a sphere") {
  const FacePoset p = build_complex(identity_two_tet_spec());
  CHECK(p.f_vector() == FVector{4, 6, 4, 2});
  CHECK(p.euler_char() == 0);
  CHECK(p.components() == 1);

  const ValidationReport r = validate(p);
  CHECK(r.is_simplicial_poset);
  CHECK(r.is_closed);
  CHECK(r.is_connected);
  CHECK(r.is_closed_3_manifold);
  CHECK(r.violations.empty());

  CHECK(p.same_structure(two_tet_sphere()));
}

TEST_CASE("build_complex ids are canonical by (dimension, minimal code)") {
  const FacePoset p = build_complex(identity_two_tet_spec());
  // Vertex i of tet 0 becomes global vertex i; face tuples stay sorted.
  for (FaceId v = 0; v < 4; ++v) CHECK(p.face(0, v).vertices == std::vector<FaceId>{v});
  for (FaceId e = 0; e < p.size(1); ++e) {
    const auto& verts = p.face(1, e).vertices;
    CHECK(verts.size() == 2);
    CHECK(verts[0] < verts[1]);
  }
  // Both tetrahedra span the same four vertices.
  CHECK(p.face(3, 0).vertices == std::vector<FaceId>{0, 1, 2, 3});
  CHECK(p.face(3, 1).vertices == std::vector<FaceId>{0, 1, 2, 3});
}

TEST_CASE("self-gluing a tetrahedron across a transposition breaks the poset axioms") {
  // Glue face 0 to face 1 of the same tetrahedron, identifying vertices 0 and 1.
  GluingSpec spec;
  spec.n_facets = 1;
  spec.gluings.resize(1);
  spec.gluings[0][0] = FaceGluing{0, 1, {1, 0, 2, 3}};
  spec.gluings[0][1] = FaceGluing{0, 0, {1, 0, 2, 3}};
  const FacePoset p = build_complex(spec);

  CHECK(p.size(0) == 3);
  const ValidationReport r = validate(p);
  CHECK_FALSE(r.is_simplicial_poset);
  CHECK(has_violation(r, ViolationKind::DuplicateVertex));
  CHECK(has_violation(r, ViolationKind::BooleanInterval));
  CHECK_FALSE(r.is_closed_3_manifold);
}

TEST_CASE("check_gluing_spec rejects bad specs") {
  GluingSpec spec = identity_two_tet_spec();
  spec.gluings[0][0] = FaceGluing{0, 0, {0, 1, 2, 3}};
  CHECK(testutil::throws_code([&] { check_gluing_spec(spec); }, ErrorCode::SelfGluedFace));

  spec = identity_two_tet_spec();
  // Back-gluing disagrees with the forward permutation's inverse.
  spec.gluings[1][0] = FaceGluing{0, 0, {0, 2, 1, 3}};
  CHECK(testutil::throws_code([&] { check_gluing_spec(spec); }, ErrorCode::NonInvolutiveGluing));

  spec = identity_two_tet_spec();
  // perm[i] must equal target_face.
  spec.gluings[0][2] = FaceGluing{1, 3, {0, 1, 2, 3}};
  CHECK(testutil::throws_code([&] { check_gluing_spec(spec); }, ErrorCode::InvalidComplexData));

  spec = identity_two_tet_spec();
  spec.gluings[0][0]->target = 9;
  CHECK(testutil::throws_code([&] { check_gluing_spec(spec); }, ErrorCode::InvalidComplexData));
}

TEST_CASE("a single tetrahedron is a valid poset with boundary") {
  const FacePoset p = single_tet();
  CHECK(p.f_vector() == FVector{4, 6, 4, 1});
  CHECK(p.euler_char() == 1);
  const ValidationReport r = validate(p);
  CHECK(r.is_simplicial_poset);
  CHECK_FALSE(r.is_closed);
  CHECK(has_violation(r, ViolationKind::NotClosedFace));
  CHECK_FALSE(r.is_closed_3_manifold);
}

TEST_CASE("vertex links of the two-tet sphere are doubled triangles") {
  const FacePoset p = two_tet_sphere();
  for (FaceId v = 0; v < 4; ++v) {
    const FacePoset lk = vertex_link(p, v);
    CHECK(lk.f_vector() == FVector{3, 3, 2});
    CHECK(lk.euler_char() == 2);
    CHECK(is_closed_surface(lk));
  }
}

TEST_CASE("vertex links of the 4-simplex boundary are 3-simplex boundaries") {
  const FacePoset p = four_simplex_boundary();
  for (FaceId v = 0; v < 5; ++v) {
    const FacePoset lk = vertex_link(p, v);
    CHECK(lk.f_vector() == FVector{4, 6, 4});
    CHECK(is_closed_surface(lk));
  }
}

TEST_CASE("subface selects by local vertex positions") {
  const FacePoset p = four_simplex_boundary();
  const auto& tet = p.face(3, 0).vertices;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const auto [k, id] = subface(p, 3, 0, (1u << i) | (1u << j));
      CHECK(k == 1);
      CHECK(p.face(1, id).vertices ==
            std::vector<FaceId>{tet[static_cast<size_t>(i)], tet[static_cast<size_t>(j)]});
    }
  const auto [k0, v0] = subface(p, 3, 0, 1u);
  CHECK(k0 == 0);
  CHECK(v0 == tet[0]);
}

TEST_CASE("gluing_of round-trips generator complexes") {
  for (const FacePoset& p : {two_tet_sphere(), lens_standard(2, 1), lens_standard(3, 1),
                             cyclic_polytope_boundary(7)}) {
    const GluingSpec spec = gluing_of(p);
    check_gluing_spec(spec);
    // Rebuilding renumbers canonically; the result is isomorphic and the
    // canonical numbering is a fixed point of another round trip.
    const FacePoset q = build_complex(spec);
    CHECK(q.f_vector() == p.f_vector());
    CHECK(validate(q).is_closed_3_manifold == validate(p).is_closed_3_manifold);
    const FacePoset q2 = build_complex(gluing_of(q));
    CHECK(q2.same_structure(q));
  }
}

TEST_CASE("gluing_of reports boundary slots") {
  const GluingSpec spec = gluing_of(single_tet());
  CHECK(spec.n_facets == 1);
  for (int i = 0; i < 4; ++i) CHECK_FALSE(spec.gluings[0][static_cast<size_t>(i)].has_value());
}

TEST_CASE("disjoint_union adds f-vectors and splits components") {
  const FacePoset a = two_tet_sphere();
  const FacePoset b = four_simplex_boundary();
  const FacePoset u = disjoint_union(a, b);
  CHECK(u.f_vector() == FVector{9, 16, 14, 7});
  CHECK(u.components() == 2);
  CHECK(u.euler_char() == a.euler_char() + b.euler_char());
  const ValidationReport r = validate(u);
  CHECK(r.is_simplicial_poset);
  CHECK(r.is_closed);
  CHECK_FALSE(r.is_connected);
  // Disconnected but still a closed 3-manifold: the flag is about links.
  CHECK(r.is_closed_3_manifold);
}

TEST_CASE("quotient_by_group demands a free action") {
  const FacePoset c = cycle(4);
  // Rotation by 2 is free on vertices and edges.
  const FacePoset q = quotient_by_group(c, {2, 3, 0, 1}, 2);
  CHECK(q.f_vector() == FVector{2, 2});
  // Reflection fixes two vertices.
  CHECK(testutil::throws_code([&] { quotient_by_group(c, {0, 3, 2, 1}, 2); },
                              ErrorCode::FixedFace));
  // Wrong order.
  CHECK(testutil::throws_code([&] { quotient_by_group(c, {1, 2, 3, 0}, 2); },
                              ErrorCode::NotAnAutomorphism));
  // Not a permutation.
  CHECK(testutil::throws_code([&] { quotient_by_group(c, {0, 0, 2, 3}, 2); },
                              ErrorCode::NotAnAutomorphism));
}

TEST_CASE("hash ignores the gluing echo but tracks structure") {
  const FacePoset a = two_tet_sphere();
  const GluingSpec spec = gluing_of(a);
  const FacePoset b = build_complex(spec);
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != four_simplex_boundary().hash());
}

TEST_CASE("seven-vertex torus helper is a closed surface of genus one") {
  const FacePoset t = testutil::seven_vertex_torus();
  CHECK(t.f_vector() == FVector{7, 21, 14});
  CHECK(t.euler_char() == 0);
  CHECK(is_closed_surface(t));
}

}  // TEST_SUITE

#include <set>
#include <vector>

#include "doctest.h"
#include "dnsurf/generators.hpp"
#include "dnsurf/poset.hpp"
#include "helpers.hpp"

using namespace dnsurf;

namespace {

void check_valid_closed3(const FacePoset& p) {
  const ValidationReport r = validate(p);
  CHECK(r.is_simplicial_poset);
  CHECK(r.is_closed);
  CHECK(r.is_connected);
  CHECK(r.is_closed_3_manifold);
  CHECK(r.violations.empty());
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("cycle produces circles, including the doubled-edge digon") {
  const FacePoset c2 = cycle(2);
  CHECK(c2.f_vector() == FVector{2, 2});
  CHECK(validate(c2).is_simplicial_poset);
  CHECK(validate(c2).is_closed);

  const FacePoset c5 = cycle(5);
  CHECK(c5.f_vector() == FVector{5, 5});
  CHECK(c5.euler_char() == 0);
  CHECK(validate(c5).is_closed);

  CHECK(testutil::throws_code([] { cycle(1); }, ErrorCode::TooSmall));
}

TEST_CASE("join multiplies side sizes blockwise") {
  const FacePoset s = join(cycle(2), cycle(2));
  CHECK(s.f_vector() == FVector{4, 8, 8, 4});
  check_valid_closed3(s);

  const FacePoset big = join(cycle(4), cycle(4));
  CHECK(big.f_vector() == FVector{8, 24, 32, 16});
  check_valid_closed3(big);

  // Join of a point with a cycle is a cone: one extra vertex, every cycle face
  // coned once.
  const FacePoset cone = join(point(), cycle(3));
  CHECK(cone.f_vector() == FVector{4, 6, 3});
  CHECK(validate(cone).is_simplicial_poset);
}

TEST_CASE("join boundary tuples drop the matching vertex position") {
  const FacePoset s = join(cycle(2), cycle(2));
  for (int k = 1; k <= s.dimension(); ++k) {
    for (FaceId i = 0; i < s.size(k); ++i) {
      const Face& f = s.face(k, i);
      REQUIRE(f.boundary.size() == f.vertices.size());
      for (size_t r = 0; r < f.boundary.size(); ++r) {
        std::vector<FaceId> expect = f.vertices;
        expect.erase(expect.begin() + static_cast<long>(r));
        CHECK(s.face(k - 1, f.boundary[r]).vertices == expect);
      }
    }
  }
}

TEST_CASE("lens_standard f-vector law") {
  for (long long p = 1; p <= 8; ++p) {
    const FacePoset l = lens_standard(p, 1);
    CHECK(l.f_vector() == FVector{4, 4 * p + 4, 8 * p, 4 * p});
    check_valid_closed3(l);
  }
  CHECK(lens_standard(16, 3).f_vector() == FVector{4, 68, 128, 64});
  check_valid_closed3(lens_standard(16, 3));
}

TEST_CASE("lens_standard normalizes the twist parameter") {
  // q and q + 2p give the same rotation, hence the same complex.
  CHECK(lens_standard(3, 1).same_structure(lens_standard(3, 7)));
  CHECK(lens_standard(3, 1).same_structure(lens_standard(3, -5)));
}

TEST_CASE("lens_standard rejects non-coprime parameters via the group action") {
  CHECK(testutil::throws_code([] { lens_standard(4, 2); }, ErrorCode::FixedFace));
  CHECK(testutil::throws_code([] { lens_standard(6, 3); }, ErrorCode::FixedFace));
  CHECK(testutil::throws_code([] { lens_standard(0, 1); }, ErrorCode::TooSmall));
}

TEST_CASE("lens_standard vertex stars cover the whole complex") {
  // Four vertices, every tetrahedron touching all four: the complex is a
  // crystallization and each vertex link is a closed surface with 8p triangles.
  const long long p = 3;
  const FacePoset l = lens_standard(p, 1);
  REQUIRE(l.size(0) == 4);
  for (FaceId t = 0; t < l.size(3); ++t) {
    std::set<FaceId> verts(l.face(3, t).vertices.begin(), l.face(3, t).vertices.end());
    CHECK(verts == std::set<FaceId>{0, 1, 2, 3});
  }
  for (FaceId v = 0; v < 4; ++v) {
    const FacePoset lk = vertex_link(l, v);
    CHECK(is_closed_surface(lk));
    CHECK(lk.euler_char() == 2);
    CHECK(lk.size(2) == 4 * p);
  }
  for (FaceId v = 0; v < 4; ++v) CHECK(vertex_link(lens_standard(2, 1), v).f_vector() == FVector{6, 12, 8});
  CHECK(testutil::throws_code([&] { vertex_link(l, 99); }, ErrorCode::UnknownVertex));
}

TEST_CASE("cyclic polytope boundary face counts") {
  const FacePoset c6 = cyclic_polytope_boundary(6);
  CHECK(c6.f_vector() == FVector{6, 15, 18, 9});
  check_valid_closed3(c6);

  const FacePoset c11 = cyclic_polytope_boundary(11);
  CHECK(c11.f_vector() == FVector{11, 55, 88, 44});
  check_valid_closed3(c11);

  // n(n-3)/2 facets and two-neighborliness in general.
  for (int n = 5; n <= 9; ++n) {
    const FacePoset c = cyclic_polytope_boundary(n);
    CHECK(c.size(3) == static_cast<long long>(n) * (n - 3) / 2);
    CHECK(c.size(1) == static_cast<long long>(n) * (n - 1) / 2);
  }
  CHECK(testutil::throws_code([] { cyclic_polytope_boundary(4); }, ErrorCode::TooSmall));
}

TEST_CASE("small sphere models validate") {
  check_valid_closed3(two_tet_sphere());
  check_valid_closed3(four_simplex_boundary());
  CHECK(four_simplex_boundary().f_vector() == FVector{5, 10, 10, 5});
  // The join model of the sphere coincides with the degenerate lens complex.
  CHECK(lens_standard(1, 1).same_structure(join(cycle(2), cycle(2))));
}

TEST_CASE("generator outputs satisfy the poset axioms wholesale") {
  for (const FacePoset& p :
       {lens_standard(5, 2), lens_standard(7, 3), cyclic_polytope_boundary(8),
        join(cycle(3), cycle(4)), join(cycle(2), cycle(6))}) {
    const ValidationReport r = validate(p);
    CHECK(r.is_simplicial_poset);
    CHECK(r.violations.empty());
  }
}

}  // TEST_SUITE

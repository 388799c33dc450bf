#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "dnsurf/analysis.hpp"
#include "dnsurf/cohomology.hpp"
#include "dnsurf/generators.hpp"
#include "helpers.hpp"

using namespace dnsurf;

TEST_SUITE("analysis") {

TEST_CASE("exact mean formulas on known complexes") {
  CHECK(average_formula(FVector{5, 10, 10, 5}) == Rational(15, 8));
  CHECK(average_closed3(FVector{5, 10, 10, 5}) == Rational(15, 8));
  CHECK(average_closed3(FVector{4, 12, 16, 8}) == Rational(1));
  CHECK(average_closed3(FVector{11, 55, 88, 44}) == Rational(0));
  CHECK(average_formula(FVector{9, 35, 56, 28}) == Rational(2));
  CHECK(testutil::throws_code([] { average_closed3(FVector{4, 6, 4, 1}); },
                              ErrorCode::NotClosed3ManifoldFVector));
}

TEST_CASE("the two closed-3-manifold mean expressions coincide") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const long long f0 = 4 + static_cast<long long>(rng() % 400);
    const long long f1 = f0 + 1 + static_cast<long long>(rng() % 4000);
    const FVector f{f0, f1, 2 * (f1 - f0), f1 - f0};
    CHECK(average_formula(f) == average_closed3(f));
    CHECK(Rational(5 * f0 - f1, 8) == Rational(4 * f0 - f[3], 8));
  }
}

TEST_CASE("embeddable nonorientable Euler characteristics") {
  CHECK(bredon_wood_chis(1, 1, -5) == std::vector<long long>{1, -1, -3, -5});
  CHECK(bredon_wood_chis(1, 3, -4) == std::vector<long long>{0, -2, -4});
  CHECK(bredon_wood_chis(3, 5, -6) == std::vector<long long>{-2, -4, -6});
  CHECK(bredon_wood_chis(1, 15, -8) == std::vector<long long>{-6, -8});
  CHECK(bredon_wood_contains(3, 5, -4));
  CHECK_FALSE(bredon_wood_contains(3, 5, -3));
  CHECK_FALSE(bredon_wood_contains(3, 5, 0));
  CHECK(testutil::throws_code([] { bredon_wood_chis(2, 5, 0); }, ErrorCode::BadParity));
  CHECK(testutil::throws_code([] { bredon_wood_chis(3, -1, 0); }, ErrorCode::BadParity));
}

TEST_CASE("spectrum of the smallest lens complex, both classes") {
  const FacePoset p = lens_standard(2, 1);
  const CohomologyBasis basis = h1(p);
  REQUIRE(basis.h1_dim == 1);

  const ClassSpectrum trivial = class_spectrum(p, Cochain(p, 1));
  CHECK(trivial.count == 8);
  CHECK(trivial.mean_chi == Rational(1));
  CHECK(trivial.mean_subcomplex_chi == Rational(1));
  CHECK(trivial.min_chi == 0);
  CHECK(trivial.max_chi == 2);
  CHECK(trivial.all_cross_checked);
  CHECK_FALSE(trivial.every_surface_has_nonorientable);
  CHECK(trivial.any_sphere_component);
  CHECK(trivial.nonorientable_chis.empty());

  const ClassSpectrum nontrivial = class_spectrum(p, basis.representatives[0]);
  CHECK(nontrivial.count == 8);
  CHECK(nontrivial.mean_chi == Rational(1));
  CHECK(nontrivial.min_chi == 1);
  CHECK(nontrivial.max_chi == 1);
  CHECK(nontrivial.every_surface_has_nonorientable);
  CHECK_FALSE(nontrivial.any_sphere_component);
  CHECK(nontrivial.nonorientable_chis == std::vector<long long>{1});
  CHECK(nontrivial.witness_max == basis.representatives[0]);
}

TEST_CASE("spectrum witness is the lexicographically least maximizer") {
  const FacePoset p = lens_standard(2, 1);
  const ClassSpectrum spec = class_spectrum(p, Cochain(p, 1));
  ClassEnumerator en(p, spec.representative);
  bool witness_seen = false;
  en.for_each_range(0, en.size(), [&](uint64_t, const Cochain& psi) {
    const auto classes = classify_components(extract_surface(p, psi));
    long long chi = 0;
    for (const auto& c : classes) chi += c.chi;
    if (chi != spec.max_chi) return;
    if (psi == spec.witness_max) witness_seen = true;
    CHECK_FALSE(psi.lex_less(spec.witness_max));
  });
  CHECK(witness_seen);
}

TEST_CASE("spectrum is deterministic across worker counts") {
  const FacePoset p = cyclic_polytope_boundary(7);
  SpectrumOptions one;
  const ClassSpectrum base = class_spectrum(p, Cochain(p, 1), one);
  for (int workers : {2, 3, 4}) {
    SpectrumOptions opt;
    opt.workers = workers;
    const ClassSpectrum s = class_spectrum(p, Cochain(p, 1), opt);
    CHECK(s.count == base.count);
    CHECK(s.sum_chi == base.sum_chi);
    CHECK(s.sum_subcomplex_chi == base.sum_subcomplex_chi);
    CHECK(s.min_chi == base.min_chi);
    CHECK(s.max_chi == base.max_chi);
    CHECK(s.witness_max == base.witness_max);
    CHECK(s.nonorientable_chis == base.nonorientable_chis);
    REQUIRE(s.entries.size() == base.entries.size());
    for (size_t i = 0; i < s.entries.size(); ++i) {
      CHECK(s.entries[i].chi == base.entries[i].chi);
      CHECK(s.entries[i].count == base.entries[i].count);
      CHECK(s.entries[i].components == base.entries[i].components);
    }
  }
}

TEST_CASE("spectrum respects the enumeration budget") {
  const FacePoset p = lens_standard(2, 1);
  SpectrumOptions opt;
  opt.budget = 4;
  CHECK(testutil::throws_code([&] { class_spectrum(p, Cochain(p, 1), opt); },
                              ErrorCode::BudgetExceeded));
}

TEST_CASE("verify_lemma passes on spheres and lens complexes") {
  const AverageReport sphere = verify_lemma(four_simplex_boundary());
  CHECK(sphere.pass);
  CHECK(sphere.formula_value == Rational(15, 8));
  CHECK(sphere.closed3_value.has_value());
  CHECK(*sphere.closed3_value == Rational(15, 8));
  CHECK(sphere.h1_dim == 0);
  REQUIRE(sphere.classes.size() == 1);
  CHECK(sphere.classes[0].count == 16);
  CHECK(sphere.classes[0].subcomplex_mean_ok);
  REQUIRE(sphere.classes[0].surface_mean_ok.has_value());
  CHECK(*sphere.classes[0].surface_mean_ok);
  CHECK(sphere.classes[0].cross_check_failures == 0);
  CHECK(sphere.classes[0].is_sigma_class);

  const FacePoset l = lens_standard(2, 1);
  const AverageReport lens = verify_lemma(l);
  CHECK(lens.pass);
  CHECK(lens.h1_dim == 1);
  REQUIRE(lens.classes.size() == 2);
  CHECK(lens.classes[0].is_sigma_class);
  CHECK_FALSE(lens.classes[1].is_sigma_class);
  for (const ClassCheck& c : lens.classes) {
    CHECK(c.count == 8);
    CHECK(c.mean_subcomplex_chi == Rational(1));
    CHECK(c.subcomplex_mean_ok);
  }

  const AverageReport flagged = verify_lemma(l, h1(l).representatives[0]);
  CHECK(flagged.pass);
  CHECK_FALSE(flagged.classes[0].is_sigma_class);
  CHECK(flagged.classes[1].is_sigma_class);
}

TEST_CASE("verify_lemma covers non-manifold and low-dimensional posets") {
  const AverageReport circle = verify_lemma(cycle(5));
  CHECK(circle.pass);
  CHECK(circle.formula_value == Rational(5, 2));
  CHECK_FALSE(circle.closed3_value.has_value());
  CHECK(circle.h1_dim == 1);
  for (const ClassCheck& c : circle.classes) {
    CHECK(c.count == 16);
    CHECK(c.subcomplex_mean_ok);
    CHECK_FALSE(c.mean_surface_chi.has_value());
  }

  const FacePoset torus = testutil::seven_vertex_torus();
  const AverageReport tr = verify_lemma(torus);
  CHECK(tr.pass);
  CHECK(tr.h1_dim == 2);
  CHECK(tr.classes.size() == 4);
  for (const ClassCheck& c : tr.classes) CHECK(c.subcomplex_mean_ok);
}

TEST_CASE("pseudomanifold surface mean shifts by the complex Euler characteristic") {
  const FacePoset susp = testutil::suspension_of_surface(testutil::seven_vertex_torus());
  const AverageReport rep = pseudomanifold_average(susp);
  CHECK(rep.pass);
  CHECK(rep.closed);
  CHECK_FALSE(rep.is_closed_3_manifold);
  CHECK(rep.complex_chi == 2);
  CHECK(rep.formula_value == Rational(2));
  CHECK_FALSE(rep.closed3_value.has_value());
  REQUIRE(rep.classes.size() == 1);
  CHECK(rep.classes[0].count == 256);
  CHECK(rep.classes[0].mean_subcomplex_chi == Rational(2));
  REQUIRE(rep.classes[0].mean_surface_chi.has_value());
  CHECK(*rep.classes[0].mean_surface_chi == Rational(0));
  REQUIRE(rep.classes[0].surface_mean_ok.has_value());
  CHECK(*rep.classes[0].surface_mean_ok);
  CHECK(rep.classes[0].cross_check_failures == 0);

  CHECK(testutil::throws_code([] { pseudomanifold_average(single_tet()); },
                              ErrorCode::NotClosed));
}

TEST_CASE("lens certificates for the bound-meeting family") {
  for (long long k = 1; k <= 4; ++k) {
    const FacePoset p = lens_standard(2 * k, 1);
    const LensCertificate cert = certify_lens(p, k, 1);
    CHECK(cert.q == 1);
    CHECK(cert.r == 2 * k - 1);
    CHECK(cert.bound == 8 * k);
    CHECK(cert.f3 == 8 * k);
    CHECK(cert.bound_met);
    CHECK(cert.bound_respected);
    CHECK(cert.witness_chi == 2 - k);
    CHECK(cert.every_surface_nonorientable);
    CHECK_FALSE(cert.sphere_component_present);
    CHECK(cert.bredon_wood_ok);
    for (long long chi : cert.nonorientable_chis)
      CHECK(bredon_wood_contains(1, 2 * k - 1, chi));
    CHECK(cert.checks_pass);
  }
}

TEST_CASE("lens certificate for the non-minimal crystallization") {
  const LensCertificate cert = certify_lens(lens_standard(16, 3), 8, 3);
  CHECK(cert.r == 5);
  CHECK(cert.bound == 32);
  CHECK(cert.f3 == 64);
  CHECK_FALSE(cert.bound_met);
  CHECK(cert.bound_respected);
  CHECK(cert.class_mean_chi == Rational(-6));
  CHECK(cert.witness_chi == -6);
  CHECK(cert.every_surface_nonorientable);
  CHECK(cert.bredon_wood_ok);
  CHECK(cert.nonorientable_chis == std::vector<long long>{-6});
  CHECK(cert.checks_pass);
}

TEST_CASE("lens certification rejects unusable inputs") {
  CHECK(testutil::throws_code([] { certify_lens(lens_standard(6, 1), 3, 3); },
                              ErrorCode::NoSuchR));
  CHECK(testutil::throws_code([] { certify_lens(lens_standard(2, 1), 0, 1); },
                              ErrorCode::TooSmall));
  CHECK(testutil::throws_code([] { certify_lens(lens_standard(3, 1), 2, 1); },
                              ErrorCode::WrongH1Dimension));
  CHECK(testutil::throws_code([] { certify_lens(single_tet(), 1, 1); }, ErrorCode::NotClosed));
  CHECK(testutil::throws_code([] { certify_lens(cyclic_polytope_boundary(11), 1, 1); },
                              ErrorCode::InvalidComplexData));
}

}  // TEST_SUITE

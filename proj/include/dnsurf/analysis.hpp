#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnsurf/cochain.hpp"
#include "dnsurf/poset.hpp"
#include "dnsurf/rational.hpp"
#include "dnsurf/surface.hpp"

namespace dnsurf {

// Exact mean of chi(slicing subcomplex) over a cohomology class:
// sum_j (-1/2)^j f_j.
Rational average_formula(const FVector& f);

// Exact mean of chi(cut surface) for a closed 3-manifold: (5 f_0 - f_1) / 8,
// equivalently (4 f_0 - f_3) / 8. Throws NotClosed3ManifoldFVector when the
// closed-3-manifold f-vector relations fail.
Rational average_closed3(const FVector& f);

// Euler characteristics of the closed nonorientable surfaces embedding in the
// lens space L(qr+1, q): (4-q-r)/2 - 2i for i >= 0, listed descending while
// >= floor_chi. q and r must be positive odd (BadParity).
std::vector<long long> bredon_wood_chis(long long q, long long r, long long floor_chi);
bool bredon_wood_contains(long long q, long long r, long long chi);

struct SpectrumOptions {
  uint64_t budget = uint64_t(1) << 24;  // max members enumerated per call
  int workers = 1;
};

struct SpectrumEntry {
  long long chi = 0;
  std::vector<ComponentClass> components;  // sorted signature
  uint64_t count = 0;
};

// Exhaustive walk of one cohomology class of 1-cocycles.
struct ClassSpectrum {
  Cochain representative;  // lex-min cocycle of the class
  uint64_t count = 0;
  long long sum_chi = 0;
  long long sum_subcomplex_chi = 0;
  long long min_chi = 0;
  long long max_chi = 0;
  Rational mean_chi;
  Rational mean_subcomplex_chi;
  std::vector<SpectrumEntry> entries;  // ordered by (chi, signature)
  Cochain witness_max;                 // lex-min cocycle attaining max_chi
  bool all_cross_checked = false;      // chi(S) == chi(sub) - chi(p) throughout
  // True when every member with a nonempty surface has a nonorientable
  // component (vacuous on empty surfaces).
  bool every_surface_has_nonorientable = false;
  bool any_sphere_component = false;
  std::vector<long long> nonorientable_chis;  // distinct, ascending
};

// Enumerates the class of sigma over a closed dimension-3 poset. Deterministic
// for any worker count. Throws NotACocycle / NotClosed / BudgetExceeded.
ClassSpectrum class_spectrum(const FacePoset& p, const Cochain& sigma, const SpectrumOptions& opts = {});

struct ClassCheck {
  Cochain representative;
  uint64_t count = 0;
  Rational mean_subcomplex_chi;
  bool subcomplex_mean_ok = false;
  std::optional<Rational> mean_surface_chi;  // closed complexes only
  std::optional<bool> surface_mean_ok;       // against average_formula - chi(p)
  uint64_t cross_check_failures = 0;
  bool is_sigma_class = false;
};

struct AverageReport {
  FVector f;
  Rational formula_value;
  long long complex_chi = 0;
  bool closed = false;
  bool closed3_fvector = false;
  bool is_closed_3_manifold = false;
  std::optional<Rational> closed3_value;
  int h1_dim = 0;
  std::vector<ClassCheck> classes;  // every cohomology class, trivial first
  bool pass = false;
};

// Checks the exact mean identities against brute-force enumeration, over every
// cohomology class. sigma (default: zero) marks one class of interest; surface
// means are checked whenever the complex is closed, against
// average_formula - chi(p).
AverageReport verify_lemma(const FacePoset& p, std::optional<Cochain> sigma = std::nullopt,
                           const SpectrumOptions& opts = {});

// Same report, but insists the complex is closed (chi need not vanish).
AverageReport pseudomanifold_average(const FacePoset& p, std::optional<Cochain> sigma = std::nullopt,
                                     const SpectrumOptions& opts = {});

// Mechanical verification of the minimal-crystallization argument for the lens
// space L(2k, q) with 2k-1 = q*r, on a given 4-vertex closed 3-manifold poset
// with one-dimensional H^1. Topological identification of the input is not
// checked; the certificate is conditional on it.
struct LensCertificate {
  long long k = 0, q = 0, r = 0;
  long long bound = 0;  // 4(q+r)
  long long f3 = 0;
  bool bound_met = false;        // f3 == bound
  bool bound_respected = false;  // f3 >= bound
  std::string complex_hash;
  std::string tool_version;
  uint64_t class_size = 0;
  Rational class_mean_chi;
  long long witness_chi = 0;
  Cochain witness;
  bool witness_at_least_mean = false;
  bool every_surface_nonorientable = false;
  bool sphere_component_present = false;
  bool bredon_wood_ok = false;  // every nonorientable component chi embeds
  std::vector<long long> nonorientable_chis;
  bool checks_pass = false;
  std::string note;
};

LensCertificate certify_lens(const FacePoset& p, long long k, long long q,
                             const SpectrumOptions& opts = {});

}  // namespace dnsurf

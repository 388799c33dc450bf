#include "dnsurf/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <utility>

#include "dnsurf/cohomology.hpp"
#include "dnsurf/io.hpp"
#include "dnsurf/version.hpp"

namespace dnsurf {

Rational average_formula(const FVector& f) {
  Rational sum = 0;
  Rational term = 1;  // (-1/2)^j
  for (long long fj : f.counts) {
    sum += term * fj;
    term *= Rational(-1, 2);
  }
  return sum;
}

Rational average_closed3(const FVector& f) {
  if (!f.closed3_relations())
    fail(ErrorCode::NotClosed3ManifoldFVector, "f-vector " + f.str() + " fails the closed-3-manifold relations");
  return Rational(5 * f[0] - f[1], 8);
}

std::vector<long long> bredon_wood_chis(long long q, long long r, long long floor_chi) {
  if (q < 1 || r < 1 || q % 2 == 0 || r % 2 == 0)
    fail(ErrorCode::BadParity, "q and r must be positive odd integers");
  std::vector<long long> out;
  for (long long chi = (4 - q - r) / 2; chi >= floor_chi; chi -= 2) out.push_back(chi);
  return out;
}

bool bredon_wood_contains(long long q, long long r, long long chi) {
  if (q < 1 || r < 1 || q % 2 == 0 || r % 2 == 0)
    fail(ErrorCode::BadParity, "q and r must be positive odd integers");
  const long long top = (4 - q - r) / 2;
  return chi <= top && (top - chi) % 2 == 0;
}

namespace {

struct MemberStats {
  uint64_t count = 0;
  long long sum_sub = 0;
  long long sum_chi = 0;
  long long min_chi = 0;
  long long max_chi = 0;
  bool any = false;
  std::map<std::pair<long long, std::vector<ComponentClass>>, uint64_t> entries;
  std::optional<Cochain> witness;
  long long witness_chi = 0;
  uint64_t cross_failures = 0;
  bool every_nonorientable = true;
  bool any_sphere = false;
  std::set<long long> nonor_chis;
};

MemberStats scan_range(const FacePoset& p, const ClassEnumerator& en, uint64_t lo, uint64_t hi,
                       bool with_surfaces, long long chi_p) {
  MemberStats st;
  en.for_each_range(lo, hi, [&](uint64_t, const Cochain& psi) {
    ++st.count;
    const long long sub = slicing_euler(p, psi);
    st.sum_sub += sub;
    if (!with_surfaces) return;

    const Surface s = extract_surface(p, psi);
    const long long chi = s.euler();
    st.sum_chi += chi;
    if (!st.any || chi < st.min_chi) st.min_chi = chi;
    if (!st.any || chi > st.max_chi) st.max_chi = chi;
    st.any = true;
    if (chi != sub - chi_p) ++st.cross_failures;

    auto comps = classify_components(s);
    std::sort(comps.begin(), comps.end());
    ++st.entries[{chi, comps}];
    if (!s.pieces.empty()) {
      bool nonor = false;
      for (const auto& c : comps) {
        if (!c.orientable) {
          nonor = true;
          st.nonor_chis.insert(c.chi);
        } else if (c.chi == 2) {
          st.any_sphere = true;
        }
      }
      if (!nonor) st.every_nonorientable = false;
    }
    if (!st.witness || chi > st.witness_chi ||
        (chi == st.witness_chi && psi.lex_less(*st.witness))) {
      st.witness = psi;
      st.witness_chi = chi;
    }
  });
  return st;
}

void merge_into(MemberStats& a, MemberStats&& b) {
  a.count += b.count;
  a.sum_sub += b.sum_sub;
  a.sum_chi += b.sum_chi;
  if (b.any) {
    a.min_chi = a.any ? std::min(a.min_chi, b.min_chi) : b.min_chi;
    a.max_chi = a.any ? std::max(a.max_chi, b.max_chi) : b.max_chi;
    a.any = true;
  }
  for (auto& [key, n] : b.entries) a.entries[key] += n;
  a.cross_failures += b.cross_failures;
  a.every_nonorientable = a.every_nonorientable && b.every_nonorientable;
  a.any_sphere = a.any_sphere || b.any_sphere;
  a.nonor_chis.insert(b.nonor_chis.begin(), b.nonor_chis.end());
  if (b.witness && (!a.witness || b.witness_chi > a.witness_chi ||
                    (b.witness_chi == a.witness_chi && b.witness->lex_less(*a.witness)))) {
    a.witness = std::move(b.witness);
    a.witness_chi = b.witness_chi;
  }
}

// Splits the index range into one contiguous chunk per worker and merges the
// chunk results in order, so the outcome is identical for any worker count.
MemberStats enumerate_class(const FacePoset& p, const Cochain& rep, const SpectrumOptions& opts,
                            bool with_surfaces, long long chi_p, uint64_t budget_left) {
  const ClassEnumerator en(p, rep);
  if (en.free_bits() >= 63 || en.size() > budget_left)
    fail(ErrorCode::BudgetExceeded, "class has 2^" + std::to_string(en.free_bits()) +
                                        " members, budget allows " + std::to_string(budget_left));
  const uint64_t total = en.size();
  int workers = std::clamp(opts.workers, 1, 64);
  workers = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(workers), total));
  if (workers <= 1) return scan_range(p, en, 0, total, with_surfaces, chi_p);

  const uint64_t chunk = (total + static_cast<uint64_t>(workers) - 1) / static_cast<uint64_t>(workers);
  std::vector<MemberStats> parts(static_cast<size_t>(workers));
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    const uint64_t lo = chunk * static_cast<uint64_t>(w);
    const uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) continue;
    threads.emplace_back([&p, &en, &parts, lo, hi, with_surfaces, chi_p, w] {
      parts[static_cast<size_t>(w)] = scan_range(p, en, lo, hi, with_surfaces, chi_p);
    });
  }
  for (auto& t : threads) t.join();
  MemberStats st;
  for (auto& part : parts) merge_into(st, std::move(part));
  return st;
}

void require_closed3(const FacePoset& p) {
  if (p.dimension() != 3) fail(ErrorCode::InvalidComplexData, "dimension 3 required");
  std::vector<int> slots(static_cast<size_t>(p.size(2)), 0);
  for (FaceId t = 0; t < p.size(3); ++t)
    for (FaceId b : p.face(3, t).boundary) ++slots[static_cast<size_t>(b)];
  for (int c : slots)
    if (c != 2) fail(ErrorCode::NotClosed, "triangle not in exactly two tetrahedron slots");
  if (p.size(3) == 0) fail(ErrorCode::NotClosed, "no tetrahedra");
}

}  // namespace

ClassSpectrum class_spectrum(const FacePoset& p, const Cochain& sigma, const SpectrumOptions& opts) {
  sigma.require_on(p, 1);
  require_closed3(p);
  const Cochain rep = canonical_representative(p, sigma);
  MemberStats st = enumerate_class(p, rep, opts, true, p.euler_char(), opts.budget);

  ClassSpectrum out;
  out.representative = rep;
  out.count = st.count;
  out.sum_chi = st.sum_chi;
  out.sum_subcomplex_chi = st.sum_sub;
  out.min_chi = st.min_chi;
  out.max_chi = st.max_chi;
  out.mean_chi = Rational(st.sum_chi) / static_cast<long long>(st.count);
  out.mean_subcomplex_chi = Rational(st.sum_sub) / static_cast<long long>(st.count);
  for (const auto& [key, n] : st.entries) out.entries.push_back({key.first, key.second, n});
  out.witness_max = *st.witness;
  out.all_cross_checked = st.cross_failures == 0;
  out.every_surface_has_nonorientable = st.every_nonorientable;
  out.any_sphere_component = st.any_sphere;
  out.nonorientable_chis.assign(st.nonor_chis.begin(), st.nonor_chis.end());
  return out;
}

namespace {

AverageReport average_report(const FacePoset& p, std::optional<Cochain> sigma, const SpectrumOptions& opts,
                             bool require_closed) {
  if (p.dimension() < 1) fail(ErrorCode::InvalidComplexData, "average verification needs edges");
  AverageReport rep;
  rep.f = p.f_vector();
  rep.formula_value = average_formula(rep.f);
  rep.complex_chi = p.euler_char();
  const ValidationReport val = validate(p);
  rep.closed = val.is_closed;
  rep.closed3_fvector = rep.f.closed3_relations();
  rep.is_closed_3_manifold = val.is_closed_3_manifold;
  if (require_closed && !rep.closed) fail(ErrorCode::NotClosed, "a closed complex is required");
  if (rep.closed3_fvector) rep.closed3_value = average_closed3(rep.f);

  Cochain sig = sigma ? *sigma : Cochain(p, 1);
  sig.require_on(p, 1);

  const CohomologyBasis basis = h1(p);
  rep.h1_dim = basis.h1_dim;
  if (basis.h1_dim > 24) fail(ErrorCode::BudgetExceeded, "too many cohomology classes to enumerate");
  const uint64_t n_classes = uint64_t(1) << basis.h1_dim;

  const bool with_surfaces = rep.closed && p.dimension() == 3;
  const Rational expect_sub = rep.formula_value;
  const Rational expect_surface = rep.formula_value - rep.complex_chi;

  uint64_t budget_left = opts.budget;
  bool pass = true;
  for (uint64_t mask = 0; mask < n_classes; ++mask) {
    Cochain member(p, 1);
    for (int b = 0; b < basis.h1_dim; ++b)
      if (mask & (uint64_t(1) << b)) member ^= basis.representatives[static_cast<size_t>(b)];
    const Cochain crep = canonical_representative(p, member);
    MemberStats st = enumerate_class(p, crep, opts, with_surfaces, rep.complex_chi, budget_left);
    budget_left -= st.count;

    ClassCheck chk;
    chk.representative = crep;
    chk.count = st.count;
    chk.mean_subcomplex_chi = Rational(st.sum_sub) / static_cast<long long>(st.count);
    chk.subcomplex_mean_ok = chk.mean_subcomplex_chi == expect_sub;
    chk.is_sigma_class = same_class(p, crep, sig);
    if (with_surfaces) {
      chk.mean_surface_chi = Rational(st.sum_chi) / static_cast<long long>(st.count);
      chk.surface_mean_ok = *chk.mean_surface_chi == expect_surface;
      chk.cross_check_failures = st.cross_failures;
      if (!*chk.surface_mean_ok || st.cross_failures != 0) pass = false;
    }
    if (!chk.subcomplex_mean_ok) pass = false;
    rep.classes.push_back(std::move(chk));
  }
  rep.pass = pass;
  return rep;
}

}  // namespace

AverageReport verify_lemma(const FacePoset& p, std::optional<Cochain> sigma, const SpectrumOptions& opts) {
  return average_report(p, std::move(sigma), opts, false);
}

AverageReport pseudomanifold_average(const FacePoset& p, std::optional<Cochain> sigma,
                                     const SpectrumOptions& opts) {
  return average_report(p, std::move(sigma), opts, true);
}

LensCertificate certify_lens(const FacePoset& p, long long k, long long q, const SpectrumOptions& opts) {
  if (k < 1) fail(ErrorCode::TooSmall, "k must be at least 1");
  if (q < 1 || (2 * k - 1) % q != 0)
    fail(ErrorCode::NoSuchR, "q must be a positive divisor of 2k-1 = " + std::to_string(2 * k - 1));

  LensCertificate cert;
  cert.k = k;
  cert.q = q;
  cert.r = (2 * k - 1) / q;
  cert.bound = 4 * (q + cert.r);
  cert.tool_version = kVersion;
  cert.note = "conditional on the input being a crystallization of the (" + std::to_string(2 * k) + "," +
              std::to_string(q) + ") lens space";

  const ValidationReport val = validate(p);
  if (!val.is_closed_3_manifold) fail(ErrorCode::NotClosed, "certification needs a closed 3-manifold complex");
  if (p.size(0) != 4) fail(ErrorCode::InvalidComplexData, "a crystallization has exactly four vertices");
  const CohomologyBasis basis = h1(p);
  if (basis.h1_dim != 1)
    fail(ErrorCode::WrongH1Dimension, "H^1 has dimension " + std::to_string(basis.h1_dim) + ", expected 1");

  cert.complex_hash = io::hash_hex(p);
  cert.f3 = p.size(3);
  cert.bound_met = cert.f3 == cert.bound;
  cert.bound_respected = cert.f3 >= cert.bound;

  const ClassSpectrum spec = class_spectrum(p, basis.representatives[0], opts);
  cert.class_size = spec.count;
  cert.class_mean_chi = spec.mean_chi;
  cert.witness = spec.witness_max;
  cert.witness_chi = spec.max_chi;
  cert.witness_at_least_mean = Rational(spec.max_chi) >= spec.mean_chi;
  cert.every_surface_nonorientable = spec.every_surface_has_nonorientable;
  cert.sphere_component_present = spec.any_sphere_component;
  cert.nonorientable_chis = spec.nonorientable_chis;
  cert.bredon_wood_ok = true;
  for (long long chi : cert.nonorientable_chis)
    if (!bredon_wood_contains(cert.q, cert.r, chi)) cert.bredon_wood_ok = false;

  const bool mean_matches = spec.mean_chi == average_closed3(p.f_vector());
  cert.checks_pass = cert.bound_respected && mean_matches && cert.witness_at_least_mean &&
                     cert.every_surface_nonorientable && !cert.sphere_component_present && cert.bredon_wood_ok;
  return cert;
}

}  // namespace dnsurf

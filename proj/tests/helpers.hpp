#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dnsurf/cochain.hpp"
#include "dnsurf/generators.hpp"
#include "dnsurf/poset.hpp"

namespace testutil {

// Runs fn and reports whether it threw an Error with exactly this code.
template <typename Fn>
bool throws_code(Fn&& fn, dnsurf::ErrorCode code) {
  try {
    fn();
  } catch (const dnsurf::Error& e) {
    return e.code() == code;
  } catch (...) {
    return false;
  }
  return false;
}

// Cochain from a 0/1 string, index i = character i.
inline dnsurf::Cochain cochain_of(const dnsurf::FacePoset& p, int dim, const std::string& bits) {
  dnsurf::Cochain c(p, dim);
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i] == '1') c.set(static_cast<int>(i), true);
  return c;
}

// Dense GF(2) rank by plain row elimination. Independent of the packed
// bit-matrix code under test.
inline int dense_rank(std::vector<std::vector<int>> rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(c)]) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || !rows[static_cast<size_t>(r)][static_cast<size_t>(c)]) continue;
      for (int j = 0; j < cols; ++j)
        rows[static_cast<size_t>(r)][static_cast<size_t>(j)] ^=
            rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
    }
    ++rank;
  }
  return rank;
}

// Dense coboundary matrices read straight off the face tuples.
inline std::vector<std::vector<int>> dense_delta0(const dnsurf::FacePoset& p) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(p.size(0)),
                                     std::vector<int>(static_cast<size_t>(p.size(1)), 0));
  for (dnsurf::FaceId e = 0; e < p.size(1); ++e)
    for (dnsurf::FaceId v : p.face(1, e).boundary)
      rows[static_cast<size_t>(p.face(0, v).vertices[0])][static_cast<size_t>(e)] ^= 1;
  return rows;
}

inline std::vector<std::vector<int>> dense_delta1(const dnsurf::FacePoset& p) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(p.size(1)),
                                     std::vector<int>(static_cast<size_t>(p.size(2)), 0));
  for (dnsurf::FaceId t = 0; t < p.size(2); ++t)
    for (dnsurf::FaceId e : p.face(2, t).boundary)
      rows[static_cast<size_t>(e)][static_cast<size_t>(t)] ^= 1;
  return rows;
}

// 7-vertex 2-neighborly torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
inline dnsurf::FacePoset seven_vertex_torus() {
  std::vector<std::vector<dnsurf::FaceId>> facets;
  for (int i = 0; i < 7; ++i) {
    std::vector<dnsurf::FaceId> a{static_cast<dnsurf::FaceId>(i),
                                  static_cast<dnsurf::FaceId>((i + 1) % 7),
                                  static_cast<dnsurf::FaceId>((i + 3) % 7)};
    std::vector<dnsurf::FaceId> b{static_cast<dnsurf::FaceId>(i),
                                  static_cast<dnsurf::FaceId>((i + 2) % 7),
                                  static_cast<dnsurf::FaceId>((i + 3) % 7)};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    facets.push_back(a);
    facets.push_back(b);
  }
  return dnsurf::FacePoset::from_facets(7, facets);
}

// Rebuilds a closed dimension-3 complex with its facets renumbered by a random
// permutation. The result is isomorphic but generally numbered differently.
inline dnsurf::FacePoset relabel_facets(const dnsurf::FacePoset& p, std::mt19937_64& rng) {
  dnsurf::GluingSpec spec = dnsurf::gluing_of(p);
  std::vector<int> pi(static_cast<size_t>(spec.n_facets));
  for (size_t t = 0; t < pi.size(); ++t) pi[t] = static_cast<int>(t);
  std::shuffle(pi.begin(), pi.end(), rng);
  dnsurf::GluingSpec out;
  out.n_facets = spec.n_facets;
  out.gluings.resize(static_cast<size_t>(spec.n_facets));
  for (int t = 0; t < spec.n_facets; ++t)
    for (int i = 0; i < 4; ++i) {
      auto g = spec.gluings[static_cast<size_t>(t)][static_cast<size_t>(i)];
      if (g) g->target = pi[static_cast<size_t>(g->target)];
      out.gluings[static_cast<size_t>(pi[static_cast<size_t>(t)])][static_cast<size_t>(i)] = g;
    }
  return dnsurf::build_complex(out);
}

// Suspension: two cone points over every facet of a 2-complex.
inline dnsurf::FacePoset suspension_of_surface(const dnsurf::FacePoset& s) {
  const auto n = static_cast<dnsurf::FaceId>(s.size(0));
  std::vector<std::vector<dnsurf::FaceId>> facets;
  for (dnsurf::FaceId t = 0; t < s.size(2); ++t) {
    for (int apex = 0; apex < 2; ++apex) {
      std::vector<dnsurf::FaceId> f = s.face(2, t).vertices;
      f.push_back(static_cast<dnsurf::FaceId>(n + apex));
      std::sort(f.begin(), f.end());
      facets.push_back(std::move(f));
    }
  }
  return dnsurf::FacePoset::from_facets(static_cast<int>(n) + 2, facets);
}

}  // namespace testutil

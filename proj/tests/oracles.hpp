#pragma once

// Test-only generators and independent oracles. Nothing here calls the code
// path it is used to check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "wehrhart/exact.hpp"
#include "wehrhart/polytope.hpp"

namespace wehrhart::testing {

inline LaurentPoly y() { return LaurentPoly::var(); }
inline LaurentPoly c(std::int64_t v) { return LaurentPoly(Rational(v)); }

/// Random Laurent polynomial with small integer (or rational) coefficients.
inline LaurentPoly random_laurent(std::mt19937& rng, int min_exp, int max_exp, bool rational = false) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> cs;
  for (int e = min_exp; e <= max_exp; ++e) cs.emplace_back(rational ? Rational(coef(rng), den(rng)) : Rational(coef(rng)));
  return LaurentPoly::from_coefficients(cs, min_exp);
}

/// Binomial coefficient C(n, k) as a polynomial in z when n = z + a: C(z + a, k).
inline LaurentPoly binomial_in_z(std::int64_t a, int k) {
  LaurentPoly out = 1;
  for (int i = 0; i < k; ++i) out *= (LaurentPoly::var() + c(a - i)) * LaurentPoly(Rational(1, i + 1));
  return out;
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Every vertex set cut out by a subset of facets, by brute force over all
/// 2^m facet subsets.
inline std::set<FaceId> faces_by_facet_subsets(const LatticePolytope& p, const std::vector<HalfSpace>& facets) {
  std::set<FaceId> out;
  const std::size_t m = facets.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    FaceId id;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      bool on_all = true;
      for (std::size_t i = 0; i < m && on_all; ++i) {
        if ((mask >> i) & 1U) on_all = facets[i].value(p.vertices()[v]) == facets[i].offset;
      }
      if (on_all) id.push_back(static_cast<int>(v));
    }
    if (!id.empty()) out.insert(id);
  }
  return out;
}

/// Classical h-vector of a simple polytope from the f-vector of its simplicial
/// polar: h_i = sum_{k<=i} (-1)^{i-k} C(n-k, i-k) f*_{k-1}, where
/// f*_{k-1} = f_{n-k}(P) and f*_{-1} = 1.
inline std::vector<std::int64_t> h_vector_binomial(const std::vector<std::size_t>& f_of_p) {
  const auto n = static_cast<std::int64_t>(f_of_p.size()) - 1;
  auto f_star = [&](std::int64_t k_minus_1) -> std::int64_t {
    return static_cast<std::int64_t>(f_of_p[static_cast<std::size_t>(n - 1 - k_minus_1)]);
  };
  std::vector<std::int64_t> h(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    std::int64_t s = 0;
    for (std::int64_t k = 0; k <= i; ++k) {
      const std::int64_t sign = ((i - k) % 2 == 0) ? 1 : -1;
      s += sign * binom(n - k, i - k) * f_star(k - 1);
    }
    h[static_cast<std::size_t>(i)] = s;
  }
  return h;
}

/// Lattice points of l * cross(d): sum_k 2^k C(d,k) C(l,k).
inline std::int64_t cross_polytope_count(std::int64_t d, std::int64_t ell) {
  std::int64_t s = 0;
  for (std::int64_t k = 0; k <= d; ++k) s += (std::int64_t{1} << k) * binom(d, k) * binom(ell, k);
  return s;
}

/// Random full-dimensional lattice polytope with coordinates in [-3, 3].
inline LatticePolytope random_polytope(std::mt19937& rng, std::size_t dim, int index) {
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> count(static_cast<int>(dim) + 1, static_cast<int>(dim) + 5);
  while (true) {
    std::vector<Point> pts(static_cast<std::size_t>(count(rng)), Point(dim));
    for (auto& p : pts) {
      for (auto& x : p) x = coord(rng);
    }
    try {
      return convex_hull("random_" + std::to_string(index), dim, pts);
    } catch (const Error&) {
      // not full-dimensional; draw again
    }
  }
}

/// The corpus used across suites.
inline std::vector<LatticePolytope> corpus() {
  std::vector<LatticePolytope> out;
  for (std::size_t d = 1; d <= 4; ++d) out.push_back(standard_polytope(PolytopeKind::Simplex, d));
  for (std::size_t d = 1; d <= 4; ++d) out.push_back(standard_polytope(PolytopeKind::Cube, d));
  for (std::size_t d = 2; d <= 4; ++d) out.push_back(standard_polytope(PolytopeKind::Cross, d));
  out.push_back(standard_polytope(PolytopeKind::PyramidOverSquare, 3));
  return out;
}

}  // namespace wehrhart::testing

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "wehrhart/stanley.hpp"

using namespace wehrhart;
using wehrhart::testing::c;

namespace {

LaurentPoly t() { return LaurentPoly::var(); }

FaceLattice lattice_of(PolytopeKind kind, std::size_t n) { return face_lattice(standard_polytope(kind, n)); }

/// A convex lattice polygon with m = 3..8 vertices.
LatticePolytope polygon(int m) {
  static const std::vector<std::vector<Point>> shapes = {
      {{0, 0}, {1, 0}, {0, 1}},
      {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
      {{0, 0}, {2, 0}, {3, 1}, {1, 2}, {0, 1}},
      {{1, 0}, {2, 0}, {3, 1}, {2, 2}, {1, 2}, {0, 1}},
      {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {0, 2}, {0, 1}},
      {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}},
  };
  return LatticePolytope(std::to_string(m) + "-gon", 2, shapes.at(static_cast<std::size_t>(m - 3)));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Inconsistent;
}

}  // namespace

TEST(GPolynomial, Examples) {
  EXPECT_EQ(g_polynomial(FacePoset({-1}, {{true}})), c(1));
  EXPECT_EQ(g_polynomial(FacePoset::of_polytope(face_lattice(LatticePolytope("segment", 1, {{0}, {1}})))), c(1));
  EXPECT_EQ(g_polynomial(FacePoset::of_polytope(face_lattice(polygon(6)))), c(1) + c(3) * t());
}

TEST(GPolynomial, Polygons) {
  for (int m = 3; m <= 8; ++m) {
    const auto lattice = face_lattice(polygon(m));
    ASSERT_EQ(lattice.f_vector()[0], static_cast<std::size_t>(m));
    const auto poset = FacePoset::of_polytope(lattice);
    EXPECT_EQ(g_polynomial(poset), c(1) + c(m - 3) * t()) << m;
    EXPECT_EQ(h_polynomial(poset), t().pow(2) + c(m - 2) * t() + c(1)) << m;
  }
}

TEST(GPolynomial, SimplicesHaveTrivialG) {
  for (std::size_t d = 1; d <= 4; ++d) {
    EXPECT_EQ(g_polynomial(FacePoset::of_polytope(lattice_of(PolytopeKind::Simplex, d))), c(1)) << d;
  }
}

TEST(GPolynomial, ConstantTermOneAndDegreeBound) {
  std::mt19937 rng(37);
  auto polys = wehrhart::testing::corpus();
  for (int i = 0; i < 20; ++i) polys.push_back(wehrhart::testing::random_polytope(rng, 2 + i % 2, i));
  for (const auto& p : polys) {
    const auto lattice = face_lattice(p);
    const auto g = g_polynomial(FacePoset::of_polytope(lattice));
    EXPECT_EQ(g.coeff(0), 1) << p.name();
    EXPECT_LE(*g.max_exponent(), lattice.dim() / 2) << p.name();
    for (std::size_t q = 0; q < lattice.size(); ++q) {
      const auto gq = g_tilde(lattice, q);
      const int dual_dim = lattice.dim() - 1 - lattice.face(q).dim;
      EXPECT_EQ(gq.coeff(0), 1);
      EXPECT_LE(*gq.max_exponent(), std::max(dual_dim, 0) / 2);
    }
  }
}

TEST(FacePoset, ValidationErrors) {
  // Bottom must have dim -1.
  EXPECT_EQ(kind_of([] { FacePoset({0, 1}, {{true, true}, {false, true}}); }), ErrorKind::NotGraded);
  // Two incomparable maximal elements: no top.
  EXPECT_EQ(kind_of([] { FacePoset({-1, 0, 0}, {{true, true, true}, {false, true, false}, {false, false, true}}); }),
            ErrorKind::NotGraded);
  // A chain skipping a rank.
  EXPECT_EQ(kind_of([] { FacePoset({-1, 1}, {{true, true}, {false, true}}).check_graded(); }), ErrorKind::NotGraded);
  // Chain bottom < point < segment-top: graded but not Eulerian.
  const FacePoset chain({-1, 0, 1}, {{true, true, true}, {false, true, true}, {false, false, true}});
  EXPECT_NO_THROW(chain.check_graded());
  EXPECT_EQ(kind_of([&] { (void)g_polynomial(chain); }), ErrorKind::NotEulerian);
}

TEST(FacePoset, DualIntervalsAreEulerian) {
  for (const auto& p : wehrhart::testing::corpus()) {
    const auto lattice = face_lattice(p);
    FacePoset::of_polytope(lattice).check_eulerian();
    for (std::size_t q = 0; q < lattice.size(); ++q) {
      const auto dual = FacePoset::dual_interval(lattice, q);
      EXPECT_NO_THROW(dual.check_graded());
      EXPECT_NO_THROW(dual.check_eulerian());
      EXPECT_EQ(dual.rank_dim(), lattice.dim() - 1 - lattice.face(q).dim);
    }
  }
}

TEST(GTilde, Examples) {
  for (const auto& p : wehrhart::testing::corpus()) {
    const auto lattice = face_lattice(p);
    EXPECT_EQ(g_tilde(lattice, lattice.top()), c(1)) << p.name();
    if (is_simple(lattice)) {
      for (std::size_t q = 0; q < lattice.size(); ++q) EXPECT_EQ(g_tilde(lattice, q), c(1)) << p.name();
    }
  }
  const auto pyramid = lattice_of(PolytopeKind::PyramidOverSquare, 3);
  const std::size_t apex = pyramid.require({4});
  EXPECT_EQ(g_tilde(pyramid, apex), c(1) + t());
  for (std::size_t q = 0; q < pyramid.size(); ++q) {
    if (q != apex) EXPECT_EQ(g_tilde(pyramid, q), c(1)) << face_id_to_string(pyramid.face(q).id);
  }
  // Each octahedron vertex sees a square.
  const auto octa = lattice_of(PolytopeKind::Cross, 3);
  for (std::size_t q = 0; q < octa.size(); ++q) {
    EXPECT_EQ(g_tilde(octa, q), octa.face(q).dim == 0 ? c(1) + t() : c(1));
  }
}

TEST(IcWeightFunction, Examples) {
  const auto cube = lattice_of(PolytopeKind::Cube, 3);
  const auto f = ic_weight_function(cube);
  EXPECT_EQ(f.entries().size(), 27u);
  for (const auto& [id, w] : f.entries()) EXPECT_EQ(w, c(1));

  const auto pyramid = lattice_of(PolytopeKind::PyramidOverSquare, 3);
  const auto fp = ic_weight_function(pyramid);
  for (const auto& [id, w] : fp.entries()) EXPECT_EQ(w, id == FaceId{4} ? c(1) - LaurentPoly::var() : c(1));

  const auto fs = ic_weight_function(lattice_of(PolytopeKind::Simplex, 2));
  for (const auto& [id, w] : fs.entries()) EXPECT_EQ(w, c(1));
}

TEST(IcWeightFunction, TrivialOnSimplePolytopes) {
  std::mt19937 rng(41);
  for (int i = 0; i < 25; ++i) {
    const auto lattice = face_lattice(wehrhart::testing::random_polytope(rng, 3, i));
    if (!is_simple(lattice)) continue;
    const auto f = ic_weight_function(lattice);
    for (const auto& [id, w] : f.entries()) EXPECT_EQ(w, c(1));
  }
}

TEST(BuiltinWeights, Examples) {
  const auto sq = lattice_of(PolytopeKind::Cube, 2);
  const auto constant = builtin_weight_function({WeightKind::Constant, {}, {}, {}}, sq);
  EXPECT_EQ(constant.entries().size(), 9u);
  for (const auto& [id, w] : constant.entries()) EXPECT_EQ(w, c(1));

  const auto indicator = builtin_weight_function({WeightKind::Indicator, {0, 1}, {}, {}}, sq);
  int ones = 0;
  for (const auto& [id, w] : indicator.entries()) {
    if (id == FaceId{0, 1}) {
      EXPECT_EQ(w, c(1));
      ++ones;
    } else {
      EXPECT_TRUE(w.is_zero());
    }
  }
  EXPECT_EQ(ones, 1);

  WeightSpec boundary{WeightKind::Subcomplex, {}, {}, {}};
  for (const auto& f : sq.faces()) {
    if (f.dim < 2) boundary.faces.push_back(f.id);
  }
  const auto sub = builtin_weight_function(boundary, sq);
  for (const auto& f : sq.faces()) EXPECT_EQ(sub.at(f.id), f.dim < 2 ? c(1) : c(0));
}

TEST(BuiltinWeights, Errors) {
  const auto sq = lattice_of(PolytopeKind::Cube, 2);
  EXPECT_EQ(kind_of([&] { builtin_weight_function({WeightKind::Indicator, {0, 3}, {}, {}}, sq); }),
            ErrorKind::UnknownFace);
  // An edge without its endpoints is not a closed subcomplex.
  EXPECT_EQ(kind_of([&] { builtin_weight_function({WeightKind::Subcomplex, {}, {{0, 1}, {0}}, {}}, sq); }),
            ErrorKind::NotClosedSubcomplex);
  EXPECT_EQ(kind_of([&] { builtin_weight_function({WeightKind::Table, {}, {}, {{{7}, c(1)}}}, sq); }),
            ErrorKind::UnknownFace);
}

TEST(BuiltinWeights, TableDefaultsToZeroWithWarnings) {
  const auto sq = lattice_of(PolytopeKind::Cube, 2);
  std::vector<std::string> warnings;
  const LaurentPoly w = c(2) - LaurentPoly::monomial(1, -1);
  const auto f = builtin_weight_function({WeightKind::Table, {}, {}, {{{0, 1}, w}, {{3}, c(5)}}}, sq, &warnings);
  EXPECT_EQ(f.at({0, 1}), w);
  EXPECT_EQ(f.at({3}), c(5));
  EXPECT_TRUE(f.at({0}).is_zero());
  EXPECT_EQ(warnings.size(), 7u);
}

TEST(ToricH, Examples) {
  EXPECT_EQ(toric_h(lattice_of(PolytopeKind::Cube, 3)), c(1) + c(3) * t() + c(3) * t().pow(2) + t().pow(3));
  EXPECT_EQ(toric_h(lattice_of(PolytopeKind::PyramidOverSquare, 3)),
            c(1) + c(2) * t() + c(2) * t().pow(2) + t().pow(3));
  EXPECT_EQ(toric_h(lattice_of(PolytopeKind::Simplex, 2)), c(1) + t() + t().pow(2));
}

TEST(ToricH, PalindromicEverywhere) {
  std::mt19937 rng(43);
  auto polys = wehrhart::testing::corpus();
  for (int i = 0; i < 20; ++i) polys.push_back(wehrhart::testing::random_polytope(rng, 3, i));
  for (const auto& p : polys) {
    const auto lattice = face_lattice(p);
    const auto h = toric_h(lattice);
    const int n = lattice.dim();
    EXPECT_EQ(*h.max_exponent(), n) << p.name();
    for (int i = 0; i <= n; ++i) EXPECT_EQ(h.coeff(i), h.coeff(n - i)) << p.name();
  }
}

TEST(ToricH, AgreesWithClassicalHOnSimplePolytopes) {
  std::mt19937 rng(47);
  auto polys = wehrhart::testing::corpus();
  for (int i = 0; i < 30; ++i) polys.push_back(wehrhart::testing::random_polytope(rng, 3, i));
  int simple_seen = 0;
  for (const auto& p : polys) {
    const auto lattice = face_lattice(p);
    if (!is_simple(lattice)) continue;
    ++simple_seen;
    const auto oracle = wehrhart::testing::h_vector_binomial(lattice.f_vector());
    const auto h = toric_h(lattice);
    for (std::size_t i = 0; i < oracle.size(); ++i) EXPECT_EQ(h.coeff(static_cast<int>(i)), oracle[i]) << p.name();
    EXPECT_EQ(h_from_f_vector(lattice.f_vector()), h);
  }
  EXPECT_GE(simple_seen, 8);
}

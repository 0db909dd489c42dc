#pragma once

// Classical and weighted Ehrhart polynomials, the reciprocity / purity /
// constant-term / oracle checks, and the intersection cohomology invariants
// derived from the IC weight function.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wehrhart/error.hpp"
#include "wehrhart/exact.hpp"
#include "wehrhart/lattice_count.hpp"
#include "wehrhart/polytope.hpp"
#include "wehrhart/stanley.hpp"

namespace wehrhart {

namespace detail {

/// (sign * (1 + y))^d.
inline LaurentPoly one_plus_y_power(int sign, int d) {
  return linear_power(sign, sign, static_cast<unsigned>(d));
}

inline void require_weights(const FaceLattice& lattice, const WeightFunction& f) {
  if (!f.matches(lattice)) {
    throw Error(ErrorKind::UnknownFace, "weight function domain differs from the faces of " + lattice.polytope().name());
  }
}

}  // namespace detail

/// Ehr_Q(z) as a polynomial in z, interpolated from |lQ ∩ M| at l = 1..dim Q + 1.
/// Ehr_Q(0) = 1 is checked afterwards, never used as a node.
inline LaurentPoly ehrhart_z_polynomial(const Counter& counter, std::size_t q) {
  const int d = counter.lattice().face(q).dim;
  std::vector<std::pair<std::int64_t, Rational>> samples;
  for (std::int64_t ell = 1; ell <= d + 1; ++ell) samples.emplace_back(ell, Rational(counter.closed(q, ell)));
  LaurentPoly ehr = interpolate_univariate(samples, static_cast<std::size_t>(d));
  if (ehr.coeff(0) != 1) {
    throw Error(ErrorKind::Inconsistent, "Ehrhart polynomial of face " + face_id_to_string(counter.lattice().face(q).id) +
                                             " has constant term " + detail::rational_to_string(ehr.coeff(0)));
  }
  return ehr;
}

inline WeightedEhrhartPoly classical_ehrhart(const Counter& counter, std::size_t q) {
  return WeightedEhrhartPoly::from_z_polynomial(ehrhart_z_polynomial(counter, q));
}

/// (-1)^{dim Q} Ehr_Q(-z); counts Relint(lQ) ∩ M for l >= 1.
inline WeightedEhrhartPoly relint_ehrhart(const Counter& counter, std::size_t q) {
  const int d = counter.lattice().face(q).dim;
  const LaurentPoly reflected = ehrhart_z_polynomial(counter, q).substitute_monomial(-1, 1);
  return WeightedEhrhartPoly::from_z_polynomial(d % 2 == 0 ? reflected : -reflected);
}

/// E_{P,f}(z, y) = sum_Q f_Q(y) (1+y)^{dim Q} (-1)^{dim Q} Ehr_Q(-z).
/// Summed in lattice face order so the result is deterministic.
inline WeightedEhrhartPoly weighted_ehrhart(const Counter& counter, const WeightFunction& f) {
  const auto& lattice = counter.lattice();
  detail::require_weights(lattice, f);
  WeightedEhrhartPoly total;
  for (std::size_t q = 0; q < lattice.size(); ++q) {
    const auto& face = lattice.face(q);
    const LaurentPoly& weight = f.at(face.id);
    if (weight.is_zero()) continue;
    total += relint_ehrhart(counter, q) * (weight * detail::one_plus_y_power(1, face.dim));
  }
  return total;
}

/// sum_Q f_Q(y) (1+y)^{dim Q} |Relint(lQ) ∩ M|, straight from the counts.
inline LaurentPoly weighted_count_direct(const Counter& counter, const WeightFunction& f, std::int64_t ell) {
  const auto& lattice = counter.lattice();
  detail::require_weights(lattice, f);
  LaurentPoly total;
  for (std::size_t q = 0; q < lattice.size(); ++q) {
    const auto& face = lattice.face(q);
    const LaurentPoly& weight = f.at(face.id);
    if (weight.is_zero()) continue;
    total += weight * detail::one_plus_y_power(1, face.dim) * LaurentPoly(Rational(counter.relint(q, ell)));
  }
  return total;
}

/// sum_Q f_Q(y) (-1-y)^{dim Q} |lQ ∩ M|, the value E_{P,f}(-l, y) must take.
inline LaurentPoly reciprocity_rhs(const Counter& counter, const WeightFunction& f, std::int64_t ell) {
  const auto& lattice = counter.lattice();
  detail::require_weights(lattice, f);
  LaurentPoly total;
  for (std::size_t q = 0; q < lattice.size(); ++q) {
    const auto& face = lattice.face(q);
    const LaurentPoly& weight = f.at(face.id);
    if (weight.is_zero()) continue;
    total += weight * detail::one_plus_y_power(-1, face.dim) * LaurentPoly(Rational(counter.closed(q, ell)));
  }
  return total;
}

/// E_{P,f}(0, y) = sum_Q f_Q(y) (-1-y)^{dim Q}.
inline LaurentPoly hodge_polynomial(const FaceLattice& lattice, const WeightFunction& f) {
  detail::require_weights(lattice, f);
  LaurentPoly total;
  for (const auto& face : lattice.faces()) {
    total += f.at(face.id) * detail::one_plus_y_power(-1, face.dim);
  }
  return total;
}

enum class Identity { Reciprocity, Purity, ConstantTerm, DehnSommerville, Oracle };

inline std::string_view to_string(Identity identity) {
  switch (identity) {
    case Identity::Reciprocity: return "reciprocity";
    case Identity::Purity: return "purity";
    case Identity::ConstantTerm: return "constant-term";
    case Identity::DehnSommerville: return "dehn-sommerville";
    case Identity::Oracle: return "oracle";
  }
  return "unknown";
}

inline std::optional<Identity> parse_identity(std::string_view s) {
  for (auto id : {Identity::Reciprocity, Identity::Purity, Identity::ConstantTerm, Identity::DehnSommerville,
                  Identity::Oracle}) {
    if (s == to_string(id)) return id;
  }
  if (s == "constant_term") return Identity::ConstantTerm;
  if (s == "dehn_sommerville") return Identity::DehnSommerville;
  return std::nullopt;
}

/// One compared pair. For Ehrhart identities `index` is the dilation l; for
/// the Dehn-Sommerville check it numbers the comparison.
struct CheckRow {
  std::int64_t index = 0;
  LaurentPoly lhs;
  LaurentPoly rhs;

  LaurentPoly difference() const { return lhs - rhs; }
};

struct CheckReport {
  Identity identity = Identity::Oracle;
  std::vector<CheckRow> rows;
  /// Named polynomials reported alongside, e.g. the h-polynomial.
  std::vector<std::pair<std::string, LaurentPoly>> details;

  bool passed() const {
    for (const auto& r : rows) {
      if (!(r.lhs == r.rhs)) return false;
    }
    return true;
  }

  std::optional<std::pair<std::int64_t, LaurentPoly>> first_discrepancy() const {
    for (const auto& r : rows) {
      if (!(r.lhs == r.rhs)) return std::make_pair(r.index, r.difference());
    }
    return std::nullopt;
  }
};

namespace detail {

inline void require_lmax(std::int64_t ell_max) {
  if (ell_max < 1) throw Error(ErrorKind::InvalidArgument, "lmax must be at least 1");
}

}  // namespace detail

/// E(-l, y) against sum_Q f_Q (-1-y)^{dim Q} |lQ ∩ M| for l = 1..ell_max.
/// Holds for every weight function.
inline CheckReport check_reciprocity(const Counter& counter, const WeightFunction& f, std::int64_t ell_max) {
  detail::require_lmax(ell_max);
  const auto e = weighted_ehrhart(counter, f);
  CheckReport report{Identity::Reciprocity, {}, {}};
  for (std::int64_t ell = 1; ell <= ell_max; ++ell) {
    report.rows.push_back({ell, e.evaluate(-ell), reciprocity_rhs(counter, f, ell)});
  }
  return report;
}

/// E(-l, y) against (-y)^n E(l, 1/y) for l = 0..ell_max. Expected to hold for
/// the IC weights; other weights may fail.
inline CheckReport check_purity(const Counter& counter, const WeightFunction& f, std::int64_t ell_max) {
  detail::require_lmax(ell_max);
  const auto e = weighted_ehrhart(counter, f);
  const int n = counter.lattice().dim();
  const LaurentPoly minus_y_n = LaurentPoly::monomial(n % 2 == 0 ? 1 : -1, n);
  CheckReport report{Identity::Purity, {}, {}};
  for (std::int64_t ell = 0; ell <= ell_max; ++ell) {
    report.rows.push_back({ell, e.evaluate(-ell), minus_y_n * substitute_reciprocal(e.evaluate(ell))});
  }
  return report;
}

/// E(0, y) from the assembled polynomial against the direct constant-term sum.
inline CheckReport check_constant_term(const Counter& counter, const WeightFunction& f) {
  const auto e = weighted_ehrhart(counter, f);
  return CheckReport{Identity::ConstantTerm, {{0, e.evaluate(0), hodge_polynomial(counter.lattice(), f)}}, {}};
}

/// E(l, y) from the assembled polynomial against the direct weighted count.
inline CheckReport check_oracle(const Counter& counter, const WeightFunction& f, std::int64_t ell_max) {
  detail::require_lmax(ell_max);
  const auto e = weighted_ehrhart(counter, f);
  CheckReport report{Identity::Oracle, {}, {}};
  for (std::int64_t ell = 1; ell <= ell_max; ++ell) {
    report.rows.push_back({ell, e.evaluate(ell), weighted_count_direct(counter, f, ell)});
  }
  return report;
}

/// For simple P: row 0 compares the f-vector h-polynomial with its reversal
/// s^n h(1/s), row 1 compares it with the toric h-polynomial.
inline CheckReport dehn_sommerville_check(const FaceLattice& lattice) {
  if (!is_simple(lattice)) throw Error(ErrorKind::NotSimple, lattice.polytope().name() + " is not simple");
  const LaurentPoly h = h_from_f_vector(lattice.f_vector());
  const LaurentPoly reversed = substitute_reciprocal(h).shifted(lattice.dim());
  CheckReport report{Identity::DehnSommerville, {{0, h, reversed}, {1, h, toric_h(lattice)}}, {}};
  report.details.emplace_back("h", h);
  return report;
}

/// I chi_y = E_{P,g~}(0, y).
inline LaurentPoly ic_chi(const FaceLattice& lattice) {
  return hodge_polynomial(lattice, ic_weight_function(lattice));
}

/// Intersection cohomology signature, I chi_y at y = 1.
inline Rational ic_signature(const FaceLattice& lattice) { return ic_chi(lattice).evaluate(1); }

/// I chi_y at y = -t^2: the intersection cohomology Poincaré polynomial.
inline LaurentPoly ih_poincare(const FaceLattice& lattice) {
  const LaurentPoly p = ic_chi(lattice).substitute_monomial(-1, 2);
  for (const auto& [e, c] : p.terms()) {
    if (denominator(c) != 1 || c < 0 || e < 0) {
      throw Error(ErrorKind::NonIntegralBetti, "coefficient " + detail::rational_to_string(c) + " of t^" +
                                                   std::to_string(e) + " is not a Betti number");
    }
  }
  return p;
}

}  // namespace wehrhart

#pragma once

// Stanley's g- and h-polynomials of Eulerian face posets, the dual-interval
// g-polynomials g~_Q, weight functions on faces, and the toric h-polynomial.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wehrhart/error.hpp"
#include "wehrhart/exact.hpp"
#include "wehrhart/polytope.hpp"

namespace wehrhart {

/// Finite poset with a bottom element of dim -1 and a top element, graded by
/// dim + 1.
class FacePoset {
 public:
  /// leq[a][b] is a <= b. Rejects posets without a unique bottom of dim -1
  /// and a unique top.
  FacePoset(std::vector<int> dims, std::vector<std::vector<bool>> leq) : dims_(std::move(dims)), leq_(std::move(leq)) {
    const std::size_t n = dims_.size();
    if (n == 0 || leq_.size() != n) throw Error(ErrorKind::NotGraded, "empty or malformed poset");
    std::optional<std::size_t> bottom;
    std::optional<std::size_t> top;
    for (std::size_t a = 0; a < n; ++a) {
      bool is_bottom = true;
      bool is_top = true;
      for (std::size_t b = 0; b < n; ++b) {
        is_bottom = is_bottom && leq_[a][b];
        is_top = is_top && leq_[b][a];
      }
      if (is_bottom) bottom = a;
      if (is_top) top = a;
    }
    if (!bottom || !top) throw Error(ErrorKind::NotGraded, "poset lacks a bottom or top element");
    if (dims_[*bottom] != -1) throw Error(ErrorKind::NotGraded, "bottom element must have dim -1");
    bottom_ = *bottom;
    top_ = *top;
  }

  /// The face poset of P with the empty face prepended as element 0; element
  /// i + 1 is lattice face i.
  static FacePoset of_polytope(const FaceLattice& lattice) {
    const std::size_t n = lattice.size() + 1;
    std::vector<int> dims(n, -1);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t b = 0; b < n; ++b) leq[0][b] = true;
    for (std::size_t a = 0; a < lattice.size(); ++a) {
      dims[a + 1] = lattice.face(a).dim;
      for (std::size_t b = 0; b < lattice.size(); ++b) leq[a + 1][b + 1] = lattice.leq(a, b);
    }
    return FacePoset(std::move(dims), std::move(leq));
  }

  /// Order dual of the interval [Q, P], regraded so that R gets dim
  /// n - 1 - dim R; P becomes the bottom (dim -1) and Q the top. This is the
  /// face poset of the polar face Q°.
  static FacePoset dual_interval(const FaceLattice& lattice, std::size_t q) {
    std::vector<std::size_t> members;
    for (std::size_t r = 0; r < lattice.size(); ++r) {
      if (lattice.leq(q, r)) members.push_back(r);
    }
    const std::size_t m = members.size();
    std::vector<int> dims(m);
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a) {
      dims[a] = lattice.dim() - 1 - lattice.face(members[a]).dim;
      for (std::size_t b = 0; b < m; ++b) leq[a][b] = lattice.leq(members[b], members[a]);
    }
    return FacePoset(std::move(dims), std::move(leq));
  }

  std::size_t size() const noexcept { return dims_.size(); }
  int dim(std::size_t a) const { return dims_.at(a); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  /// Dimension of the top element.
  int rank_dim() const { return dims_[top_]; }

  /// Strict relations increase dim, and covers increase it by exactly one.
  void check_graded() const {
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!less(a, b)) continue;
        if (dims_[a] >= dims_[b]) throw Error(ErrorKind::NotGraded, "a strict relation does not increase dim");
        bool cover = true;
        for (std::size_t c = 0; c < n && cover; ++c) cover = !(less(a, c) && less(c, b));
        if (cover && dims_[b] != dims_[a] + 1) throw Error(ErrorKind::NotGraded, "a cover relation skips a rank");
      }
    }
  }

  /// Every nontrivial interval has as many even- as odd-dimensional elements.
  void check_eulerian() const {
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!less(a, b)) continue;
        long sum = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq_[a][c] && leq_[c][b]) sum += (dims_[c] % 2 == 0) ? 1 : -1;
        }
        if (sum != 0) throw Error(ErrorKind::NotEulerian, "interval with nonzero Euler sum " + std::to_string(sum));
      }
    }
  }

 private:
  std::vector<int> dims_;
  std::vector<std::vector<bool>> leq_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

namespace detail {

/// g of every lower interval [bottom, x], x ranging over the poset:
///   g(bottom) = 1,
///   h(x) = sum_{F < x} g(F) (t-1)^{dim x - 1 - dim F},
///   g(x) = h_0 + sum_{i=1}^{floor(dim x / 2)} (h_i - h_{i-1}) t^i.
inline std::vector<LaurentPoly> g_all(const FacePoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return poset.dim(a) < poset.dim(b); });

  const LaurentPoly t_minus_1 = LaurentPoly::var() - LaurentPoly(1);
  std::vector<LaurentPoly> g(n);
  for (std::size_t x : order) {
    if (x == poset.bottom()) {
      g[x] = 1;
      continue;
    }
    const int d = poset.dim(x);
    LaurentPoly h;
    for (std::size_t f = 0; f < n; ++f) {
      if (!poset.less(f, x)) continue;
      h += g[f] * t_minus_1.pow(static_cast<unsigned>(d - 1 - poset.dim(f)));
    }
    LaurentPoly out = LaurentPoly(h.coeff(0));
    for (int i = 1; i <= d / 2; ++i) out += LaurentPoly::monomial(h.coeff(i) - h.coeff(i - 1), i);
    g[x] = std::move(out);
  }
  return g;
}

}  // namespace detail

/// Stanley's g-polynomial of the poset (that is, of its top element).
inline LaurentPoly g_polynomial(const FacePoset& poset, bool validate = true) {
  if (validate) {
    poset.check_graded();
    poset.check_eulerian();
  }
  return detail::g_all(poset)[poset.top()];
}

/// Stanley's toric h-polynomial of the poset: sum over F < top of
/// g(F) (t-1)^{d-1-dim F}.
inline LaurentPoly h_polynomial(const FacePoset& poset, bool validate = true) {
  if (validate) {
    poset.check_graded();
    poset.check_eulerian();
  }
  const auto g = detail::g_all(poset);
  const LaurentPoly t_minus_1 = LaurentPoly::var() - LaurentPoly(1);
  const int d = poset.rank_dim();
  LaurentPoly h;
  for (std::size_t f = 0; f < poset.size(); ++f) {
    if (poset.less(f, poset.top())) h += g[f] * t_minus_1.pow(static_cast<unsigned>(d - 1 - poset.dim(f)));
  }
  return h;
}

/// g~_Q(t) = g_{Q°}(t), from the order dual of [Q, P]. g~_P = 1.
inline LaurentPoly g_tilde(const FaceLattice& lattice, std::size_t q, bool validate = true) {
  return g_polynomial(FacePoset::dual_interval(lattice, q), validate);
}

/// g~_Q for every face, in lattice order.
inline std::vector<LaurentPoly> g_tilde_table(const FaceLattice& lattice, bool validate = true) {
  std::vector<LaurentPoly> out;
  out.reserve(lattice.size());
  for (std::size_t q = 0; q < lattice.size(); ++q) out.push_back(g_tilde(lattice, q, validate));
  return out;
}

/// A Laurent polynomial f_Q(y) on every nonempty face Q, keyed by face id.
class WeightFunction {
 public:
  /// The zero weight on every face of the lattice.
  explicit WeightFunction(const FaceLattice& lattice) {
    for (const auto& f : lattice.faces()) entries_.emplace(f.id, LaurentPoly());
  }

  const std::map<FaceId, LaurentPoly>& entries() const noexcept { return entries_; }

  const LaurentPoly& at(const FaceId& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw Error(ErrorKind::UnknownFace, face_id_to_string(id));
    return it->second;
  }
  void set(const FaceId& id, LaurentPoly value) {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw Error(ErrorKind::UnknownFace, face_id_to_string(id));
    it->second = std::move(value);
  }

  /// Same face set as the lattice.
  bool matches(const FaceLattice& lattice) const {
    if (entries_.size() != lattice.size()) return false;
    for (const auto& f : lattice.faces()) {
      if (!entries_.contains(f.id)) return false;
    }
    return true;
  }

  friend WeightFunction operator+(WeightFunction a, const WeightFunction& b) {
    for (auto& [id, value] : a.entries_) value += b.at(id);
    return a;
  }
  friend WeightFunction operator*(WeightFunction a, const LaurentPoly& scale) {
    for (auto& [id, value] : a.entries_) value *= scale;
    return a;
  }
  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::map<FaceId, LaurentPoly> entries_;
};

/// f_Q(y) = g~_Q(-y), the stalk weights of the intersection cohomology
/// complex. The origin-interior hypothesis is not required here.
inline WeightFunction ic_weight_function(const FaceLattice& lattice) {
  WeightFunction f(lattice);
  const auto table = g_tilde_table(lattice);
  for (std::size_t q = 0; q < lattice.size(); ++q) f.set(lattice.face(q).id, table[q].substitute_monomial(-1, 1));
  return f;
}

enum class WeightKind { Constant, Ic, Indicator, Subcomplex, Table };

struct WeightSpec {
  WeightKind kind = WeightKind::Constant;
  FaceId face;                                          // Indicator
  std::vector<FaceId> faces;                            // Subcomplex
  std::vector<std::pair<FaceId, LaurentPoly>> entries;  // Table
};

/// Materializes a weight spec. Table entries missing from the spec default to
/// zero, and each such face is reported in `warnings` when given.
inline WeightFunction builtin_weight_function(const WeightSpec& spec, const FaceLattice& lattice,
                                              std::vector<std::string>* warnings = nullptr) {
  WeightFunction f(lattice);
  switch (spec.kind) {
    case WeightKind::Constant:
      for (const auto& q : lattice.faces()) f.set(q.id, 1);
      break;
    case WeightKind::Ic:
      return ic_weight_function(lattice);
    case WeightKind::Indicator:
      f.set(lattice.face(lattice.require(spec.face)).id, 1);
      break;
    case WeightKind::Subcomplex: {
      std::vector<bool> listed(lattice.size(), false);
      for (const auto& id : spec.faces) listed[lattice.require(id)] = true;
      for (std::size_t a = 0; a < lattice.size(); ++a) {
        if (!listed[a]) continue;
        for (std::size_t b = 0; b < lattice.size(); ++b) {
          if (!listed[b] && lattice.leq(b, a)) {
            throw Error(ErrorKind::NotClosedSubcomplex, face_id_to_string(lattice.face(b).id) + " is a face of " +
                                                            face_id_to_string(lattice.face(a).id) +
                                                            " but is not listed");
          }
        }
        f.set(lattice.face(a).id, 1);
      }
      break;
    }
    case WeightKind::Table: {
      std::vector<bool> listed(lattice.size(), false);
      for (const auto& [id, value] : spec.entries) {
        const std::size_t q = lattice.require(id);
        listed[q] = true;
        f.set(lattice.face(q).id, value);
      }
      if (warnings != nullptr) {
        for (std::size_t q = 0; q < lattice.size(); ++q) {
          if (!listed[q]) warnings->push_back("weight of face " + face_id_to_string(lattice.face(q).id) + " defaults to 0");
        }
      }
      break;
    }
  }
  return f;
}

/// h_P(s) = sum_Q g~_Q(s) (s-1)^{dim Q}. Palindromic of degree n.
inline LaurentPoly toric_h(const FaceLattice& lattice) {
  const auto table = g_tilde_table(lattice);
  const LaurentPoly s_minus_1 = LaurentPoly::var() - LaurentPoly(1);
  LaurentPoly h;
  for (std::size_t q = 0; q < lattice.size(); ++q) {
    h += table[q] * s_minus_1.pow(static_cast<unsigned>(lattice.face(q).dim));
  }
  return h;
}

/// The h-polynomial of a simple polytope from its f-vector,
/// sum_j f_j (s-1)^j; the same as sum_k f_{k-1}(P°) (s-1)^{n-k} for the
/// simplicial polar.
inline LaurentPoly h_from_f_vector(const std::vector<std::size_t>& f) {
  const LaurentPoly s_minus_1 = LaurentPoly::var() - LaurentPoly(1);
  LaurentPoly h;
  for (std::size_t j = 0; j < f.size(); ++j) {
    h += LaurentPoly(Rational(f[j])) * s_minus_1.pow(static_cast<unsigned>(j));
  }
  return h;
}

}  // namespace wehrhart

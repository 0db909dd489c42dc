#pragma once

// Full-dimensional lattice polytopes given by vertices: exact facet
// description, face lattice, simplicity, and the standard test families.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wehrhart/error.hpp"
#include "wehrhart/exact.hpp"

namespace wehrhart {

using Point = std::vector<std::int64_t>;
/// Sorted vertex indices; the canonical external name of a face.
using FaceId = std::vector<int>;

inline std::string face_id_to_string(const FaceId& id) {
  std::string out = "[";
  for (std::size_t i = 0; i < id.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(id[i]);
  }
  return out + "]";
}

namespace detail {

inline std::int64_t checked_i64(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::Inconsistent, "integer overflow in exact geometry");
  }
  return static_cast<std::int64_t>(v);
}

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
inline std::int64_t determinant(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = checked_i64(num / prev);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline std::size_t rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  const std::size_t cols = m.front().size();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
    std::size_t pivot = rk;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rk], m[pivot]);
    for (std::size_t i = rk + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[rk][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

inline std::vector<std::vector<std::int64_t>> differences(const std::vector<Point>& points) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<std::int64_t> d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    out.push_back(std::move(d));
  }
  return out;
}

inline std::int64_t dot(const Point& a, const Point& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return checked_i64(s);
}

}  // namespace detail

/// A lattice polytope conv(vertices) in Z^n. Construction checks shape and
/// distinctness; full-dimensionality and extremeness are checked by
/// facet_description, which every geometric operation goes through.
class LatticePolytope {
 public:
  LatticePolytope(std::string name, std::size_t ambient_dim, std::vector<Point> vertices)
      : name_(std::move(name)), dim_(ambient_dim), vertices_(std::move(vertices)) {
    if (dim_ == 0) throw Error(ErrorKind::UnsupportedDimension, "ambient dimension must be at least 1");
    for (const auto& v : vertices_) {
      if (v.size() != dim_) {
        throw Error(ErrorKind::DegenerateInput, "vertex of length " + std::to_string(v.size()) +
                                                    " in dimension " + std::to_string(dim_));
      }
    }
    std::set<Point> seen;
    for (const auto& v : vertices_) {
      if (!seen.insert(v).second) throw Error(ErrorKind::DegenerateInput, "repeated vertex");
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<Point> vertices_;
};

/// {x : normal . x <= offset}, normal primitive.
struct HalfSpace {
  Point normal;
  std::int64_t offset = 0;

  std::int64_t value(const Point& x) const { return detail::dot(normal, x); }

  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

struct GeometryLimits {
  std::size_t max_vertices = 64;
  std::size_t max_facets = 24;
};

namespace detail {

/// Hyperplanes through n points of the set with every point on one side.
inline std::vector<HalfSpace> supporting_hyperplanes(const std::vector<Point>& verts, std::size_t n) {
  std::set<HalfSpace> found;
  std::vector<std::size_t> subset(n);
  auto try_subset = [&]() {
    std::vector<Point> chosen;
    chosen.reserve(n);
    for (auto i : subset) chosen.push_back(verts[i]);
    const auto diffs = differences(chosen);  // n-1 rows of length n
    Point normal(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<std::vector<std::int64_t>> minor;
      minor.reserve(diffs.size());
      for (const auto& row : diffs) {
        std::vector<std::int64_t> r;
        r.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k) {
          if (k != col) r.push_back(row[k]);
        }
        minor.push_back(std::move(r));
      }
      const std::int64_t det = determinant(std::move(minor));
      normal[col] = (col % 2 == 0) ? det : -det;
    }
    if (std::all_of(normal.begin(), normal.end(), [](std::int64_t c) { return c == 0; })) return;
    std::int64_t g = 0;
    for (auto c : normal) g = std::gcd(g, c < 0 ? -c : c);
    for (auto& c : normal) c /= g;
    const std::int64_t level = dot(normal, chosen.front());
    bool below = true;
    bool above = true;
    for (const auto& v : verts) {
      const std::int64_t val = dot(normal, v);
      below = below && val <= level;
      above = above && val >= level;
      if (!below && !above) return;
    }
    if (below) {
      found.insert(HalfSpace{normal, level});
    } else {
      for (auto& c : normal) c = -c;
      found.insert(HalfSpace{normal, -level});
    }
  };
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == n) {
      try_subset();
      return;
    }
    for (std::size_t i = start; i + (n - depth) <= verts.size(); ++i) {
      subset[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);
  return {found.begin(), found.end()};
}

/// A point is extreme iff the hyperplanes through it meet the set in that point alone.
inline bool is_extreme(const std::vector<Point>& points, const std::vector<HalfSpace>& facets, std::size_t v) {
  std::vector<bool> common(points.size(), true);
  for (const auto& h : facets) {
    if (h.value(points[v]) != h.offset) continue;
    for (std::size_t w = 0; w < points.size(); ++w) {
      if (h.value(points[w]) != h.offset) common[w] = false;
    }
  }
  for (std::size_t w = 0; w < points.size(); ++w) {
    if (w != v && common[w]) return false;
  }
  return true;
}

}  // namespace detail

/// Irredundant facet inequalities, found by fitting a hyperplane through every
/// n-subset of vertices and keeping the supporting ones. Sorted.
inline std::vector<HalfSpace> facet_description(const LatticePolytope& polytope, const GeometryLimits& limits = {}) {
  const auto& verts = polytope.vertices();
  const std::size_t n = polytope.ambient_dim();
  if (verts.size() > limits.max_vertices) {
    throw Error(ErrorKind::TooManyVertices, std::to_string(verts.size()) + " vertices exceed the cap of " +
                                                std::to_string(limits.max_vertices));
  }
  if (verts.size() < n + 1 || detail::rank(detail::differences(verts)) < n) {
    throw Error(ErrorKind::NotFullDimensional, "affine hull of " + polytope.name() + " is not all of R^" +
                                                   std::to_string(n));
  }
  auto facets = detail::supporting_hyperplanes(verts, n);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (!detail::is_extreme(verts, facets, v)) {
      throw Error(ErrorKind::DegenerateInput, "listed point " + std::to_string(v) + " is not a vertex");
    }
  }
  return facets;
}

struct Face {
  FaceId id;
  int dim = 0;
  std::vector<int> active_facets;
};

/// All nonempty faces of a polytope, ordered by (dim, id). The last face is P.
class FaceLattice {
 public:
  FaceLattice(LatticePolytope polytope, std::vector<HalfSpace> facets, std::vector<Face> faces)
      : polytope_(std::move(polytope)), facets_(std::move(facets)), faces_(std::move(faces)) {
    for (std::size_t i = 0; i < faces_.size(); ++i) index_.emplace(faces_[i].id, i);
  }

  const LatticePolytope& polytope() const noexcept { return polytope_; }
  const std::vector<HalfSpace>& facets() const noexcept { return facets_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  std::size_t size() const noexcept { return faces_.size(); }
  const Face& face(std::size_t i) const { return faces_.at(i); }
  int dim() const noexcept { return static_cast<int>(polytope_.ambient_dim()); }
  std::size_t top() const noexcept { return faces_.size() - 1; }

  std::optional<std::size_t> find(const FaceId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require(const FaceId& id) const {
    auto i = find(id);
    if (!i) throw Error(ErrorKind::UnknownFace, face_id_to_string(id) + " is not a face of " + polytope_.name());
    return *i;
  }

  /// faces_[a] is a face of faces_[b].
  bool leq(std::size_t a, std::size_t b) const {
    const auto& x = faces_[a].id;
    const auto& y = faces_[b].id;
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  }

  /// f_0, ..., f_n (f_n = 1 for P itself).
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dim()) + 1, 0);
    for (const auto& q : faces_) ++f[static_cast<std::size_t>(q.dim)];
    return f;
  }

  /// Sum over nonempty faces of (-1)^dim; 1 for every polytope.
  long euler_characteristic() const {
    long s = 0;
    for (const auto& q : faces_) s += (q.dim % 2 == 0) ? 1 : -1;
    return s;
  }

 private:
  LatticePolytope polytope_;
  std::vector<HalfSpace> facets_;
  std::vector<Face> faces_;
  std::map<FaceId, std::size_t> index_;
};

/// Faces are the nonempty intersections of facet vertex sets; they are reached
/// by closing P under intersection with each facet.
inline FaceLattice face_lattice(const LatticePolytope& polytope, const GeometryLimits& limits = {}) {
  auto facets = facet_description(polytope, limits);
  if (facets.size() > limits.max_facets) {
    throw Error(ErrorKind::EnumerationBudgetExceeded, std::to_string(facets.size()) +
                                                          " facets exceed the cap of " +
                                                          std::to_string(limits.max_facets));
  }
  const auto& verts = polytope.vertices();
  std::vector<std::vector<bool>> tight(facets.size(), std::vector<bool>(verts.size()));
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t v = 0; v < verts.size(); ++v) tight[i][v] = facets[i].value(verts[v]) == facets[i].offset;
  }

  FaceId all(verts.size());
  std::iota(all.begin(), all.end(), 0);
  std::set<FaceId> seen{all};
  std::vector<FaceId> queue{all};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const FaceId current = queue[head];
    for (std::size_t i = 0; i < facets.size(); ++i) {
      FaceId next;
      for (int v : current) {
        if (tight[i][static_cast<std::size_t>(v)]) next.push_back(v);
      }
      if (next.empty() || next.size() == current.size()) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  std::vector<Face> faces;
  faces.reserve(seen.size());
  for (const auto& id : seen) {
    Face f;
    f.id = id;
    std::vector<Point> pts;
    for (int v : id) pts.push_back(verts[static_cast<std::size_t>(v)]);
    f.dim = static_cast<int>(detail::rank(detail::differences(pts)));
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (std::all_of(id.begin(), id.end(), [&](int v) { return tight[i][static_cast<std::size_t>(v)]; })) {
        f.active_facets.push_back(static_cast<int>(i));
      }
    }
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
  });
  return FaceLattice(polytope, std::move(facets), std::move(faces));
}

/// Every vertex lies on exactly n facets.
inline bool is_simple(const FaceLattice& lattice) {
  const auto n = static_cast<std::size_t>(lattice.dim());
  return std::all_of(lattice.faces().begin(), lattice.faces().end(),
                     [n](const Face& f) { return f.dim != 0 || f.active_facets.size() == n; });
}
inline bool is_simple(const LatticePolytope& polytope) { return is_simple(face_lattice(polytope)); }

inline bool contains_origin_interior(const std::vector<HalfSpace>& facets) {
  return std::all_of(facets.begin(), facets.end(), [](const HalfSpace& h) { return h.offset > 0; });
}
inline bool contains_origin_interior(const LatticePolytope& polytope) {
  return contains_origin_interior(facet_description(polytope));
}

enum class PolytopeKind { Simplex, Cube, Cross, PyramidOverSquare };

inline std::optional<PolytopeKind> parse_polytope_kind(std::string_view s) {
  if (s == "simplex") return PolytopeKind::Simplex;
  if (s == "cube") return PolytopeKind::Cube;
  if (s == "cross") return PolytopeKind::Cross;
  if (s == "pyramid_over_square" || s == "pyramid") return PolytopeKind::PyramidOverSquare;
  return std::nullopt;
}

/// simplex = conv{0, e_i}; cube = [0,1]^n; cross = conv{+-e_i};
/// pyramid_over_square = unit square at height 0 with apex (0,0,1).
inline LatticePolytope standard_polytope(PolytopeKind kind, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::UnsupportedDimension, "dimension must be at least 1");
  auto unit = [n](std::size_t i, std::int64_t s) {
    Point p(n, 0);
    p[i] = s;
    return p;
  };
  std::vector<Point> verts;
  switch (kind) {
    case PolytopeKind::Simplex:
      verts.emplace_back(n, 0);
      for (std::size_t i = 0; i < n; ++i) verts.push_back(unit(i, 1));
      return LatticePolytope("simplex_" + std::to_string(n), n, std::move(verts));
    case PolytopeKind::Cube:
      if (n > 6) throw Error(ErrorKind::UnsupportedDimension, "cube beyond dimension 6 exceeds the vertex cap");
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Point p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::int64_t>((mask >> i) & 1U);
        verts.push_back(std::move(p));
      }
      return LatticePolytope("cube_" + std::to_string(n), n, std::move(verts));
    case PolytopeKind::Cross:
      if (n > 4) throw Error(ErrorKind::UnsupportedDimension, "cross polytope beyond dimension 4 exceeds the facet cap");
      for (std::size_t i = 0; i < n; ++i) {
        verts.push_back(unit(i, 1));
        verts.push_back(unit(i, -1));
      }
      return LatticePolytope("cross_" + std::to_string(n), n, std::move(verts));
    case PolytopeKind::PyramidOverSquare:
      if (n != 3) throw Error(ErrorKind::UnsupportedDimension, "pyramid_over_square exists only in dimension 3");
      return LatticePolytope("pyramid_over_square", 3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  }
  throw Error(ErrorKind::UnsupportedDimension, "unknown polytope kind");
}

/// Extreme points of a finite point set, as a polytope. Unlike the
/// LatticePolytope constructor this repairs its input: duplicates and
/// non-extreme points are dropped.
inline LatticePolytope convex_hull(std::string name, std::size_t ambient_dim, std::vector<Point> points) {
  for (const auto& p : points) {
    if (p.size() != ambient_dim) throw Error(ErrorKind::DegenerateInput, "point of wrong length");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < ambient_dim + 1 || detail::rank(detail::differences(points)) < ambient_dim) {
    throw Error(ErrorKind::NotFullDimensional, "point set is not full-dimensional");
  }
  const auto hyperplanes = detail::supporting_hyperplanes(points, ambient_dim);
  std::vector<Point> keep;
  for (std::size_t v = 0; v < points.size(); ++v) {
    if (detail::is_extreme(points, hyperplanes, v)) keep.push_back(points[v]);
  }
  return LatticePolytope(std::move(name), ambient_dim, std::move(keep));
}

}  // namespace wehrhart

#pragma once

// Lattice points in dilated faces |lQ ∩ M| and their relative interiors,
// by bounding-box enumeration with exact membership tests.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "wehrhart/error.hpp"
#include "wehrhart/polytope.hpp"

namespace wehrhart {

enum class CountMode { Closed, RelativeInterior };

inline constexpr std::uint64_t kDefaultCountBudget = 100'000'000;

struct CountRequest {
  std::size_t face = 0;  // index into the face lattice
  std::int64_t dilation = 1;
  CountMode mode = CountMode::Closed;
};

/// Counts integer points x of the bounding box of lQ with a.x = l*b on the
/// face's active facets and a.x <= l*b (closed) or a.x < l*b (relative
/// interior) on the others.
inline std::uint64_t count_lattice_points(const FaceLattice& lattice, const CountRequest& request,
                                          std::uint64_t budget = kDefaultCountBudget) {
  if (request.dilation < 1) {
    throw Error(ErrorKind::InvalidArgument, "dilation must be positive, got " + std::to_string(request.dilation));
  }
  const auto& face = lattice.face(request.face);
  const auto& verts = lattice.polytope().vertices();
  const auto& facets = lattice.facets();
  const std::size_t n = lattice.polytope().ambient_dim();
  const std::int64_t ell = request.dilation;

  Point lo(n, std::numeric_limits<std::int64_t>::max());
  Point hi(n, std::numeric_limits<std::int64_t>::min());
  for (int v : face.id) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t c = detail::checked_i64(static_cast<__int128>(verts[static_cast<std::size_t>(v)][k]) * ell);
      lo[k] = std::min(lo[k], c);
      hi[k] = std::max(hi[k], c);
    }
  }
  __int128 volume = 1;
  for (std::size_t k = 0; k < n; ++k) {
    volume *= static_cast<__int128>(hi[k] - lo[k] + 1);
    if (volume > static_cast<__int128>(budget)) {
      throw Error(ErrorKind::BudgetExceeded, "bounding box of " + std::to_string(ell) + "*" +
                                                 face_id_to_string(face.id) + " has more than " +
                                                 std::to_string(budget) + " points");
    }
  }

  std::vector<bool> active(facets.size(), false);
  for (int i : face.active_facets) active[static_cast<std::size_t>(i)] = true;
  std::vector<std::int64_t> bound(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) bound[i] = detail::checked_i64(static_cast<__int128>(facets[i].offset) * ell);
  const bool strict = request.mode == CountMode::RelativeInterior;

  std::uint64_t count = 0;
  Point x = lo;
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < facets.size() && inside; ++i) {
      const std::int64_t val = facets[i].value(x);
      if (active[i]) {
        inside = val == bound[i];
      } else {
        inside = strict ? val < bound[i] : val <= bound[i];
      }
    }
    if (inside) ++count;
    std::size_t k = 0;
    while (k < n && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
  }
  return count;
}

inline std::uint64_t count_closed(const FaceLattice& lattice, std::size_t face, std::int64_t ell,
                                  std::uint64_t budget = kDefaultCountBudget) {
  return count_lattice_points(lattice, {face, ell, CountMode::Closed}, budget);
}

inline std::uint64_t count_relint(const FaceLattice& lattice, std::size_t face, std::int64_t ell,
                                  std::uint64_t budget = kDefaultCountBudget) {
  return count_lattice_points(lattice, {face, ell, CountMode::RelativeInterior}, budget);
}

/// A face lattice together with a memo of its lattice-point counts. The memo
/// is keyed by (face, dilation, mode) and is safe to share across threads.
class Counter {
 public:
  explicit Counter(FaceLattice lattice, std::uint64_t budget = kDefaultCountBudget)
      : lattice_(std::move(lattice)), budget_(budget) {}

  Counter(const Counter& other) : lattice_(other.lattice_), budget_(other.budget_) {}
  Counter& operator=(const Counter&) = delete;

  const FaceLattice& lattice() const noexcept { return lattice_; }
  std::uint64_t budget() const noexcept { return budget_; }

  std::uint64_t count(const CountRequest& request) const {
    const Key key{request.face, request.dilation, request.mode};
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const std::uint64_t value = count_lattice_points(lattice_, request, budget_);
    std::lock_guard lock(mutex_);
    memo_.emplace(key, value);
    return value;
  }

  std::uint64_t closed(std::size_t face, std::int64_t ell) const { return count({face, ell, CountMode::Closed}); }
  std::uint64_t relint(std::size_t face, std::int64_t ell) const {
    return count({face, ell, CountMode::RelativeInterior});
  }

 private:
  using Key = std::tuple<std::size_t, std::int64_t, CountMode>;

  FaceLattice lattice_;
  std::uint64_t budget_;
  mutable std::mutex mutex_;
  mutable std::map<Key, std::uint64_t> memo_;
};

}  // namespace wehrhart

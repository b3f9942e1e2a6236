#pragma once

// Exact counts of lattice points by l1 distance, in Z^r and in the box L_n^r.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "rdg/errors.hpp"
#include "rdg/lattice.hpp"

namespace rdg {

namespace detail {

// Memo of a_r(d) with running prefix sums, one row per dimension.
// Rows only ever grow; readers take a shared lock.
class ShellCountCache {
 public:
  static ShellCountCache& instance() {
    static ShellCountCache cache;
    return cache;
  }

  std::uint64_t get(unsigned r, std::uint64_t d) {
    {
      std::shared_lock lock(mutex_);
      if (r <= rows_.size() && d < rows_[r - 1].values.size()) return rows_[r - 1].values[d];
    }
    std::unique_lock lock(mutex_);
    extend(r, d);
    return rows_[r - 1].values[d];
  }

 private:
  struct Row {
    std::vector<std::uint64_t> values;
    std::vector<std::uint64_t> prefix;  // prefix[d] = sum_{k<=d} values[k]
  };

  void extend(unsigned r, std::uint64_t d) {
    while (rows_.size() < r) rows_.emplace_back();
    for (unsigned dim = 1; dim <= r; ++dim) {
      Row& row = rows_[dim - 1];
      while (row.values.size() <= d) {
        const std::uint64_t k = row.values.size();
        std::uint64_t value;
        if (dim == 1) {
          value = (k == 0) ? 1 : 2;
        } else {
          // a_{r+1}(k) = 2 * sum_{j<k} a_r(j) + a_r(k)
          const Row& lower = rows_[dim - 2];
          const std::uint64_t below = (k == 0) ? 0 : lower.prefix[k - 1];
          value = checked_add(checked_mul(2, below), lower.values[k]);
        }
        row.values.push_back(value);
        row.prefix.push_back(k == 0 ? value : checked_add(row.prefix.back(), value));
      }
    }
  }

  std::shared_mutex mutex_;
  std::vector<Row> rows_;
};

// Per-axis count of x in [0, n-1] with |x - c| = k.
inline std::uint64_t axis_shell(std::uint64_t n, Coord c, std::uint64_t k) {
  const auto kk = static_cast<Coord>(k);
  const auto last = static_cast<Coord>(n) - 1;
  if (k == 0) return 1;
  return static_cast<std::uint64_t>(c - kk >= 0) + static_cast<std::uint64_t>(c + kk <= last);
}

// Convolve two count sequences, truncating at max_len entries.
inline std::vector<std::uint64_t> convolve(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b,
                                           std::size_t max_len) {
  const std::size_t len = std::min(max_len, a.size() + b.size() - 1);
  std::vector<std::uint64_t> out(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  }
  return out;
}

}  // namespace detail

/// a_r(d): number of points of Z^r at l1 distance exactly d from a fixed point.
inline std::uint64_t shell_count_infinite(unsigned r, std::uint64_t d) {
  detail::require(r >= 1, "shell_count_infinite: dimension must be positive");
  return detail::ShellCountCache::instance().get(r, d);
}

/// Finite-box shell count for any r, by convolving the per-axis counts around v.
inline std::uint64_t shell_count_finite_convolution(const LatticeSpace& space, const LatticePoint& v,
                                                    std::uint64_t d) {
  space.require_contains(v);
  if (d > space.max_distance()) return 0;
  const std::uint64_t n = space.side();
  const std::size_t len = static_cast<std::size_t>(d) + 1;
  std::vector<std::uint64_t> acc{1};
  for (Coord c : v.coords) {
    std::vector<std::uint64_t> axis(std::min<std::uint64_t>(n, len));
    for (std::size_t k = 0; k < axis.size(); ++k) axis[k] = detail::axis_shell(n, c, k);
    acc = detail::convolve(acc, axis, len);
  }
  return d < acc.size() ? acc[d] : 0;
}

/// Closed form for r = 2: 4d minus the points falling off each violated side,
/// plus the points double-subtracted beyond each violated corner.
inline std::uint64_t shell_count_finite_2d(std::uint64_t n, Coord x, Coord y, std::uint64_t dist) {
  const auto d = static_cast<std::int64_t>(dist);
  const auto m = static_cast<std::int64_t>(n) - 1;
  if (d == 0) return 1;
  if (d > 2 * m) return 0;

  std::int64_t count = 4 * d;
  // A side at gap g < d loses 1 + 2(d - g - 1) points.
  const auto side = [d](std::int64_t gap) -> std::int64_t { return gap < d ? 2 * (d - gap) - 1 : 0; };
  // A corner at gap g < d (sum of the two side gaps) was removed twice for d - g - 1 points.
  const auto corner = [d](std::int64_t gap) -> std::int64_t { return gap < d ? d - gap - 1 : 0; };

  count -= side(x) + side(y) + side(m - x) + side(m - y);
  count += corner(x + y) + corner(x + (m - y)) + corner((m - x) + y) + corner((m - x) + (m - y));
  return static_cast<std::uint64_t>(count);
}

/// a_r^{(v)}(d): number of points of the box at l1 distance exactly d from v.
inline std::uint64_t shell_count_finite(const LatticeSpace& space, const LatticePoint& v, std::uint64_t d) {
  space.require_contains(v);
  if (d > space.max_distance()) return 0;
  switch (space.dimension()) {
    case 1:
      return detail::axis_shell(space.side(), v.coords[0], d);
    case 2:
      return shell_count_finite_2d(space.side(), v.coords[0], v.coords[1], d);
    default:
      return shell_count_finite_convolution(space, v, d);
  }
}

/// Exhaustive oracle: visits every vertex of the box.
inline std::uint64_t shell_count_finite_bruteforce(const LatticeSpace& space, const LatticePoint& v,
                                                   std::uint64_t d) {
  space.require_contains(v);
  if (space.vertex_count() > 50'000'000) throw CapacityError("brute-force shell count: box too large");
  std::vector<Coord> buf(space.dimension());
  std::uint64_t count = 0;
  for (VertexId id = 0; id < space.vertex_count(); ++id) {
    space.decode(id, buf);
    std::uint64_t dist = 0;
    for (std::size_t i = 0; i < buf.size(); ++i) dist += static_cast<std::uint64_t>(std::llabs(buf[i] - v.coords[i]));
    count += (dist == d);
  }
  return count;
}

/// Ordered-pair displacement counts over trailing groups of axes.
///
/// suffix(j)[d] is the number of ordered pairs (u, v) of points of {0..n-1}^(r-j)
/// with l1 distance d; suffix(0) covers the whole box (d = 0 counts the n^r self pairs).
/// Along one axis an offset k is realised by n ordered pairs if k = 0 and 2(n - k) otherwise.
class DisplacementTable {
 public:
  explicit DisplacementTable(const LatticeSpace& space) : n_(space.side()), r_(space.dimension()) {
    // n^{2r} ordered pairs must be representable.
    detail::checked_pow(space.vertex_count(), 2);
    std::vector<std::uint64_t> axis(n_);
    for (std::uint64_t k = 0; k < n_; ++k) axis[k] = axis_pairs(k);
    suffix_.assign(r_ + 1, {});
    suffix_[r_] = {1};
    for (unsigned j = r_; j-- > 0;) suffix_[j] = detail::convolve(suffix_[j + 1], axis, SIZE_MAX);
  }

  std::uint64_t side() const { return n_; }
  unsigned dimension() const { return r_; }

  std::uint64_t axis_pairs(std::uint64_t k) const { return k == 0 ? n_ : 2 * (n_ - k); }

  /// Ordered pairs over axes j..r-1 at distance d (0 outside the table).
  std::uint64_t suffix(unsigned j, std::uint64_t d) const {
    const auto& row = suffix_[j];
    return d < row.size() ? row[d] : 0;
  }

  std::uint64_t ordered_pairs(std::uint64_t d) const { return suffix(0, d); }

 private:
  std::uint64_t n_;
  unsigned r_;
  std::vector<std::vector<std::uint64_t>> suffix_;
};

/// Number of unordered vertex pairs at each distance. Index d runs over
/// 0..r(n-1); entry 0 is always zero since pairs are distinct vertices.
inline std::vector<std::uint64_t> pair_count_by_distance(const LatticeSpace& space) {
  const DisplacementTable table(space);
  std::vector<std::uint64_t> out(space.max_distance() + 1, 0);
  for (std::uint64_t d = 1; d < out.size(); ++d) out[d] = table.ordered_pairs(d) / 2;
  return out;
}

}  // namespace rdg

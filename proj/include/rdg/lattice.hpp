#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "rdg/errors.hpp"

namespace rdg {

using Coord = std::int64_t;
using VertexId = std::uint64_t;

/// A point of Z^r. Membership in a particular box is checked by LatticeSpace::contains.
struct LatticePoint {
  std::vector<Coord> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<Coord> c) : coords(c) {}

  std::size_t dimension() const { return coords.size(); }
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// l1 (Manhattan) distance between two points of equal dimension.
inline std::uint64_t l1_distance(const LatticePoint& u, const LatticePoint& v) {
  detail::require(u.dimension() == v.dimension(), "l1_distance: dimension mismatch");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < u.dimension(); ++i)
    sum += static_cast<std::uint64_t>(std::llabs(u.coords[i] - v.coords[i]));
  return sum;
}

/// The box {0..n-1}^r under the l1 metric. Vertices are numbered in row-major
/// order: coordinate 0 is the most significant digit in base n.
class LatticeSpace {
 public:
  LatticeSpace(std::uint64_t n, unsigned r) : n_(n), r_(r) {
    detail::require(n >= 1, "LatticeSpace: side length must be positive");
    detail::require(r >= 1, "LatticeSpace: dimension must be positive");
    vertex_count_ = detail::checked_pow(n, r);
  }

  std::uint64_t side() const { return n_; }
  unsigned dimension() const { return r_; }
  std::uint64_t vertex_count() const { return vertex_count_; }
  std::uint64_t max_distance() const { return static_cast<std::uint64_t>(r_) * (n_ - 1); }

  bool contains(const LatticePoint& p) const {
    if (p.dimension() != r_) return false;
    for (Coord c : p.coords)
      if (c < 0 || static_cast<std::uint64_t>(c) >= n_) return false;
    return true;
  }

  void require_contains(const LatticePoint& p) const {
    detail::require(p.dimension() == r_, "lattice point has wrong dimension");
    detail::require(contains(p), "lattice point lies outside the box");
  }

  VertexId index_of(const LatticePoint& p) const {
    require_contains(p);
    VertexId id = 0;
    for (Coord c : p.coords) id = id * n_ + static_cast<VertexId>(c);
    return id;
  }

  LatticePoint point_of(VertexId id) const {
    detail::require(id < vertex_count_, "vertex index out of range");
    LatticePoint p;
    p.coords.resize(r_);
    for (unsigned i = r_; i-- > 0;) {
      p.coords[i] = static_cast<Coord>(id % n_);
      id /= n_;
    }
    return p;
  }

  /// Decode into a caller-owned buffer of length r (hot loops avoid allocation).
  void decode(VertexId id, std::span<Coord> out) const {
    for (unsigned i = r_; i-- > 0;) {
      out[i] = static_cast<Coord>(id % n_);
      id /= n_;
    }
  }

  LatticePoint reflect(const LatticePoint& p) const {
    LatticePoint q = p;
    for (Coord& c : q.coords) c = static_cast<Coord>(n_ - 1) - c;
    return q;
  }

  std::string describe() const {
    return "L(n=" + std::to_string(n_) + ",r=" + std::to_string(r_) + ")";
  }

  friend bool operator==(const LatticeSpace&, const LatticeSpace&) = default;

 private:
  std::uint64_t n_;
  unsigned r_;
  std::uint64_t vertex_count_ = 0;
};

}  // namespace rdg

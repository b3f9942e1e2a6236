#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdg/errors.hpp"
#include "rdg/lattice.hpp"
#include "rdg/rng.hpp"

namespace rdg {

struct Edge {
  VertexId u;
  VertexId v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Provenance {
  std::string model;    // EdgeProbabilityModel::describe()
  std::string space;    // e.g. LatticeSpace::describe()
  Seed seed = 0;
  std::string sampler;  // naive, naive-coupled, stratified, waxman, erdos-renyi, file
};

/// Simple undirected graph on vertices 0..V-1. Edges are stored canonically
/// (u < v, sorted ascending); construction rejects self-loops, duplicates and
/// out-of-range endpoints.
class SampledGraph {
 public:
  SampledGraph(std::uint64_t vertex_count, std::vector<Edge> edges, Provenance provenance = {})
      : vertex_count_(vertex_count), edges_(std::move(edges)), provenance_(std::move(provenance)) {
    detail::require(vertex_count_ >= 1, "graph must have at least one vertex");
    for (Edge& e : edges_) {
      detail::require(e.u != e.v, "self-loop " + std::to_string(e.u));
      detail::require(e.u < vertex_count_ && e.v < vertex_count_,
                      "edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    detail::require(dup == edges_.end(),
                    "duplicate edge " + (dup == edges_.end() ? std::string{} : std::to_string(dup->u) + " " + std::to_string(dup->v)));
  }

  std::uint64_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Provenance& provenance() const { return provenance_; }

  bool has_edge(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
  }

 private:
  std::uint64_t vertex_count_;
  std::vector<Edge> edges_;
  Provenance provenance_;
};

}  // namespace rdg

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "rdg/errors.hpp"
#include "rdg/sampled_graph.hpp"

namespace rdg {

/// Disjoint sets with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  std::size_t set_size(std::size_t x) { return size_[find(x)]; }
  std::size_t set_count() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

struct ComponentSummary {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t component_count = 0;
  std::uint64_t largest_component_size = 0;
  std::uint64_t isolated_count = 0;
  std::map<std::uint64_t, std::uint64_t> degree_histogram;
  double mean_degree = 0.0;

  bool connected() const { return component_count == 1; }
  double isolated_fraction() const { return static_cast<double>(isolated_count) / static_cast<double>(vertex_count); }
  double largest_component_fraction() const {
    return static_cast<double>(largest_component_size) / static_cast<double>(vertex_count);
  }

  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

/// Components and degree statistics of an edge list over vertices 0..V-1.
/// Repeated edges are counted in the degrees but do not change components.
inline ComponentSummary analyze(std::uint64_t vertex_count, std::span<const Edge> edges) {
  detail::require(vertex_count >= 1, "analyze: graph must have at least one vertex");
  UnionFind sets(vertex_count);
  std::vector<std::uint64_t> degree(vertex_count, 0);
  for (const Edge& e : edges) {
    detail::require(e.u < vertex_count && e.v < vertex_count, "analyze: edge index out of range");
    ++degree[e.u];
    ++degree[e.v];
    sets.unite(e.u, e.v);
  }

  ComponentSummary s;
  s.vertex_count = vertex_count;
  s.edge_count = edges.size();
  s.component_count = sets.set_count();
  for (std::uint64_t v = 0; v < vertex_count; ++v) {
    ++s.degree_histogram[degree[v]];
    if (sets.find(v) == v) s.largest_component_size = std::max<std::uint64_t>(s.largest_component_size, sets.set_size(v));
  }
  s.isolated_count = s.degree_histogram.contains(0) ? s.degree_histogram.at(0) : 0;
  s.mean_degree = 2.0 * static_cast<double>(edges.size()) / static_cast<double>(vertex_count);
  return s;
}

inline ComponentSummary analyze(const SampledGraph& graph) { return analyze(graph.vertex_count(), graph.edges()); }

inline bool is_connected(const SampledGraph& graph) { return analyze(graph).component_count == 1; }

}  // namespace rdg

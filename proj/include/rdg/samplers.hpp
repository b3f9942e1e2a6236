#pragma once

// Graph samplers: the lattice distance model (naive and stratified), the
// Waxman model on [0,1]^r, and the Erdos-Renyi baseline.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rdg/edge_probability.hpp"
#include "rdg/errors.hpp"
#include "rdg/lattice.hpp"
#include "rdg/rng.hpp"
#include "rdg/sampled_graph.hpp"
#include "rdg/shell_counts.hpp"

namespace rdg {

enum class SamplerKind { Naive, Stratified };

inline std::string to_string(SamplerKind kind) { return kind == SamplerKind::Naive ? "naive" : "stratified"; }

inline SamplerKind parse_sampler_kind(const std::string& s) {
  if (s == "naive") return SamplerKind::Naive;
  if (s == "stratified") return SamplerKind::Stratified;
  throw InvalidInput("unknown sampler '" + s + "' (expected naive or stratified)");
}

/// Vertex cap for samplers that visit every pair.
inline constexpr std::uint64_t kMaxQuadraticVertices = 100'000;

namespace detail {

inline std::vector<double> probabilities_by_distance(const LatticeSpace& space, const EdgeProbabilityModel& model) {
  std::vector<double> probs(space.max_distance() + 1, 0.0);
  for (std::uint64_t d = 1; d < probs.size(); ++d) probs[d] = model(static_cast<double>(d));
  return probs;
}

inline std::vector<Coord> decode_all(const LatticeSpace& space) {
  const unsigned r = space.dimension();
  std::vector<Coord> coords(space.vertex_count() * r);
  for (VertexId id = 0; id < space.vertex_count(); ++id)
    space.decode(id, std::span<Coord>(coords.data() + id * r, r));
  return coords;
}

}  // namespace detail

/// Flip every unordered pair independently. With `coupled`, the draw for pair
/// (i, j) is keyed_uniform(seed, i * V + j), so two models sampled with the same
/// seed are coupled pair by pair: if f <= g pointwise, the f-graph is a subgraph
/// of the g-graph.
inline SampledGraph sample_lattice_graph_naive(const LatticeSpace& space, const EdgeProbabilityModel& model, Seed seed,
                                               bool coupled = false) {
  const std::uint64_t vcount = space.vertex_count();
  if (vcount > kMaxQuadraticVertices)
    throw CapacityError("naive sampler: " + std::to_string(vcount) + " vertices exceeds cap of " +
                        std::to_string(kMaxQuadraticVertices) + " (use the stratified sampler)");
  const unsigned r = space.dimension();
  const auto probs = detail::probabilities_by_distance(space, model);
  const auto coords = detail::decode_all(space);
  Engine eng = make_engine(seed);

  std::vector<Edge> edges;
  for (VertexId i = 0; i < vcount; ++i) {
    const Coord* a = coords.data() + i * r;
    for (VertexId j = i + 1; j < vcount; ++j) {
      const Coord* b = coords.data() + j * r;
      std::uint64_t dist = 0;
      for (unsigned k = 0; k < r; ++k) dist += static_cast<std::uint64_t>(std::llabs(a[k] - b[k]));
      const double u = coupled ? keyed_uniform(seed, i * vcount + j) : uniform01(eng);
      if (u < probs[dist]) edges.push_back({i, j});
    }
  }
  return SampledGraph(vcount, std::move(edges),
                      {model.describe(), space.describe(), seed, coupled ? "naive-coupled" : "naive"});
}

namespace detail {

// Uniform ordered pair (u, v) with l1 distance d, by unranking a uniform index
// against the displacement table axis by axis. Writes vertex ids.
inline std::pair<VertexId, VertexId> unrank_ordered_pair(const DisplacementTable& table, std::uint64_t d,
                                                         Engine& eng) {
  const std::uint64_t n = table.side();
  const unsigned r = table.dimension();
  std::uint64_t rank = uniform_below(eng, table.ordered_pairs(d));
  std::uint64_t rem = d;
  VertexId u = 0;
  VertexId v = 0;
  for (unsigned j = 0; j < r; ++j) {
    const std::uint64_t kmax = std::min(n - 1, rem);
    for (std::uint64_t k = 0; k <= kmax; ++k) {
      const std::uint64_t tail = table.suffix(j + 1, rem - k);
      if (tail == 0) continue;
      const std::uint64_t weight = table.axis_pairs(k) * tail;
      if (rank >= weight) {
        rank -= weight;
        continue;
      }
      const std::uint64_t choice = rank / tail;
      rank %= tail;
      std::uint64_t cu;
      std::uint64_t cv;
      if (k == 0) {
        cu = cv = choice;
      } else {
        const std::uint64_t base = choice % (n - k);
        const bool forward = choice / (n - k) == 0;
        cu = forward ? base : base + k;
        cv = forward ? base + k : base;
      }
      u = u * n + cu;
      v = v * n + cv;
      rem -= k;
      break;
    }
  }
  return {u, v};
}

// Every unordered pair at distance d, in a fixed order: displacements whose
// first non-zero component is positive, then base points row-major.
inline std::vector<Edge> enumerate_pairs_at(const LatticeSpace& space, std::uint64_t d) {
  const auto n = static_cast<Coord>(space.side());
  const unsigned r = space.dimension();
  std::vector<Edge> out;
  std::vector<Coord> delta(r, 0);
  std::vector<Coord> base(r, 0);

  const auto emit_bases = [&] {
    std::vector<Coord> lo(r);
    std::vector<Coord> hi(r);
    for (unsigned i = 0; i < r; ++i) {
      lo[i] = std::max<Coord>(0, -delta[i]);
      hi[i] = n - 1 - std::max<Coord>(0, delta[i]);
      if (lo[i] > hi[i]) return;
    }
    base = lo;
    for (;;) {
      VertexId a = 0;
      VertexId b = 0;
      for (unsigned i = 0; i < r; ++i) {
        a = a * space.side() + static_cast<VertexId>(base[i]);
        b = b * space.side() + static_cast<VertexId>(base[i] + delta[i]);
      }
      out.push_back(a < b ? Edge{a, b} : Edge{b, a});
      unsigned i = r;
      while (i-- > 0) {
        if (++base[i] <= hi[i]) break;
        base[i] = lo[i];
      }
      if (i == static_cast<unsigned>(-1)) return;
    }
  };

  // Recursive walk over displacement vectors with |delta|_1 = d.
  const auto walk = [&](auto&& self, unsigned axis, Coord rem, bool seen_nonzero) -> void {
    if (axis == r) {
      if (rem == 0) emit_bases();
      return;
    }
    const Coord kmax = std::min<Coord>(n - 1, rem);
    for (Coord k = 0; k <= kmax; ++k) {
      if (k == 0) {
        delta[axis] = 0;
        self(self, axis + 1, rem, seen_nonzero);
        continue;
      }
      delta[axis] = k;
      self(self, axis + 1, rem - k, true);
      if (seen_nonzero) {
        delta[axis] = -k;
        self(self, axis + 1, rem - k, true);
      }
    }
    delta[axis] = 0;
  };
  walk(walk, 0, static_cast<Coord>(d), false);
  return out;
}

}  // namespace detail

/// Distribution-equivalent to the naive sampler, with cost proportional to the
/// number of edges: per distance class d, draw the class size from
/// Binomial(pairs at d, f(d)) and then that many distinct uniform pairs.
inline SampledGraph sample_lattice_graph_stratified(const LatticeSpace& space, const EdgeProbabilityModel& model,
                                                    Seed seed) {
  const DisplacementTable table(space);
  const std::uint64_t vcount = space.vertex_count();
  const auto probs = detail::probabilities_by_distance(space, model);
  Engine eng = make_engine(seed);

  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> chosen;
  for (std::uint64_t d = 1; d <= space.max_distance(); ++d) {
    const std::uint64_t pairs = table.ordered_pairs(d) / 2;
    const std::uint64_t take = binomial(eng, pairs, probs[d]);
    if (take == 0) continue;
    if (2 * take > pairs) {
      // Dense class: partial Fisher-Yates over the explicit pair list.
      auto all = detail::enumerate_pairs_at(space, d);
      for (std::uint64_t i = 0; i < take; ++i) {
        const std::uint64_t j = i + uniform_below(eng, all.size() - i);
        std::swap(all[i], all[j]);
        edges.push_back(all[i]);
      }
      continue;
    }
    chosen.clear();
    while (chosen.size() < take) {
      auto [a, b] = detail::unrank_ordered_pair(table, d, eng);
      if (a > b) std::swap(a, b);
      if (chosen.insert(a * vcount + b).second) edges.push_back({a, b});
    }
  }
  return SampledGraph(vcount, std::move(edges), {model.describe(), space.describe(), seed, "stratified"});
}

/// Dispatch on sampler kind. Coupling is only defined for the naive sampler.
inline SampledGraph sample_lattice_graph(const LatticeSpace& space, const EdgeProbabilityModel& model, Seed seed,
                                         SamplerKind kind, bool coupled = false) {
  if (kind == SamplerKind::Naive) return sample_lattice_graph_naive(space, model, seed, coupled);
  detail::require(!coupled, "coupled sampling requires the naive sampler");
  return sample_lattice_graph_stratified(space, model, seed);
}

/// Points in [0, 1]^r, stored row by row.
struct EuclideanPointSet {
  unsigned r = 0;
  std::vector<double> coords;

  std::size_t size() const { return r == 0 ? 0 : coords.size() / r; }
  std::span<const double> point(std::size_t i) const { return {coords.data() + i * r, r}; }
};

inline double l2_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum);
}

struct WaxmanSample {
  EuclideanPointSet points;
  SampledGraph graph;
};

/// Uniform points in the unit cube, each pair joined with probability f(l2 distance).
inline WaxmanSample sample_waxman_graph(std::uint64_t num_points, unsigned r, const EdgeProbabilityModel& model,
                                        Seed seed) {
  detail::require(num_points >= 1, "waxman: need at least one point");
  detail::require(r >= 1, "waxman: dimension must be positive");
  detail::require(model.holds<WaxmanExponential>() || model.holds<ConstantProbability>(),
                  "waxman sampler needs a waxman or constant model");
  if (num_points > kMaxQuadraticVertices) throw CapacityError("waxman sampler: too many points");

  Engine eng = make_engine(seed);
  EuclideanPointSet pts{r, std::vector<double>(num_points * r)};
  for (double& c : pts.coords) c = uniform01(eng);

  std::vector<Edge> edges;
  for (VertexId i = 0; i < num_points; ++i) {
    for (VertexId j = i + 1; j < num_points; ++j) {
      const double dist = std::max(l2_distance(pts.point(i), pts.point(j)), std::numeric_limits<double>::min());
      if (uniform01(eng) < model(dist)) edges.push_back({i, j});
    }
  }
  const std::string space = "unit-cube(points=" + std::to_string(num_points) + ",r=" + std::to_string(r) + ")";
  return {std::move(pts), SampledGraph(num_points, std::move(edges), {model.describe(), space, seed, "waxman"})};
}

/// G(m, p).
inline SampledGraph sample_er_graph(std::uint64_t m, double p, Seed seed) {
  detail::require(m >= 1, "erdos-renyi: need at least one vertex");
  detail::require(p >= 0.0 && p <= 1.0, "erdos-renyi: p must lie in [0, 1]");
  if (m > kMaxQuadraticVertices) throw CapacityError("erdos-renyi sampler: too many vertices");
  Engine eng = make_engine(seed);
  std::vector<Edge> edges;
  for (VertexId i = 0; i < m; ++i)
    for (VertexId j = i + 1; j < m; ++j)
      if (uniform01(eng) < p) edges.push_back({i, j});
  return SampledGraph(m, std::move(edges),
                      {"constant(p=" + format_fixed(p) + ")", "complete(m=" + std::to_string(m) + ")", seed,
                       "erdos-renyi"});
}

}  // namespace rdg

#pragma once

#include <cstdint>

#include "rdg/edge_probability.hpp"
#include "rdg/lattice.hpp"
#include "rdg/shell_counts.hpp"

namespace rdg {

namespace detail {

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

/// Expected degree of any vertex of the infinite lattice Z^r when pairs beyond
/// `cutoff` are never joined: sum_{d=1}^{cutoff} a_r(d) f(d). The graph is vertex
/// transitive, so no vertex argument is needed.
inline double expected_degree_infinite(unsigned r, std::uint64_t cutoff, const EdgeProbabilityModel& model) {
  detail::CompensatedSum sum;
  for (std::uint64_t d = 1; d <= cutoff; ++d)
    sum.add(static_cast<double>(shell_count_infinite(r, d)) * model(static_cast<double>(d)));
  return sum.value();
}

/// Same with the natural cutoff r(n-1) of the box.
inline double expected_degree_infinite(const LatticeSpace& space, const EdgeProbabilityModel& model) {
  return expected_degree_infinite(space.dimension(), space.max_distance(), model);
}

/// Expected degree of vertex v inside the box: sum_d a_r^{(v)}(d) f(d).
/// Never exceeds expected_degree_infinite(space, model).
inline double expected_degree(const LatticeSpace& space, const EdgeProbabilityModel& model, const LatticePoint& v) {
  space.require_contains(v);
  detail::CompensatedSum sum;
  for (std::uint64_t d = 1; d <= space.max_distance(); ++d) {
    const std::uint64_t shell = shell_count_finite(space, v, d);
    if (shell != 0) sum.add(static_cast<double>(shell) * model(static_cast<double>(d)));
  }
  return sum.value();
}

/// Expected number of edges of the sampled graph on the box: sum_d pairs(d) f(d).
inline double expected_edge_count(const LatticeSpace& space, const EdgeProbabilityModel& model) {
  const auto pairs = pair_count_by_distance(space);
  detail::CompensatedSum sum;
  for (std::uint64_t d = 1; d < pairs.size(); ++d)
    sum.add(static_cast<double>(pairs[d]) * model(static_cast<double>(d)));
  return sum.value();
}

}  // namespace rdg

#pragma once

// Seeded Monte Carlo sweeps over (n, parameter) grids.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "rdg/edge_probability.hpp"
#include "rdg/errors.hpp"
#include "rdg/graph_analysis.hpp"
#include "rdg/rng.hpp"
#include "rdg/samplers.hpp"

namespace rdg {

enum class ModelFamily { LatticeInverseDistance, Waxman, ErdosRenyi };

inline std::string to_string(ModelFamily f) {
  switch (f) {
    case ModelFamily::LatticeInverseDistance: return "lattice-inverse-distance";
    case ModelFamily::Waxman: return "waxman";
    case ModelFamily::ErdosRenyi: return "erdos-renyi";
  }
  return "?";
}

inline ModelFamily parse_model_family(const std::string& s) {
  if (s == "lattice-inverse-distance" || s == "lattice") return ModelFamily::LatticeInverseDistance;
  if (s == "waxman") return ModelFamily::Waxman;
  if (s == "erdos-renyi" || s == "er") return ModelFamily::ErdosRenyi;
  throw InvalidInput("unknown model family '" + s + "'");
}

/// The grid is n_values x (beta_values | p_values). For the lattice family beta
/// is the exponent of the inverse-distance model; for Waxman n is the number of
/// points and beta_values are the decay lengths beta_w (alpha is fixed); for
/// Erdos-Renyi n is the vertex count and p_values the edge probabilities.
struct SweepConfig {
  ModelFamily model_family = ModelFamily::LatticeInverseDistance;
  unsigned r = 2;
  std::vector<std::uint64_t> n_values;
  std::vector<double> beta_values;
  std::vector<double> p_values;
  double alpha = 1.0;
  std::uint64_t trials = 1;
  Seed master_seed = 0;
  SamplerKind sampler = SamplerKind::Stratified;
  bool coupled = false;

  const std::vector<double>& parameters() const {
    return model_family == ModelFamily::ErdosRenyi ? p_values : beta_values;
  }

  void validate() const {
    detail::require(r >= 1, "sweep: r must be positive");
    detail::require(trials >= 1, "sweep: trials must be at least 1");
    detail::require(!n_values.empty(), "sweep: n_values is empty");
    for (auto n : n_values) detail::require(n >= 2, "sweep: every n must be at least 2");
    detail::require(!parameters().empty(), model_family == ModelFamily::ErdosRenyi ? "sweep: p_values is empty"
                                                                                    : "sweep: beta_values is empty");
    if (model_family == ModelFamily::ErdosRenyi)
      for (double p : p_values) detail::require(p >= 0.0 && p <= 1.0, "sweep: p must lie in [0, 1]");
    if (model_family == ModelFamily::Waxman) {
      detail::require(alpha > 0.0 && alpha <= 1.0, "sweep: alpha must lie in (0, 1]");
      for (double b : beta_values) detail::require(b > 0.0 && b <= 1.0, "sweep: beta_w must lie in (0, 1]");
    }
    detail::require(!coupled || sampler == SamplerKind::Naive, "sweep: coupled sampling requires the naive sampler");
  }
};

inline void to_json(nlohmann::json& j, const SweepConfig& c) {
  j = nlohmann::json{{"model_family", to_string(c.model_family)},
                     {"r", c.r},
                     {"n_values", c.n_values},
                     {"beta_values", c.beta_values},
                     {"p_values", c.p_values},
                     {"alpha", c.alpha},
                     {"trials", c.trials},
                     {"master_seed", c.master_seed},
                     {"sampler", to_string(c.sampler)},
                     {"coupled", c.coupled}};
}

inline void from_json(const nlohmann::json& j, SweepConfig& c) {
  static const std::vector<std::string> known{"model_family", "r",      "n_values",    "beta_values", "p_values",
                                              "alpha",        "trials", "master_seed", "sampler",     "coupled"};
  detail::require(j.is_object(), "sweep config must be a JSON object");
  for (const auto& [key, _] : j.items())
    detail::require(std::find(known.begin(), known.end(), key) != known.end(),
                    "sweep config: unknown field '" + key + "'");
  try {
    c = SweepConfig{};
    c.model_family = parse_model_family(j.at("model_family").get<std::string>());
    c.n_values = j.at("n_values").get<std::vector<std::uint64_t>>();
    c.trials = j.at("trials").get<std::uint64_t>();
    c.master_seed = j.at("master_seed").get<Seed>();
    c.r = j.value("r", 2u);
    c.beta_values = j.value("beta_values", std::vector<double>{});
    c.p_values = j.value("p_values", std::vector<double>{});
    c.alpha = j.value("alpha", 1.0);
    c.sampler = parse_sampler_kind(j.value("sampler", std::string("stratified")));
    c.coupled = j.value("coupled", false);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("sweep config: ") + e.what());
  }
}

struct SweepRow {
  ModelFamily family{};
  unsigned r = 0;
  std::uint64_t n = 0;
  double beta_or_p = 0.0;
  std::uint64_t trials = 0;
  double fraction_connected = 0.0;
  double mean_isolated_fraction = 0.0;
  double mean_largest_component_fraction = 0.0;
  double mean_degree = 0.0;
  std::string status = "ok";
  std::int64_t wall_time_ms = 0;
};

struct SweepOptions {
  unsigned threads = 1;
  // Off by default: timings would make otherwise identical sweeps differ.
  bool record_timing = false;
};

/// One sampled graph for grid point (n, param) of the config.
inline SampledGraph sample_for_sweep(const SweepConfig& c, std::uint64_t n, double param, Seed seed) {
  switch (c.model_family) {
    case ModelFamily::LatticeInverseDistance:
      return sample_lattice_graph(LatticeSpace(n, c.r), EdgeProbabilityModel::inverse_distance(param, n), seed,
                                  c.sampler, c.coupled);
    case ModelFamily::Waxman:
      return sample_waxman_graph(n, c.r, EdgeProbabilityModel::waxman(c.alpha, param), seed).graph;
    case ModelFamily::ErdosRenyi:
      return sample_er_graph(n, param, seed);
  }
  throw InvalidInput("unknown model family");
}

namespace detail {

struct TrialOutcome {
  std::string status = "ok";
  bool connected = false;
  double isolated_fraction = 0.0;
  double largest_fraction = 0.0;
  double mean_degree = 0.0;
  std::int64_t elapsed_ms = 0;
};

}  // namespace detail

/// Runs every trial of every grid point and aggregates one row per grid point,
/// in grid order (n outer, parameter inner). Trial seeds are
/// derive_trial_seed(master_seed, key, trial) with key the grid index, or the n
/// index when coupled so that all parameters at one n share randomness. Output
/// does not depend on the thread count.
inline std::vector<SweepRow> run_sweep(const SweepConfig& config, const SweepOptions& options = {}) {
  config.validate();
  const auto& params = config.parameters();
  const std::size_t grid = config.n_values.size() * params.size();
  const std::uint64_t total = grid * config.trials;
  std::vector<detail::TrialOutcome> outcomes(total);

  std::atomic<std::uint64_t> next{0};
  const auto worker = [&] {
    for (std::uint64_t task = next++; task < total; task = next++) {
      const std::size_t g = task / config.trials;
      const std::uint64_t t = task % config.trials;
      const std::size_t ni = g / params.size();
      const std::uint64_t key = config.coupled ? ni : g;
      auto& out = outcomes[task];
      const auto start = std::chrono::steady_clock::now();
      try {
        const auto graph = sample_for_sweep(config, config.n_values[ni], params[g % params.size()],
                                            derive_trial_seed(config.master_seed, key, t));
        const auto s = analyze(graph);
        out.connected = s.connected();
        out.isolated_fraction = s.isolated_fraction();
        out.largest_fraction = s.largest_component_fraction();
        out.mean_degree = s.mean_degree;
      } catch (const CapacityError&) {
        out.status = "capacity_error";
      } catch (const CountOverflow&) {
        out.status = "overflow_error";
      } catch (const std::exception&) {
        out.status = "error";
      }
      out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                           .count();
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid);
  for (std::size_t g = 0; g < grid; ++g) {
    SweepRow row;
    row.family = config.model_family;
    row.r = config.r;
    row.n = config.n_values[g / params.size()];
    row.beta_or_p = params[g % params.size()];
    row.trials = config.trials;
    std::uint64_t connected = 0;
    std::int64_t elapsed = 0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      const auto& o = outcomes[g * config.trials + t];
      elapsed += o.elapsed_ms;
      if (o.status != "ok") {
        row.status = o.status;
        continue;
      }
      connected += o.connected;
      row.mean_isolated_fraction += o.isolated_fraction;
      row.mean_largest_component_fraction += o.largest_fraction;
      row.mean_degree += o.mean_degree;
    }
    if (row.status == "ok") {
      const auto k = static_cast<double>(config.trials);
      row.fraction_connected = static_cast<double>(connected) / k;
      row.mean_isolated_fraction /= k;
      row.mean_largest_component_fraction /= k;
      row.mean_degree /= k;
    } else {
      row.mean_isolated_fraction = row.mean_largest_component_fraction = row.mean_degree = 0.0;
    }
    row.wall_time_ms = options.record_timing ? elapsed : 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline constexpr const char* kSweepCsvHeader =
    "family,r,n,beta_or_p,trials,fraction_connected,mean_isolated_fraction,mean_largest_component_fraction,"
    "mean_degree,status,wall_time_ms";

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    out << to_string(row.family) << ',' << row.r << ',' << row.n << ',' << format_fixed(row.beta_or_p) << ','
        << row.trials << ',' << format_fixed(row.fraction_connected) << ',' << format_fixed(row.mean_isolated_fraction)
        << ',' << format_fixed(row.mean_largest_component_fraction) << ',' << format_fixed(row.mean_degree) << ','
        << row.status << ',' << row.wall_time_ms << '\n';
  }
}

inline nlohmann::json sweep_rows_to_json(const std::vector<SweepRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& row : rows) {
    arr.push_back({{"family", to_string(row.family)},
                   {"r", row.r},
                   {"n", row.n},
                   {"beta_or_p", row.beta_or_p},
                   {"trials", row.trials},
                   {"fraction_connected", row.fraction_connected},
                   {"mean_isolated_fraction", row.mean_isolated_fraction},
                   {"mean_largest_component_fraction", row.mean_largest_component_fraction},
                   {"mean_degree", row.mean_degree},
                   {"status", row.status},
                   {"wall_time_ms", row.wall_time_ms}});
  }
  return arr;
}

}  // namespace rdg

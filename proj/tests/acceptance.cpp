// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rdg/rdg.hpp"

using namespace rdg;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // <= 0: no limit
  std::function<Verdict()> check;
};

std::string fmt(double x, int precision = 6) {
  std::ostringstream s;
  s.precision(precision);
  s << x;
  return s.str();
}

SweepRow single_row(SweepConfig c) {
  const auto rows = run_sweep(c);
  return rows.at(0);
}

std::string run_capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Verdict shell_recursion() {
  for (unsigned r = 1; r <= 4; ++r)
    for (std::uint64_t d = 0; d <= 12; ++d)
      if (shell_count_infinite(r, d) != oracle::infinite_shell(r, d))
        return {false, "mismatch at r=" + std::to_string(r) + " d=" + std::to_string(d)};
  return {true, "52 cases exact"};
}

Verdict finite_shell() {
  const LatticeSpace space(20, 2);
  std::uint64_t cases = 0;
  for (VertexId id = 0; id < space.vertex_count(); ++id) {
    const auto v = space.point_of(id);
    for (std::uint64_t d = 0; d <= 38; ++d, ++cases)
      if (shell_count_finite(space, v, d) != shell_count_finite_bruteforce(space, v, d))
        return {false, "mismatch at v=(" + std::to_string(v.coords[0]) + "," + std::to_string(v.coords[1]) +
                           ") d=" + std::to_string(d)};
  }
  return {cases == 15'600, std::to_string(cases) + " cases exact"};
}

Verdict expected_degree_2d() {
  double worst = 0.0;
  for (std::uint64_t n : {10u, 100u, 1000u}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const auto f = EdgeProbabilityModel::inverse_distance(beta, n);
      const double value = expected_degree_infinite(LatticeSpace(n, 2), f);
      const double nn = static_cast<double>(n);
      const double closed = 4.0 * (2.0 * nn - 2.0) / std::pow(nn, beta);
      const double rel = std::abs(value - closed) / closed;
      worst = std::max(worst, rel);
      if (rel > 1e-12) return {false, "n=" + std::to_string(n) + " beta=" + fmt(beta) + " rel err " + fmt(rel)};
      if (!(value < 8.0 * std::pow(nn, 1.0 - beta)))
        return {false, "bound 8n^{1-beta} violated at n=" + std::to_string(n) + " beta=" + fmt(beta)};
    }
  }
  return {true, "max rel err " + fmt(worst, 3)};
}

Verdict connectivity_phase() {
  SweepConfig c;
  c.model_family = ModelFamily::LatticeInverseDistance;
  c.r = 2;
  c.n_values = {30};
  c.beta_values = {0.5};
  c.trials = 50;
  c.master_seed = 1;
  c.sampler = SamplerKind::Stratified;
  const auto row = single_row(c);
  return {row.status == "ok" && row.fraction_connected >= 0.9,
          "fraction_connected=" + fmt(row.fraction_connected) + " (>= 0.9)"};
}

Verdict isolation_phase() {
  SweepConfig c;
  c.model_family = ModelFamily::LatticeInverseDistance;
  c.r = 2;
  c.n_values = {50};
  c.beta_values = {2.0};
  c.trials = 20;
  c.master_seed = 1;
  c.sampler = SamplerKind::Stratified;
  const auto row = single_row(c);
  return {row.status == "ok" && row.mean_isolated_fraction >= 0.8 && row.fraction_connected == 0.0,
          "mean_isolated_fraction=" + fmt(row.mean_isolated_fraction) + " (>= 0.8), fraction_connected=" +
              fmt(row.fraction_connected) + " (== 0)"};
}

Verdict er_threshold() {
  const double m = 1000.0;
  SweepConfig c;
  c.model_family = ModelFamily::ErdosRenyi;
  c.n_values = {1000};
  c.p_values = {2.0 * std::log(m) / m, 0.5 * std::log(m) / m};
  c.trials = 100;
  c.master_seed = 1;
  const auto rows = run_sweep(c);
  const bool ok = rows[0].fraction_connected >= 0.9 && rows[1].fraction_connected <= 0.1;
  return {ok, "p=2 ln m/m: " + fmt(rows[0].fraction_connected) + " (>= 0.9); p=0.5 ln m/m: " +
                  fmt(rows[1].fraction_connected) + " (<= 0.1)"};
}

Verdict waxman_connectivity() {
  SweepConfig c;
  c.model_family = ModelFamily::Waxman;
  c.r = 2;
  c.n_values = {200};
  c.alpha = 1.0;
  c.beta_values = {1.0};
  c.trials = 50;
  c.master_seed = 1;
  const auto row = single_row(c);
  return {row.status == "ok" && row.fraction_connected == 1.0,
          "fraction_connected=" + fmt(row.fraction_connected) + " (== 1)"};
}

Verdict sampler_equivalence() {
  const LatticeSpace space(10, 2);
  const auto f = EdgeProbabilityModel::inverse_distance(1.0, 10);
  const double expected = expected_edge_count(space, f);
  std::string detail = "E*=" + fmt(expected, 10);
  bool ok = true;
  for (SamplerKind kind : {SamplerKind::Naive, SamplerKind::Stratified}) {
    const int seeds = 200;
    double sum = 0.0;
    double sq = 0.0;
    for (int s = 0; s < seeds; ++s) {
      const auto x = static_cast<double>(
          sample_lattice_graph(space, f, derive_trial_seed(8, static_cast<std::uint64_t>(kind), s), kind).edge_count());
      sum += x;
      sq += x * x;
    }
    const double mean = sum / seeds;
    const double se = std::sqrt((sq - seeds * mean * mean) / (seeds - 1) / seeds);
    const double z = std::abs(mean - expected) / se;
    ok = ok && z < 3.0;
    detail += "; " + to_string(kind) + " mean=" + fmt(mean) + " z=" + fmt(z, 3);
  }

  // Per-pair inclusion frequencies on L_3^2.
  const LatticeSpace small(3, 2);
  const auto g = EdgeProbabilityModel::inverse_distance(1.0, 3);
  const std::uint64_t v = small.vertex_count();
  const int seeds = 2000;
  std::vector<std::array<int, 2>> hits(v * v, {0, 0});
  for (int s = 0; s < seeds; ++s) {
    for (SamplerKind kind : {SamplerKind::Naive, SamplerKind::Stratified}) {
      const auto k = static_cast<std::size_t>(kind);
      const auto graph = sample_lattice_graph(small, g, derive_trial_seed(9, k, s), kind);
      for (const Edge& e : graph.edges()) ++hits[e.u * v + e.v][k];
    }
  }
  double worst = 0.0;
  for (VertexId a = 0; a < v; ++a) {
    for (VertexId b = a + 1; b < v; ++b) {
      const double p1 = hits[a * v + b][0] / static_cast<double>(seeds);
      const double p2 = hits[a * v + b][1] / static_cast<double>(seeds);
      const double se = std::sqrt((p1 * (1 - p1) + p2 * (1 - p2)) / seeds);
      const double z = se > 0 ? std::abs(p1 - p2) / se : (p1 == p2 ? 0.0 : INFINITY);
      worst = std::max(worst, z);
    }
  }
  ok = ok && worst < 4.0;
  detail += "; 3x3 per-pair max z=" + fmt(worst, 3);
  return {ok, detail};
}

Verdict coupled_monotonicity() {
  const LatticeSpace space(15, 2);
  const auto low = EdgeProbabilityModel::inverse_distance(0.5, 15);
  const auto high = EdgeProbabilityModel::inverse_distance(1.5, 15);
  for (Seed seed = 0; seed < 20; ++seed) {
    const auto dense = sample_lattice_graph_naive(space, low, seed, true);
    const auto sparse = sample_lattice_graph_naive(space, high, seed, true);
    if (!std::includes(dense.edges().begin(), dense.edges().end(), sparse.edges().begin(), sparse.edges().end()))
      return {false, "subset violated at seed " + std::to_string(seed)};
  }
  return {true, "20/20 seeds nested"};
}

Verdict determinism() {
  const std::string cli = RDG_CLI_PATH;
  int st1 = 0;
  int st2 = 0;
  const std::string gen = cli + " generate --family lattice --n 20 --r 2 --beta 0.8 --seed 42";
  const auto a = run_capture(gen, st1);
  const auto b = run_capture(gen, st2);
  if (st1 != 0 || st2 != 0 || a.empty()) return {false, "generate failed"};
  if (a != b) return {false, "generate outputs differ"};

  const auto cfg = std::filesystem::temp_directory_path() / "rdg_acceptance_sweep.json";
  {
    std::ofstream out(cfg);
    out << R"({"model_family":"lattice-inverse-distance","r":2,"n_values":[8,12,16],)"
        << R"("beta_values":[0.25,0.75,1.25,1.75],"trials":16,"master_seed":7,"sampler":"stratified"})";
  }
  const auto one = run_capture(cli + " sweep --config " + cfg.string() + " --threads 1", st1);
  const auto eight = run_capture(cli + " sweep --config " + cfg.string() + " --threads 8", st2);
  std::filesystem::remove(cfg);
  if (st1 != 0 || st2 != 0 || one.empty()) return {false, "sweep failed"};
  if (one != eight) return {false, "sweep CSV differs between --threads 1 and 8"};
  return {true, "edge list " + std::to_string(a.size()) + " bytes, sweep CSV " + std::to_string(one.size()) +
                    " bytes, both byte-identical"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "shell recursion exactness", 5.0, shell_recursion},
      {2, "finite shell exactness on L_20^2", 10.0, finite_shell},
      {3, "expected degree r=2 closed form and bound", 0.0, expected_degree_2d},
      {4, "connectivity phase r=2 n=30 beta=0.5", 120.0, connectivity_phase},
      {5, "isolation phase r=2 n=50 beta=2", 60.0, isolation_phase},
      {6, "Erdos-Renyi threshold m=1000", 120.0, er_threshold},
      {7, "Waxman connectivity 200 points", 30.0, waxman_connectivity},
      {8, "naive/stratified sampler equivalence", 0.0, sampler_equivalence},
      {9, "coupled monotonicity on L_15^2", 0.0, coupled_monotonicity},
      {10, "CLI determinism", 0.0, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      v.ok = false;
      v.detail += "; over time limit " + fmt(c.time_limit_s) + " s";
    }
    failed += !v.ok;
    std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.name << " (" << fmt(secs, 3) << " s): "
              << v.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

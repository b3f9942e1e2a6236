#pragma once

// Command-line front end. run_cli is kept separate from main() so tests can
// drive it with in-memory streams.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdg/rdg.hpp"

namespace rdg::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCapacity = 2 };

inline LatticePoint parse_vertex(const std::string& text) {
  LatticePoint p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      p.coords.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidInput("--vertex: cannot parse '" + text + "'");
    }
  }
  detail::require(!p.coords.empty(), "--vertex: empty");
  return p;
}

inline nlohmann::json summary_to_json(const ComponentSummary& s) {
  auto hist = nlohmann::json::array();
  for (const auto& [deg, count] : s.degree_histogram) hist.push_back({{"degree", deg}, {"count", count}});
  return {{"vertex_count", s.vertex_count},
          {"edge_count", s.edge_count},
          {"component_count", s.component_count},
          {"largest_component_size", s.largest_component_size},
          {"isolated_count", s.isolated_count},
          {"connected", s.connected()},
          {"mean_degree", format_fixed(s.mean_degree)},
          {"degree_histogram", hist}};
}

// Writes to --out when given, otherwise to the default stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InvalidInput("cannot open output file '" + path + "'");
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random distance graphs on integer lattices: exact shell counts, samplers, connectivity sweeps",
               "rdg"};
  app.require_subcommand(1);

  // count-shell
  unsigned cs_r = 0;
  std::uint64_t cs_d = 0;
  std::uint64_t cs_n = 0;
  std::string cs_vertex;
  auto* count_shell = app.add_subcommand("count-shell", "Points at l1 distance d: in Z^r, or in L_n^r around --vertex");
  count_shell->add_option("--r", cs_r, "Dimension")->required()->check(CLI::PositiveNumber);
  count_shell->add_option("--d", cs_d, "Distance")->required();
  auto* cs_n_opt = count_shell->add_option("--n", cs_n, "Box side length")->check(CLI::PositiveNumber);
  count_shell->add_option("--vertex", cs_vertex, "Centre vertex x,y,... (finite box count)")->needs(cs_n_opt);

  // pair-table
  unsigned pt_r = 0;
  std::uint64_t pt_n = 0;
  std::string pt_format = "csv";
  std::string pt_out;
  auto* pair_table = app.add_subcommand("pair-table", "Unordered vertex pairs of L_n^r by distance");
  pair_table->add_option("--n", pt_n, "Box side length")->required()->check(CLI::PositiveNumber);
  pair_table->add_option("--r", pt_r, "Dimension")->required()->check(CLI::PositiveNumber);
  pair_table->add_option("--format", pt_format)->check(CLI::IsMember({"csv", "json"}));
  pair_table->add_option("--out", pt_out, "Output path");

  // degree
  unsigned dg_r = 0;
  std::uint64_t dg_n = 0;
  double dg_beta = 0.0;
  bool dg_infinite = false;
  std::string dg_vertex;
  auto* degree = app.add_subcommand("degree", "Expected degree under f(d) = 1/(n^beta d)");
  degree->add_option("--r", dg_r, "Dimension")->required()->check(CLI::PositiveNumber);
  degree->add_option("--n", dg_n, "Box side length")->required()->check(CLI::PositiveNumber);
  degree->add_option("--beta", dg_beta, "Exponent beta")->required();
  auto* dg_inf_opt = degree->add_flag("--infinite", dg_infinite, "Z^r with pairs beyond r(n-1) removed");
  degree->add_option("--vertex", dg_vertex, "Vertex x,y,... inside L_n^r")->excludes(dg_inf_opt);

  // generate
  std::string gen_family = "lattice";
  std::uint64_t gen_n = 0;
  unsigned gen_r = 2;
  std::optional<double> gen_beta;
  double gen_alpha = 1.0;
  std::optional<double> gen_p;
  Seed gen_seed = 0;
  std::string gen_sampler = "stratified";
  bool gen_coupled = false;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Sample one graph and write its edge list");
  generate->add_option("--family", gen_family, "lattice | waxman | er")
      ->check(CLI::IsMember({"lattice", "waxman", "er"}));
  generate->add_option("--n", gen_n, "Lattice side, number of Waxman points, or ER vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("--r", gen_r, "Dimension (lattice, waxman)")->check(CLI::PositiveNumber);
  generate->add_option("--beta", gen_beta, "Lattice exponent beta, or Waxman decay beta_w");
  generate->add_option("--alpha", gen_alpha, "Waxman alpha");
  generate->add_option("--p", gen_p, "Edge probability (er)");
  generate->add_option("--seed", gen_seed, "Random seed")->required();
  generate->add_option("--sampler", gen_sampler,
                       "naive (every pair; capped at 100000 vertices) | stratified (per-distance binomial)")
      ->check(CLI::IsMember({"naive", "stratified"}));
  generate->add_flag("--coupled", gen_coupled, "Key each pair's draw on (seed, pair) so models nest; needs naive");
  generate->add_option("--out", gen_out, "Output path");

  // analyze
  std::string an_input;
  std::string an_format = "json";
  std::string an_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Components and degree statistics of an edge list");
  analyze_cmd->add_option("input", an_input, "Edge list file (default: stdin)");
  analyze_cmd->add_option("--format", an_format)->check(CLI::IsMember({"json"}));
  analyze_cmd->add_option("--out", an_out, "Output path");

  // sweep
  std::string sw_config;
  std::string sw_family = "lattice";
  unsigned sw_r = 2;
  std::vector<std::uint64_t> sw_n;
  std::vector<double> sw_beta;
  std::vector<double> sw_p;
  double sw_alpha = 1.0;
  std::uint64_t sw_trials = 1;
  std::optional<Seed> sw_seed;
  std::string sw_sampler = "stratified";
  bool sw_coupled = false;
  unsigned sw_threads = 1;
  bool sw_timing = false;
  std::string sw_format = "csv";
  std::string sw_out;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo connectivity sweep over an (n, beta|p) grid");
  auto* cfg_opt = sweep->add_option("--config", sw_config, "JSON sweep config")->check(CLI::ExistingFile);
  sweep->add_option("--family", sw_family, "lattice | waxman | er")
      ->check(CLI::IsMember({"lattice", "waxman", "er"}))
      ->excludes(cfg_opt);
  sweep->add_option("--r", sw_r, "Dimension")->excludes(cfg_opt);
  sweep->add_option("--n", sw_n, "Comma-separated n values")->delimiter(',')->excludes(cfg_opt);
  sweep->add_option("--beta", sw_beta, "Comma-separated beta (or Waxman beta_w) values")
      ->delimiter(',')
      ->excludes(cfg_opt);
  sweep->add_option("--p", sw_p, "Comma-separated p values (er)")->delimiter(',')->excludes(cfg_opt);
  sweep->add_option("--alpha", sw_alpha, "Waxman alpha")->excludes(cfg_opt);
  sweep->add_option("--trials", sw_trials, "Trials per grid point")->excludes(cfg_opt);
  sweep->add_option("--seed", sw_seed, "Master seed")->excludes(cfg_opt);
  sweep->add_option("--sampler", sw_sampler, "naive (capped at 100000 vertices) | stratified")
      ->check(CLI::IsMember({"naive", "stratified"}))
      ->excludes(cfg_opt);
  sweep->add_flag("--coupled", sw_coupled, "Share randomness across the parameter grid (naive sampler)")
      ->excludes(cfg_opt);
  sweep->add_option("--threads", sw_threads, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--timing", sw_timing, "Fill wall_time_ms (output is then no longer reproducible)");
  sweep->add_option("--format", sw_format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", sw_out, "Output path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (count_shell->parsed()) {
      if (!cs_vertex.empty()) {
        const LatticeSpace space(cs_n, cs_r);
        out << shell_count_finite(space, parse_vertex(cs_vertex), cs_d) << '\n';
      } else {
        out << shell_count_infinite(cs_r, cs_d) << '\n';
      }
    } else if (pair_table->parsed()) {
      const auto table = pair_count_by_distance(LatticeSpace(pt_n, pt_r));
      Output o(pt_out, out);
      if (pt_format == "csv") {
        o.stream() << "d,pairs\n";
        for (std::size_t d = 1; d < table.size(); ++d) o.stream() << d << ',' << table[d] << '\n';
      } else {
        auto arr = nlohmann::json::array();
        for (std::size_t d = 1; d < table.size(); ++d) arr.push_back({{"d", d}, {"pairs", table[d]}});
        o.stream() << arr.dump(2) << '\n';
      }
    } else if (degree->parsed()) {
      const LatticeSpace space(dg_n, dg_r);
      const auto model = EdgeProbabilityModel::inverse_distance(dg_beta, dg_n);
      double value = 0.0;
      if (dg_infinite) {
        value = expected_degree_infinite(space, model);
      } else {
        detail::require(!dg_vertex.empty(), "degree: give --vertex or --infinite");
        value = expected_degree(space, model, parse_vertex(dg_vertex));
      }
      out << format_fixed(value) << '\n';
    } else if (generate->parsed()) {
      Output o(gen_out, out);
      if (gen_family == "lattice") {
        detail::require(gen_beta.has_value(), "generate: lattice family needs --beta");
        const auto model = EdgeProbabilityModel::inverse_distance(*gen_beta, gen_n);
        write_edge_list(o.stream(), sample_lattice_graph(LatticeSpace(gen_n, gen_r), model, gen_seed,
                                                         parse_sampler_kind(gen_sampler), gen_coupled));
      } else if (gen_family == "waxman") {
        const auto model = EdgeProbabilityModel::waxman(gen_alpha, gen_beta.value_or(1.0));
        write_edge_list(o.stream(), sample_waxman_graph(gen_n, gen_r, model, gen_seed).graph);
      } else {
        detail::require(gen_p.has_value(), "generate: er family needs --p");
        write_edge_list(o.stream(), sample_er_graph(gen_n, *gen_p, gen_seed));
      }
    } else if (analyze_cmd->parsed()) {
      std::optional<SampledGraph> graph;
      if (an_input.empty() || an_input == "-") {
        graph.emplace(read_edge_list(in));
      } else {
        std::ifstream file(an_input);
        detail::require(static_cast<bool>(file), "cannot open '" + an_input + "'");
        graph.emplace(read_edge_list(file));
      }
      Output o(an_out, out);
      o.stream() << summary_to_json(analyze(*graph)).dump(2) << '\n';
    } else if (sweep->parsed()) {
      SweepConfig config;
      if (!sw_config.empty()) {
        std::ifstream file(sw_config);
        nlohmann::json j;
        try {
          file >> j;
        } catch (const nlohmann::json::exception& e) {
          throw InvalidInput(std::string("cannot parse config: ") + e.what());
        }
        config = j.get<SweepConfig>();
      } else {
        detail::require(sw_seed.has_value(), "sweep: --seed is required");
        config.model_family = parse_model_family(sw_family);
        config.r = sw_r;
        config.n_values = sw_n;
        config.beta_values = sw_beta;
        config.p_values = sw_p;
        config.alpha = sw_alpha;
        config.trials = sw_trials;
        config.master_seed = *sw_seed;
        config.sampler = parse_sampler_kind(sw_sampler);
        config.coupled = sw_coupled;
      }
      const auto rows = run_sweep(config, {sw_threads, sw_timing});
      Output o(sw_out, out);
      if (sw_format == "csv")
        write_sweep_csv(o.stream(), rows);
      else
        o.stream() << sweep_rows_to_json(rows).dump(2) << '\n';
      const bool failed = std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.status != "ok"; });
      if (failed) {
        err << "capacity error: some grid points could not be sampled (see status column)\n";
        return kCapacity;
      }
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const CountOverflow& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace rdg::cli

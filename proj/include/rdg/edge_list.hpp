#pragma once

// Plain-text edge lists:
//
//   # vertices=<V> model=<desc> seed=<s>
//   u v
//   ...
//
// with u < v and lines in ascending lexicographic order.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rdg/errors.hpp"
#include "rdg/sampled_graph.hpp"

namespace rdg {

inline void write_edge_list(std::ostream& out, const SampledGraph& g) {
  out << "# vertices=" << g.vertex_count() << " model=" << g.provenance().model << " seed=" << g.provenance().seed
      << '\n';
  std::string buf;
  for (const Edge& e : g.edges()) {
    buf.clear();
    buf += std::to_string(e.u);
    buf += ' ';
    buf += std::to_string(e.v);
    buf += '\n';
    out << buf;
  }
}

inline SampledGraph read_edge_list(std::istream& in) {
  std::string line;
  std::uint64_t vertices = 0;
  bool have_header = false;
  Provenance prov;
  prov.sampler = "file";
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (have_header) continue;
      std::istringstream fields(line.substr(1));
      std::string tok;
      while (fields >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        try {
          if (key == "vertices") {
            vertices = std::stoull(value);
            have_header = true;
          } else if (key == "model") {
            prov.model = value;
          } else if (key == "seed") {
            prov.seed = std::stoull(value);
          }
        } catch (const std::logic_error&) {
          throw InvalidInput("edge list: bad header field '" + tok + "'");
        }
      }
      continue;
    }
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0)
      throw InvalidInput("edge list: malformed line " + std::to_string(lineno) + ": '" + line + "'");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  detail::require(have_header, "edge list: missing '# vertices=<V>' header");
  return SampledGraph(vertices, std::move(edges), std::move(prov));
}

}  // namespace rdg

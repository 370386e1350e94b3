#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twolevel/configuration.hpp"
#include "twolevel/rational.hpp"

namespace tl {

using Edge = std::pair<std::size_t, std::size_t>;  // u < v, nodes 0..n-1
using StableSet = std::vector<std::size_t>;        // sorted node list

class BipartiteGraph {
 public:
  // Throws InvalidArgument on loops, repeated edges or bad node ids and
  // NotBipartite when no proper 2-coloring exists.
  BipartiteGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& coloring() const noexcept { return coloring_; }
  std::size_t degree(std::size_t v) const;
  bool adjacent(std::size_t u, std::size_t v) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<int> coloring_;
  std::vector<std::uint32_t> neighbors_;  // bitmask per node
};

// `n` on the first line, then one `u v` pair per line with nodes 1..n.
BipartiteGraph parse_graph(const std::string& text);
std::string format_graph(const BipartiteGraph& g);

// All stable sets, ordered by characteristic vector.
std::vector<StableSet> stable_sets(const BipartiteGraph& g);

// Rows x_v >= 0 and 1 - x_u - x_v >= 0 for every edge, columns the stable
// sets. Throws IsolatedNode.
SlackMatrix stab_basic_slack(const BipartiteGraph& g);

// Slack matrix of the homogenized maximal pair over the stable-set vertices
// (rows include the trivial ones, columns the origin).
SlackMatrix stab_maximal_slack(const BipartiteGraph& g);

// Vertices on exactly n facets of the basic description; isolated nodes
// contribute the facet x_v <= 1.
std::vector<StableSet> simple_vertices(const BipartiteGraph& g);

// Vertices adjacent to the origin on STAB(G), from facet incidences.
std::vector<StableSet> zero_vertex_neighbors(const BipartiteGraph& g);

struct CensusReport {
  std::size_t n = 0;
  std::uint64_t labeled_bipartite = 0;
  std::uint64_t min_degree_two = 0;
  std::uint64_t isomorphism_classes = 0;
  std::uint64_t distinct_forms = 0;
  Rat upper_exponent;      // n^2/4 + n
  double lower_exponent;   // n^2/4 + n - 2 log2 n
  bool lower_holds = false;
  bool upper_holds = false;
};

// Exhaustive scan of all graphs on n <= 7 labeled nodes.
CensusReport census(std::size_t n, unsigned jobs = 1);
std::string census_json(const CensusReport& r);

}  // namespace tl

#include "twolevel/stabset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "twolevel/canon.hpp"
#include "twolevel/errors.hpp"
#include "twolevel/geom.hpp"
#include "twolevel/parallel.hpp"

namespace tl {
namespace {

constexpr std::size_t kMaxNodes = 32;
constexpr std::size_t kMaxCensusNodes = 7;

RatVector characteristic(const StableSet& s, std::size_t n) {
  RatVector v(n, Rat(0));
  for (auto u : s) v[u] = 1;
  return v;
}

struct Row {
  RatVector normal;  // <normal, x> >= rhs
  Rat rhs;
};

// Basic description; x_v <= 1 is added for isolated nodes when asked.
std::vector<Row> basic_rows(const BipartiteGraph& g, bool box_isolated) {
  std::vector<Row> rows;
  for (std::size_t v = 0; v < g.n(); ++v) {
    RatVector a(g.n(), Rat(0));
    a[v] = 1;
    rows.push_back({std::move(a), 0});
  }
  for (const auto& [u, v] : g.edges()) {
    RatVector a(g.n(), Rat(0));
    a[u] = a[v] = -1;
    rows.push_back({std::move(a), -1});
  }
  if (box_isolated) {
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (g.degree(v) != 0) continue;
      RatVector a(g.n(), Rat(0));
      a[v] = -1;
      rows.push_back({std::move(a), -1});
    }
  }
  return rows;
}

// Zero pattern of each vertex against the rows.
std::vector<std::vector<bool>> tight_sets(const std::vector<Row>& rows, const std::vector<StableSet>& sets, std::size_t n) {
  std::vector<std::vector<bool>> out;
  for (const auto& s : sets) {
    const RatVector x = characteristic(s, n);
    std::vector<bool> z(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) z[i] = dot(rows[i].normal, x) == rows[i].rhs;
    out.push_back(std::move(z));
  }
  return out;
}

std::size_t edge_index(std::size_t u, std::size_t v, std::size_t n) {
  // Pairs (u, v), u < v, in lexicographic order.
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

struct MaskGraph {
  std::size_t n;
  std::vector<std::uint32_t> adj;
};

MaskGraph decode_mask(std::uint32_t mask, std::size_t n) {
  MaskGraph g{n, std::vector<std::uint32_t>(n, 0)};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if ((mask >> edge_index(u, v, n)) & 1U) {
        g.adj[u] |= 1U << v;
        g.adj[v] |= 1U << u;
      }
  return g;
}

bool is_bipartite_mask(const MaskGraph& g) {
  std::vector<int> color(g.n, -1);
  for (std::size_t s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::uint32_t rest = g.adj[u]; rest; rest &= rest - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(rest));
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool min_degree_two(const MaskGraph& g) {
  return std::all_of(g.adj.begin(), g.adj.end(), [](auto a) { return std::popcount(a) >= 2; });
}

std::uint32_t relabel(std::uint32_t mask, const std::vector<std::size_t>& perm, std::size_t n) {
  std::uint32_t out = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if ((mask >> edge_index(u, v, n)) & 1U) {
        const auto a = std::min(perm[u], perm[v]);
        const auto b = std::max(perm[u], perm[v]);
        out |= 1U << edge_index(a, b, n);
      }
  return out;
}

BipartiteGraph graph_of_mask(std::uint32_t mask, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if ((mask >> edge_index(u, v, n)) & 1U) edges.emplace_back(u, v);
  return BipartiteGraph(n, std::move(edges));
}

struct ChunkCounts {
  std::uint64_t bipartite = 0;
  std::vector<std::uint32_t> min_two;
};

}  // namespace

BipartiteGraph::BipartiteGraph(std::size_t n, std::vector<Edge> edges) : n_(n), neighbors_(n, 0) {
  if (n > kMaxNodes) throw Error(ErrorCode::DimensionTooLarge, "graphs are limited to 32 nodes");
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::InvalidArgument, "loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::InvalidArgument, "parallel edges are not allowed");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    neighbors_[u] |= 1U << v;
    neighbors_[v] |= 1U << u;
  }
  coloring_.assign(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (coloring_[s] >= 0) continue;
    coloring_[s] = 0;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (!adjacent(u, v)) continue;
        if (coloring_[v] < 0) {
          coloring_[v] = 1 - coloring_[u];
          queue.push(v);
        } else if (coloring_[v] == coloring_[u]) {
          throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");
        }
      }
    }
  }
}

std::size_t BipartiteGraph::degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(neighbors_.at(v))); }

bool BipartiteGraph::adjacent(std::size_t u, std::size_t v) const { return (neighbors_.at(u) >> v) & 1U; }

BipartiteGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("invalid integer '" + tok + "'", line_no, line.find(tok) + 1);
      }
    }
    if (n < 0) {
      if (values.size() != 1 || values[0] < 0) throw ParseError("first line must be the node count", line_no, 1);
      n = values[0];
      continue;
    }
    if (values.size() != 2) throw ParseError("edge lines must hold two node ids", line_no, 1);
    for (auto x : values)
      if (x < 1 || x > n) throw ParseError("node id out of range 1.." + std::to_string(n), line_no, 1);
    edges.emplace_back(static_cast<std::size_t>(values[0] - 1), static_cast<std::size_t>(values[1] - 1));
  }
  if (n < 0) throw ParseError("missing node count", 1, 1);
  return BipartiteGraph(static_cast<std::size_t>(n), std::move(edges));
}

std::string format_graph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << g.n() << "\n";
  for (const auto& [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::vector<StableSet> stable_sets(const BipartiteGraph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) > g.degree(b); });

  std::vector<StableSet> out;
  StableSet current;
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      StableSet s = current;
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    const std::size_t v = order[pos];
    self(self, pos + 1);
    if (std::none_of(current.begin(), current.end(), [&](auto u) { return g.adjacent(u, v); })) {
      current.push_back(v);
      self(self, pos + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return characteristic(a, n) < characteristic(b, n); });
  return out;
}

SlackMatrix stab_basic_slack(const BipartiteGraph& g) {
  for (std::size_t v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) throw Error(ErrorCode::IsolatedNode, "node " + std::to_string(v + 1) + " is isolated");
  std::vector<Row> rows = basic_rows(g, false);
  std::vector<RatVector> labels;
  for (const auto& r : rows) {
    RatVector l = r.normal;
    l.push_back(r.rhs);
    labels.push_back(std::move(l));
  }
  std::vector<std::size_t> row_order(rows.size());
  std::iota(row_order.begin(), row_order.end(), 0);
  std::sort(row_order.begin(), row_order.end(), [&](auto a, auto b) { return labels[a] < labels[b]; });

  const auto sets = stable_sets(g);
  SlackMatrix s{BinaryMatrix(rows.size(), sets.size()), {}, {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[row_order[i]];
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const Rat slack = dot(r.normal, characteristic(sets[j], g.n())) - r.rhs;
      if (slack != 0 && slack != 1) throw Error(ErrorCode::NonBinarySlack, "stable set slack outside {0,1}");
      s.matrix.set(i, j, slack == 1);
    }
    s.row_labels.push_back(labels[row_order[i]]);
  }
  for (const auto& set : sets) s.col_labels.push_back(characteristic(set, g.n()));
  return s;
}

SlackMatrix stab_maximal_slack(const BipartiteGraph& g) {
  if (g.n() == 0) throw Error(ErrorCode::InvalidArgument, "graph has no nodes");
  std::vector<RatVector> verts;
  for (const auto& set : stable_sets(g)) verts.push_back(characteristic(set, g.n()));
  return slack_matrix(polytope_to_configuration(complete_maximal_pair(verts)));
}

std::vector<StableSet> simple_vertices(const BipartiteGraph& g) {
  const auto rows = basic_rows(g, true);
  const auto sets = stable_sets(g);
  const auto tight = tight_sets(rows, sets, g.n());
  std::vector<StableSet> out;
  for (std::size_t j = 0; j < sets.size(); ++j)
    if (static_cast<std::size_t>(std::count(tight[j].begin(), tight[j].end(), true)) == g.n()) out.push_back(sets[j]);
  return out;
}

std::vector<StableSet> zero_vertex_neighbors(const BipartiteGraph& g) {
  const auto rows = basic_rows(g, true);
  const auto sets = stable_sets(g);
  const auto tight = tight_sets(rows, sets, g.n());
  // sets[0] is the empty set, the origin.
  std::vector<StableSet> out;
  for (std::size_t w = 1; w < sets.size(); ++w) {
    std::vector<bool> common(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) common[i] = tight[0][i] && tight[w][i];
    bool adjacent = true;
    for (std::size_t x = 1; x < sets.size() && adjacent; ++x) {
      if (x == w) continue;
      bool contained = true;
      for (std::size_t i = 0; i < rows.size() && contained; ++i) contained = !common[i] || tight[x][i];
      if (contained) adjacent = false;
    }
    if (adjacent) out.push_back(sets[w]);
  }
  return out;
}

CensusReport census(std::size_t n, unsigned jobs) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "census needs at least one node");
  if (n > kMaxCensusNodes) throw Error(ErrorCode::DimensionTooLarge, "census supports n <= 7");
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;

  auto chunks = parallel_map_chunks(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    ChunkCounts c;
    for (std::uint64_t m = begin; m < end; ++m) {
      const auto mask = static_cast<std::uint32_t>(m);
      const MaskGraph g = decode_mask(mask, n);
      if (!is_bipartite_mask(g)) continue;
      ++c.bipartite;
      if (min_degree_two(g)) c.min_two.push_back(mask);
    }
    return c;
  });

  CensusReport r;
  r.n = n;
  std::vector<std::uint32_t> min_two;
  for (auto& c : chunks) {
    r.labeled_bipartite += c.bipartite;
    min_two.insert(min_two.end(), c.min_two.begin(), c.min_two.end());
  }
  r.min_degree_two = min_two.size();

  // Masks arrive in increasing order, so the first unseen mask of a class is its least member.
  std::vector<std::uint32_t> reps;
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::size_t> perm(n);
  for (auto mask : min_two) {
    if (seen.count(mask)) continue;
    reps.push_back(mask);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      seen.insert(relabel(mask, perm, n));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  r.isomorphism_classes = reps.size();

  auto forms = parallel_map_chunks(reps.size(), jobs, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<CanonicalForm> out;
    for (std::uint64_t i = begin; i < end; ++i) out.push_back(canonical_form(stab_maximal_slack(graph_of_mask(reps[i], n)).matrix));
    return out;
  });
  std::set<CanonicalForm> distinct;
  for (auto& chunk : forms) distinct.insert(chunk.begin(), chunk.end());
  r.distinct_forms = distinct.size();

  // count <= 2^(n^2/4 + n) iff count^4 <= 2^(n^2 + 4n); the lower bound
  // 2^(n^2/4 + n) / n^2 <= count iff 2^(n^2 + 4n) <= (count n^2)^4.
  const unsigned long e4 = static_cast<unsigned long>(n * n + 4 * n);
  Int pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, e4);
  const Int count(static_cast<unsigned long>(r.labeled_bipartite));
  Int c4 = count * count * count * count;
  Int scaled = count * static_cast<unsigned long>(n * n);
  Int s4 = scaled * scaled * scaled * scaled;
  r.upper_holds = c4 <= pow2;
  r.lower_holds = pow2 <= s4;
  r.upper_exponent = Rat(static_cast<long>(n * n), 4) + static_cast<long>(n);
  r.upper_exponent.canonicalize();
  r.lower_exponent = r.upper_exponent.get_d() - 2.0 * std::log2(static_cast<double>(n));
  return r;
}

std::string census_json(const CensusReport& r) {
  nlohmann::ordered_json j;
  j["d"] = r.n;
  j["labeled_bipartite"] = r.labeled_bipartite;
  j["min_degree_two"] = r.min_degree_two;
  j["isomorphism_classes"] = r.isomorphism_classes;
  j["distinct_maximal_slack_forms"] = r.distinct_forms;
  j["upper_log2"] = format_rat(r.upper_exponent);
  j["lower_log2"] = format_rat(r.upper_exponent) + " - 2*log2(" + std::to_string(r.n) + ")";
  std::ostringstream lower;
  lower.precision(6);
  lower << std::fixed << r.lower_exponent;
  j["lower_log2_approx"] = lower.str();
  j["lower_bound_holds"] = r.lower_holds;
  j["upper_bound_holds"] = r.upper_holds;
  return j.dump(2);
}

}  // namespace tl

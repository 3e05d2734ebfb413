#include "rspin/strata.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "rspin/field.hpp"
#include "rspin/twists.hpp"

namespace rspin {

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Leg> legs)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), legs_(std::move(legs)) {
  if (vertices_.empty()) throw Error("dual graph has no vertices");
  for (const Vertex& v : vertices_) {
    if (v.genus < 0) throw Error("vertex '" + v.id + "' has negative genus");
  }
  for (const Edge& e : edges_) {
    if (e.from >= vertices_.size() || e.to >= vertices_.size()) {
      throw Error("edge references a missing vertex");
    }
  }
  std::vector<bool> seen(legs_.size(), false);
  for (const Leg& leg : legs_) {
    if (leg.vertex >= vertices_.size()) throw Error("leg references a missing vertex");
    if (leg.marking < 1 || leg.marking > static_cast<int>(legs_.size()) ||
        seen[static_cast<std::size_t>(leg.marking - 1)]) {
      throw Error("leg markings must be a permutation of 1.." + std::to_string(legs_.size()));
    }
    seen[static_cast<std::size_t>(leg.marking - 1)] = true;
  }
}

int DualGraph::valence(std::size_t v) const {
  int val = 0;
  for (const Leg& leg : legs_) val += leg.vertex == v ? 1 : 0;
  for (const Edge& e : edges_) val += (e.from == v ? 1 : 0) + (e.to == v ? 1 : 0);
  return val;
}

bool DualGraph::is_connected() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Edge& e : edges_) parent[find(e.from)] = find(e.to);
  const std::size_t root = find(0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

int graph_genus(const DualGraph& graph) {
  if (!graph.is_connected()) throw Error("graph_genus: dual graph is disconnected");
  int g = 0;
  for (const Vertex& v : graph.vertices()) g += v.genus;
  return g + static_cast<int>(graph.edges().size()) - static_cast<int>(graph.vertices().size()) + 1;
}

bool stability_check(const DualGraph& graph) {
  for (std::size_t v = 0; v < graph.vertices().size(); ++v) {
    if (2 * graph.vertices()[v].genus - 2 + graph.valence(v) <= 0) return false;
  }
  if (!graph.is_connected()) return false;
  return 2 * graph_genus(graph) - 2 + graph.marking_count() > 0;
}

ChiResult chi(int g, int n, int r, const std::vector<int>& m) {
  if (r < 1) throw Error("chi: r must be positive");
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
    throw Error("chi: unstable (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")");
  }
  if (static_cast<int>(m.size()) != n) throw Error("chi: type vector must have n entries");
  ChiResult result;
  result.numerator = 2L * g - 2 + n - std::accumulate(m.begin(), m.end(), 0L);
  result.integral = result.numerator % r == 0;
  if (result.integral) result.value = 1 - g + result.numerator / r;
  return result;
}

bool vertex_degree_test(std::size_t vertex, const DualGraph& graph,
                        const TwistAssignment& assignment, int r) {
  if (vertex >= graph.vertices().size()) throw Error("vertex_degree_test: no such vertex");
  if (assignment.leg_twists.size() != graph.legs().size() ||
      assignment.edge_twists.size() != graph.edges().size()) {
    throw Error("vertex_degree_test: assignment is missing twist data");
  }
  long degree = 2L * graph.vertices()[vertex].genus - 2 + graph.valence(vertex);
  for (const Leg& leg : graph.legs()) {
    if (leg.vertex == vertex)
      degree -= assignment.leg_twists[static_cast<std::size_t>(leg.marking - 1)];
  }
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const Edge& edge = graph.edges()[e];
    if (edge.from == vertex) degree -= assignment.edge_twists[e].first;
    if (edge.to == vertex) degree -= assignment.edge_twists[e].second;
  }
  return positive_mod(degree, r) == 0;
}

namespace {

/// Assignments whose first edge carries twist `first` (or all, with no edges).
std::vector<TwistAssignment> enumerate_branch(const DualGraph& graph, int r,
                                              const std::vector<int>& legs, int first) {
  const std::size_t edge_count = graph.edges().size();
  std::vector<TwistAssignment> out;
  TwistAssignment current{legs, std::vector<std::pair<int, int>>(edge_count)};
  std::vector<int> k(edge_count, 0);
  if (edge_count > 0) k[0] = first;
  for (;;) {
    for (std::size_t e = 0; e < edge_count; ++e)
      current.edge_twists[e] = {k[e], balanced_partner(k[e], r)};
    bool admissible = true;
    for (std::size_t v = 0; v < graph.vertices().size() && admissible; ++v) {
      admissible = vertex_degree_test(v, graph, current, r);
    }
    if (admissible) out.push_back(current);
    // Odometer over edges 1.. (edge 0 is fixed per branch), last edge fastest.
    bool exhausted = true;
    for (std::size_t pos = edge_count; pos > 1; --pos) {
      if (++k[pos - 1] < r) {
        exhausted = false;
        break;
      }
      k[pos - 1] = 0;
    }
    if (exhausted) break;
  }
  return out;
}

}  // namespace

std::vector<TwistAssignment> enumerate_assignments(const DualGraph& graph, int r,
                                                   const std::vector<int>& m,
                                                   EnumerationOptions options) {
  if (r < 1) throw Error("enumerate_assignments: r must be positive");
  if (static_cast<int>(m.size()) != graph.marking_count()) {
    throw Error("enumerate_assignments: type vector has " + std::to_string(m.size()) +
                " entries, graph has " + std::to_string(graph.marking_count()) + " markings");
  }
  if (!stability_check(graph)) throw Error("enumerate_assignments: graph is not stable");
  std::vector<int> legs(m.size());
  std::transform(m.begin(), m.end(), legs.begin(), [r](int mi) { return positive_mod(mi, r); });

  const int branches = graph.edges().empty() ? 1 : r;
  std::vector<std::vector<TwistAssignment>> parts(static_cast<std::size_t>(branches));
  if (options.workers <= 1 || branches == 1) {
    for (int b = 0; b < branches; ++b)
      parts[static_cast<std::size_t>(b)] = enumerate_branch(graph, r, legs, b);
  } else {
    std::vector<std::future<std::vector<TwistAssignment>>> futures;
    for (int b = 0; b < branches; ++b) {
      futures.push_back(std::async(std::launch::async, enumerate_branch, std::cref(graph), r,
                                   std::cref(legs), b));
    }
    for (std::size_t b = 0; b < futures.size(); ++b) parts[b] = futures[b].get();
  }
  std::vector<TwistAssignment> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

int deformation_dimension(int g, int n, int u) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw Error("deformation_dimension: unstable (g, n)");
  const int full = 3 * g - 3 + n;
  if (u < 0 || u > full) {
    throw Error("deformation_dimension: unbalanced node count out of range [0, " +
                std::to_string(full) + "]");
  }
  return full - u;
}

}  // namespace rspin

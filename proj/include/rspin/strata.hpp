#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace rspin {

struct Vertex {
  std::string id;
  int genus = 0;

  bool operator==(const Vertex&) const = default;
};

/// A node; self-loops have from == to.
struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
};

struct Leg {
  std::size_t vertex = 0;
  int marking = 1;  // 1..n
};

/// Dual graph of a nodal curve: components, nodes, markings.
class DualGraph {
 public:
  /// Validates vertex references, genera and that markings are a permutation of 1..n.
  /// Connectivity is not required here; see is_connected().
  DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Leg> legs);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Leg>& legs() const { return legs_; }
  int marking_count() const { return static_cast<int>(legs_.size()); }

  /// Legs plus edge-ends at v; a self-loop counts twice.
  int valence(std::size_t v) const;
  bool is_connected() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Leg> legs_;
};

/// Sum of vertex genera plus the first Betti number. Throws on a disconnected graph.
int graph_genus(const DualGraph& graph);

/// Every vertex has 2 g_v - 2 + val(v) > 0 and 2g - 2 + n > 0.
bool stability_check(const DualGraph& graph);

struct ChiResult {
  bool integral = false;
  long numerator = 0;  // 2g - 2 + n - sum m_i
  long value = 0;      // 1 - g + numerator / r when integral
};

/// Euler characteristic chi_{r,m} = 1 - g + (2g - 2 + n - sum m_i) / r.
ChiResult chi(int g, int n, int r, const std::vector<int>& m);

/// Leg twists by marking (index marking - 1) and one balanced (k1, k2) pair per edge;
/// k1 sits at the edge's `from` end and k2 at its `to` end.
struct TwistAssignment {
  std::vector<int> leg_twists;
  std::vector<std::pair<int, int>> edge_twists;

  bool operator==(const TwistAssignment&) const = default;
  auto operator<=>(const TwistAssignment&) const = default;
};

/// r | 2 g_v - 2 + val(v) - (sum of twists on legs and half-edges at v).
bool vertex_degree_test(std::size_t vertex, const DualGraph& graph,
                        const TwistAssignment& assignment, int r);

struct EnumerationOptions {
  unsigned workers = 1;
};

/// All balanced twist assignments with leg twists m_i mod r that pass every vertex
/// test, ordered lexicographically by edge order and then by twist.
std::vector<TwistAssignment> enumerate_assignments(const DualGraph& graph, int r,
                                                   const std::vector<int>& m,
                                                   EnumerationOptions options = {});

/// 3g - 3 + n - u, with u the number of unbalanced nodes.
int deformation_dimension(int g, int n, int u);

}  // namespace rspin

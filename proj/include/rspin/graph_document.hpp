#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rspin/field.hpp"
#include "rspin/strata.hpp"

namespace rspin {

/// Input file for the `strata` command:
///   {"r": 2, "m": [1], "vertices": [{"id": "v", "genus": 0}],
///    "edges": [["v", "v"]], "legs": [{"vertex": "v", "marking": 1}], "field_prime": 3}
/// field_prime is optional.
struct GraphDocument {
  int r = 1;
  std::vector<int> m;
  std::optional<Coeff> field_prime;
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, int>> legs;  // (vertex id, marking)

  DualGraph graph() const;
  /// Canonical JSON text (fixed key order, two-space indent, trailing newline).
  std::string to_json() const;

  bool operator==(const GraphDocument&) const = default;
};

/// Parses and validates against the schema; throws Error with the offending field.
GraphDocument parse_graph_document(std::string_view text);

}  // namespace rspin

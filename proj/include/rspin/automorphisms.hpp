#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rspin/field.hpp"
#include "rspin/ring.hpp"

namespace rspin {

/// Pairs (eta, sigma) in mu_e x mu_e scaling (xi1, xi2) of E_{i,j}.
struct AutomorphismGroup {
  std::vector<std::pair<Coeff, Coeff>> elements;  // sorted

  std::size_t order() const { return elements.size(); }
  bool is_diagonal() const;
};

/// Scalings of E_{i,j} by (eta, sigma) in mu_e x mu_e that are module endomorphisms
/// and preserve gamma_e: Sym^e E_{i,j} -> E_{(e i) mod l, (e j) mod l}, with t in the
/// given mode. When the normalization at the node is connected the two branch scalars
/// must agree, which restricts the result to the diagonal.
AutomorphismGroup automorphisms(int i, int j, int l, int e, TMode mode, bool disconnected,
                                const FieldConfig& config);

}  // namespace rspin

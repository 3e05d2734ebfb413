#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rspin/field.hpp"

namespace rspin {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // one line per failing instance

  bool pass() const { return failures.empty(); }
  void merge(SuiteResult other);
};

struct SuiteOptions {
  unsigned workers = 1;
  /// Coefficient prime for every level; the smallest admissible prime per level otherwise.
  std::optional<Coeff> field_prime;
};

/// Valid exponent pairs for node index l: (0,0) and (i, l-i), 0 < i < l.
std::vector<std::pair<int, int>> exponent_pairs(int l);

/// Every product_map with l <= max_l is certified; the swapped case-2 images fail
/// whenever i != i'.
SuiteResult well_definedness_suite(int max_l, SuiteOptions options = {});
/// Commutativity and associativity of product maps for l <= max_l.
SuiteResult product_law_suite(int max_l, SuiteOptions options = {});
/// Iterated products agree with power_map and every divisor chain is compatible, r <= max_r.
SuiteResult power_coherence_suite(int max_r, SuiteOptions options = {});
/// cokernel_length of every power map at t = 0, r <= max_r.
SuiteResult cokernel_suite(int max_r, SuiteOptions options = {});
/// Products become the standard tensor isomorphism after inverting x and y, l <= max_l.
SuiteResult localization_suite(int max_l, SuiteOptions options = {});
/// Automorphism group orders for e | r <= max_r.
SuiteResult automorphism_suite(int max_r, SuiteOptions options = {});
/// The pairing E_{i,j} (x) E_{j,i} -> E_{0,0} is perfect after inverting x, l <= max_l.
SuiteResult duality_suite(int max_l, SuiteOptions options = {});
/// resolution_exact_check for every D <= max_degree.
SuiteResult resolution_suite(int max_degree, SuiteOptions options = {});
/// Unit laws and associativity of algebra windows with D = r, r <= max_r.
SuiteResult window_suite(int max_r, SuiteOptions options = {});
/// Product and power images recomputed through the monomial model.
SuiteResult oracle_suite(int max_l, int max_r, SuiteOptions options = {});

struct SuiteBounds {
  int max_l = 10;     // products, localization, duality
  int max_law_l = 6;  // commutativity and associativity
  int max_r = 12;     // power maps, cokernels, automorphisms
  int max_window_r = 6;
  int max_degree = 8;  // resolution
};

/// Bounds used by `verify-algebra --max-r R`.
SuiteBounds bounds_for_max_r(int max_r);

std::vector<SuiteResult> run_all_suites(const SuiteBounds& bounds, SuiteOptions options = {});

}  // namespace rspin

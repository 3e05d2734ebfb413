#pragma once

#include "rspin/generator_map.hpp"
#include "rspin/twists.hpp"

namespace rspin {

/// The product E_{i,j} (x) E_{i',j'} -> E_{(i+i') mod l, (j+j') mod l}.
/// Source generators are zeta1, zeta2 (first factor) and xi1, xi2 (second factor).
/// A free factor multiplies by scalar collapse; otherwise one of three cases applies
/// depending on the sign of i + i' - l. The returned map is certified.
GeneratorMap product_map(int i, int j, int i2, int j2, int l, const Field& field);

/// Sym^m E_{i,j} -> E_{(m i) mod l, (m j) mod l}, the m-fold product on symmetric
/// generators xi1^(m-k) xi2^k. Certified.
GeneratorMap symmetric_power_map(int i, int j, int l, int m, const Field& field);

/// The power map c_{d->e}: Sym^(d/e) F_d -> F_e for e | d | r, where F_d = E_{i_d, j_d}.
GeneratorMap power_map(int d, int e, int i_r, int j_r, int l, int r, const Field& field);

/// c_{d'->d} o c_{d''->d'}^(d'/d) == c_{d''->d} on every symmetric generator, for every
/// way of grouping the generator into d'/d blocks.
bool compatibility_check(int d2, int d1, int d0, int i_r, int j_r, int l, int r,
                         const Field& field);

/// The pairing E_{i,j} (x) E_{j,i} -> E_{0,0}.
GeneratorMap dual_pairing(int i, int j, int l, const Field& field);

/// Coordinate of a module element on the chart generator after inverting x (zeta1)
/// or y (zeta2); free modules use their single generator.
LaurentElement localized_coordinate(const ModuleElement& m, Chart chart);

/// True iff, after inverting the chart variable, the tensor-source map sends
/// zeta_a (x) xi_b to u * c_a * c'_b for a unit u, where c_a, c'_b are the chart
/// coordinates of the source generators (the standard rank-one tensor isomorphism).
bool localized_agreement(const GeneratorMap& product, Chart chart);

/// Product of `count1` copies of xi1 and `count2` copies of xi2 of E_{i,j}, computed by
/// successive binary product maps (xi1's first). Lands in pi_* L^(count1 + count2).
ModuleElement iterated_product(int i, int j, int l, int count1, int count2, const Field& field);

}  // namespace rspin

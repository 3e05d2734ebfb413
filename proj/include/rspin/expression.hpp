#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rspin/field.hpp"
#include "rspin/ring.hpp"

namespace rspin {

/// Sparse polynomial over K: exponent vector (one slot per variable) -> coefficient.
using SparsePolynomial = std::map<std::vector<int>, Coeff>;

/// Parses expressions such as "2*x^3*y - (t + x)^2" over the given variable names.
/// Variables listed in `laurent_variables` may carry negative exponents.
SparsePolynomial parse_polynomial(std::string_view text, const Field& field,
                                  const std::vector<std::string>& variables,
                                  const std::vector<std::string>& laurent_variables = {});

/// Parses an expression in t, x, y and reduces it in A_l.
RingElement parse_ring_element(std::string_view text, const Field& field, int l);

}  // namespace rspin

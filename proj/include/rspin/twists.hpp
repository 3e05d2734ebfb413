#pragma once

#include <string>

namespace rspin {

/// A twist k in [0, r) at a marking or half-edge with its local index l and branch
/// exponents: k = a r / l, b = l - a (k > 0), and k = 0 means l = 1, a = b = 0.
struct TwistData {
  int k = 0;
  int r = 1;
  int l = 1;
  int a = 0;
  int b = 0;

  /// "k(l,a,b)".
  std::string to_string() const;
  bool operator==(const TwistData&) const = default;
};

TwistData index_from_twist(int k, int r);

/// Least nonnegative k_i with k_i = -i b (r / l) (mod r).
int marking_twist(int power, int l, int b, int r);

/// Balanced partner of a half-edge twist: k + k' = 0 (mod r).
int balanced_partner(int k, int r);

/// Exponents (i_d, j_d) of the tier F_d = pi_* L^(r/d) at a node with top tier E_{i_r, j_r}.
struct TierIndex {
  int d = 1;
  int i = 0;
  int j = 0;

  bool is_free() const { return i == 0 && j == 0; }
  bool operator==(const TierIndex&) const = default;
};

/// i_d = i_r (r/d) mod l and j_d = j_r (r/d) mod l.
TierIndex tier_twists(int i_r, int j_r, int l, int r, int d);

/// Exponents of pi_* L^n when pi_* L = E_{i,j}: ((n i) mod l, (n j) mod l), n any integer.
struct ExponentPair {
  int i = 0;
  int j = 0;
  bool operator==(const ExponentPair&) const = default;
};
ExponentPair power_exponents(int i, int j, int l, long n);

/// Throws unless i + j = l with i, j > 0, or i = j = 0.
void require_exponent_pair(int i, int j, int l);

int positive_mod(long a, int m);

}  // namespace rspin

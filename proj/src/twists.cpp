#include "rspin/twists.hpp"

#include <numeric>

#include "rspin/field.hpp"

namespace rspin {

int positive_mod(long a, int m) {
  const long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::string TwistData::to_string() const {
  return std::to_string(k) + "(" + std::to_string(l) + "," + std::to_string(a) + "," +
         std::to_string(b) + ")";
}

TwistData index_from_twist(int k, int r) {
  if (r < 1) throw Error("index_from_twist: r must be positive");
  if (k < 0 || k >= r) {
    throw Error("index_from_twist: twist " + std::to_string(k) + " outside [0, " +
                std::to_string(r) + ")");
  }
  if (k == 0) return {0, r, 1, 0, 0};
  const int g = std::gcd(k, r);
  const int l = r / g;
  const int a = k / g;
  return {k, r, l, a, l - a};
}

int marking_twist(int power, int l, int b, int r) {
  if (r < 1 || l < 1) throw Error("marking_twist: r and l must be positive");
  if (r % l != 0) throw Error("marking_twist: l does not divide r");
  if (std::gcd(b, l) != 1) throw Error("marking_twist: b is not a unit mod l");
  return positive_mod(-static_cast<long>(power) * b * (r / l), r);
}

int balanced_partner(int k, int r) { return positive_mod(-static_cast<long>(k), r); }

void require_exponent_pair(int i, int j, int l) {
  if (l < 1) throw Error("node index l must be positive");
  const bool free_pair = i == 0 && j == 0;
  const bool standard = i > 0 && j > 0 && i + j == l;
  if (!free_pair && !standard) {
    throw Error("invalid exponent pair (" + std::to_string(i) + "," + std::to_string(j) +
                ") for l=" + std::to_string(l));
  }
}

TierIndex tier_twists(int i_r, int j_r, int l, int r, int d) {
  if (r < 1 || d < 1) throw Error("tier_twists: r and d must be positive");
  if (r % d != 0)
    throw Error("tier_twists: d=" + std::to_string(d) + " does not divide r=" + std::to_string(r));
  if (r % l != 0) throw Error("tier_twists: l does not divide r");
  require_exponent_pair(i_r, j_r, l);
  const int factor = r / d;
  return {d, positive_mod(static_cast<long>(i_r) * factor, l),
          positive_mod(static_cast<long>(j_r) * factor, l)};
}

ExponentPair power_exponents(int i, int j, int l, long n) {
  require_exponent_pair(i, j, l);
  return {positive_mod(n * i, l), positive_mod(n * j, l)};
}

}  // namespace rspin

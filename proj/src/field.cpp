#include "rspin/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace rspin {

bool is_prime(Coeff n) {
  if (n < 2) return false;
  for (Coeff d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(Coeff p) : p_(p) {
  if (!is_prime(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
  // Products of two residues must fit in 64 bits.
  if (p >= (Coeff{1} << 31)) throw Error("field modulus must be below 2^31");
}

Coeff Field::reduce(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<Coeff>(r);
}

Coeff Field::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Coeff Field::inv(Coeff a) const {
  if (a % p_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

FieldConfig::FieldConfig(Coeff p, int r) : field_(p), r_(r) {
  if (r < 1) throw Error("spin level r must be positive");
  const auto ur = static_cast<Coeff>(r);
  if (p % ur != 1 % ur) {
    throw Error("field prime " + std::to_string(p) + " is not 1 mod r=" + std::to_string(r));
  }
  if (ur % p == 0) throw Error("field prime divides r");
}

FieldConfig FieldConfig::for_level(int r) {
  if (r < 1) throw Error("spin level r must be positive");
  const auto ur = static_cast<Coeff>(r);
  for (Coeff p = ur + 1;; p += ur) {
    if (is_prime(p)) return FieldConfig(p, r);
  }
}

FieldConfig FieldConfig::from_environment(int r) {
  if (const char* env = std::getenv(kFieldPrimeEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long p = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw Error(std::string(kFieldPrimeEnv) + " is not a decimal integer");
    }
    return FieldConfig(p, r);
  }
  return for_level(r);
}

std::vector<Coeff> FieldConfig::unity_roots(int e) const {
  if (e < 1 || r_ % e != 0) {
    throw Error("unity_roots: e=" + std::to_string(e) + " does not divide r=" + std::to_string(r_));
  }
  const Coeff p = field_.prime();
  const Coeff order = p - 1;
  // Find a generator of F_p^* by testing the prime factors of p - 1.
  std::vector<Coeff> factors;
  Coeff rest = order;
  for (Coeff q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      factors.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  }
  if (rest > 1) factors.push_back(rest);
  Coeff generator = 1;
  for (Coeff g = 1; g < p; ++g) {
    const bool primitive = std::all_of(factors.begin(), factors.end(),
                                       [&](Coeff q) { return field_.pow(g, order / q) != 1; });
    if (primitive) {
      generator = g;
      break;
    }
  }
  const auto ue = static_cast<Coeff>(e);
  const Coeff step = field_.pow(generator, order / ue);
  std::vector<Coeff> roots;
  roots.reserve(ue);
  Coeff z = 1 % p;
  for (Coeff k = 0; k < ue; ++k) {
    roots.push_back(z);
    z = field_.mul(z, step);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace rspin

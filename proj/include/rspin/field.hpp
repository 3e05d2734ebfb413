#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rspin {

using Coeff = std::uint64_t;

/// Raised for precondition violations and malformed inputs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(Coeff n);

/// The prime field F_p. Elements are stored as least nonnegative residues.
class Field {
 public:
  explicit Field(Coeff p);

  Coeff prime() const { return p_; }

  Coeff reduce(std::int64_t v) const;
  Coeff add(Coeff a, Coeff b) const { return (a + b) % p_; }
  Coeff sub(Coeff a, Coeff b) const { return (a + p_ - b) % p_; }
  Coeff mul(Coeff a, Coeff b) const { return (a * b) % p_; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff inv(Coeff a) const;

  bool operator==(const Field&) const = default;

 private:
  Coeff p_;
};

/// Coefficient field hosting all r-th roots of unity: p prime, p = 1 (mod r).
class FieldConfig {
 public:
  FieldConfig(Coeff p, int r);

  /// Smallest prime p with p = 1 (mod r).
  static FieldConfig for_level(int r);
  /// Like for_level, unless RSPIN_FIELD_PRIME names a prime to use instead.
  static FieldConfig from_environment(int r);

  const Field& field() const { return field_; }
  Coeff prime() const { return field_.prime(); }
  int level() const { return r_; }

  /// All e-th roots of unity in K, ascending. Requires e | r.
  std::vector<Coeff> unity_roots(int e) const;

 private:
  Field field_;
  int r_;
};

inline constexpr const char* kFieldPrimeEnv = "RSPIN_FIELD_PRIME";

}  // namespace rspin

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "rspin/generator_map.hpp"
#include "rspin/twists.hpp"

namespace rspin {

/// Monomial t^t z^z w^w S^s of the upstairs algebra K[t][z, w, S, S^-1]/(zw - t).
/// In normal form z and w never both occur.
struct UpstairsMonomial {
  int t = 0;
  int z = 0;
  int w = 0;
  int s = 0;

  auto operator<=>(const UpstairsMonomial&) const = default;
};

class UpstairsElement {
 public:
  using TermMap = std::map<UpstairsMonomial, Coeff>;

  explicit UpstairsElement(Field field);
  static UpstairsElement monomial(Field field, Coeff c, int t, int z, int w, int s);

  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c t^t z^z w^w S^s after rewriting zw -> t.
  void add_term(Coeff c, int t, int z, int w, int s);
  UpstairsElement operator+(const UpstairsElement& other) const;
  UpstairsElement operator*(const UpstairsElement& other) const;
  bool operator==(const UpstairsElement& other) const;
  /// Spin degree if all terms share one S-exponent.
  std::optional<int> spin_degree() const;
  std::string to_string() const;

 private:
  Field field_;
  TermMap terms_;
};

/// The mu_l-equivariant model of a twisted node: mu_l acts on z, w, S with characters
/// 1, -1 and b. The invariant part of S-degree n is pi_* L^n = E_{(-nb) mod l, (nb) mod l},
/// generated by z^i S^n and w^j S^n (or S^n alone when the module is free).
class MonomialModel {
 public:
  MonomialModel(Field field, int l, int b);

  int node_index() const { return l_; }
  int spin_character() const { return b_; }
  const Field& field() const { return field_; }

  /// Character exponent of a monomial, in [0, l).
  int character(const UpstairsMonomial& m) const;
  UpstairsElement invariant_part(const UpstairsElement& e) const;

  /// The module pi_* L^n and its two generators lifted upstairs.
  ModulePresentation presentation(int n) const;
  UpstairsElement lift(int n, int which) const;

  /// Re-expresses an invariant element of S-degree n over the downstairs generators,
  /// with x = z^l and y = w^l. Throws on non-invariant or mixed-degree input.
  ModuleElement descend(const UpstairsElement& e, int n) const;

 private:
  Field field_;
  int l_;
  int b_;
};

/// Upstairs multiplication, rewriting zw -> t.
UpstairsElement oracle_product(const UpstairsElement& a, const UpstairsElement& b);

/// product_map, symmetric_power_map and power_map recomputed entirely through the
/// monomial model: lift generators, multiply upstairs, descend.
GeneratorMap oracle_product_map(int i, int j, int i2, int j2, int l, const Field& field);
GeneratorMap oracle_symmetric_power_map(int i, int j, int l, int m, const Field& field);
GeneratorMap oracle_power_map(int d, int e, int i_r, int j_r, int l, int r, const Field& field);

}  // namespace rspin

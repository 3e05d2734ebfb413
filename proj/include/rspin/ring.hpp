#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rspin/field.hpp"

namespace rspin {

/// A monomial t^t x^x y^y. In normal form at most one of x, y is nonzero.
/// The defaulted ordering is t-degree, then x-degree, then y-degree.
struct Monomial {
  int t = 0;
  int x = 0;
  int y = 0;

  auto operator<=>(const Monomial&) const = default;
};

/// One term of an unreduced polynomial in t, x, y.
struct RawTerm {
  std::int64_t coeff = 0;
  int t = 0;
  int x = 0;
  int y = 0;
};
using RawPolynomial = std::vector<RawTerm>;

/// Element of the node ring A_l = K[t][x,y]/(xy - t^l) in normal form.
class RingElement {
 public:
  using TermMap = std::map<Monomial, Coeff>;

  RingElement(Field field, int l);

  static RingElement constant(Field field, int l, std::int64_t c);
  static RingElement term(Field field, int l, std::int64_t c, int t, int x, int y);
  static RingElement t_power(Field field, int l, int e) { return term(field, l, 1, e, 0, 0); }
  static RingElement x_power(Field field, int l, int e) { return term(field, l, 1, 0, e, 0); }
  static RingElement y_power(Field field, int l, int e) { return term(field, l, 1, 0, 0, e); }

  const Field& field() const { return field_; }
  int node_index() const { return l_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool involves_t() const;
  bool involves_x() const;
  bool involves_y() const;
  /// Largest total (x, y)-degree among the terms; -1 for zero.
  int xy_degree() const;

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator*(const RingElement& other) const;
  RingElement operator-() const;
  RingElement scaled(Coeff c) const;
  RingElement pow(unsigned e) const;

  bool operator==(const RingElement& other) const;

  /// Human-readable form, terms in monomial order, e.g. "x^2 + y^2 + 2*t^2".
  std::string to_string() const;

  /// Adds c times the normal form of t^t x^x y^y (exponents nonnegative).
  void add_term(Coeff c, int t, int x, int y);

 private:
  void check_compatible(const RingElement& other) const;

  Field field_;
  int l_;
  TermMap terms_;
};

/// Reduces a formal polynomial to normal form, rewriting xy -> t^l.
RingElement normalize(const Field& field, int l, const RawPolynomial& raw);

enum class ArithKind { add, mul };
RingElement arith(const RingElement& a, const RingElement& b, ArithKind kind);

/// Either t stays a free variable, or t is specialized to a field value.
class TMode {
 public:
  static TMode generic() { return TMode(std::nullopt); }
  static TMode specialized(Coeff c) { return TMode(c); }

  bool is_generic() const { return !value_.has_value(); }
  bool is_zero() const { return value_.has_value() && *value_ == 0; }
  Coeff value() const;
  std::string to_string() const;

 private:
  explicit TMode(std::optional<Coeff> v) : value_(v) {}
  std::optional<Coeff> value_;
};

/// Substitutes t and re-normalizes; the identity in generic mode.
RingElement specialize(const RingElement& a, TMode mode);

/// Which variable is inverted by localize().
enum class Chart { x, y };

/// Element of A_l[x^-1] = K[t][x, x^-1] (or the y-chart analogue).
/// Keys are (t-exponent, exponent of the inverted variable).
class LaurentElement {
 public:
  using TermMap = std::map<std::pair<int, int>, Coeff>;

  LaurentElement(Field field, int l, Chart chart);

  const TermMap& terms() const { return terms_; }
  Chart chart() const { return chart_; }
  bool is_zero() const { return terms_.empty(); }
  /// Units of K[t][u, u^-1] are the monomials c*u^k with no t.
  bool is_unit() const;

  void add_term(Coeff c, int t, int e);
  LaurentElement operator+(const LaurentElement& other) const;
  LaurentElement operator-(const LaurentElement& other) const;
  LaurentElement operator*(const LaurentElement& other) const;
  bool operator==(const LaurentElement& other) const;
  std::string to_string() const;

 private:
  void check_compatible(const LaurentElement& other) const;

  Field field_;
  int l_;
  Chart chart_;
  TermMap terms_;
};

/// Image of a in the localization at x (y -> t^l x^-1) or at y (x -> t^l y^-1).
LaurentElement localize(const RingElement& a, Chart at);

}  // namespace rspin

#include <cstdlib>
#include <map>
#include <random>

#include "doctest.h"
#include "rspin/expression.hpp"
#include "rspin/field.hpp"
#include "rspin/linalg.hpp"
#include "rspin/ring.hpp"

using namespace rspin;

namespace {

// A_l sits inside K[z,w] via t = zw, x = z^l, y = w^l; the image of a normal-form
// monomial t^a x^b y^c is z^(a+lb) w^(a+lc), and distinct normal forms stay distinct.
using ZW = std::map<std::pair<int, int>, Coeff>;

ZW embed(const RingElement& a) {
  const int l = a.node_index();
  ZW out;
  for (const auto& [m, c] : a.terms()) out[{m.t + l * m.x, m.t + l * m.y}] = c;
  return out;
}

ZW zw_product(const ZW& a, const ZW& b, const Field& f) {
  ZW out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      auto& slot = out[{ma.first + mb.first, ma.second + mb.second}];
      slot = f.add(slot, f.mul(ca, cb));
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

RingElement random_element(std::mt19937_64& rng, const Field& f, int l, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
  RawPolynomial raw;
  for (int k = count(rng); k > 0; --k) raw.push_back({coeff(rng), deg(rng), deg(rng), deg(rng)});
  return normalize(f, l, raw);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const Field f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.neg(0) == 0);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(Field(8), Error);
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(27721));
}

TEST_CASE("field configuration picks the smallest prime 1 mod r") {
  CHECK(FieldConfig::for_level(1).prime() == 2);
  CHECK(FieldConfig::for_level(2).prime() == 3);
  CHECK(FieldConfig::for_level(3).prime() == 7);
  CHECK(FieldConfig::for_level(4).prime() == 5);
  CHECK(FieldConfig::for_level(6).prime() == 7);
  CHECK(FieldConfig::for_level(12).prime() == 13);
  CHECK_THROWS_AS(FieldConfig(11, 3), Error);
  CHECK_THROWS_AS(FieldConfig(9, 2), Error);
}

TEST_CASE("roots of unity") {
  const FieldConfig cfg = FieldConfig::for_level(12);
  for (int e : {1, 2, 3, 4, 6, 12}) {
    const auto roots = cfg.unity_roots(e);
    CHECK(roots.size() == static_cast<std::size_t>(e));
    for (Coeff z : roots) CHECK(cfg.field().pow(z, static_cast<std::uint64_t>(e)) == 1);
  }
  CHECK_THROWS_AS(cfg.unity_roots(5), Error);
}

TEST_CASE("field prime override from the environment") {
  ::setenv(kFieldPrimeEnv, "13", 1);
  CHECK(FieldConfig::from_environment(3).prime() == 13);
  ::setenv(kFieldPrimeEnv, "11", 1);
  CHECK_THROWS_AS(FieldConfig::from_environment(3), Error);
  ::setenv(kFieldPrimeEnv, "abc", 1);
  CHECK_THROWS_AS(FieldConfig::from_environment(3), Error);
  ::unsetenv(kFieldPrimeEnv);
  CHECK(FieldConfig::from_environment(3).prime() == 7);
}

TEST_CASE("normal form in A_l") {
  const Field f(7);
  const int l = 3;
  const RingElement x = RingElement::x_power(f, l, 1);
  const RingElement y = RingElement::y_power(f, l, 1);
  CHECK(x * y == RingElement::t_power(f, l, 3));
  CHECK((x.pow(2) * y).to_string() == "t^3*x");
  CHECK(RingElement::term(f, l, 2, 1, 4, 2) == RingElement::term(f, l, 2, 7, 2, 0));
  CHECK((x + y - x).to_string() == "y");
  CHECK((-x + x).is_zero());
  CHECK_THROWS_AS(normalize(f, l, {{1, 0, -1, 0}}), Error);
  CHECK_THROWS_AS(x * RingElement::x_power(f, 2, 1), Error);
  CHECK_THROWS_AS(x * RingElement::x_power(Field(5), 3, 1), Error);
  CHECK(x.xy_degree() == 1);
  CHECK(RingElement(f, l).xy_degree() == -1);
}

TEST_CASE("ring multiplication agrees with the embedding into K[z,w]") {
  std::mt19937_64 rng(20261016);
  for (int l = 1; l <= 6; ++l) {
    const Field f = FieldConfig::for_level(l == 1 ? 2 : l).field();
    for (int trial = 0; trial < 200; ++trial) {
      const RingElement a = random_element(rng, f, l, 4);
      const RingElement b = random_element(rng, f, l, 4);
      CHECK(embed(a * b) == zw_product(embed(a), embed(b), f));
    }
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(7);
  const Field f(13);
  for (int l = 1; l <= 5; ++l) {
    for (int trial = 0; trial < 100; ++trial) {
      const RingElement a = random_element(rng, f, l, 3);
      const RingElement b = random_element(rng, f, l, 3);
      const RingElement c = random_element(rng, f, l, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(arith(a, b, ArithKind::add) == a + b);
      CHECK(arith(a, b, ArithKind::mul) == a * b);
    }
  }
}

TEST_CASE("specialization of t") {
  const Field f(7);
  const RingElement a = RingElement::term(f, 2, 3, 2, 1, 0) + RingElement::term(f, 2, 1, 0, 0, 1);
  CHECK(specialize(a, TMode::specialized(0)).to_string() == "y");
  CHECK(specialize(a, TMode::specialized(2)) ==
        RingElement::term(f, 2, 12, 0, 1, 0) + RingElement::y_power(f, 2, 1));
  CHECK(specialize(a, TMode::generic()) == a);
  CHECK(TMode::generic().to_string() == "t generic");
  CHECK_THROWS_AS(TMode::generic().value(), Error);
}

TEST_CASE("localization at x and at y") {
  const Field f(7);
  const int l = 2;
  const RingElement y = RingElement::y_power(f, l, 1);
  LaurentElement expected(f, l, Chart::x);
  expected.add_term(1, 2, -1);
  CHECK(localize(y, Chart::x) == expected);
  CHECK(localize(RingElement::x_power(f, l, 3), Chart::x).is_unit());
  CHECK_FALSE(localize(RingElement::t_power(f, l, 1), Chart::x).is_unit());
  CHECK(localize(RingElement::x_power(f, l, 1), Chart::y).to_string() == "t^2*y^-1");
  const RingElement a = RingElement::term(f, l, 2, 1, 0, 3) + RingElement::x_power(f, l, 2);
  const RingElement b = RingElement::term(f, l, 5, 0, 1, 0) + y;
  for (Chart c : {Chart::x, Chart::y}) {
    CHECK(localize(a * b, c) == localize(a, c) * localize(b, c));
    CHECK(localize(a + b, c) == localize(a, c) + localize(b, c));
  }
}

TEST_CASE("expression parser") {
  const Field f(7);
  const RingElement a = parse_ring_element("2*x^3*y - (t + x)^2", f, 2);
  const RingElement x = RingElement::x_power(f, 2, 1);
  const RingElement t = RingElement::t_power(f, 2, 1);
  CHECK(a == (RingElement::constant(f, 2, 2) * x.pow(3) * RingElement::y_power(f, 2, 1)) -
                 (t + x) * (t + x));
  CHECK(parse_ring_element("x*y", f, 3) == RingElement::t_power(f, 3, 3));
  CHECK(parse_ring_element("-3", f, 1) == RingElement::constant(f, 1, 4));
  CHECK_THROWS_AS(parse_ring_element("x^-1", f, 2), Error);
  CHECK_THROWS_AS(parse_ring_element("q", f, 2), Error);
  CHECK_THROWS_AS(parse_ring_element("(x + 1", f, 2), Error);
  CHECK_THROWS_AS(parse_ring_element("", f, 2), Error);

  const SparsePolynomial p = parse_polynomial("S^-2*z + z*S^-2", f, {"z", "S"}, {"S"});
  CHECK(p.size() == 1);
  CHECK(p.at({1, -2}) == 2);
}

TEST_CASE("row echelon rank") {
  const Field f(5);
  RowEchelon e(f, 3);
  CHECK(e.insert({1, 2, 3}));
  CHECK(e.insert({2, 4, 2}));
  CHECK_FALSE(e.insert({3, 1, 4}));
  CHECK(e.rank() == 2);
  CHECK(e.contains({0, 0, 4}));
  CHECK_FALSE(e.contains({0, 1, 0}));
}

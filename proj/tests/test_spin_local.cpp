#include <numeric>

#include "doctest.h"
#include "rspin/automorphisms.hpp"
#include "rspin/oracle.hpp"
#include "rspin/products.hpp"
#include "rspin/twists.hpp"
#include "rspin/window.hpp"

using namespace rspin;

namespace {

const std::array<std::string, 2> kNu{"nu1", "nu2"};

std::vector<std::pair<int, int>> pairs(int l) {
  std::vector<std::pair<int, int>> out{{0, 0}};
  for (int i = 1; i < l; ++i) out.emplace_back(i, l - i);
  return out;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Generator lifts: xi1 = z^i, xi2 = w^j (1 for the free module). Multiplying lifts and
// cancelling zw = t gives t^m z^A w^B, which is read back over the target generators.
ModuleElement descend_monomial(int z, int w, const ModulePresentation& target, const Field& f) {
  const int l = target.l;
  const int m = std::min(z, w);
  z -= m;
  w -= m;
  auto ring = [&](int x, int y) { return RingElement::term(f, l, 1, m, x, y); };
  const ModuleElement nu1 = ModuleElement::generator(target, f, 1);
  const ModuleElement nu2 = ModuleElement::generator(target, f, 2);
  if (target.is_free()) {
    REQUIRE(z % l == 0);
    REQUIRE(w % l == 0);
    return scalar_action(ring(z / l, w / l), nu1);
  }
  if (z > 0) {
    REQUIRE((z - target.i) % l == 0);
    return scalar_action(ring((z - target.i) / l, 0), nu1);
  }
  REQUIRE(w >= target.j);
  REQUIRE((w - target.j) % l == 0);
  return scalar_action(ring(0, (w - target.j) / l), nu2);
}

std::pair<int, int> lift(int i, int j, int which) {
  if (i == 0 && j == 0) return {0, 0};
  return which == 1 ? std::pair{i, 0} : std::pair{0, j};
}

ModuleElement expected_product(int i, int j, int i2, int j2, int l, int a, int b, const Field& f) {
  const auto [z1, w1] = lift(i, j, a);
  const auto [z2, w2] = lift(i2, j2, b);
  return descend_monomial(z1 + z2, w1 + w2, module_make((i + i2) % l, (j + j2) % l, l), f);
}

}  // namespace

TEST_CASE("twist arithmetic examples") {
  CHECK(marking_twist(1, 3, 1, 3) == 2);
  CHECK(marking_twist(0, 3, 1, 3) == 0);
  CHECK(marking_twist(2, 3, 2, 6) == 4);
  CHECK_THROWS_AS(marking_twist(1, 4, 1, 6), Error);
  CHECK_THROWS_AS(marking_twist(1, 4, 2, 4), Error);

  CHECK(index_from_twist(2, 6) == TwistData{2, 6, 3, 1, 2});
  CHECK(index_from_twist(0, 5) == TwistData{0, 5, 1, 0, 0});
  CHECK(index_from_twist(5, 6) == TwistData{5, 6, 6, 5, 1});
  CHECK(index_from_twist(2, 6).to_string() == "2(3,1,2)");
  CHECK_THROWS_AS(index_from_twist(6, 6), Error);
  CHECK_THROWS_AS(index_from_twist(-1, 6), Error);
  CHECK(balanced_partner(2, 6) == 4);
  CHECK(balanced_partner(0, 6) == 0);
}

TEST_CASE("twist data invariants and round trips") {
  for (int r = 1; r <= 12; ++r) {
    for (int k = 0; k < r; ++k) {
      const TwistData t = index_from_twist(k, r);
      CHECK(t.l == r / std::gcd(k, r));
      CHECK(t.a * r / t.l == k);
      CHECK(std::gcd(t.b, t.l) == 1);
      if (k > 0) {
        CHECK(t.b == t.l - t.a);
        CHECK(marking_twist(1, t.l, t.b, r) == k);
      }
      CHECK((k + balanced_partner(k, r)) % r == 0);
    }
  }
}

TEST_CASE("tier exponents") {
  CHECK(tier_twists(1, 1, 2, 4, 2) == TierIndex{2, 0, 0});
  CHECK(tier_twists(1, 2, 3, 6, 6) == TierIndex{6, 1, 2});
  CHECK(tier_twists(1, 2, 3, 6, 1) == TierIndex{1, 0, 0});
  CHECK(tier_twists(1, 5, 6, 6, 2) == TierIndex{2, 3, 3});
  CHECK_THROWS_AS(tier_twists(1, 2, 3, 6, 4), Error);
  for (int r = 1; r <= 12; ++r) {
    for (int l : divisors(r)) {
      for (const auto& [i, j] : pairs(l)) {
        CHECK(tier_twists(i, j, l, r, r) == TierIndex{r, i, j});
        CHECK(tier_twists(i, j, l, r, 1).is_free());
        for (int d : divisors(r)) {
          const TierIndex t = tier_twists(i, j, l, r, d);
          CHECK((t.i + t.j == 0 || t.i + t.j == l));
        }
      }
    }
  }
  CHECK(power_exponents(1, 2, 3, -1) == ExponentPair{2, 1});
  CHECK(power_exponents(1, 2, 3, 3) == ExponentPair{0, 0});
}

TEST_CASE("product map examples") {
  const Field f(7);
  const GeneratorMap a = product_map(2, 1, 2, 1, 3, f);
  CHECK(a.target().name() == "E_{1,2}");
  CHECK(a.image_tensor(1, 1).to_string(kNu) == "x*nu1");
  CHECK(a.image_tensor(1, 2).to_string(kNu) == "t*nu1");
  CHECK(a.image_tensor(2, 1).to_string(kNu) == "t*nu1");
  CHECK(a.image_tensor(2, 2).to_string(kNu) == "nu2");

  const GeneratorMap b = product_map(1, 1, 1, 1, 2, Field(3));
  CHECK(b.target().is_free());
  CHECK(b.image_tensor(2, 2).to_string("sigma", kNu) == "y*sigma");
  CHECK(b.image_tensor(1, 2).to_string("sigma", kNu) == "t*sigma");

  const GeneratorMap c = product_map(1, 3, 2, 2, 4, Field(5));
  CHECK(c.target().name() == "E_{3,1}");
  CHECK(c.image_tensor(1, 2).to_string(kNu) == "t*nu2");
  CHECK(c.image_tensor(2, 1).to_string(kNu) == "t^2*nu2");
  CHECK(c.valid());

  CHECK_THROWS_AS(product_map(1, 1, 1, 2, 3, f), Error);
}

TEST_CASE("product maps agree with the monomial lifts") {
  for (int l = 1; l <= 10; ++l) {
    const Field f = FieldConfig::for_level(l).field();
    for (const auto& [i, j] : pairs(l)) {
      for (const auto& [i2, j2] : pairs(l)) {
        const GeneratorMap map = product_map(i, j, i2, j2, l, f);
        const GeneratorMap model = oracle_product_map(i, j, i2, j2, l, f);
        CHECK(model.target() == map.target());
        for (int a = 1; a <= 2; ++a) {
          for (int b = 1; b <= 2; ++b) {
            const ModuleElement expected = expected_product(i, j, i2, j2, l, a, b, f);
            CHECK(map.image_tensor(a, b) == expected);
            CHECK(model.image_tensor(a, b) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("power map examples") {
  const Field f2 = FieldConfig::for_level(2).field();
  const GeneratorMap c21 = power_map(2, 1, 1, 1, 2, 2, f2);
  CHECK(c21.image_symmetric(0).to_string("zeta", kNu) == "x*zeta");
  CHECK(c21.image_symmetric(1).to_string("zeta", kNu) == "t*zeta");
  CHECK(c21.image_symmetric(2).to_string("zeta", kNu) == "y*zeta");

  const Field f3 = FieldConfig::for_level(3).field();
  const GeneratorMap c31 = power_map(3, 1, 1, 2, 3, 3, f3);
  CHECK(c31.image_symmetric(0).to_string("zeta", kNu) == "x*zeta");
  CHECK(c31.image_symmetric(1).to_string("zeta", kNu) == "t^2*zeta");
  CHECK(c31.image_symmetric(2).to_string("zeta", kNu) == "t*y*zeta");
  CHECK(c31.image_symmetric(3).to_string("zeta", kNu) == "y^2*zeta");

  const GeneratorMap same = power_map(3, 3, 1, 2, 3, 3, f3);
  CHECK(same.image_symmetric(0) == ModuleElement::generator(same.target(), f3, 1));
  CHECK(same.image_symmetric(1) == ModuleElement::generator(same.target(), f3, 2));

  CHECK_THROWS_AS(power_map(3, 2, 1, 2, 3, 6, f3), Error);
  CHECK_THROWS_AS(power_map(4, 1, 1, 2, 3, 6, f3), Error);
  CHECK_THROWS_AS(symmetric_power_map(1, 2, 3, 0, f3), Error);
}

TEST_CASE("power maps agree with the monomial lifts and iterated products") {
  for (int r = 1; r <= 12; ++r) {
    const Field f = FieldConfig::for_level(r).field();
    for (int l : divisors(r)) {
      for (const auto& [i_r, j_r] : pairs(l)) {
        if (std::gcd(j_r, l) != 1) continue;
        for (int d : divisors(r)) {
          for (int e : divisors(d)) {
            const GeneratorMap map = power_map(d, e, i_r, j_r, l, r, f);
            const TierIndex from = tier_twists(i_r, j_r, l, r, d);
            const TierIndex to = tier_twists(i_r, j_r, l, r, e);
            const int m = d / e;
            CHECK(map.images() == oracle_power_map(d, e, i_r, j_r, l, r, f).images());
            for (int k = 0; k <= m; ++k) {
              const auto [z1, w1] = lift(from.i, from.j, 1);
              const auto [z2, w2] = lift(from.i, from.j, 2);
              const ModuleElement expected = descend_monomial(
                  (m - k) * z1 + k * z2, (m - k) * w1 + k * w2, module_make(to.i, to.j, l), f);
              CHECK(map.image_symmetric(k) == expected);
              CHECK(iterated_product(from.i, from.j, l, m - k, k, f) == expected);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("compatibility of power maps") {
  const Field f4 = FieldConfig::for_level(4).field();
  CHECK(compatibility_check(4, 2, 1, 1, 1, 2, 4, f4));
  CHECK(compatibility_check(2, 2, 2, 1, 1, 2, 4, f4));
  const Field f6 = FieldConfig::for_level(6).field();
  CHECK(compatibility_check(6, 3, 1, 1, 5, 6, 6, f6));
  CHECK(compatibility_check(6, 2, 1, 1, 5, 6, 6, f6));
  CHECK_THROWS_AS(compatibility_check(6, 4, 1, 1, 5, 6, 6, f6), Error);
}

TEST_CASE("dual pairing") {
  const Field f(3);
  const GeneratorMap p = dual_pairing(1, 1, 2, f);
  CHECK(p.image_tensor(1, 1).to_string("sigma", kNu) == "x*sigma");
  CHECK(p.image_tensor(1, 2).to_string("sigma", kNu) == "t*sigma");
  CHECK(p.image_tensor(2, 1).to_string("sigma", kNu) == "t*sigma");
  CHECK(p.image_tensor(2, 2).to_string("sigma", kNu) == "y*sigma");
  const GeneratorMap q = dual_pairing(1, 2, 3, Field(7));
  CHECK(q.image_tensor(1, 1).to_string("sigma", kNu) == "x*sigma");
  CHECK(q.source().second.name() == "E_{2,1}");
  const GeneratorMap free = dual_pairing(0, 0, 4, Field(5));
  CHECK(free.image_tensor(1, 1).to_string("sigma", kNu) == "sigma");
  CHECK_THROWS_AS(dual_pairing(1, 1, 3, f), Error);
}

TEST_CASE("localization trivializes products") {
  const Field f(7);
  const ModulePresentation e12 = module_make(1, 2, 3);
  LaurentElement expected(f, 3, Chart::x);
  expected.add_term(1, 2, -1);
  CHECK(localized_coordinate(ModuleElement::generator(e12, f, 2), Chart::x) == expected);
  for (int l = 1; l <= 10; ++l) {
    const Field fl = FieldConfig::for_level(l).field();
    for (const auto& [i, j] : pairs(l)) {
      for (const auto& [i2, j2] : pairs(l)) {
        const GeneratorMap map = product_map(i, j, i2, j2, l, fl);
        CHECK(localized_agreement(map, Chart::x));
        CHECK(localized_agreement(map, Chart::y));
      }
    }
  }
  // Doubling one image breaks the rank-one tensor shape.
  GeneratorMap broken = product_map(1, 2, 1, 2, 3, f);
  broken.set_image(3, broken.image(3).scaled(2));
  CHECK_FALSE(localized_agreement(broken, Chart::x));
}

TEST_CASE("monomial model") {
  const Field f(7);
  const UpstairsElement zs = UpstairsElement::monomial(f, 1, 0, 1, 0, 1);
  CHECK(oracle_product(zs, zs) == UpstairsElement::monomial(f, 1, 0, 2, 0, 2));
  CHECK(oracle_product(UpstairsElement::monomial(f, 1, 0, 1, 0, 0),
                       UpstairsElement::monomial(f, 1, 0, 0, 1, 0)) ==
        UpstairsElement::monomial(f, 1, 1, 0, 0, 0));

  const MonomialModel model(f, 2, 1);
  UpstairsElement span(f);
  for (int e = 0; e <= 2; ++e) {
    span.add_term(1, 0, e, 0, 0);
    if (e > 0) span.add_term(1, 0, 0, e, 0);
  }
  UpstairsElement invariants(f);
  invariants.add_term(1, 0, 0, 0, 0);
  invariants.add_term(1, 0, 2, 0, 0);
  invariants.add_term(1, 0, 0, 2, 0);
  CHECK(model.invariant_part(span) == invariants);
  const RingElement one_x_y = RingElement::constant(f, 2, 1) + RingElement::x_power(f, 2, 1) +
                              RingElement::y_power(f, 2, 1);
  CHECK(model.descend(invariants, 0) ==
        ModuleElement::combination(module_make(0, 0, 2), one_x_y, RingElement(f, 2)));
  CHECK(model.presentation(1).name() == "E_{1,1}");
  CHECK(model.presentation(2).is_free());
  CHECK_THROWS_AS(model.descend(zs, 0), Error);
  CHECK_THROWS_AS(model.descend(UpstairsElement::monomial(f, 1, 0, 2, 0, 1), 1), Error);
  CHECK_THROWS_AS(MonomialModel(f, 4, 2), Error);
  CHECK(oracle_product(zs, UpstairsElement::monomial(f, 1, 0, 0, 3, 1)).to_string() == "t*w^2*S^2");
}

TEST_CASE("algebra window") {
  const Field f(3);
  const AlgebraWindow w = algebra_window(1, 1, 2, 2, 2, f);
  std::vector<std::string> names;
  for (const auto& [d, p] : w.tiers()) names.push_back(p.name());
  CHECK(names == std::vector<std::string>{"E_{0,0}", "E_{1,1}", "E_{0,0}", "E_{1,1}", "E_{0,0}"});
  CHECK(w.unit_laws_hold());
  CHECK_FALSE(w.associativity_failure());

  const AlgebraWindow w3 = algebra_window(1, 2, 3, 3, 3, Field(7));
  CHECK(w3.tier(3).is_free());
  CHECK(w3.tier(-1).name() == "E_{2,1}");
  CHECK(w3.product(1, 2).target().is_free());
  CHECK(w3.product(3, -3).target().is_free());
  CHECK_FALSE(w3.associativity_failure());
  for (const auto& [key, map] : w3.products()) CHECK(map.valid());

  CHECK_THROWS_AS(algebra_window(1, 2, 3, 3, 2, Field(7)), Error);
  CHECK_THROWS_AS(algebra_window(2, 2, 4, 4, 4, Field(5)), Error);
  CHECK_THROWS_AS(w3.tier(4), Error);
}

TEST_CASE("automorphism groups") {
  const FieldConfig c2 = FieldConfig::for_level(2);
  const AutomorphismGroup generic = automorphisms(1, 1, 2, 2, TMode::generic(), true, c2);
  CHECK(generic.order() == 2);
  CHECK(generic.is_diagonal());
  const AutomorphismGroup split = automorphisms(1, 1, 2, 2, TMode::specialized(0), true, c2);
  CHECK(split.order() == 4);
  CHECK_FALSE(split.is_diagonal());
  CHECK(automorphisms(1, 1, 2, 2, TMode::specialized(0), false, c2).order() == 2);
  CHECK(automorphisms(1, 1, 2, 1, TMode::generic(), true, c2).order() == 1);
  CHECK_THROWS_AS(automorphisms(1, 1, 2, 3, TMode::generic(), true, c2), Error);
  const FieldConfig c12 = FieldConfig::for_level(12);
  CHECK(automorphisms(1, 3, 4, 6, TMode::specialized(0), true, c12).order() == 36);
  CHECK(automorphisms(1, 3, 4, 6, TMode::specialized(5), true, c12).order() == 6);
}

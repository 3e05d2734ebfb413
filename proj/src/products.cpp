#include "rspin/products.hpp"

#include <functional>
#include <numeric>

namespace rspin {

namespace {

ModuleElement gen(const ModulePresentation& m, const Field& field, int which) {
  return ModuleElement::generator(m, field, which);
}

ModuleElement times(const RingElement& a, const ModuleElement& m) { return scalar_action(a, m); }

GeneratorMap certified(GeneratorMap map, const char* what) {
  const Certificate c = map.certify();
  if (!c) throw Error(std::string(what) + " failed its well-definedness check: " + c.to_string());
  return map;
}

}  // namespace

GeneratorMap product_map(int i, int j, int i2, int j2, int l, const Field& field) {
  require_exponent_pair(i, j, l);
  require_exponent_pair(i2, j2, l);
  const ModulePresentation first = module_make(i, j, l);
  const ModulePresentation second = module_make(i2, j2, l);
  const ModulePresentation target = module_make((i + i2) % l, (j + j2) % l, l);
  const auto source = MapSource::tensor(first, second);
  auto t = [&](int e) { return RingElement::t_power(field, l, e); };
  const RingElement x = RingElement::x_power(field, l, 1);
  const RingElement y = RingElement::y_power(field, l, 1);
  const ModuleElement nu1 = gen(target, field, 1);
  const ModuleElement nu2 = gen(target, field, 2);

  // Index order: z1(x)x1, z1(x)x2, z2(x)x1, z2(x)x2.
  std::vector<ModuleElement> images;
  if (first.is_free()) {
    images = {nu1, nu2, nu1, nu2};
  } else if (second.is_free()) {
    images = {nu1, nu1, nu2, nu2};
  } else if (i + i2 > l) {
    images = {times(x, nu1), times(t(j2), nu1), times(t(j), nu1), nu2};
  } else if (i + i2 < l) {
    images = {nu1, times(t(i), nu2), times(t(i2), nu2), times(y, nu2)};
  } else {
    // i + i' = l forces i' = j and j' = i; the target is free.
    images = {times(x, nu1), times(t(i), nu1), times(t(j), nu1), times(y, nu1)};
  }
  return certified(GeneratorMap(source, target, std::move(images)), "product_map");
}

GeneratorMap symmetric_power_map(int i, int j, int l, int m, const Field& field) {
  require_exponent_pair(i, j, l);
  if (m < 1) throw Error("symmetric_power_map: power must be positive");
  const ModulePresentation source = module_make(i, j, l);
  const ExponentPair te = power_exponents(i, j, l, m);
  const ModulePresentation target = module_make(te.i, te.j, l);
  const ModuleElement zeta1 = gen(target, field, 1);
  const ModuleElement zeta2 = gen(target, field, 2);

  std::vector<ModuleElement> images;
  if (source.is_free()) {
    images.assign(static_cast<std::size_t>(m) + 1, zeta1);
  } else {
    const int u_num = m * i - te.i;
    const int v_num = m * j - te.j;
    if (u_num % l != 0 || v_num % l != 0 || u_num < 0 || v_num < 0) {
      throw Error("symmetric_power_map: inconsistent tier data (u or v not a nonnegative integer)");
    }
    const int u = u_num / l;
    const int v = v_num / l;
    for (int k = 0; k <= m; ++k) {
      if (k <= u) {
        images.push_back(times(RingElement::term(field, l, 1, k * j, u - k, 0), zeta1));
      } else {
        images.push_back(times(RingElement::term(field, l, 1, (m - k) * i, 0, v - m + k), zeta2));
      }
    }
  }
  return certified(GeneratorMap(MapSource::symmetric(source, m), target, std::move(images)),
                   "symmetric_power_map");
}

GeneratorMap power_map(int d, int e, int i_r, int j_r, int l, int r, const Field& field) {
  if (e < 1 || d < 1 || d % e != 0 || r % d != 0) {
    throw Error("power_map: need e | d | r (got d=" + std::to_string(d) +
                ", e=" + std::to_string(e) + ", r=" + std::to_string(r) + ")");
  }
  const TierIndex from = tier_twists(i_r, j_r, l, r, d);
  const TierIndex to = tier_twists(i_r, j_r, l, r, e);
  GeneratorMap map = symmetric_power_map(from.i, from.j, l, d / e, field);
  if (!(map.target() == module_make(to.i, to.j, l))) {
    throw Error("power_map: product of tier " + std::to_string(d) + " does not land in tier " +
                std::to_string(e));
  }
  return map;
}

bool compatibility_check(int d2, int d1, int d0, int i_r, int j_r, int l, int r,
                         const Field& field) {
  if (d0 < 1 || d1 % d0 != 0 || d2 % d1 != 0 || r % d2 != 0) {
    throw Error("compatibility_check: need d | d' | d'' | r");
  }
  const GeneratorMap inner = power_map(d2, d1, i_r, j_r, l, r, field);
  const GeneratorMap outer = power_map(d1, d0, i_r, j_r, l, r, field);
  const GeneratorMap direct = power_map(d2, d0, i_r, j_r, l, r, field);
  const int block = d2 / d1;   // degree of each inner factor
  const int blocks = d1 / d0;  // number of inner factors
  const int total = d2 / d0;

  std::vector<int> split(static_cast<std::size_t>(blocks));
  std::vector<ModuleElement> factors;
  bool ok = true;
  // Enumerate nondecreasing splits k_1 <= ... <= k_blocks with sum k, 0 <= k_s <= block.
  std::function<void(std::size_t, int, int)> walk = [&](std::size_t pos, int low, int remaining) {
    if (!ok) return;
    if (pos == split.size()) {
      if (remaining != 0) return;
      factors.clear();
      for (int ks : split) factors.push_back(inner.image_symmetric(ks));
      const int k = std::accumulate(split.begin(), split.end(), 0);
      if (!(apply_symmetric(outer, factors) == direct.image_symmetric(k))) ok = false;
      return;
    }
    for (int ks = low; ks <= block && ks <= remaining; ++ks) {
      split[pos] = ks;
      walk(pos + 1, ks, remaining - ks);
    }
  };
  for (int k = 0; k <= total && ok; ++k) walk(0, 0, k);
  return ok;
}

GeneratorMap dual_pairing(int i, int j, int l, const Field& field) {
  require_exponent_pair(i, j, l);
  return product_map(i, j, j, i, l, field);
}

LaurentElement localized_coordinate(const ModuleElement& m, Chart chart) {
  const ModulePresentation& p = m.presentation();
  const Field& field = m.field();
  if (p.is_free()) return localize(m.first(), chart);
  // x-chart: zeta2 = t^j x^-1 zeta1.  y-chart: zeta1 = t^i y^-1 zeta2.
  LaurentElement factor(field, p.l, chart);
  factor.add_term(1, chart == Chart::x ? p.j : p.i, -1);
  if (chart == Chart::x) return localize(m.first(), chart) + localize(m.second(), chart) * factor;
  return localize(m.first(), chart) * factor + localize(m.second(), chart);
}

bool localized_agreement(const GeneratorMap& product, Chart chart) {
  if (product.source().kind != SourceKind::tensor) {
    throw Error("localized_agreement: expected a tensor-source map");
  }
  const Field& field = product.field();
  const ModulePresentation& a = product.source().first;
  const ModulePresentation& b = product.source().second;
  const int base = chart == Chart::x ? 1 : 2;
  const LaurentElement unit = localized_coordinate(product.image_tensor(base, base), chart);
  if (!unit.is_unit()) return false;
  for (int p = 1; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      const LaurentElement expected =
          unit * localized_coordinate(ModuleElement::generator(a, field, p), chart) *
          localized_coordinate(ModuleElement::generator(b, field, q), chart);
      if (!(localized_coordinate(product.image_tensor(p, q), chart) == expected)) return false;
    }
  }
  return true;
}

ModuleElement iterated_product(int i, int j, int l, int count1, int count2, const Field& field) {
  require_exponent_pair(i, j, l);
  if (count1 < 0 || count2 < 0 || count1 + count2 < 1) {
    throw Error("iterated_product: need at least one factor");
  }
  const ModulePresentation base = module_make(i, j, l);
  std::vector<int> order(static_cast<std::size_t>(count1), 1);
  order.insert(order.end(), static_cast<std::size_t>(count2), 2);
  ModuleElement acc = ModuleElement::generator(base, field, order.front());
  for (std::size_t s = 1; s < order.size(); ++s) {
    const ExponentPair cur = power_exponents(i, j, l, static_cast<long>(s));
    const GeneratorMap mult = product_map(cur.i, cur.j, i, j, l, field);
    acc = apply_bilinear(mult, acc, ModuleElement::generator(base, field, order[s]));
  }
  return acc;
}

}  // namespace rspin

#include "rspin/window.hpp"

#include <cstdlib>
#include <numeric>

namespace rspin {

const ModulePresentation& AlgebraWindow::tier(int d) const {
  const auto it = tiers_.find(d);
  if (it == tiers_.end())
    throw Error("AlgebraWindow: degree " + std::to_string(d) + " outside window");
  return it->second;
}

const GeneratorMap& AlgebraWindow::product(int d, int d2) const {
  const auto it = products_.find({d, d2});
  if (it == products_.end()) {
    throw Error("AlgebraWindow: product (" + std::to_string(d) + ", " + std::to_string(d2) +
                ") outside window");
  }
  return it->second;
}

bool AlgebraWindow::unit_laws_hold() const {
  for (const auto& [d, pres] : tiers_) {
    const ModuleElement one = ModuleElement::generator(tier(0), field_, 1);
    for (int a = 1; a <= 2; ++a) {
      const ModuleElement g = ModuleElement::generator(pres, field_, a);
      if (!(apply_bilinear(product(0, d), one, g) == g)) return false;
      if (!(apply_bilinear(product(d, 0), g, one) == g)) return false;
    }
  }
  return true;
}

std::optional<std::string> AlgebraWindow::associativity_failure() const {
  const int D = radius_;
  auto inside = [D](int d) { return std::abs(d) <= D; };
  for (int d1 = -D; d1 <= D; ++d1) {
    for (int d2 = -D; d2 <= D; ++d2) {
      if (!inside(d1 + d2)) continue;
      for (int d3 = -D; d3 <= D; ++d3) {
        if (!inside(d2 + d3) || !inside(d1 + d2 + d3)) continue;
        for (int a = 1; a <= 2; ++a) {
          const ModuleElement ga = ModuleElement::generator(tier(d1), field_, a);
          for (int b = 1; b <= 2; ++b) {
            const ModuleElement gb = ModuleElement::generator(tier(d2), field_, b);
            const ModuleElement ab = apply_bilinear(product(d1, d2), ga, gb);
            for (int c = 1; c <= 2; ++c) {
              const ModuleElement gc = ModuleElement::generator(tier(d3), field_, c);
              const ModuleElement left = apply_bilinear(product(d1 + d2, d3), ab, gc);
              const ModuleElement right =
                  apply_bilinear(product(d1, d2 + d3), ga, apply_bilinear(product(d2, d3), gb, gc));
              if (!(left == right)) {
                return "degrees (" + std::to_string(d1) + "," + std::to_string(d2) + "," +
                       std::to_string(d3) + ") generators (" + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(c) + "): " + left.to_string() +
                       " vs " + right.to_string();
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

AlgebraWindow algebra_window(int i, int j, int l, int r, int radius, const Field& field) {
  require_exponent_pair(i, j, l);
  if (r < 1 || r % l != 0) throw Error("algebra_window: l must divide r");
  if (i + j == l && std::gcd(j, l) != 1) {
    throw Error("algebra_window: gcd(j, l) must be 1 for a representable top tier");
  }
  if (radius < r) throw Error("algebra_window: radius must be at least r");

  AlgebraWindow w(i, j, l, r, radius, field);
  for (int d = -radius; d <= radius; ++d) {
    const ExponentPair e = power_exponents(i, j, l, d);
    w.tiers_.emplace(d, module_make(e.i, e.j, l));
  }
  if (!w.tier(0).is_free() || !w.tier(r).is_free()) {
    throw Error("algebra_window: tiers 0 and r must be free");
  }
  for (int d = -radius; d <= radius; ++d) {
    for (int d2 = -radius; d2 <= radius; ++d2) {
      if (std::abs(d + d2) > radius) continue;
      const ModulePresentation& a = w.tier(d);
      const ModulePresentation& b = w.tier(d2);
      GeneratorMap p = product_map(a.i, a.j, b.i, b.j, l, field);
      if (!(p.target() == w.tier(d + d2))) {
        throw Error("algebra_window: product lands outside tier " + std::to_string(d + d2));
      }
      w.products_.emplace(std::pair{d, d2}, std::move(p));
    }
  }
  return w;
}

}  // namespace rspin

#include "rspin/automorphisms.hpp"

#include <algorithm>

#include "rspin/products.hpp"

namespace rspin {

bool AutomorphismGroup::is_diagonal() const {
  return std::all_of(elements.begin(), elements.end(),
                     [](const auto& p) { return p.first == p.second; });
}

AutomorphismGroup automorphisms(int i, int j, int l, int e, TMode mode, bool disconnected,
                                const FieldConfig& config) {
  const Field& field = config.field();
  const std::vector<Coeff> roots = config.unity_roots(e);  // throws unless e | r
  const ModulePresentation m = module_make(i, j, l);
  const GeneratorMap gamma = symmetric_power_map(i, j, l, e, field);
  const ModuleElement g1 = ModuleElement::generator(m, field, 1);
  const ModuleElement g2 = ModuleElement::generator(m, field, 2);

  auto vanishes = [&](const ModuleElement& v) { return specialize(v, mode).is_zero(); };

  AutomorphismGroup group;
  for (Coeff eta : roots) {
    for (Coeff sigma : roots) {
      if (!disconnected && eta != sigma) continue;
      bool keep = true;
      // Each relation c1 g1 + c2 g2 must map to zero: c1 eta g1 + c2 sigma g2 = 0.
      for (const Relation& rel : defining_relations(m, field)) {
        const ModuleElement pushed =
            scalar_action(rel.c1, g1).scaled(eta) + scalar_action(rel.c2, g2).scaled(sigma);
        if (!vanishes(pushed)) keep = false;
      }
      // gamma_e(eta^(e-k) sigma^k xi1^(e-k) xi2^k) = gamma_e(xi1^(e-k) xi2^k).
      for (int k = 0; keep && k <= e; ++k) {
        const Coeff scale = field.mul(field.pow(eta, static_cast<unsigned>(e - k)),
                                      field.pow(sigma, static_cast<unsigned>(k)));
        if (!vanishes(gamma.image_symmetric(k).scaled(field.sub(scale, 1)))) keep = false;
      }
      if (keep) group.elements.emplace_back(eta, sigma);
    }
  }
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

}  // namespace rspin

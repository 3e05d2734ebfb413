#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rspin/products.hpp"

namespace rspin {

/// Degrees -D..D of the graded algebra G = sum_d G_d at one node, where G_1 = E_{i,j}
/// and G_d = E_{(d i) mod l, (d j) mod l}, together with all products G_d (x) G_d' ->
/// G_{d+d'} that stay inside the window.
class AlgebraWindow {
 public:
  int i() const { return i_; }
  int j() const { return j_; }
  int node_index() const { return l_; }
  int level() const { return r_; }
  int radius() const { return radius_; }

  const std::map<int, ModulePresentation>& tiers() const { return tiers_; }
  const ModulePresentation& tier(int d) const;
  const std::map<std::pair<int, int>, GeneratorMap>& products() const { return products_; }
  const GeneratorMap& product(int d, int d2) const;

  /// Multiplying by the unit of G_0 on either side is the identity on generators.
  bool unit_laws_hold() const;
  /// First bracketing mismatch among all triples inside the window, if any.
  std::optional<std::string> associativity_failure() const;

 private:
  friend AlgebraWindow algebra_window(int i, int j, int l, int r, int radius, const Field& field);
  AlgebraWindow(int i, int j, int l, int r, int radius, Field field)
      : i_(i), j_(j), l_(l), r_(r), radius_(radius), field_(field) {}

  int i_;
  int j_;
  int l_;
  int r_;
  int radius_;
  Field field_;
  std::map<int, ModulePresentation> tiers_;
  std::map<std::pair<int, int>, GeneratorMap> products_;
};

AlgebraWindow algebra_window(int i, int j, int l, int r, int radius, const Field& field);

}  // namespace rspin

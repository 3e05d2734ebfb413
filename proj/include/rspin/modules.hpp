#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rspin/ring.hpp"

namespace rspin {

enum class Flavor { standard, free_module };

/// E_{i,j} = <xi1, xi2 | t^j xi1 = x xi2, t^i xi2 = y xi1> over A_l (i + j = l, i, j > 0),
/// or E_{0,0} = <xi1, xi2 | xi1 = xi2>, the free module of rank one.
struct ModulePresentation {
  int i = 0;
  int j = 0;
  int l = 1;
  Flavor flavor = Flavor::free_module;

  bool is_free() const { return flavor == Flavor::free_module; }
  /// "E_{i,j}" for display.
  std::string name() const;

  bool operator==(const ModulePresentation&) const = default;
};

ModulePresentation module_make(int i, int j, int l);

/// A defining relation c1*g1 + c2*g2 = 0 between the two generators.
struct Relation {
  RingElement c1;
  RingElement c2;
  std::string label;
};

/// Defining relations of the presentation, in a fixed order.
std::vector<Relation> defining_relations(const ModulePresentation& m, const Field& field);

/// Element f*g1 + g*g2 in normal form. For the standard flavor f has no y and g has
/// no x; for the free flavor everything sits on g1 and g = 0.
class ModuleElement {
 public:
  static ModuleElement zero(const ModulePresentation& m, const Field& field);
  static ModuleElement generator(const ModulePresentation& m, const Field& field, int which);
  /// Builds f*g1 + g*g2 and rewrites it to normal form.
  static ModuleElement combination(const ModulePresentation& m, const RingElement& f,
                                   const RingElement& g);

  const ModulePresentation& presentation() const { return pres_; }
  const Field& field() const { return f_.field(); }
  const RingElement& first() const { return f_; }
  const RingElement& second() const { return g_; }
  bool is_zero() const { return f_.is_zero() && g_.is_zero(); }
  /// Largest (x, y)-degree of a coefficient term; -1 for zero.
  int xy_degree() const;

  ModuleElement operator+(const ModuleElement& other) const;
  ModuleElement operator-(const ModuleElement& other) const;
  ModuleElement scaled(Coeff c) const;
  bool operator==(const ModuleElement& other) const;

  /// e.g. "x*nu1 + t*nu2"; the free flavor uses only the first name.
  std::string to_string(const std::array<std::string, 2>& names = {"g1", "g2"}) const;
  std::string to_string(const std::string& free_name,
                        const std::array<std::string, 2>& names) const;

 private:
  ModuleElement(ModulePresentation m, RingElement f, RingElement g)
      : pres_(m), f_(std::move(f)), g_(std::move(g)) {}
  void check_same(const ModuleElement& other) const;

  ModulePresentation pres_;
  RingElement f_;
  RingElement g_;
};

ModuleElement scalar_action(const RingElement& a, const ModuleElement& m);
bool element_equal(const ModuleElement& a, const ModuleElement& b);
ModuleElement specialize(const ModuleElement& m, TMode mode);

/// Number of normal-form basis monomials in each (x, y)-degree 0..D after t is
/// specialized. Generic mode is rejected: the pieces are infinite over K[t].
std::vector<std::size_t> graded_dims(const ModulePresentation& m, TMode mode, int max_degree);

}  // namespace rspin

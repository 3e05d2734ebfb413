#include "rspin/modules.hpp"

#include <set>
#include <sstream>
#include <utility>

namespace rspin {

std::string ModulePresentation::name() const {
  return "E_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

ModulePresentation module_make(int i, int j, int l) {
  if (l < 1) throw Error("module_make: l must be positive");
  if (i < 0 || j < 0) throw Error("module_make: negative exponent");
  if (i == 0 && j == 0) return {0, 0, l, Flavor::free_module};
  if (i + j != l || i == 0 || j == 0) {
    throw Error("module_make: need i + j = l with i, j > 0 or i = j = 0 (got i=" +
                std::to_string(i) + ", j=" + std::to_string(j) + ", l=" + std::to_string(l) + ")");
  }
  return {i, j, l, Flavor::standard};
}

std::vector<Relation> defining_relations(const ModulePresentation& m, const Field& field) {
  const int l = m.l;
  if (m.is_free()) {
    return {{RingElement::constant(field, l, 1), RingElement::constant(field, l, -1), "g1 = g2"}};
  }
  return {
      {RingElement::t_power(field, l, m.j), -RingElement::x_power(field, l, 1),
       "t^" + std::to_string(m.j) + "*g1 = x*g2"},
      {-RingElement::y_power(field, l, 1), RingElement::t_power(field, l, m.i),
       "t^" + std::to_string(m.i) + "*g2 = y*g1"},
  };
}

ModuleElement ModuleElement::zero(const ModulePresentation& m, const Field& field) {
  return ModuleElement(m, RingElement(field, m.l), RingElement(field, m.l));
}

ModuleElement ModuleElement::generator(const ModulePresentation& m, const Field& field, int which) {
  if (which != 1 && which != 2) throw Error("generator index must be 1 or 2");
  const RingElement one = RingElement::constant(field, m.l, 1);
  const RingElement zero(field, m.l);
  return combination(m, which == 1 ? one : zero, which == 2 ? one : zero);
}

ModuleElement ModuleElement::combination(const ModulePresentation& m, const RingElement& f,
                                         const RingElement& g) {
  if (f.node_index() != m.l || g.node_index() != m.l) {
    throw Error("module element coefficients do not live in A_" + std::to_string(m.l));
  }
  const Field& field = f.field();
  if (m.is_free()) return ModuleElement(m, f + g, RingElement(field, m.l));

  // y*g1 -> t^i*g2 and x*g2 -> t^j*g1; each moved term loses one factor of the
  // offending variable and never gains the other, so one pass suffices.
  RingElement nf(field, m.l);
  RingElement ng(field, m.l);
  for (const auto& [mono, c] : f.terms()) {
    if (mono.y > 0)
      ng.add_term(c, mono.t + m.i, 0, mono.y - 1);
    else
      nf.add_term(c, mono.t, mono.x, 0);
  }
  for (const auto& [mono, c] : g.terms()) {
    if (mono.x > 0)
      nf.add_term(c, mono.t + m.j, mono.x - 1, 0);
    else
      ng.add_term(c, mono.t, 0, mono.y);
  }
  return ModuleElement(m, std::move(nf), std::move(ng));
}

int ModuleElement::xy_degree() const { return std::max(f_.xy_degree(), g_.xy_degree()); }

void ModuleElement::check_same(const ModuleElement& other) const {
  if (!(pres_ == other.pres_)) {
    throw Error("module elements belong to different presentations (" + pres_.name() + " vs " +
                other.pres_.name() + ")");
  }
}

ModuleElement ModuleElement::operator+(const ModuleElement& other) const {
  check_same(other);
  return ModuleElement(pres_, f_ + other.f_, g_ + other.g_);
}

ModuleElement ModuleElement::operator-(const ModuleElement& other) const {
  check_same(other);
  return ModuleElement(pres_, f_ - other.f_, g_ - other.g_);
}

ModuleElement ModuleElement::scaled(Coeff c) const {
  return ModuleElement(pres_, f_.scaled(c), g_.scaled(c));
}

bool ModuleElement::operator==(const ModuleElement& other) const {
  return pres_ == other.pres_ && f_ == other.f_ && g_ == other.g_;
}

std::string ModuleElement::to_string(const std::array<std::string, 2>& names) const {
  return to_string(names[0], names);
}

std::string ModuleElement::to_string(const std::string& free_name,
                                     const std::array<std::string, 2>& names) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const RingElement& coeff, const std::string& gen) {
    if (coeff.is_zero()) return;
    if (!first) out << " + ";
    first = false;
    if (coeff == RingElement::constant(coeff.field(), coeff.node_index(), 1)) {
      out << gen;
    } else if (coeff.terms().size() == 1) {
      out << coeff.to_string() << '*' << gen;
    } else {
      out << '(' << coeff.to_string() << ")*" << gen;
    }
  };
  if (pres_.is_free()) {
    emit(f_, free_name);
  } else {
    emit(f_, names[0]);
    emit(g_, names[1]);
  }
  return out.str();
}

ModuleElement scalar_action(const RingElement& a, const ModuleElement& m) {
  if (a.node_index() != m.presentation().l) {
    throw Error("scalar_action: ring element and module have different node index");
  }
  return ModuleElement::combination(m.presentation(), a * m.first(), a * m.second());
}

bool element_equal(const ModuleElement& a, const ModuleElement& b) {
  if (!(a.presentation() == b.presentation())) {
    throw Error("element_equal: elements of different presentations");
  }
  return a == b;
}

ModuleElement specialize(const ModuleElement& m, TMode mode) {
  return ModuleElement::combination(m.presentation(), specialize(m.first(), mode),
                                    specialize(m.second(), mode));
}

std::vector<std::size_t> graded_dims(const ModulePresentation& m, TMode mode, int max_degree) {
  if (mode.is_generic()) {
    throw Error("graded_dims: t must be specialized (pieces are infinite over K[t])");
  }
  if (max_degree < 0) throw Error("graded_dims: negative degree bound");
  // Only which monomials survive matters, so any field containing the value of t works.
  const Field field(2147483647);
  std::vector<std::size_t> dims;
  for (int d = 0; d <= max_degree; ++d) {
    // Distinct normal-form monomials of exact degree d reached from x^a y^b * g_k.
    std::set<std::pair<int, Monomial>> basis;
    for (int k = 1; k <= 2; ++k) {
      for (int a = 0; a <= d; ++a) {
        const RingElement coeff = RingElement::term(field, m.l, 1, 0, a, d - a);
        const ModuleElement e =
            specialize(scalar_action(coeff, ModuleElement::generator(m, field, k)), mode);
        for (int slot = 1; slot <= 2; ++slot) {
          const RingElement& part = slot == 1 ? e.first() : e.second();
          for (const auto& [mono, c] : part.terms()) {
            if (mono.x + mono.y == d) basis.insert({slot, mono});
          }
        }
      }
    }
    dims.push_back(basis.size());
  }
  return dims;
}

}  // namespace rspin

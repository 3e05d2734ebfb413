// The node ring K[z,w]/(zw) is modeled as A_1 with t specialized to 0 (x = z, y = w).

#include <map>

#include "rspin/generator_map.hpp"
#include "rspin/linalg.hpp"

namespace rspin {

namespace {

constexpr int kNode = 1;

RingElement at_origin(const RingElement& a) { return specialize(a, TMode::specialized(0)); }

/// Monomial basis of K[z,w]/(zw) in degree d.
std::vector<RingElement> node_basis(const Field& field, int d) {
  if (d < 0) return {};
  if (d == 0) return {RingElement::constant(field, kNode, 1)};
  return {RingElement::x_power(field, kNode, d), RingElement::y_power(field, kNode, d)};
}

/// Coordinates in a free module of rank 2 over K[z,w]/(zw), one block per basis vector,
/// restricted to coefficient degree d.
class FreeRankTwo {
 public:
  FreeRankTwo(const Field& field, int d) {
    for (int slot = 0; slot < 2; ++slot) {
      for (const RingElement& m : node_basis(field, d)) {
        index_.emplace(std::pair{slot, m.terms().begin()->first}, index_.size());
      }
    }
  }

  std::size_t dimension() const { return index_.size(); }

  std::vector<Coeff> coordinates(const RingElement& first, const RingElement& second) const {
    std::vector<Coeff> v(index_.size(), 0);
    int slot = 0;
    for (const RingElement* part : {&first, &second}) {
      const RingElement reduced = at_origin(*part);
      for (const auto& [mono, c] : reduced.terms()) v.at(index_.at({slot, mono})) = c;
      ++slot;
    }
    return v;
  }

 private:
  std::map<std::pair<int, Monomial>, std::size_t> index_;
};

struct DegreePiece {
  std::size_t source_dim = 0;
  std::size_t first_rank = 0;
  std::size_t middle_dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t omega_dim = 0;
  bool composition_zero = true;
  bool second_surjective = true;
};

// Degree bookkeeping: dz, dw and the middle generators e1, e2 sit in degree 1, the
// source generator in degree 2. The first map sends 1 to z*e1 + w*e2, the second
// sends e1 to dw and e2 to dz.
DegreePiece analyze(const Field& field, int d) {
  DegreePiece piece;
  const RingElement z = RingElement::x_power(field, kNode, 1);
  const RingElement w = RingElement::y_power(field, kNode, 1);
  const RingElement zero(field, kNode);

  // F = B dz + B dw in degree d, coordinates (dz-part, dw-part).
  const FreeRankTwo differentials(field, d - 1);
  RowEchelon relations(field, differentials.dimension());
  for (const RingElement& m : node_basis(field, d - 2)) {
    relations.insert(differentials.coordinates(m * w, m * z));  // m (w dz + z dw)
  }
  piece.omega_dim = differentials.dimension() - relations.rank();

  // Middle term B e1 + B e2; second map e1 -> dw, e2 -> dz.
  const FreeRankTwo middle(field, d - 1);
  piece.middle_dim = middle.dimension();
  RowEchelon with_image = relations;
  for (int slot = 0; slot < 2; ++slot) {
    for (const RingElement& m : node_basis(field, d - 1)) {
      const RingElement& e1 = slot == 0 ? m : zero;
      const RingElement& e2 = slot == 1 ? m : zero;
      with_image.insert(differentials.coordinates(e2, e1));
    }
  }
  const std::size_t second_rank = with_image.rank() - relations.rank();
  piece.kernel_dim = piece.middle_dim - second_rank;
  piece.second_surjective = second_rank == piece.omega_dim;

  // First map 1 -> (z, w).
  RowEchelon first_image(field, middle.dimension());
  const auto sources = node_basis(field, d - 2);
  piece.source_dim = sources.size();
  for (const RingElement& m : sources) {
    const RingElement e1 = at_origin(m * z);
    const RingElement e2 = at_origin(m * w);
    first_image.insert(middle.coordinates(e1, e2));
    if (!relations.contains(differentials.coordinates(e2, e1))) piece.composition_zero = false;
  }
  piece.first_rank = first_image.rank();
  return piece;
}

}  // namespace

bool resolution_exact_check(int max_degree, const Field& field) {
  if (max_degree < 0) throw Error("resolution_exact_check: negative degree bound");
  for (int d = 0; d <= max_degree; ++d) {
    const DegreePiece p = analyze(field, d);
    const bool injective = p.first_rank == p.source_dim;
    const bool exact_middle = p.composition_zero && p.kernel_dim == p.first_rank;
    if (!injective || !exact_middle || !p.second_surjective) return false;
  }
  return true;
}

std::size_t omega_dimension(int degree, const Field& field) {
  return analyze(field, degree).omega_dim;
}

}  // namespace rspin

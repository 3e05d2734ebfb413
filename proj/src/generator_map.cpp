#include "rspin/generator_map.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "rspin/linalg.hpp"

namespace rspin {

MapSource MapSource::symmetric(const ModulePresentation& m, int power) {
  if (power < 1) throw Error("symmetric power must be positive");
  return {SourceKind::symmetric, m, m, power};
}

std::size_t MapSource::generator_count() const {
  switch (kind) {
    case SourceKind::linear:
      return 2;
    case SourceKind::tensor:
      return 4;
    case SourceKind::symmetric:
      return static_cast<std::size_t>(power) + 1;
  }
  return 0;
}

std::string MapSource::generator_label(std::size_t index,
                                       const std::array<std::string, 2>& first_names,
                                       const std::array<std::string, 2>& second_names) const {
  switch (kind) {
    case SourceKind::linear:
      return first_names.at(index);
    case SourceKind::tensor:
      return first_names.at(index / 2) + " (x) " + second_names.at(index % 2);
    case SourceKind::symmetric: {
      const int k = static_cast<int>(index);
      std::ostringstream out;
      auto factor = [&](const std::string& name, int e) {
        if (e == 0) return;
        if (out.tellp() > 0) out << '*';
        out << name;
        if (e > 1) out << '^' << e;
      };
      factor(first_names[0], power - k);
      factor(first_names[1], k);
      return out.str();
    }
  }
  return {};
}

std::string Certificate::to_string() const {
  if (pass) return "pass";
  std::string s = "fail: relation " + relation;
  if (!slot.empty()) s += " [" + slot + "]";
  if (residue) s += " leaves " + residue->to_string();
  return s;
}

GeneratorMap::GeneratorMap(MapSource source, ModulePresentation target,
                           std::vector<ModuleElement> images)
    : source_(std::move(source)), target_(target), images_(std::move(images)) {
  if (images_.size() != source_.generator_count()) {
    throw Error("GeneratorMap: expected " + std::to_string(source_.generator_count()) +
                " images, got " + std::to_string(images_.size()));
  }
  for (const ModuleElement& im : images_) {
    if (!(im.presentation() == target_)) throw Error("GeneratorMap: image outside the target");
  }
  const int l = target_.l;
  if (source_.first.l != l || source_.second.l != l) {
    throw Error("GeneratorMap: source and target over different node rings");
  }
}

const ModuleElement& GeneratorMap::image_tensor(int a, int b) const {
  if (source_.kind != SourceKind::tensor) throw Error("image_tensor on a non-tensor map");
  return images_.at(static_cast<std::size_t>(2 * (a - 1) + (b - 1)));
}

const ModuleElement& GeneratorMap::image_symmetric(int k) const {
  if (source_.kind != SourceKind::symmetric) throw Error("image_symmetric on a non-symmetric map");
  return images_.at(static_cast<std::size_t>(k));
}

void GeneratorMap::set_image(std::size_t index, ModuleElement value) {
  if (!(value.presentation() == target_)) throw Error("GeneratorMap: image outside the target");
  images_.at(index) = std::move(value);
  valid_ = false;
}

Certificate GeneratorMap::certify() {
  Certificate c = check_well_defined(*this);
  valid_ = c.pass;
  return c;
}

namespace {

ModuleElement push(const Relation& rel, const ModuleElement& first, const ModuleElement& second) {
  return scalar_action(rel.c1, first) + scalar_action(rel.c2, second);
}

}  // namespace

Certificate check_well_defined(const GeneratorMap& map) {
  const MapSource& src = map.source();
  const Field& field = map.field();
  auto failure = [](const Relation& rel, std::string slot, ModuleElement residue) {
    return Certificate{false, rel.label, std::move(slot), std::move(residue)};
  };

  switch (src.kind) {
    case SourceKind::linear:
      for (const Relation& rel : defining_relations(src.first, field)) {
        ModuleElement r = push(rel, map.image(0), map.image(1));
        if (!r.is_zero()) return failure(rel, "", std::move(r));
      }
      break;
    case SourceKind::tensor:
      for (const Relation& rel : defining_relations(src.first, field)) {
        for (int b = 1; b <= 2; ++b) {
          ModuleElement r = push(rel, map.image_tensor(1, b), map.image_tensor(2, b));
          if (!r.is_zero()) return failure(rel, "slot 1, (x) h" + std::to_string(b), std::move(r));
        }
      }
      for (const Relation& rel : defining_relations(src.second, field)) {
        for (int a = 1; a <= 2; ++a) {
          ModuleElement r = push(rel, map.image_tensor(a, 1), map.image_tensor(a, 2));
          if (!r.is_zero())
            return failure(rel, "slot 2, g" + std::to_string(a) + " (x)", std::move(r));
        }
      }
      break;
    case SourceKind::symmetric:
      for (const Relation& rel : defining_relations(src.first, field)) {
        for (int q = 0; q < src.power; ++q) {
          ModuleElement r = push(rel, map.image_symmetric(q), map.image_symmetric(q + 1));
          if (!r.is_zero()) {
            return failure(rel,
                           "* g1^" + std::to_string(src.power - 1 - q) + " g2^" + std::to_string(q),
                           std::move(r));
          }
        }
      }
      break;
  }
  return Certificate{};
}

ModuleElement apply_linear(const GeneratorMap& map, const ModuleElement& m) {
  if (map.source().kind != SourceKind::linear) throw Error("apply_linear on a non-linear map");
  if (!(m.presentation() == map.source().first)) throw Error("apply_linear: element not in source");
  return scalar_action(m.first(), map.image(0)) + scalar_action(m.second(), map.image(1));
}

ModuleElement apply_bilinear(const GeneratorMap& map, const ModuleElement& a,
                             const ModuleElement& b) {
  if (map.source().kind != SourceKind::tensor) throw Error("apply_bilinear on a non-tensor map");
  if (!(a.presentation() == map.source().first) || !(b.presentation() == map.source().second)) {
    throw Error("apply_bilinear: factors not in source");
  }
  ModuleElement result = ModuleElement::zero(map.target(), map.field());
  const std::array<const RingElement*, 2> ca{&a.first(), &a.second()};
  const std::array<const RingElement*, 2> cb{&b.first(), &b.second()};
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const RingElement coeff = *ca[i - 1] * *cb[j - 1];
      if (!coeff.is_zero()) result = result + scalar_action(coeff, map.image_tensor(i, j));
    }
  }
  return result;
}

ModuleElement apply_symmetric(const GeneratorMap& map, std::span<const ModuleElement> factors) {
  const MapSource& src = map.source();
  if (src.kind != SourceKind::symmetric) throw Error("apply_symmetric on a non-symmetric map");
  if (factors.size() != static_cast<std::size_t>(src.power)) {
    throw Error("apply_symmetric: expected " + std::to_string(src.power) + " factors");
  }
  const Field& field = map.field();
  const int l = src.first.l;
  // coeff[k] multiplies g1^(m-k) g2^k in the expanded product.
  std::vector<RingElement> coeff{RingElement::constant(field, l, 1)};
  for (const ModuleElement& f : factors) {
    if (!(f.presentation() == src.first)) throw Error("apply_symmetric: factor not in source");
    std::vector<RingElement> next(coeff.size() + 1, RingElement(field, l));
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      next[k] = next[k] + coeff[k] * f.first();
      next[k + 1] = next[k + 1] + coeff[k] * f.second();
    }
    coeff = std::move(next);
  }
  ModuleElement result = ModuleElement::zero(map.target(), field);
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    if (!coeff[k].is_zero()) {
      result = result + scalar_action(coeff[k], map.image_symmetric(static_cast<int>(k)));
    }
  }
  return result;
}

namespace {

/// Coordinates of target elements (t = 0) truncated to (x, y)-degree <= N.
class TruncatedTarget {
 public:
  TruncatedTarget(const ModulePresentation& m, int max_degree) : max_degree_(max_degree) {
    for (int slot = 1; slot <= (m.is_free() ? 1 : 2); ++slot) {
      for (int d = 0; d <= max_degree; ++d) {
        if (m.is_free()) {
          if (d == 0)
            add(slot, Monomial{0, 0, 0});
          else {
            add(slot, Monomial{0, d, 0});
            add(slot, Monomial{0, 0, d});
          }
        } else {
          add(slot, slot == 1 ? Monomial{0, d, 0} : Monomial{0, 0, d});
        }
      }
    }
  }

  std::size_t dimension() const { return index_.size(); }

  std::vector<Coeff> coordinates(const ModuleElement& e) const {
    std::vector<Coeff> v(index_.size(), 0);
    for (int slot = 1; slot <= 2; ++slot) {
      const RingElement& part = slot == 1 ? e.first() : e.second();
      for (const auto& [mono, c] : part.terms()) {
        if (mono.x + mono.y > max_degree_) continue;
        const auto it = index_.find({slot, mono});
        if (it == index_.end()) throw Error("cokernel_length: unexpected monomial at t=0");
        v[it->second] = c;
      }
    }
    return v;
  }

 private:
  void add(int slot, Monomial m) { index_.emplace(std::pair{slot, m}, index_.size()); }

  int max_degree_;
  std::map<std::pair<int, Monomial>, std::size_t> index_;
};

std::size_t colength(const GeneratorMap& map, const std::vector<ModuleElement>& images,
                     int max_degree) {
  const TruncatedTarget basis(map.target(), max_degree);
  RowEchelon span(map.field(), basis.dimension());
  const Field& field = map.field();
  const int l = map.target().l;
  std::vector<RingElement> multipliers{RingElement::constant(field, l, 1)};
  for (int d = 1; d <= max_degree; ++d) {
    multipliers.push_back(RingElement::x_power(field, l, d));
    multipliers.push_back(RingElement::y_power(field, l, d));
  }
  for (const ModuleElement& im : images) {
    for (const RingElement& m : multipliers) {
      span.insert(basis.coordinates(specialize(scalar_action(m, im), TMode::specialized(0))));
    }
  }
  return basis.dimension() - span.rank();
}

}  // namespace

std::size_t cokernel_length(const GeneratorMap& map, TMode mode) {
  if (!mode.is_zero()) throw Error("cokernel_length: lengths are computed with t specialized to 0");
  if (!map.valid()) throw Error("cokernel_length: map has not passed check_well_defined");
  std::vector<ModuleElement> images;
  int image_degree = 0;
  for (const ModuleElement& im : map.images()) {
    images.push_back(specialize(im, mode));
    image_degree = std::max(image_degree, images.back().xy_degree());
  }
  const ModulePresentation& t = map.target();
  const int threshold = std::max({t.i, t.j, t.l, image_degree});
  constexpr int kWindow = 3;
  constexpr int kMaxExtra = 64;
  std::size_t previous = 0;
  int zero_run = 0;
  for (int n = 0; n <= threshold + kMaxExtra; ++n) {
    const std::size_t current = colength(map, images, n);
    const bool zero_contribution = n > 0 && current == previous;
    previous = current;
    if (n > threshold) {
      zero_run = zero_contribution ? zero_run + 1 : 0;
      if (zero_run == kWindow) return current;
    }
  }
  throw Error("cokernel_length: no stabilization within " + std::to_string(kMaxExtra) +
              " degrees past " + std::to_string(threshold) + " (cokernel not of finite length?)");
}

}  // namespace rspin

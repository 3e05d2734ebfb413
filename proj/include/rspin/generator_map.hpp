#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rspin/modules.hpp"

namespace rspin {

enum class SourceKind { linear, tensor, symmetric };

/// The source of a GeneratorMap: a module M, a tensor product M (x) N, or Sym^m M.
/// Generators are numbered as follows:
///   linear     g_a            -> a - 1
///   tensor     g_a (x) h_b    -> 2 (a - 1) + (b - 1)
///   symmetric  g1^(m-k) g2^k  -> k
struct MapSource {
  SourceKind kind = SourceKind::linear;
  ModulePresentation first;
  ModulePresentation second;  // tensor only
  int power = 1;              // symmetric only

  static MapSource linear(const ModulePresentation& m) { return {SourceKind::linear, m, m, 1}; }
  static MapSource tensor(const ModulePresentation& a, const ModulePresentation& b) {
    return {SourceKind::tensor, a, b, 1};
  }
  static MapSource symmetric(const ModulePresentation& m, int power);

  std::size_t generator_count() const;
  /// Display name of a source generator using the given generator names.
  std::string generator_label(std::size_t index, const std::array<std::string, 2>& first_names,
                              const std::array<std::string, 2>& second_names) const;
};

/// Outcome of a well-definedness check: pass, or the first relation that fails.
struct Certificate {
  bool pass = true;
  std::string relation;  // e.g. "t^3*g1 = x*g2"
  std::string slot;      // e.g. "slot 1 (x) h2" or "* g1^1 g2^0"
  std::optional<ModuleElement> residue;

  explicit operator bool() const { return pass; }
  std::string to_string() const;
};

/// A map out of a presented source, given by the images of the source generators.
class GeneratorMap {
 public:
  GeneratorMap(MapSource source, ModulePresentation target, std::vector<ModuleElement> images);

  const MapSource& source() const { return source_; }
  const ModulePresentation& target() const { return target_; }
  const std::vector<ModuleElement>& images() const { return images_; }
  const Field& field() const { return images_.front().field(); }

  const ModuleElement& image(std::size_t index) const { return images_.at(index); }
  const ModuleElement& image_tensor(int a, int b) const;
  const ModuleElement& image_symmetric(int k) const;

  /// Replaces one image; the map must be certified again afterwards.
  void set_image(std::size_t index, ModuleElement value);

  /// Runs check_well_defined and records the verdict.
  Certificate certify();
  bool valid() const { return valid_; }

 private:
  MapSource source_;
  ModulePresentation target_;
  std::vector<ModuleElement> images_;
  bool valid_ = false;
};

/// Pushes every defining relation of the source through the images (generic t).
Certificate check_well_defined(const GeneratorMap& map);

ModuleElement apply_linear(const GeneratorMap& map, const ModuleElement& m);
ModuleElement apply_bilinear(const GeneratorMap& map, const ModuleElement& a,
                             const ModuleElement& b);
/// Multilinear extension of a symmetric-power map to a product of `power` elements.
ModuleElement apply_symmetric(const GeneratorMap& map, std::span<const ModuleElement> factors);

/// K-length of the cokernel at the origin after t -> 0, computed degree by degree
/// until three consecutive degrees past max(i, j, l) contribute nothing.
std::size_t cokernel_length(const GeneratorMap& map, TMode mode);

/// Exactness of 0 -> O -> O + O -> Omega^1 -> 0 over K[z,w]/(zw) in all degrees <= D.
bool resolution_exact_check(int max_degree, const Field& field);
/// K-dimension of Omega^1 of K[z,w]/(zw) in the given degree (deg dz = deg dw = 1).
std::size_t omega_dimension(int degree, const Field& field);

}  // namespace rspin

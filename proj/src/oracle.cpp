#include "rspin/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rspin {

UpstairsElement::UpstairsElement(Field field) : field_(field) {}

UpstairsElement UpstairsElement::monomial(Field field, Coeff c, int t, int z, int w, int s) {
  UpstairsElement e(field);
  e.add_term(c % field.prime(), t, z, w, s);
  return e;
}

void UpstairsElement::add_term(Coeff c, int t, int z, int w, int s) {
  if (c == 0) return;
  if (t < 0 || z < 0 || w < 0) throw Error("upstairs monomial with negative t, z or w exponent");
  const int m = std::min(z, w);
  auto [it, inserted] = terms_.try_emplace(UpstairsMonomial{t + m, z - m, w - m, s}, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

UpstairsElement UpstairsElement::operator+(const UpstairsElement& other) const {
  UpstairsElement r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(c, m.t, m.z, m.w, m.s);
  return r;
}

UpstairsElement UpstairsElement::operator*(const UpstairsElement& other) const {
  if (!(field_ == other.field_)) throw Error("upstairs elements over different fields");
  UpstairsElement r(field_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      r.add_term(field_.mul(ca, cb), a.t + b.t, a.z + b.z, a.w + b.w, a.s + b.s);
    }
  }
  return r;
}

bool UpstairsElement::operator==(const UpstairsElement& other) const {
  return field_ == other.field_ && terms_ == other.terms_;
}

std::optional<int> UpstairsElement::spin_degree() const {
  std::set<int> degrees;
  for (const auto& [m, c] : terms_) degrees.insert(m.s);
  if (degrees.size() != 1) return std::nullopt;
  return *degrees.begin();
}

std::string UpstairsElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::ostringstream mono;
    auto factor = [&](const char* v, int e) {
      if (e == 0) return;
      if (mono.tellp() > 0) mono << '*';
      mono << v;
      if (e != 1) mono << '^' << e;
    };
    factor("t", m.t);
    factor("z", m.z);
    factor("w", m.w);
    factor("S", m.s);
    const std::string body = mono.str();
    if (body.empty())
      out << c;
    else if (c == 1)
      out << body;
    else
      out << c << '*' << body;
  }
  return out.str();
}

UpstairsElement oracle_product(const UpstairsElement& a, const UpstairsElement& b) { return a * b; }

MonomialModel::MonomialModel(Field field, int l, int b) : field_(field), l_(l), b_(0) {
  if (l < 1) throw Error("MonomialModel: l must be positive");
  b_ = positive_mod(b, l);
  if (std::gcd(b_, l) != 1) {
    throw Error("MonomialModel: spin character b=" + std::to_string(b) +
                " is not a unit mod l=" + std::to_string(l) + " (malformed character data)");
  }
}

int MonomialModel::character(const UpstairsMonomial& m) const {
  return positive_mod(static_cast<long>(m.z) - m.w + static_cast<long>(m.s) * b_, l_);
}

UpstairsElement MonomialModel::invariant_part(const UpstairsElement& e) const {
  UpstairsElement r(field_);
  for (const auto& [m, c] : e.terms()) {
    if (character(m) == 0) r.add_term(c, m.t, m.z, m.w, m.s);
  }
  return r;
}

ModulePresentation MonomialModel::presentation(int n) const {
  return module_make(positive_mod(-static_cast<long>(n) * b_, l_),
                     positive_mod(static_cast<long>(n) * b_, l_), l_);
}

UpstairsElement MonomialModel::lift(int n, int which) const {
  const ModulePresentation p = presentation(n);
  if (which == 1) return UpstairsElement::monomial(field_, 1, 0, p.i, 0, n);
  if (which == 2) return UpstairsElement::monomial(field_, 1, 0, 0, p.j, n);
  throw Error("MonomialModel::lift: generator index must be 1 or 2");
}

ModuleElement MonomialModel::descend(const UpstairsElement& e, int n) const {
  const ModulePresentation p = presentation(n);
  RingElement f(field_, l_);
  RingElement g(field_, l_);
  for (const auto& [m, c] : e.terms()) {
    if (m.s != n)
      throw Error("descend: term of S-degree " + std::to_string(m.s) + ", expected " +
                  std::to_string(n));
    if (character(m) != 0) throw Error("descend: term is not mu_l-invariant");
    if (p.is_free()) {
      f.add_term(c, m.t, m.z / l_, m.w / l_);
    } else if (m.z > 0) {
      f.add_term(c, m.t, (m.z - p.i) / l_, 0);
    } else if (m.w > 0) {
      g.add_term(c, m.t, 0, (m.w - p.j) / l_);
    } else {
      throw Error("descend: pure t-term in a non-free module");
    }
  }
  return ModuleElement::combination(p, f, g);
}

namespace {

int spin_degree_of(int i, int j, int l) {
  // With b = 1 the module E_{i,j} is pi_* L^j.
  require_exponent_pair(i, j, l);
  return j;
}

GeneratorMap sym_through_model(const MonomialModel& model, int n, int m) {
  const int target_degree = n * m;
  std::vector<ModuleElement> images;
  for (int k = 0; k <= m; ++k) {
    UpstairsElement prod = UpstairsElement::monomial(model.field(), 1, 0, 0, 0, 0);
    for (int s = 0; s < m; ++s) prod = oracle_product(prod, model.lift(n, s < m - k ? 1 : 2));
    images.push_back(model.descend(prod, target_degree));
  }
  return GeneratorMap(MapSource::symmetric(model.presentation(n), m),
                      model.presentation(target_degree), std::move(images));
}

}  // namespace

GeneratorMap oracle_product_map(int i, int j, int i2, int j2, int l, const Field& field) {
  const MonomialModel model(field, l, 1);
  const int n1 = spin_degree_of(i, j, l);
  const int n2 = spin_degree_of(i2, j2, l);
  std::vector<ModuleElement> images;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      images.push_back(
          model.descend(oracle_product(model.lift(n1, a), model.lift(n2, b)), n1 + n2));
    }
  }
  return GeneratorMap(MapSource::tensor(model.presentation(n1), model.presentation(n2)),
                      model.presentation(n1 + n2), std::move(images));
}

GeneratorMap oracle_symmetric_power_map(int i, int j, int l, int m, const Field& field) {
  if (m < 1) throw Error("oracle_symmetric_power_map: power must be positive");
  return sym_through_model(MonomialModel(field, l, 1), spin_degree_of(i, j, l), m);
}

GeneratorMap oracle_power_map(int d, int e, int i_r, int j_r, int l, int r, const Field& field) {
  if (e < 1 || d < 1 || d % e != 0 || r % d != 0 || r % l != 0) {
    throw Error("oracle_power_map: need e | d | r and l | r");
  }
  require_exponent_pair(i_r, j_r, l);
  // pi_* L = E_{i_r, j_r} means S has character j_r; tier d is pi_* L^(r/d).
  const MonomialModel model(field, l, l == 1 ? 1 : j_r);
  return sym_through_model(model, r / d, d / e);
}

}  // namespace rspin

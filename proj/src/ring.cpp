#include "rspin/ring.hpp"

#include <algorithm>
#include <sstream>

namespace rspin {

namespace {

void append_power(std::ostringstream& out, bool& first, const char* var, int e) {
  if (e == 0) return;
  if (!first) out << '*';
  out << var;
  if (e != 1) out << '^' << e;
  first = false;
}

std::string format_term(Coeff c, std::initializer_list<std::pair<const char*, int>> powers) {
  std::ostringstream out;
  bool first = true;
  const bool all_zero =
      std::all_of(powers.begin(), powers.end(), [](const auto& p) { return p.second == 0; });
  if (c != 1 || all_zero) {
    out << c;
    first = false;
  }
  for (const auto& [var, e] : powers) append_power(out, first, var, e);
  return out.str();
}

}  // namespace

RingElement::RingElement(Field field, int l) : field_(field), l_(l) {
  if (l < 1) throw Error("node index l must be positive");
}

RingElement RingElement::constant(Field field, int l, std::int64_t c) {
  return term(field, l, c, 0, 0, 0);
}

RingElement RingElement::term(Field field, int l, std::int64_t c, int t, int x, int y) {
  RingElement r(field, l);
  if (t < 0 || x < 0 || y < 0) throw Error("negative exponent in ring term");
  r.add_term(field.reduce(c), t, x, y);
  return r;
}

void RingElement::add_term(Coeff c, int t, int x, int y) {
  if (c == 0) return;
  const int m = std::min(x, y);
  const Monomial mono{t + l_ * m, x - m, y - m};
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

bool RingElement::involves_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.t > 0; });
}

bool RingElement::involves_x() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.x > 0; });
}

bool RingElement::involves_y() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.y > 0; });
}

int RingElement::xy_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x + m.y);
  return d;
}

void RingElement::check_compatible(const RingElement& other) const {
  if (l_ != other.l_) throw Error("ring elements have different node indices");
  if (!(field_ == other.field_)) throw Error("ring elements live over different fields");
}

RingElement RingElement::operator+(const RingElement& other) const {
  check_compatible(other);
  RingElement r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(c, m.t, m.x, m.y);
  return r;
}

RingElement RingElement::operator-() const {
  RingElement r(field_, l_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
  return r;
}

RingElement RingElement::operator-(const RingElement& other) const { return *this + (-other); }

RingElement RingElement::operator*(const RingElement& other) const {
  check_compatible(other);
  RingElement r(field_, l_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      r.add_term(field_.mul(ca, cb), ma.t + mb.t, ma.x + mb.x, ma.y + mb.y);
    }
  }
  return r;
}

RingElement RingElement::scaled(Coeff c) const {
  RingElement r(field_, l_);
  c %= field_.prime();
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, field_.mul(v, c));
  return r;
}

RingElement RingElement::pow(unsigned e) const {
  RingElement r = constant(field_, l_, 1);
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

bool RingElement::operator==(const RingElement& other) const {
  return l_ == other.l_ && field_ == other.field_ && terms_ == other.terms_;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    out << format_term(c, {{"t", m.t}, {"x", m.x}, {"y", m.y}});
    first = false;
  }
  return out.str();
}

RingElement normalize(const Field& field, int l, const RawPolynomial& raw) {
  RingElement r(field, l);
  for (const RawTerm& term : raw) {
    if (term.t < 0 || term.x < 0 || term.y < 0) {
      throw Error("normalize: negative exponent in raw polynomial");
    }
    r.add_term(field.reduce(term.coeff), term.t, term.x, term.y);
  }
  return r;
}

RingElement arith(const RingElement& a, const RingElement& b, ArithKind kind) {
  return kind == ArithKind::add ? a + b : a * b;
}

Coeff TMode::value() const {
  if (!value_) throw Error("TMode: generic mode has no value");
  return *value_;
}

std::string TMode::to_string() const {
  return value_ ? "t=" + std::to_string(*value_) : std::string("t generic");
}

RingElement specialize(const RingElement& a, TMode mode) {
  if (mode.is_generic()) return a;
  const Field& f = a.field();
  const Coeff v = mode.value() % f.prime();
  RingElement r(f, a.node_index());
  for (const auto& [m, c] : a.terms()) r.add_term(f.mul(c, f.pow(v, m.t)), 0, m.x, m.y);
  return r;
}

LaurentElement::LaurentElement(Field field, int l, Chart chart)
    : field_(field), l_(l), chart_(chart) {}

bool LaurentElement::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first.first == 0;
}

void LaurentElement::add_term(Coeff c, int t, int e) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({t, e}, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentElement::check_compatible(const LaurentElement& other) const {
  if (l_ != other.l_ || chart_ != other.chart_ || !(field_ == other.field_)) {
    throw Error("Laurent elements live in different localizations");
  }
}

LaurentElement LaurentElement::operator+(const LaurentElement& other) const {
  check_compatible(other);
  LaurentElement r = *this;
  for (const auto& [k, c] : other.terms_) r.add_term(c, k.first, k.second);
  return r;
}

LaurentElement LaurentElement::operator-(const LaurentElement& other) const {
  check_compatible(other);
  LaurentElement r = *this;
  for (const auto& [k, c] : other.terms_) r.add_term(field_.neg(c), k.first, k.second);
  return r;
}

LaurentElement LaurentElement::operator*(const LaurentElement& other) const {
  check_compatible(other);
  LaurentElement r(field_, l_, chart_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : other.terms_) {
      r.add_term(field_.mul(ca, cb), ka.first + kb.first, ka.second + kb.second);
    }
  }
  return r;
}

bool LaurentElement::operator==(const LaurentElement& other) const {
  return l_ == other.l_ && chart_ == other.chart_ && field_ == other.field_ &&
         terms_ == other.terms_;
}

std::string LaurentElement::to_string() const {
  if (terms_.empty()) return "0";
  const char* var = chart_ == Chart::x ? "x" : "y";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    out << format_term(c, {{"t", k.first}, {var, k.second}});
    first = false;
  }
  return out.str();
}

LaurentElement localize(const RingElement& a, Chart at) {
  const int l = a.node_index();
  LaurentElement r(a.field(), l, at);
  for (const auto& [m, c] : a.terms()) {
    const int kept = at == Chart::x ? m.x : m.y;
    const int inverted = at == Chart::x ? m.y : m.x;
    r.add_term(c, m.t + l * inverted, kept - inverted);
  }
  return r;
}

}  // namespace rspin

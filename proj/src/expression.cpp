#include "rspin/expression.hpp"

#include <algorithm>
#include <cctype>

namespace rspin {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Field& field, const std::vector<std::string>& vars,
         const std::vector<std::string>& laurent)
      : text_(text), field_(field), vars_(vars), laurent_(laurent) {}

  SparsePolynomial parse() {
    SparsePolynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("expression: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePolynomial constant(Coeff c) const {
    SparsePolynomial p;
    if (c % field_.prime() != 0) p[std::vector<int>(vars_.size(), 0)] = c % field_.prime();
    return p;
  }

  void add_into(SparsePolynomial& acc, const SparsePolynomial& other, bool negate) const {
    for (const auto& [e, c] : other) {
      Coeff& slot = acc[e];
      slot = negate ? field_.sub(slot, c) : field_.add(slot, c);
      if (slot == 0) acc.erase(e);
    }
  }

  SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b) const {
    SparsePolynomial r;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        std::vector<int> e(ea.size());
        std::transform(ea.begin(), ea.end(), eb.begin(), e.begin(), std::plus<>());
        Coeff& slot = r[e];
        slot = field_.add(slot, field_.mul(ca, cb));
        if (slot == 0) r.erase(e);
      }
    }
    return r;
  }

  SparsePolynomial expr() {
    SparsePolynomial acc;
    bool negate = false;
    skip_space();
    if (accept('-'))
      negate = true;
    else
      accept('+');
    add_into(acc, term(), negate);
    for (;;) {
      if (accept('+'))
        add_into(acc, term(), false);
      else if (accept('-'))
        add_into(acc, term(), true);
      else
        return acc;
    }
  }

  SparsePolynomial term() {
    SparsePolynomial acc = factor();
    while (accept('*')) acc = multiply(acc, factor());
    return acc;
  }

  long integer() {
    skip_space();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000L) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return neg ? -v : v;
  }

  long exponent() {
    if (accept('(')) {
      const long e = integer();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    return integer();
  }

  SparsePolynomial factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      SparsePolynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) {
        const long e = exponent();
        if (e < 0) fail("negative power of a parenthesized expression");
        SparsePolynomial r = constant(1);
        for (long k = 0; k < e; ++k) r = multiply(r, inner);
        return r;
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long v = integer();
      return constant(field_.reduce(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      long e = 1;
      if (accept('^')) e = exponent();
      if (e < 0 && std::find(laurent_.begin(), laurent_.end(), name) == laurent_.end()) {
        fail("negative exponent on '" + name + "'");
      }
      std::vector<int> exps(vars_.size(), 0);
      exps[static_cast<std::size_t>(it - vars_.begin())] = static_cast<int>(e);
      return SparsePolynomial{{exps, 1 % field_.prime()}};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const Field& field_;
  const std::vector<std::string>& vars_;
  const std::vector<std::string>& laurent_;
};

}  // namespace

SparsePolynomial parse_polynomial(std::string_view text, const Field& field,
                                  const std::vector<std::string>& variables,
                                  const std::vector<std::string>& laurent_variables) {
  return Parser(text, field, variables, laurent_variables).parse();
}

RingElement parse_ring_element(std::string_view text, const Field& field, int l) {
  const SparsePolynomial p = parse_polynomial(text, field, {"t", "x", "y"});
  RawPolynomial raw;
  for (const auto& [e, c] : p) raw.push_back({static_cast<std::int64_t>(c), e[0], e[1], e[2]});
  return normalize(field, l, raw);
}

}  // namespace rspin

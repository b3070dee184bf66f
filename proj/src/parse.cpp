#include "gvd/parse.hpp"

#include <cctype>

namespace gvd {

namespace {

class Parser {
 public:
  Parser(const std::string& text, RingPtr ring)
      : s_(text), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial p = poly();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("syntax error: " + what, pos_);
  }

  Polynomial poly() {
    Polynomial acc = Polynomial::zero(ring_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    acc = acc + (negate ? -term() : term());
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected term");
    Polynomial acc = Polynomial::constant(ring_, Rat(1));
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      acc = Polynomial::constant(ring_, coeff());
    } else {
      acc = acc * factor();
    }
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected factor");
    if (eat('(')) {
      Polynomial p = poly();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    char c = s_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected variable");
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    auto idx = ring_->index_of(name);
    if (!idx)
      throw ParseError("unknown variable '" + name + "'", start);
    int exp = 1;
    if (eat('^')) exp = static_cast<int>(uint_lit());
    Monomial m(ring_->size());
    m.e[*idx] = exp;
    return Polynomial::monomial(ring_, std::move(m));
  }

  Rat coeff() {
    Int num = int_lit();
    if (eat('/')) {
      unsigned long den = uint_lit();
      if (den == 0) fail("zero denominator");
      Rat q(num, Int(den));
      q.canonicalize();
      return q;
    }
    return Rat(num);
  }

  Int int_lit() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected integer");
    Int v(s_.substr(start, pos_ - start));
    return neg ? Int(-v) : v;
  }

  unsigned long uint_lit() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected non-negative integer");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

std::string to_string(const Monomial& m, const PolynomialRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variable(static_cast<int>(i));
    if (m.e[i] > 1) s += '^' + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rat c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += '-';
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono = to_string(t.m, *f.ring());
    if (c != 1 || mono == "1") {
      s += to_string(c);
      if (mono != "1") s += '*';
    }
    if (mono != "1") s += mono;
  }
  return s;
}

}  // namespace gvd

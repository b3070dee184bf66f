#ifndef GVD_UNIPOLY_HPP
#define GVD_UNIPOLY_HPP

#include <vector>

#include "gvd/numeric.hpp"

namespace gvd {

// Dense univariate polynomial in t with integer coefficients; c[i] is the
// coefficient of t^i and trailing zeros are stripped.
struct IntPoly {
  std::vector<Int> c;

  static IntPoly zero() { return {}; }
  static IntPoly one() { return IntPoly{{Int(1)}}; }
  static IntPoly of(std::vector<long> coeffs) {
    IntPoly p;
    p.c.assign(coeffs.begin(), coeffs.end());
    p.trim();
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  Int at(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[i];
  }

  Int eval_one() const {
    Int s = 0;
    for (const auto& x : c) s += x;
    return s;
  }

  IntPoly operator+(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
  }

  IntPoly operator-(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
  }

  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    IntPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
  }

  // * t^k
  IntPoly shifted(int k) const {
    if (is_zero()) return zero();
    IntPoly r;
    r.c.assign(c.size() + k, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
    return r;
  }

  bool operator==(const IntPoly& o) const { return c == o.c; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }
};

// 1 - t^d
inline IntPoly one_minus_t_pow(int d) {
  IntPoly p;
  p.c.assign(d + 1, Int(0));
  p.c[0] = 1;
  p.c[d] = -1;
  return p;
}

// Dense univariate polynomial with rational coefficients (Hilbert
// polynomials).
struct RatPoly {
  std::vector<Rat> c;

  static RatPoly zero() { return {}; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  Rat evaluate(long t) const {
    Rat s(0);
    Rat p(1);
    for (const auto& x : c) {
      s += x * p;
      p *= t;
    }
    return s;
  }

  RatPoly operator+(const RatPoly& o) const {
    RatPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
  }

  RatPoly operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    RatPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
  }

  RatPoly scaled(const Rat& s) const {
    RatPoly r(*this);
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
  }

  bool operator==(const RatPoly& o) const { return c == o.c; }
};

}  // namespace gvd

#endif

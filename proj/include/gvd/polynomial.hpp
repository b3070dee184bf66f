#ifndef GVD_POLYNOMIAL_HPP
#define GVD_POLYNOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvd/numeric.hpp"
#include "gvd/order.hpp"
#include "gvd/ring.hpp"

namespace gvd {

// Monomials are bare exponent vectors; the ring supplies names and length.
struct Monomial {
  Exponents e;

  explicit Monomial(int n) : e(n, 0) {}
  explicit Monomial(Exponents exps) : e(std::move(exps)) {}

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.e);
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

// b / a, assuming divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r(b.e);
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.e);
  for (std::size_t i = 0; i < r.e.size(); ++i)
    r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

inline Monomial squarefree_part(const Monomial& m) {
  Monomial r(m.e);
  for (auto& x : r.e) x = x > 0 ? 1 : 0;
  return r;
}

struct Term {
  Monomial m;
  Rat c;
};

// Inner comparison used for the canonical term storage order.  All
// polynomials of a ring keep their terms sorted descending under plain
// grevlex in ring order, independent of the order any algorithm works with.
inline int canonical_cmp(const Exponents& a, const Exponents& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

// Immutable multivariate polynomial with exact rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, Rat c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial(p.ring_->size()), std::move(c)});
    return p;
  }

  static Polynomial variable(RingPtr ring, int idx) {
    Polynomial p(std::move(ring));
    Monomial m(p.ring_->size());
    m.e[idx] = 1;
    p.terms_.push_back({std::move(m), Rat(1)});
    return p;
  }

  static Polynomial monomial(RingPtr ring, Monomial m, Rat c = Rat(1)) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  // Normalizes an arbitrary term list: merges duplicates, drops zeros,
  // sorts descending under the canonical storage order.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return canonical_cmp(a.m.e, b.m.e) > 0;
    });
    std::vector<Term> merged;
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().m == t.m) {
        merged.back().c += t.c;
        if (merged.back().c == 0) merged.pop_back();
      } else if (t.c != 0) {
        merged.push_back(std::move(t));
      }
    }
    Polynomial p(std::move(ring));
    p.terms_ = std::move(merged);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }

  bool is_monomial() const { return terms_.size() == 1; }

  // Largest total degree among terms; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.e[var]);
    return d;
  }

  bool involves(int var) const {
    for (const auto& t : terms_)
      if (t.m.e[var] > 0) return true;
    return false;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.m.degree() != terms_[0].m.degree()) return false;
    return true;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
        return false;
    }
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = canonical_cmp(terms_[i].m.e, o.terms_[j].m.e);
      if (c > 0) {
        out.push_back(terms_[i++]);
      } else if (c < 0) {
        out.push_back(o.terms_[j++]);
      } else {
        Rat s = terms_[i].c + o.terms_[j].c;
        if (s != 0) out.push_back({terms_[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) prod.push_back({a.m * b.m, a.c * b.c});
    return from_terms(ring_, std::move(prod));
  }

  Polynomial scaled(const Rat& c) const {
    if (c == 0) return zero(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
  }

  // this * c * m
  Polynomial times_term(const Rat& c, const Monomial& m) const {
    if (c == 0) return zero(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;  // multiplying by a fixed monomial preserves the term order
  }

  void check_ring(const Polynomial& o) const {
    if (!rings_compatible(ring_, o.ring()))
      throw std::invalid_argument("polynomial ring mismatch");
  }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Leading term with respect to an arbitrary order.  Errors on zero input.
// Returned by value so calls on temporaries are safe.
inline Term leading_term(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw std::domain_error("leading term of zero polynomial");
  const Term* best = &f.terms()[0];
  for (const auto& t : f.terms()) {
    if (ord.compare(t.m.e, best->m.e) > 0) best = &t;
  }
  return *best;
}

// Sum of the terms of f with the maximal y-exponent; in_y(0) = 0 and
// in_y(f) = f when y does not occur in f.
inline Polynomial initial_y_form(const Polynomial& f, int y) {
  if (y < 0 || y >= f.ring()->size())
    throw std::invalid_argument("initial_y_form: variable not in ring");
  if (f.is_zero()) return f;
  int d = 0;
  for (const auto& t : f.terms()) d = std::max(d, t.m.e[y]);
  std::vector<Term> keep;
  for (const auto& t : f.terms())
    if (t.m.e[y] == d) keep.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(keep));
}

// The y-free part q with in_y(f) = y^d * q.
inline std::pair<int, Polynomial> initial_y_factor(const Polynomial& f,
                                                   int y) {
  Polynomial iny = initial_y_form(f, y);
  if (iny.is_zero()) return {0, iny};
  int d = iny.terms()[0].m.e[y];
  std::vector<Term> qt;
  for (const auto& t : iny.terms()) {
    Term s = t;
    s.m.e[y] -= d;
    qt.push_back(std::move(s));
  }
  return {d, Polynomial::from_terms(f.ring(), std::move(qt))};
}

// Same polynomial re-indexed over the ring without `drop`; errors when the
// variable occurs in f.
inline Polynomial restrict_ring(const Polynomial& f, int drop,
                                const RingPtr& target) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.m.e[drop] != 0)
      throw std::invalid_argument("restrict_ring: variable " +
                                  f.ring()->variable(drop) + " occurs in f");
    Exponents e;
    e.reserve(t.m.e.size() - 1);
    for (std::size_t i = 0; i < t.m.e.size(); ++i)
      if (static_cast<int>(i) != drop) e.push_back(t.m.e[i]);
    out.push_back({Monomial(std::move(e)), t.c});
  }
  return Polynomial::from_terms(target, std::move(out));
}

inline Polynomial restrict_ring(const Polynomial& f, int drop) {
  return restrict_ring(f, drop, dropped_ring(f.ring(), drop));
}

// Transport f into a ring containing (by name) all variables of f's ring.
inline Polynomial map_to_ring(const Polynomial& f, const RingPtr& target) {
  std::vector<int> where(f.ring()->size());
  for (int i = 0; i < f.ring()->size(); ++i) {
    auto idx = target->index_of(f.ring()->variable(i));
    if (!idx)
      throw std::invalid_argument("map_to_ring: missing variable " +
                                  f.ring()->variable(i));
    where[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Exponents e(target->size(), 0);
    for (std::size_t i = 0; i < t.m.e.size(); ++i) e[where[i]] = t.m.e[i];
    out.push_back({Monomial(std::move(e)), t.c});
  }
  return Polynomial::from_terms(target, std::move(out));
}

inline Polynomial monic(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) return f;
  const Term& lt = leading_term(f, ord);
  if (lt.c == 1) return f;
  Rat inv = 1 / lt.c;
  return f.scaled(inv);
}

}  // namespace gvd

#endif

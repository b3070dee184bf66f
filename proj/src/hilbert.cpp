#include "gvd/hilbert.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace gvd {

namespace {

bool exps_less(const Monomial& a, const Monomial& b) { return a.e < b.e; }

std::string memo_key(const MonomialList& gens) {
  std::ostringstream os;
  for (const auto& m : gens) {
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      os << i << '^' << m.e[i] << ' ';
    }
    os << '|';
  }
  return os.str();
}

struct NumeratorMemo {
  std::mutex mutex;
  std::map<std::string, IntPoly> table;
};

NumeratorMemo& memo() {
  static NumeratorMemo m;
  return m;
}

IntPoly numerator_rec(MonomialList gens);

IntPoly numerator_step(const MonomialList& gens) {
  if (gens.empty()) return IntPoly::one();
  for (const auto& m : gens)
    if (m.is_one()) return IntPoly::zero();

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    // Pairwise coprime monomials form a regular sequence.
    IntPoly p = IntPoly::one();
    for (const auto& m : gens) p = p * one_minus_t_pow(m.degree());
    return p;
  }

  const std::size_t n = gens[0].e.size();
  int pivot = 0;
  int best = -1;
  for (std::size_t v = 0; v < n; ++v) {
    int count = 0;
    for (const auto& m : gens)
      if (m.e[v] > 0) ++count;
    if (count > best) {
      best = count;
      pivot = static_cast<int>(v);
    }
  }

  MonomialList plus;  // I + <x>, with x prepended as a generator
  Monomial x(static_cast<int>(n));
  x.e[pivot] = 1;
  plus.push_back(x);
  for (const auto& m : gens)
    if (m.e[pivot] == 0) plus.push_back(m);

  MonomialList colon;  // I : x
  colon.reserve(gens.size());
  for (const auto& m : gens) {
    Monomial q = m;
    if (q.e[pivot] > 0) --q.e[pivot];
    colon.push_back(q);
  }

  IntPoly a = numerator_rec(std::move(plus));
  IntPoly b = numerator_rec(std::move(colon));
  return a + b.shifted(1);
}

IntPoly numerator_rec(MonomialList gens) {
  gens = minimalize_monomials(std::move(gens));
  const std::string key = memo_key(gens);
  {
    std::lock_guard<std::mutex> lock(memo().mutex);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) return it->second;
  }
  IntPoly p = numerator_step(gens);
  std::lock_guard<std::mutex> lock(memo().mutex);
  memo().table.emplace(key, p);
  return p;
}

}  // namespace

MonomialList minimalize_monomials(MonomialList gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return exps_less(a, b);
  });
  MonomialList out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out) {
      if (divides(kept, m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), exps_less);
  return out;
}

IntPoly hilbert_numerator(const MonomialList& minimal_gens) {
  return numerator_rec(minimal_gens);
}

HilbertData reduce_series(IntPoly numerator, int ambient) {
  HilbertData hd;
  hd.ambient = ambient;
  hd.numerator = numerator;
  if (numerator.is_zero()) {
    hd.unit = true;
    hd.dim = kUnitDim;
    hd.h = IntPoly::zero();
    return hd;
  }
  IntPoly h = std::move(numerator);
  int removed = 0;
  while (h.eval_one() == 0) {
    // h(1) = 0, so h = (1-t) * q with q_i the prefix sums of h.
    IntPoly q;
    q.c.assign(h.c.size() - 1, Int(0));
    Int acc = 0;
    for (std::size_t i = 0; i + 1 < h.c.size(); ++i) {
      acc += h.c[i];
      q.c[i] = acc;
    }
    q.trim();
    h = std::move(q);
    ++removed;
  }
  hd.h = std::move(h);
  hd.dim = ambient - removed;
  return hd;
}

Ideal initial_ideal(const Ideal& I, const MonomialOrder& order) {
  const GroebnerBasis& gb = I.groebner(order);
  std::vector<Polynomial> gens;
  gens.reserve(gb.elements.size());
  for (const auto& g : gb.elements)
    gens.push_back(
        Polynomial::monomial(I.ring(), leading_term(g, gb.order).m));
  return Ideal(I.ring(), std::move(gens));
}

HilbertData hilbert_data(const Ideal& I, const MonomialOrder& order) {
  const GroebnerBasis& gb = I.groebner(order);
  if (gb.is_unit()) return reduce_series(IntPoly::zero(), I.ring()->size());
  MonomialList lms;
  lms.reserve(gb.elements.size());
  for (const auto& g : gb.elements)
    lms.push_back(leading_term(g, gb.order).m);
  // Leading monomials of a reduced basis are already minimal.
  std::sort(lms.begin(), lms.end(), exps_less);
  return reduce_series(hilbert_numerator(lms), I.ring()->size());
}

HilbertData hilbert_data(const Ideal& I) {
  return hilbert_data(I, MonomialOrder::grevlex(I.ring()->size()));
}

Int hilbert_function(const HilbertData& hd, long k) {
  if (k < 0) return 0;
  const int n = hd.ambient;
  if (n == 0) return hd.numerator.at(static_cast<int>(k));
  Int s = 0;
  for (int j = 0; j <= hd.numerator.degree(); ++j) {
    if (j > k) break;
    s += hd.numerator.at(j) * binomial(k - j + n - 1, n - 1);
  }
  return s;
}

Int hilbert_function_oracle(const Ideal& I, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  const GroebnerBasis& gb = I.groebner();
  std::vector<Monomial> lms = gb.leading_monomials();
  const int n = I.ring()->size();
  Int count = 0;
  Exponents e(n, 0);
  // Enumerate all monomials of the given total degree.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      e[pos] = remaining;
      bool standard = true;
      Monomial m(e);
      for (const auto& l : lms) {
        if (divides(l, m)) {
          standard = false;
          break;
        }
      }
      if (standard) ++count;
      e[pos] = 0;
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      e[pos] = d;
      self(self, pos + 1, remaining - d);
    }
    e[pos] = 0;
  };
  if (n == 0) {
    if (degree == 0 && !gb.is_unit()) return 1;
    return 0;
  }
  rec(rec, 0, degree);
  return count;
}

RatPoly hilbert_polynomial(const HilbertData& hd) {
  if (hd.unit) return RatPoly::zero();
  const int d = hd.dim;
  if (d <= 0) return RatPoly::zero();
  RatPoly hp = RatPoly::zero();
  Int fact = 1;
  for (int k = 1; k <= d - 1; ++k) fact *= k;
  for (int i = 0; i <= hd.h.degree(); ++i) {
    if (hd.h.at(i) == 0) continue;
    // C(t - i + d - 1, d - 1) as a polynomial in t.
    RatPoly b;
    b.c = {Rat(1)};
    for (int k = 1; k <= d - 1; ++k) {
      RatPoly lin;
      lin.c = {Rat(Int(-i + k), Int(1)), Rat(1)};  // (t - i + k)
      b = b * lin;
    }
    b = b.scaled(Rat(hd.h.at(i), fact));
    hp = hp + b;
  }
  hp.trim();
  return hp;
}

std::string to_string(CmStatus s) {
  switch (s) {
    case CmStatus::Certified:
      return "certified";
    case CmStatus::Asserted:
      return "asserted";
    case CmStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string to_string(HilbertianClass h) {
  switch (h) {
    case HilbertianClass::Hilbertian:
      return "Hilbertian";
    case HilbertianClass::AlmostHilbertian:
      return "AlmostHilbertian";
    case HilbertianClass::Neither:
      return "Neither";
    case HilbertianClass::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Provenance p) {
  return p == Provenance::Direct ? "direct" : "recursion";
}

HilbertianClass classify_hilbertian(const HilbertData& hd, CmStatus cm) {
  if (hd.unit) return HilbertianClass::Unknown;
  const int a = hd.h.degree() - hd.dim;
  if (cm != CmStatus::Unknown) {
    if (a < 0) return HilbertianClass::Hilbertian;
    if (a == 0) return HilbertianClass::AlmostHilbertian;
    return HilbertianClass::Neither;
  }
  // Direct comparison of HF and HP on a sufficient window: the two agree
  // beyond the a-invariant.
  RatPoly hp = hilbert_polynomial(hd);
  const long window = std::max(0, hd.h.degree()) + std::max(hd.dim, 0) + 1;
  bool from_zero = true;
  bool from_one = true;
  for (long t = 0; t <= window; ++t) {
    bool eq = Rat(hilbert_function(hd, t)) == hp.evaluate(t);
    if (!eq) {
      if (t == 0)
        from_zero = false;
      else
        from_one = false;
    }
  }
  if (from_zero && from_one) return HilbertianClass::Hilbertian;
  if (from_one) return HilbertianClass::AlmostHilbertian;
  return HilbertianClass::Neither;
}

InvariantReport invariants_direct(const Ideal& I, CmStatus cm) {
  HilbertData hd = hilbert_data(I);
  if (hd.unit) throw std::domain_error("invariants of the unit ideal");
  InvariantReport r;
  r.h = hd.h;
  r.dim = hd.dim;
  r.ambient = hd.ambient;
  r.e = hd.h.eval_one();
  r.a = hd.h.degree() - hd.dim;
  if (cm != CmStatus::Unknown) r.reg = hd.h.degree();
  r.hilbertian = classify_hilbertian(hd, cm);
  r.cm = cm;
  r.provenance = Provenance::Direct;
  return r;
}

}  // namespace gvd

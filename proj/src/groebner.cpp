#include "gvd/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gvd {

namespace {

struct DescCmp {
  const MonomialOrder* ord;
  bool operator()(const Exponents& a, const Exponents& b) const {
    return ord->compare(a, b) > 0;
  }
};

using WorkPoly = std::map<Exponents, Rat, DescCmp>;

WorkPoly to_work(const Polynomial& f, const MonomialOrder& ord) {
  WorkPoly w(DescCmp{&ord});
  for (const auto& t : f.terms()) w.emplace(t.m.e, t.c);
  return w;
}

Polynomial from_work(const RingPtr& ring, const WorkPoly& w) {
  std::vector<Term> terms;
  terms.reserve(w.size());
  for (const auto& [e, c] : w) terms.push_back({Monomial(e), c});
  return Polynomial::from_terms(ring, std::move(terms));
}

// w -= c * m * g
void subtract_multiple(WorkPoly& w, const Rat& c, const Monomial& m,
                       const Polynomial& g) {
  for (const auto& t : g.terms()) {
    Exponents e = t.m.e;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += m.e[i];
    auto it = w.find(e);
    if (it == w.end()) {
      w.emplace(std::move(e), -(c * t.c));
    } else {
      it->second -= c * t.c;
      if (it->second == 0) w.erase(it);
    }
  }
}

// Full normal form of the working polynomial against basis.  The basis
// entries must be nonzero; divisor choice is the first match in list order.
Polynomial reduce_work(WorkPoly&& p, const RingPtr& ring,
                       const std::vector<Polynomial>& basis,
                       const std::vector<Monomial>& lms,
                       const std::vector<Rat>& lcs, const MonomialOrder& ord) {
  WorkPoly r(DescCmp{&ord});
  while (!p.empty()) {
    auto lead = p.begin();
    Monomial lm(lead->first);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!divides(lms[i], lm)) continue;
      Rat c = lead->second / lcs[i];
      Monomial q = quotient(lm, lms[i]);
      subtract_multiple(p, c, q, basis[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.emplace(lead->first, lead->second);
      p.erase(lead);
    }
  }
  return from_work(ring, r);
}

struct SPair {
  int i, j;
  Monomial l;
  int deg;
};

struct SPairCmp {
  const MonomialOrder* ord;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord->compare(a.l.e, b.l.e);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class PairQueue {
 public:
  explicit PairQueue(const MonomialOrder& ord) : pairs_(SPairCmp{&ord}) {}

  // Gebauer-Moeller update after appending element t to the basis.
  void update(const std::vector<Monomial>& lm, int t) {
    struct Cand {
      int i;
      Monomial l;
      bool alive;
    };
    std::vector<Cand> cand;
    cand.reserve(t);
    for (int i = 0; i < t; ++i)
      cand.push_back({i, lcm(lm[i], lm[t]), true});

    // Criterion M: drop (i,t) when some lcm(j,t) properly divides lcm(i,t).
    for (auto& a : cand) {
      for (const auto& b : cand) {
        if (b.i == a.i || !b.alive) continue;
        if (divides(b.l, a.l) && b.l != a.l) {
          a.alive = false;
          break;
        }
      }
    }
    // Criterion F + product criterion: among equal lcms keep one pair, and
    // drop the whole class when any member has coprime leading monomials.
    for (std::size_t x = 0; x < cand.size(); ++x) {
      if (!cand[x].alive) continue;
      bool class_coprime = coprime(lm[cand[x].i], lm[t]);
      for (std::size_t y = x + 1; y < cand.size(); ++y) {
        if (!cand[y].alive || cand[y].l != cand[x].l) continue;
        class_coprime = class_coprime || coprime(lm[cand[y].i], lm[t]);
        cand[y].alive = false;
      }
      if (class_coprime) cand[x].alive = false;
    }
    // Criterion B on old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const SPair& p = *it;
      if (divides(lm[t], p.l) && lcm(lm[p.i], lm[t]) != p.l &&
          lcm(lm[p.j], lm[t]) != p.l) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& a : cand) {
      if (a.alive)
        pairs_.insert({a.i, t, a.l, a.l.degree()});
    }
  }

  bool empty() const { return pairs_.empty(); }

  SPair pop() {
    SPair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    return p;
  }

 private:
  std::set<SPair, SPairCmp> pairs_;
};

Polynomial spoly(const Polynomial& f, const Polynomial& g, const Monomial& l,
                 const MonomialOrder& ord) {
  const Term& lf = leading_term(f, ord);
  const Term& lg = leading_term(g, ord);
  Polynomial a = f.times_term(1 / lf.c, quotient(l, lf.m));
  Polynomial b = g.times_term(1 / lg.c, quotient(l, lg.m));
  return a - b;
}

GroebnerBasis unit_basis(const RingPtr& ring, const MonomialOrder& order) {
  GroebnerBasis gb{ring, order, {Polynomial::constant(ring, Rat(1))}, true};
  return gb;
}

// Restrict f to the subring spanned by keep (indices in increasing order).
Polynomial restrict_to_subring(const Polynomial& f,
                               const std::vector<int>& keep,
                               const RingPtr& target) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Exponents e;
    e.reserve(keep.size());
    for (int i : keep) e.push_back(t.m.e[i]);
    out.push_back({Monomial(std::move(e)), t.c});
  }
  return Polynomial::from_terms(target, std::move(out));
}

std::string fresh_variable(const RingPtr& ring, const std::string& stem) {
  for (int k = 0;; ++k) {
    std::string name = stem + std::to_string(k);
    if (!ring->index_of(name)) return name;
  }
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                         const MonomialOrder& order) {
  std::vector<Polynomial> G;
  std::vector<Monomial> lm;
  std::vector<Rat> lc;
  PairQueue queue(order);

  auto append = [&](Polynomial g) {
    const Term& lt = leading_term(g, order);
    lm.push_back(lt.m);
    lc.push_back(Rat(1));
    G.push_back(monic(g, order));
    queue.update(lm, static_cast<int>(G.size()) - 1);
  };

  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return unit_basis(ring, order);
    append(std::move(g));
  }

  while (!queue.empty()) {
    SPair p = queue.pop();
    Polynomial s = spoly(G[p.i], G[p.j], p.l, order);
    if (s.is_zero()) continue;
    Polynomial r = reduce_work(to_work(s, order), ring, G, lm, lc, order);
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit_basis(ring, order);
    append(std::move(r));
  }

  // Minimalize: keep only elements whose leading monomial is not divisible
  // by another kept leading monomial; process ascending so divisors come
  // first.
  std::vector<int> idx(G.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int c = order.compare(lm[a].e, lm[b].e);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<Polynomial> kept;
  std::vector<Monomial> kept_lm;
  std::vector<Rat> kept_lc;
  for (int i : idx) {
    bool redundant = false;
    for (const auto& l : kept_lm) {
      if (divides(l, lm[i])) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      kept.push_back(G[i]);
      kept_lm.push_back(lm[i]);
      kept_lc.push_back(Rat(1));
    }
  }

  // Interreduce tails until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Polynomial> others;
      std::vector<Monomial> others_lm;
      std::vector<Rat> others_lc;
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (j == i) continue;
        others.push_back(kept[j]);
        others_lm.push_back(kept_lm[j]);
        others_lc.push_back(Rat(1));
      }
      Polynomial r = reduce_work(to_work(kept[i], order), ring, others,
                                 others_lm, others_lc, order);
      r = monic(r, order);
      if (r != kept[i]) {
        kept[i] = std::move(r);
        changed = true;
      }
    }
  }

  GroebnerBasis gb{ring, order, std::move(kept), true};
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!rings_compatible(f.ring(), gb.ring))
    throw std::invalid_argument("normal_form: ring mismatch");
  if (f.is_zero() || gb.elements.empty()) return f;
  std::vector<Monomial> lms;
  std::vector<Rat> lcs;
  lms.reserve(gb.elements.size());
  for (const auto& g : gb.elements) {
    const Term& lt = leading_term(g, gb.order);
    lms.push_back(lt.m);
    lcs.push_back(lt.c);
  }
  return reduce_work(to_work(f, gb.order), gb.ring, gb.elements, lms, lcs,
                     gb.order);
}

bool contains(const Ideal& I, const Polynomial& f) {
  if (!rings_compatible(I.ring(), f.ring()))
    throw std::invalid_argument("contains: ring mismatch");
  if (f.is_zero()) return true;
  return normal_form(f, I.groebner()).is_zero();
}

bool ideals_equal(const Ideal& I, const Ideal& J) {
  if (!rings_compatible(I.ring(), J.ring()))
    throw std::invalid_argument("ideals_equal: ring mismatch");
  const auto& a = I.groebner().elements;
  const auto& b = J.groebner().elements;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_zero_ideal(const Ideal& I) { return I.groebner().is_zero(); }

bool is_unit_ideal(const Ideal& I) { return I.groebner().is_unit(); }

bool is_homogeneous(const Ideal& I) {
  for (const auto& g : I.groebner().elements)
    if (!g.is_homogeneous()) return false;
  return true;
}

bool is_variable_generated(const Ideal& I) {
  const auto& gb = I.groebner();
  for (const auto& g : gb.elements) {
    if (g.size() != 1) return false;
    if (g.terms()[0].m.degree() != 1) return false;
  }
  return true;
}

std::vector<int> generated_variables(const Ideal& I) {
  std::vector<int> vars;
  for (const auto& g : I.groebner().elements) {
    const auto& e = g.terms()[0].m.e;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) vars.push_back(static_cast<int>(i));
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

Ideal sum(const Ideal& I, const Ideal& J) {
  if (!rings_compatible(I.ring(), J.ring()))
    throw std::invalid_argument("sum: ring mismatch");
  std::vector<Polynomial> gens = I.generators();
  for (const auto& g : J.generators()) gens.push_back(g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal sum(const Ideal& I, const Polynomial& f) {
  std::vector<Polynomial> gens = I.generators();
  gens.push_back(f);
  return Ideal(I.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
  if (vars.empty()) return I;
  const RingPtr& ring = I.ring();
  std::vector<int> front(vars);
  std::sort(front.begin(), front.end());
  std::vector<int> keep;
  std::vector<std::string> keep_names;
  for (int i = 0; i < ring->size(); ++i) {
    if (!std::binary_search(front.begin(), front.end(), i)) {
      keep.push_back(i);
      keep_names.push_back(ring->variable(i));
    }
  }
  RingPtr target = make_ring(std::move(keep_names));
  MonomialOrder ord = MonomialOrder::elimination(front, ring->size());
  const GroebnerBasis& gb = I.groebner(ord);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    bool clean = true;
    for (int v : front) {
      if (g.involves(v)) {
        clean = false;
        break;
      }
    }
    if (clean) out.push_back(restrict_to_subring(g, keep, target));
  }
  return Ideal(target, std::move(out));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!rings_compatible(I.ring(), J.ring()))
    throw std::invalid_argument("intersect: ring mismatch");
  if (is_unit_ideal(I)) return J;
  if (is_unit_ideal(J)) return I;
  if (is_zero_ideal(I)) return I;
  if (is_zero_ideal(J)) return J;

  const RingPtr& ring = I.ring();
  std::string tname = fresh_variable(ring, "@t");
  RingPtr ext = extended_ring(ring, {tname});
  int t_idx = ring->size();
  Polynomial t = Polynomial::variable(ext, t_idx);
  Polynomial one_minus_t = Polynomial::constant(ext, Rat(1)) - t;

  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    gens.push_back(t * map_to_ring(f, ext));
  for (const auto& g : J.generators())
    gens.push_back(one_minus_t * map_to_ring(g, ext));

  Ideal extended(ext, std::move(gens));
  Ideal elim = eliminate(extended, {t_idx});
  // Re-express over the caller's ring object.
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(map_to_ring(g, ring));
  return Ideal(ring, std::move(out));
}

bool in_radical(const Polynomial& f, const Ideal& I) {
  if (!rings_compatible(I.ring(), f.ring()))
    throw std::invalid_argument("in_radical: ring mismatch");
  if (f.is_zero()) return true;
  if (contains(I, f)) return true;

  const RingPtr& ring = I.ring();
  std::string wname = fresh_variable(ring, "@r");
  RingPtr ext = extended_ring(ring, {wname});
  int w_idx = ring->size();
  Polynomial w = Polynomial::variable(ext, w_idx);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(map_to_ring(g, ext));
  gens.push_back(Polynomial::constant(ext, Rat(1)) - w * map_to_ring(f, ext));
  Ideal extended(ext, std::move(gens));
  MonomialOrder ord = MonomialOrder::elimination({w_idx}, ext->size());
  return extended.groebner(ord).is_unit();
}

bool radical_subset(const Ideal& A, const Ideal& B) {
  for (const auto& g : A.generators()) {
    if (g.is_zero()) continue;
    if (!in_radical(g, B)) return false;
  }
  return true;
}

Ideal contract(const Ideal& I, int drop) {
  RingPtr target = dropped_ring(I.ring(), drop);
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators())
    gens.push_back(restrict_ring(g, drop, target));
  return Ideal(target, std::move(gens));
}

Ideal map_to_ring(const Ideal& I, const RingPtr& target) {
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(map_to_ring(g, target));
  return Ideal(target, std::move(gens));
}

}  // namespace gvd

#ifndef GVD_IDEAL_HPP
#define GVD_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gvd/polynomial.hpp"

namespace gvd {

struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> elements;  // monic, sorted ascending by order
  bool reduced = true;

  bool is_unit() const {
    return elements.size() == 1 && elements[0].is_constant() &&
           !elements[0].is_zero();
  }
  bool is_zero() const { return elements.empty(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> lm;
    lm.reserve(elements.size());
    for (const auto& g : elements) lm.push_back(leading_term(g, order).m);
    return lm;
  }
};

// An ideal given by generators, with a shared cache of reduced Groebner
// bases keyed by order signature.  Copies of an Ideal share the cache; the
// cache is an idempotent write-once map guarded by a mutex.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)),
        gens_(std::move(gens)),
        cache_(std::make_shared<Cache>()) {
    for (auto& g : gens_) {
      if (!rings_compatible(g.ring(), ring_))
        throw std::invalid_argument("generator ring mismatch");
    }
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  static Ideal unit(RingPtr ring) {
    std::vector<Polynomial> g{Polynomial::constant(ring, Rat(1))};
    return Ideal(std::move(ring), std::move(g));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced Groebner basis under `order`, computed once and cached.
  const GroebnerBasis& groebner(const MonomialOrder& order) const;

  const GroebnerBasis& groebner() const;  // canonical grevlex

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace gvd

#endif

#include "gvd/ideal.hpp"

#include "gvd/groebner.hpp"

namespace gvd {

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  if (!ring_) throw std::logic_error("groebner on empty ideal handle");
  const std::string key = order.signature();
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto gb =
      std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_, order));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto [it, fresh] = cache_->bases.emplace(key, std::move(gb));
  return *it->second;
}

const GroebnerBasis& Ideal::groebner() const {
  if (!ring_) throw std::logic_error("groebner on empty ideal handle");
  return groebner(MonomialOrder::grevlex(ring_->size()));
}

}  // namespace gvd

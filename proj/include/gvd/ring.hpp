#ifndef GVD_RING_HPP
#define GVD_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gvd {

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

// A polynomial ring is identified by its ordered list of variable names.
// The list order is the canonical variable order used by default monomial
// orders and by printing.
class PolynomialRing {
 public:
  explicit PolynomialRing(std::vector<std::string> variables)
      : vars_(std::move(variables)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const std::string& v = vars_[i];
      if (v.empty()) throw std::invalid_argument("empty variable name");
      auto [it, fresh] = index_.emplace(v, static_cast<int>(i));
      if (!fresh) throw std::invalid_argument("duplicate variable name: " + v);
    }
  }

  int size() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(int i) const { return vars_.at(i); }

  std::optional<int> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool same_variables(const PolynomialRing& other) const {
    return vars_ == other.vars_;
  }

 private:
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
};

inline RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<PolynomialRing>(std::move(variables));
}

// Ring with variable `drop` removed; remaining variables keep their order.
inline RingPtr dropped_ring(const RingPtr& ring, int drop) {
  std::vector<std::string> vars;
  vars.reserve(ring->size() - 1);
  for (int i = 0; i < ring->size(); ++i)
    if (i != drop) vars.push_back(ring->variable(i));
  return make_ring(std::move(vars));
}

// Ring extended by fresh variables appended at the end.
inline RingPtr extended_ring(const RingPtr& ring,
                             const std::vector<std::string>& extra) {
  std::vector<std::string> vars = ring->variables();
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_ring(std::move(vars));
}

inline bool rings_compatible(const RingPtr& a, const RingPtr& b) {
  return a == b || a->same_variables(*b);
}

}  // namespace gvd

#endif

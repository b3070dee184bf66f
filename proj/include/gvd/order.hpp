#ifndef GVD_ORDER_HPP
#define GVD_ORDER_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gvd {

using Exponents = std::vector<int>;

// Monomial orders on a fixed ring of n variables.  Kinds:
//   Lex(perm)      lexicographic with perm[0] most significant
//   GrevLex(perm)  graded reverse lexicographic over the listed variables
//   YBlock(y,tail) compares the y-exponent first, then tail on the rest;
//                  y-compatible by construction
//   Elim(front)    block order eliminating the front variables: grevlex on
//                  the front block, ties broken by grevlex on the rest
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, YBlock, Elim };

  static MonomialOrder lex(std::vector<int> perm) {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    o.perm_ = std::move(perm);
    return o;
  }

  static MonomialOrder grevlex(std::vector<int> perm) {
    MonomialOrder o;
    o.kind_ = Kind::GrevLex;
    o.perm_ = std::move(perm);
    return o;
  }

  static MonomialOrder grevlex(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return grevlex(std::move(perm));
  }

  static MonomialOrder lex(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return lex(std::move(perm));
  }

  static MonomialOrder y_block(int y, MonomialOrder tail) {
    MonomialOrder o;
    o.kind_ = Kind::YBlock;
    o.y_ = y;
    o.tail_ = std::make_shared<MonomialOrder>(std::move(tail));
    return o;
  }

  // Canonical y-compatible order: y-block over grevlex on the other
  // variables in ring order.
  static MonomialOrder y_block_grevlex(int y, int n) {
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int i = 0; i < n; ++i)
      if (i != y) rest.push_back(i);
    return y_block(y, grevlex(std::move(rest)));
  }

  static MonomialOrder elimination(std::vector<int> front, int n) {
    MonomialOrder o;
    o.kind_ = Kind::Elim;
    o.perm_ = std::move(front);
    std::sort(o.perm_.begin(), o.perm_.end());
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (!std::binary_search(o.perm_.begin(), o.perm_.end(), i))
        rest.push_back(i);
    o.rest_ = std::move(rest);
    return o;
  }

  Kind kind() const { return kind_; }
  int y_variable() const { return y_; }

  // -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Exponents& a, const Exponents& b) const {
    if (a.size() != b.size())
      throw std::invalid_argument("compare: monomials from different rings");
    switch (kind_) {
      case Kind::Lex:
        return lex_cmp(a, b, perm_);
      case Kind::GrevLex:
        return grevlex_cmp(a, b, perm_);
      case Kind::YBlock: {
        if (a[y_] != b[y_]) return a[y_] < b[y_] ? -1 : 1;
        return tail_->compare(a, b);
      }
      case Kind::Elim: {
        int c = grevlex_cmp(a, b, perm_);
        if (c != 0) return c;
        return grevlex_cmp(a, b, rest_);
      }
    }
    return 0;
  }

  bool less(const Exponents& a, const Exponents& b) const {
    return compare(a, b) < 0;
  }

  // Structural y-compatibility: in_<(in_y(f)) = in_<(f) holds for every f
  // when the y-exponent is compared first.
  bool is_y_compatible(int y) const {
    if (kind_ == Kind::YBlock && y_ == y) return true;
    if (kind_ == Kind::Lex && !perm_.empty() && perm_[0] == y) return true;
    return false;
  }

  // Stable serialization used as a cache key.
  std::string signature() const {
    std::string s;
    switch (kind_) {
      case Kind::Lex:
        s = "lex(";
        break;
      case Kind::GrevLex:
        s = "grevlex(";
        break;
      case Kind::YBlock:
        s = "yblock(" + std::to_string(y_) + ";" + tail_->signature() + ")";
        return s;
      case Kind::Elim:
        s = "elim(";
        break;
    }
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(perm_[i]);
    }
    s += ')';
    return s;
  }

 private:
  static int lex_cmp(const Exponents& a, const Exponents& b,
                     const std::vector<int>& perm) {
    for (int i : perm) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static int grevlex_cmp(const Exponents& a, const Exponents& b,
                         const std::vector<int>& perm) {
    long da = 0, db = 0;
    for (int i : perm) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // Reverse scan: the monomial with the smaller exponent in the last
    // position where they differ is the larger one.
    for (auto it = perm.rbegin(); it != perm.rend(); ++it) {
      if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
  }

  Kind kind_ = Kind::GrevLex;
  std::vector<int> perm_;
  std::vector<int> rest_;  // Elim only
  int y_ = -1;             // YBlock only
  std::shared_ptr<const MonomialOrder> tail_;
};

}  // namespace gvd

#endif

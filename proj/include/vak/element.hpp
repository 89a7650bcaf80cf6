#ifndef VAK_ELEMENT_HPP
#define VAK_ELEMENT_HPP

#include <compare>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "vak/rational.hpp"

namespace vak {

// Weight of a graded block: one integer per generator. For lattice models this
// is the lattice vector (entries may be negative); for the Heisenberg model it
// is the partition length.
using Weight = std::vector<int>;

inline int weight_len(const Weight& w) {
  int s = 0;
  for (int x : w) s += x < 0 ? -x : x;
  return s;
}

inline Weight weight_add(const Weight& a, const Weight& b) {
  Weight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::string weight_str(const Weight& w);

struct BlockKey {
  Weight w;
  int d = 0;
  auto operator<=>(const BlockKey&) const = default;
};

// Basis monomial of a Fock-type model: a lattice vector alpha and, per
// generator direction, a weakly decreasing multiset of creation mode sizes.
// The vacuum has alpha = 0 and no parts.
struct FockState {
  std::vector<int> alpha;
  std::vector<std::vector<int>> parts;

  auto operator<=>(const FockState&) const = default;

  bool is_vacuum() const { return alpha_zero() && pure_exponential(); }
  bool pure_exponential() const {
    for (auto& p : parts)
      if (!p.empty()) return false;
    return true;
  }
  bool alpha_zero() const {
    for (int x : alpha)
      if (x != 0) return false;
    return true;
  }
  int parts_total() const {
    int s = 0;
    for (auto& p : parts)
      for (int x : p) s += x;
    return s;
  }
  int parts_count() const {
    int s = 0;
    for (auto& p : parts) s += static_cast<int>(p.size());
    return s;
  }
  std::string str() const;
};

// Finite rational linear combination of basis states. Zero coefficients are
// never stored, so equality is syntactic.
class Element {
 public:
  Element() = default;

  static Element single(FockState s, Rational c = Rational(1)) {
    Element e;
    if (c != 0) e.terms_.emplace(std::move(s), std::move(c));
    return e;
  }

  bool zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<FockState, Rational>& terms() const { return terms_; }

  void add(const FockState& s, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (auto& [s, c] : o.terms_) add(s, -c);
    return *this;
  }
  Element& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, v] : terms_) v *= c;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator-(Element a) { return a *= Rational(-1); }

  bool operator==(const Element&) const = default;

  std::string str() const;

 private:
  std::map<FockState, Rational> terms_;
};

}  // namespace vak

#endif

#include "vak/model.hpp"

#include <algorithm>
#include <sstream>

namespace vak {

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

std::string FockState::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int n : parts[i]) {
      os << 'h' << i << "(-" << n << ')';
      any = true;
    }
  }
  if (!alpha_zero()) {
    os << "e^" << weight_str(alpha);
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c) << "*" << s.str();
  }
  return os.str();
}

int degree_of(const Model& m, const Element& x) {
  if (x.zero()) throw std::invalid_argument("degree of zero element");
  int d = m.state_degree(x.terms().begin()->first);
  for (auto& [s, c] : x.terms())
    if (m.state_degree(s) != d)
      throw std::invalid_argument("element is not degree-homogeneous");
  return d;
}

bool homogeneous_degree(const Model& m, const Element& x) {
  if (x.zero()) return true;
  int d = m.state_degree(x.terms().begin()->first);
  for (auto& [s, c] : x.terms())
    if (m.state_degree(s) != d) return false;
  return true;
}

std::map<BlockKey, Element> split_blocks(const Model& m, const Element& x) {
  std::map<BlockKey, Element> out;
  for (auto& [s, c] : x.terms())
    out[BlockKey{m.state_weight(s), m.state_degree(s)}].add(s, c);
  return out;
}

Element grading(const Model& m, const Element& x) {
  Element out;
  for (auto& [s, c] : x.terms()) out.add(s, Rational(m.state_degree(s)) * c);
  return out;
}

Element divided_d(const Model& m, int i, const Element& x) {
  if (i < 0) return {};
  Element out = x;
  for (int j = 0; j < i; ++j) out = m.d(out);
  if (i > 1) {
    Rational f(BigInt(1), factorial(i));
    f.canonicalize();
    out *= f;
  }
  return out;
}

int ord(const Model& m, const Element& a) {
  if (a.zero()) throw std::invalid_argument("ord of zero element");
  // D* lowers degree within a sector bounded below, so this terminates on
  // any correct model; the guard catches broken D* implementations.
  int guard = 4 * (m.universe().max_degree + 1) + 64;
  Element x = m.dstar(a);
  int k = 0;
  while (!x.zero()) {
    x = m.dstar(x);
    ++k;
    if (k > guard) throw std::logic_error("D* is not locally nilpotent");
  }
  return k;
}

int locality(const Model& m, const Element& a, const Element& b) {
  if (a.zero() || b.zero())
    throw std::invalid_argument("locality of zero element");
  int n = m.vanish_bound(a, b);
  // Scan downward from the degree-forced bound until the first nonzero
  // product. The scan is resolved or the engine itself reports the cutoff.
  while (true) {
    Element p;
    try {
      p = m.product(a, n - 1, b);
    } catch (const CutoffExceeded& e) {
      throw CutoffExceeded(
          std::string("locality scan unresolved within universe: ") + e.what(),
          e.needed_degree, e.needed_weight_len);
    }
    if (!p.zero()) return n;
    --n;
  }
}

std::vector<BlockKey> blocks_up_to(const Model& m, int degree_cutoff) {
  std::vector<BlockKey> keys;
  for (const Weight& w : m.weights_up_to_len(m.scan().max_weight_len)) {
    for (int d = m.min_degree(w); d <= degree_cutoff; ++d) {
      BlockKey k{w, d};
      if (m.block_dim(k) > 0) keys.push_back(k);
    }
  }
  std::sort(keys.begin(), keys.end(), [](const BlockKey& a, const BlockKey& b) {
    if (a.d != b.d) return a.d < b.d;
    if (weight_len(a.w) != weight_len(b.w))
      return weight_len(a.w) < weight_len(b.w);
    return a.w < b.w;
  });
  return keys;
}

std::vector<BasisElem> basis_elements(const Model& m, int degree_cutoff) {
  std::vector<BasisElem> out;
  for (const BlockKey& k : blocks_up_to(m, degree_cutoff))
    for (Element& e : m.block_basis(k)) out.push_back({k, std::move(e)});
  return out;
}

}  // namespace vak

#ifndef VAK_ADJOINT_HPP
#define VAK_ADJOINT_HPP

#include "vak/model.hpp"
#include "vak/verify.hpp"

namespace vak {

// Operator a(m) with any scalar folded into the element.
struct ModeTerm {
  Element a;
  int m;
};

// Composition chain, applied right to left: {T1, T2} acts as T1(T2(x)).
using ModeChain = std::vector<ModeTerm>;

// Formal sum of composition chains. This is as much of the enveloping
// algebra as the kernel ever materializes: finite words acting on truncated
// graded modules.
struct ModeWord {
  std::vector<ModeChain> chains;

  static ModeWord single(Element a, int m) {
    ModeWord w;
    w.chains.push_back({ModeTerm{std::move(a), m}});
    return w;
  }
};

Element apply_word(const Model& m, const ModeWord& w, const Element& x);

// Adjoint of a single mode: (-1)^{deg a} sum_i (D*^(i) a)(2 deg a - m - 2 - i),
// a finite sum because D* is locally nilpotent. Throws std::invalid_argument
// when a is not degree-homogeneous.
ModeWord adjoint_mode(const Model& m, const Element& a, int mode);

// Anti-involution on words: reverses each chain and stars each mode.
ModeWord adjoint_word(const Model& m, const ModeWord& w);

// a(m)** = a(m) as operators on all block bases within cutoff.
Report verify_involution(const Model& m, int cutoff);

// The two anti-homomorphism identities:
//   [b(n)*, a(m)*] = sum_s binom(m,s) (a(s)b)(m+n-s)*
//   [a(m)*, D*] = -m a(m-1)*
// checked as operator equations on block bases and on seeded random elements.
Report verify_antihom(const Model& m, int cutoff, int samples, uint64_t seed);

// a(m)* b lies in D*A for m >= 0 and for m < -ord(b)-1, over all basis pairs
// within cutoff and every m with potentially nonzero action.
Report verify_lemma_dst(const Model& m, int cutoff);

}  // namespace vak

#endif

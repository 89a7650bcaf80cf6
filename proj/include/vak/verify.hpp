#ifndef VAK_VERIFY_HPP
#define VAK_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vak/model.hpp"

namespace vak {

struct Report {
  std::string suite;
  bool passed = true;
  long long checks = 0;
  long long skipped = 0;  // identity instances outside the universe
  std::string witness;    // first counterexample, empty on pass
  uint64_t seed = 0;
  std::vector<std::string> notes;

  void fail(const std::string& w) {
    if (passed) witness = w;
    passed = false;
  }
  void merge(const Report& o);
};

// Deterministic generator for randomized checks; raw mt19937_64 output is
// reduced by modulus so results are identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  uint64_t next() { return g_(); }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 g_;
};

// Random homogeneous element: coefficients in [-3,3] over a random block with
// degree <= degree_cutoff.
Element random_homogeneous(const Model& m, Rng& rng,
                           const std::vector<BasisElem>& pool);

// Vertex algebra axioms (i)-(iv) plus [D, a(m)] = -m a(m-1) on all in-cutoff
// basis pairs/triples and seeded random triples.
Report verify_axioms(const Model& m, int cutoff, int samples, uint64_t seed);

// Associativity identity, with sum truncations at computed vanishing bounds.
Report verify_assoc(const Model& m, int cutoff, int samples, uint64_t seed);

// Quasi-symmetry identity.
Report verify_quasisym(const Model& m, int cutoff, int samples, uint64_t seed);

// [D*,D] = 2 delta, [delta,D] = D, [delta,D*] = -D*, D1 = D*1 = 0, and the
// D* commutation rule on generator modes.
Report verify_sl2(const Model& m, int cutoff);

// Surjectivity of D*: block(w, d+1) -> block(w, d) for all d < 0 in cutoff.
Report verify_prop_sl2(const Model& m, const Weight& w, int cutoff);

// Virasoro bracket on block bases; solves for the central charge and checks
// consistency across all scanned instances.
std::pair<Report, Rational> verify_virasoro(const Model& m,
                                            const Element& omega, int cutoff);

}  // namespace vak

#endif

#ifndef VAK_MODEL_HPP
#define VAK_MODEL_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vak/element.hpp"
#include "vak/linalg.hpp"

namespace vak {

struct Cutoffs {
  int max_degree = 0;
  int max_weight_len = 0;
};

// A computation escaped the configured block universe. Reports the minimal
// extension that would hold the offending block.
class CutoffExceeded : public std::runtime_error {
 public:
  CutoffExceeded(const std::string& what, int needed_degree,
                 int needed_weight_len)
      : std::runtime_error(what),
        needed_degree(needed_degree),
        needed_weight_len(needed_weight_len) {}
  int needed_degree;
  int needed_weight_len;
};

class DegenerateLattice : public std::runtime_error {
 public:
  explicit DegenerateLattice(const std::string& what)
      : std::runtime_error(what) {}
};

// Pluggable graded algebra backend. Elements are linear combinations of
// FockState monomials; derived models (quotients, generated subalgebras)
// reuse the parent's states and override the block structure.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual int rank() const = 0;
  virtual const std::vector<std::string>& generator_names() const = 0;
  virtual std::vector<Element> generator_elements() const = 0;
  virtual Element unit() const = 0;

  // Hard bounds enforced by every operation.
  virtual const Cutoffs& universe() const = 0;
  // Default enumeration bounds for suites and reports.
  virtual const Cutoffs& scan() const = 0;

  // All weights with |w| <= len_cap that can carry nonempty blocks.
  virtual std::vector<Weight> weights_up_to_len(int len_cap) const = 0;
  // Lower bound for degrees occurring in the given weight.
  virtual int min_degree(const Weight& w) const = 0;

  virtual std::vector<Element> block_basis(const BlockKey& k) const = 0;
  virtual int block_dim(const BlockKey& k) const {
    return static_cast<int>(block_basis(k).size());
  }
  // Coordinates of x in the block basis; nullopt when x is not in the span.
  virtual std::optional<Vec> block_coords(const BlockKey& k,
                                          const Element& x) const = 0;

  virtual Element product(const Element& a, int n, const Element& b) const = 0;
  virtual Element d(const Element& x) const = 0;
  virtual Element dstar(const Element& x) const = 0;

  virtual int state_degree(const FockState& s) const = 0;
  virtual Weight state_weight(const FockState& s) const = 0;

  // M such that a(m)b = 0 for all m >= M, forced by degree bookkeeping.
  virtual int vanish_bound(const Element& a, const Element& b) const = 0;

  // Whether weights add under products (lattice, free). The Heisenberg weight
  // (partition length) is an enumeration key only.
  virtual bool weight_additive() const = 0;

  // Weight entries are never negative (Heisenberg lengths, free-VA cone).
  virtual bool weights_nonnegative() const = 0;
  // Sector degree floors are nondecreasing in weight length, so a single
  // ring check certifies that nothing lives beyond an enumeration cap.
  virtual bool floor_monotone() const = 0;
  // min over |w| == len of min_degree(w); INT_MAX when no such weight exists.
  virtual int floor_at_len(int len) const = 0;
};

// ---- generic graded operations ----

// Degree of a homogeneous element; throws std::invalid_argument when mixed.
int degree_of(const Model& m, const Element& x);
bool homogeneous_degree(const Model& m, const Element& x);
// Splits into homogeneous components by (weight-sector, degree) block.
std::map<BlockKey, Element> split_blocks(const Model& m, const Element& x);

// Grading derivation delta: x |-> deg(x) x per homogeneous state.
Element grading(const Model& m, const Element& x);

// Divided translation power D^(i) x = D^i x / i!.
Element divided_d(const Model& m, int i, const Element& x);

// ord a: least k with (D*)^{k+1} a = 0. Throws on a = 0.
int ord(const Model& m, const Element& a);

// Exact locality index N(a,b): least n with a(m)b = 0 for all m >= n,
// computed by scanning downward from vanish_bound. Throws CutoffExceeded if
// the scan would need blocks outside the universe before resolving.
int locality(const Model& m, const Element& a, const Element& b);

struct BasisElem {
  BlockKey key;
  Element el;
};

// All block basis vectors with degree <= degree_cutoff and weight length
// within the model's scan cutoff, in deterministic block order.
std::vector<BasisElem> basis_elements(const Model& m, int degree_cutoff);
std::vector<BlockKey> blocks_up_to(const Model& m, int degree_cutoff);

}  // namespace vak

#endif

#ifndef VAK_FORMS_HPP
#define VAK_FORMS_HPP

#include <map>
#include <memory>

#include "vak/adjoint.hpp"
#include "vak/model.hpp"
#include "vak/verify.hpp"

namespace vak {

// Per-weight complement of I_0 = A_0(-1) D*A_1 inside A_0, with projection
// data. The complement basis is chosen by rref pivoting in the canonical
// block order, so Q-coordinates are reproducible byte for byte.
struct QSpace {
  struct WeightData {
    Weight w;
    std::vector<Element> a0_basis;
    Rref i0;                // rref of the I_0 span in a0 coordinates
    std::vector<int> comp;  // complement positions (non-pivot columns)
    bool exact = true;      // contribution scan provably complete
  };
  std::vector<WeightData> data;  // sorted by (len, lex) weight order
  bool all_exact = true;

  const WeightData* find(const Weight& w) const;
  int dim(const Weight& w) const;
};

// Builds Q = A_0 / I_0 for all weights of length <= q_len_cap (default:
// twice the scan weight length, clamped to the universe).
QSpace i0_basis(const Model& m, int q_len_cap = -1);

// Q-coordinates of the projection of a degree-0 element, split by weight.
// Weights with zero coordinates are dropped. Throws CutoffExceeded when the
// element touches weights outside the QSpace.
using QValue = std::map<Weight, Vec>;
QValue project_q(const Model& m, const QSpace& qs, const Element& x);

// Scalar functional on A_0 vanishing on D*A_1, per weight block, as
// coefficient vectors over the canonical block bases.
struct ScalarFunctional {
  std::map<Weight, Vec> coeffs;
  Rational eval(const Model& m, const Element& x) const;
};

// Validates f(D*A_1) = 0 by explicit image computation.
ScalarFunctional make_functional(const Model& m, std::map<Weight, Vec> raw);

// The canonical pairing <a,b> = pi(a(-1)* b), quotient-valued; zero when the
// degrees differ. Inputs may be inhomogeneous (componentwise pairing).
QValue pair_canonical(const Model& m, const QSpace& qs, const Element& a,
                      const Element& b);
// Scalar form <a,b> = f(a(-1)* b).
Rational pair_scalar(const Model& m, const ScalarFunctional& f,
                     const Element& a, const Element& b);

// Gram matrix of one (weight-pair, degree) block, valued in Q_{lam+mu}
// coordinates: comps[c].at(i,j) is the c-th coordinate of <b_i, b_j>.
struct GramBlock {
  Weight lam, mu;
  int d = 0;
  Weight value_weight;
  int qdim = 0;
  std::vector<Mat> comps;
};
GramBlock gram_block(const Model& m, const QSpace& qs, const Weight& lam,
                     const Weight& mu, int d);
// Scalar-functional Gram over explicit bases.
Mat gram_scalar(const Model& m, const ScalarFunctional& f,
                const std::vector<Element>& rows,
                const std::vector<Element>& cols);
// Degree-wide canonical Gram for models whose weight is an enumeration key
// only (Heisenberg): the full degree-d basis against itself.
Mat gram_degree(const Model& m, const QSpace& qs, int d);

// dim A_0 / D* A_1 per weight: the number of independent scalar invariant
// forms supported on that weight.
std::map<Weight, int> forms_dimension(const Model& m);

struct RadicalBlock {
  BlockKey block;  // weight empty => degree-wide (non-additive models)
  int dim = 0;
  int radical_dim = 0;
  std::vector<Element> kernel;
  bool exact = true;
  std::vector<Weight> partners;
};
struct RadicalReport {
  std::vector<RadicalBlock> blocks;
  bool all_zero() const;
  bool all_full() const;
};

// Radical of one block: kernel of the stacked Q-valued Gram rows over all
// admissible partner weights.
RadicalBlock radical_block(const Model& m, const QSpace& qs, const Weight& lam,
                           int d);
RadicalBlock radical_degree(const Model& m, const QSpace& qs, int d);
// All blocks with degree <= degree_cutoff within the scan weight length.
RadicalReport radical(const Model& m, const QSpace& qs, int degree_cutoff);

// Model on the per-block complements of the computed radical, with induced
// operations (lift, compute in the parent, project).
class QuotientModel : public Model {
 public:
  QuotientModel(std::shared_ptr<const Model> parent, const RadicalReport& rad);

  std::string name() const override { return parent_->name() + "/rad"; }
  int rank() const override { return parent_->rank(); }
  const std::vector<std::string>& generator_names() const override {
    return parent_->generator_names();
  }
  std::vector<Element> generator_elements() const override;
  Element unit() const override;
  const Cutoffs& universe() const override { return universe_; }
  const Cutoffs& scan() const override { return universe_; }
  std::vector<Weight> weights_up_to_len(int len_cap) const override;
  int min_degree(const Weight& w) const override;
  std::vector<Element> block_basis(const BlockKey& k) const override;
  std::optional<Vec> block_coords(const BlockKey& k,
                                  const Element& x) const override;
  Element product(const Element& a, int n, const Element& b) const override;
  Element d(const Element& x) const override;
  Element dstar(const Element& x) const override;
  int state_degree(const FockState& s) const override {
    return parent_->state_degree(s);
  }
  Weight state_weight(const FockState& s) const override {
    return parent_->state_weight(s);
  }
  int vanish_bound(const Element& a, const Element& b) const override {
    return parent_->vanish_bound(a, b);
  }
  bool weight_additive() const override { return parent_->weight_additive(); }
  bool weights_nonnegative() const override {
    return parent_->weights_nonnegative();
  }
  bool floor_monotone() const override { return parent_->floor_monotone(); }
  int floor_at_len(int len) const override {
    return parent_->floor_at_len(len);
  }

  Element project(const Element& x) const;
  const Model& parent() const { return *parent_; }

 private:
  struct BlockData {
    std::vector<Element> parent_basis;
    Rref rad;               // rref of radical vectors in parent coordinates
    std::vector<int> comp;  // complement positions
  };
  const BlockData* block(const BlockKey& k) const;

  std::shared_ptr<const Model> parent_;
  std::map<BlockKey, BlockData> blocks_;
  Cutoffs universe_;
};

// Symmetry of diagonal Gram blocks, invariance of the canonical form under
// a(m)/a(m)* and D/D*, and the f -> form -> f round trip on degree 0.
Report verify_symmetry_and_bijection(const Model& m, int cutoff,
                                     uint64_t seed);

// Radical-free structure: no negative degrees, A_0 commutative associative
// unital under a(-1)b, D A_0 = 0 and A_0(n)A = 0 for n != -1, A_0-bilinear
// canonical form, and the A_1 bracket with <a,b> = a(1)b.
Report verify_rad0(const Model& quotient, int cutoff);

}  // namespace vak

#endif

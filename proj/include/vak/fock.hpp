#ifndef VAK_FOCK_HPP
#define VAK_FOCK_HPP

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "vak/model.hpp"

namespace vak {

// Bimultiplicative sign 2-cocycle on the lattice. The generator table is
// eps(g_i,g_j) = 1 for i <= j and (-1)^{<g_i,g_j>} for i > j, which satisfies
// the even-lattice commutator condition eps(a,b) eps(b,a) = (-1)^{<a,b>}.
// With `corrupt` set the i > j signs are dropped; on lattices with an odd
// off-diagonal pairing this breaks the commutator condition (negative-control
// fixture for the axiom suite).
class Cocycle {
 public:
  Cocycle() = default;
  Cocycle(const std::vector<std::vector<long>>& gram, bool corrupt);
  int eval(const std::vector<int>& alpha, const std::vector<int>& beta) const;

 private:
  int rank_ = 0;
  std::vector<std::vector<int>> neg_;  // 1 where the table entry is -1
};

// Shared engine for Fock-type models: states are creation monomials over a
// lattice exponential, generator modes obey [h_i(m), h_j(n)] =
// m delta_{m+n,0} <g_i,g_j>, and general products are computed by rewriting
// with the associativity identity until only generator modes act.
class FockModel : public Model {
 public:
  std::string name() const override { return name_; }
  int rank() const override { return rank_; }
  const std::vector<std::string>& generator_names() const override {
    return names_;
  }
  Element unit() const override;
  const Cutoffs& universe() const override { return universe_; }
  const Cutoffs& scan() const override { return scan_; }
  std::vector<Weight> weights_up_to_len(int len_cap) const override;
  int min_degree(const Weight& w) const override;
  std::vector<Element> block_basis(const BlockKey& k) const override;
  std::optional<Vec> block_coords(const BlockKey& k,
                                  const Element& x) const override;
  Element product(const Element& a, int n, const Element& b) const override;
  Element d(const Element& x) const override;
  Element dstar(const Element& x) const override;
  int state_degree(const FockState& s) const override;
  Weight state_weight(const FockState& s) const override;
  int vanish_bound(const Element& a, const Element& b) const override;
  bool weight_additive() const override { return lattice_; }
  bool weights_nonnegative() const override { return !lattice_; }
  bool floor_monotone() const override { return !lattice_ || posdef_; }
  int floor_at_len(int len) const override;

  const Element& omega() const { return omega_; }
  // Primitive mode action of the coordinate generator h_dir.
  Element coord_mode(int dir, int m, const Element& x) const;
  // States of the given block as raw FockStates, in canonical order.
  std::vector<FockState> block_states(const BlockKey& k) const;

  long pairing(const std::vector<int>& a, const std::vector<int>& b) const;

 protected:
  FockModel(std::string name, std::vector<std::string> generator_names,
            std::vector<std::vector<long>> gram, bool lattice, Cocycle cocycle,
            Cutoffs universe, Cutoffs scan);

  void set_omega(Element w) { omega_ = std::move(w); }
  void check_universe(const std::vector<int>& alpha, int degree,
                      const char* what) const;
  int half_norm(const std::vector<int>& alpha) const;

  Element product_states(const FockState& s, int m, const FockState& t) const;
  Element expo_product(const std::vector<int>& alpha, int m,
                       const FockState& t) const;
  // h_alpha(m) = sum_i alpha_i h_i(m); annihilation and zero modes only.
  Element alpha_ann_mode(const std::vector<int>& alpha, int m,
                         const Element& x) const;
  // h_alpha(-k), k >= 1.
  Element alpha_creation(const std::vector<int>& alpha, int k,
                         const Element& x) const;
  // Least Q >= 0 such that h_alpha(q) t = 0 for all q >= Q.
  int ann_bound(const std::vector<int>& alpha, const FockState& t) const;

  std::string name_;
  int rank_;
  std::vector<std::string> names_;
  std::vector<std::vector<long>> gram_;  // <g_i, g_j>
  bool lattice_;
  bool posdef_;
  Cocycle cocycle_;
  Cutoffs universe_;
  Cutoffs scan_;
  Element omega_;

  mutable std::map<std::tuple<FockState, int, FockState>, Element> memo_;
  mutable std::mutex memo_mutex_;
};

// The Heisenberg vertex algebra: one generator a with a(0)a = 0, a(1)a = 1,
// locality 2. D* is the mode-2 action of omega_k = 1/2 a(-1)a + k Da.
class HeisenbergModel final : public FockModel {
 public:
  HeisenbergModel(const Rational& k, Cutoffs universe, Cutoffs scan);
  static std::shared_ptr<HeisenbergModel> make(const Rational& k,
                                               int scan_degree);

  const Rational& k() const { return k_; }
  std::vector<Element> generator_elements() const override;

  // All partitions of d in reverse-lexicographic order.
  std::vector<Element> fock_basis(int d) const;
  Element act_mode(int m, const Element& x) const { return coord_mode(0, m, x); }
  static Element omega_element(const Rational& k);

 private:
  Rational k_;
};

struct LocalityMatrix {
  std::vector<std::string> generators;
  std::vector<std::vector<long>> n;  // symmetric, even diagonal
};

// Lattice vertex algebra for Lambda = Z[G] with <a,b> = -N(a,b). D* is the
// mode-2 action of the standard conformal vector.
class LatticeModel final : public FockModel {
 public:
  LatticeModel(LocalityMatrix nm, Cutoffs universe, Cutoffs scan,
               bool corrupt_cocycle = false);
  static std::shared_ptr<LatticeModel> make(LocalityMatrix nm, int scan_degree,
                                            int scan_weight_len,
                                            bool corrupt_cocycle = false);

  const LocalityMatrix& locality_matrix() const { return nm_; }
  std::vector<Element> generator_elements() const override;  // e^{g_i}
  Element conformal_vector() const { return omega(); }
  Element exponential(const std::vector<int>& alpha) const;
  Element h_element(int dir) const;
  int cocycle_eval(const std::vector<int>& alpha,
                   const std::vector<int>& beta) const {
    return cocycle_.eval(alpha, beta);
  }

 private:
  LocalityMatrix nm_;
};

}  // namespace vak

#endif

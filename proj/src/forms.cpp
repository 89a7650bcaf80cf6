#include "vak/forms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vak {

namespace {

std::map<int, Element> split_degrees(const Model& m, const Element& x) {
  std::map<int, Element> out;
  for (auto& [s, c] : x.terms()) out[m.state_degree(s)].add(s, c);
  return out;
}

// a(-1)* b summed over equal-degree components.
Element pair_raw(const Model& m, const Element& a, const Element& b) {
  if (a.zero() || b.zero()) return {};
  auto da = split_degrees(m, a);
  auto db = split_degrees(m, b);
  Element v;
  for (auto& [deg, ac] : da) {
    auto it = db.find(deg);
    if (it == db.end()) continue;
    v += apply_word(m, adjoint_mode(m, ac, -1), it->second);
  }
  return v;
}

std::vector<BlockKey> degree_blocks(const Model& m, int d) {
  std::vector<BlockKey> keys;
  for (const Weight& w : m.weights_up_to_len(m.universe().max_weight_len)) {
    if (m.min_degree(w) > d) continue;
    BlockKey k{w, d};
    if (m.block_dim(k) > 0) keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end(), [](const BlockKey& a, const BlockKey& b) {
    if (weight_len(a.w) != weight_len(b.w))
      return weight_len(a.w) < weight_len(b.w);
    return a.w < b.w;
  });
  return keys;
}

std::vector<Element> degree_basis(const Model& m, int d) {
  std::vector<Element> out;
  for (auto& k : degree_blocks(m, d))
    for (auto& e : m.block_basis(k)) out.push_back(e);
  return out;
}

}  // namespace

const QSpace::WeightData* QSpace::find(const Weight& w) const {
  for (auto& wd : data)
    if (wd.w == w) return &wd;
  return nullptr;
}

int QSpace::dim(const Weight& w) const {
  const WeightData* wd = find(w);
  return wd ? static_cast<int>(wd->comp.size()) : 0;
}

QSpace i0_basis(const Model& m, int q_len_cap) {
  if (q_len_cap < 0)
    q_len_cap =
        std::min(2 * m.scan().max_weight_len, m.universe().max_weight_len);
  int src_cap = m.universe().max_weight_len;

  std::vector<Weight> w0, w1;
  for (const Weight& w : m.weights_up_to_len(src_cap)) {
    if (m.min_degree(w) <= 0 && m.block_dim({w, 0}) > 0) w0.push_back(w);
    if (m.min_degree(w) <= 1 && m.block_dim({w, 1}) > 0) w1.push_back(w);
  }
  std::set<Weight> w1set(w1.begin(), w1.end());

  // completeness of the contribution scan beyond the enumeration cap
  bool beyond_clear =
      m.weights_nonnegative() ||
      (m.floor_monotone() && m.floor_at_len(src_cap + 1) > 1);

  QSpace qs;
  for (const Weight& nu : m.weights_up_to_len(q_len_cap)) {
    if (m.min_degree(nu) > 0) continue;
    BlockKey key{nu, 0};
    auto a0 = m.block_basis(key);
    if (a0.empty()) continue;

    QSpace::WeightData wd;
    wd.w = nu;
    wd.a0_basis = a0;
    wd.exact = beyond_clear;

    Mat rows(0, static_cast<int>(a0.size()));
    auto add_pair = [&](const Element& u, const Element& w1el) {
      Element v = m.dstar(w1el);
      if (v.zero()) return;
      Element e = m.product(u, -1, v);
      if (e.zero()) return;
      auto coords = m.block_coords(key, e);
      if (!coords) {
        wd.exact = false;  // landed outside the block: unexpected
        return;
      }
      rows.append_row(*coords);
    };

    if (m.weight_additive()) {
      for (const Weight& lp : w0) {
        Weight mp(lp.size());
        for (size_t i = 0; i < lp.size(); ++i) mp[i] = nu[i] - lp[i];
        if (weight_len(mp) > src_cap || !w1set.count(mp)) continue;
        for (auto& u : m.block_basis({lp, 0}))
          for (auto& w1el : m.block_basis({mp, 1})) add_pair(u, w1el);
      }
    } else {
      // weight is an enumeration key only: pair every degree-0 element with
      // every degree-1 element; all results land in degree 0
      for (const Weight& lp : w0)
        for (auto& u : m.block_basis({lp, 0}))
          for (const Weight& mp : w1)
            for (auto& w1el : m.block_basis({mp, 1})) add_pair(u, w1el);
    }

    wd.i0 = rref(std::move(rows));
    std::vector<bool> is_pivot(a0.size(), false);
    for (int p : wd.i0.pivots) is_pivot[p] = true;
    for (size_t j = 0; j < a0.size(); ++j)
      if (!is_pivot[j]) wd.comp.push_back(static_cast<int>(j));
    qs.all_exact = qs.all_exact && wd.exact;
    qs.data.push_back(std::move(wd));
  }
  return qs;
}

QValue project_q(const Model& m, const QSpace& qs, const Element& x) {
  QValue out;
  if (x.zero()) return out;
  std::map<Weight, Element> by_weight;
  for (auto& [s, c] : x.terms()) by_weight[m.state_weight(s)].add(s, c);
  for (auto& [w, comp] : by_weight) {
    const QSpace::WeightData* wd = qs.find(w);
    if (!wd)
      throw CutoffExceeded("projection weight " + weight_str(w) +
                               " outside the computed Q space",
                           m.universe().max_degree, weight_len(w));
    auto coords = m.block_coords({w, 0}, comp);
    if (!coords)
      throw std::invalid_argument("project_q on a non-degree-0 element");
    Vec reduced = reduce_against(wd->i0, *coords);
    Vec qc;
    bool nonzero = false;
    for (int j : wd->comp) {
      qc.push_back(reduced[j]);
      nonzero = nonzero || reduced[j] != 0;
    }
    if (nonzero) out[w] = std::move(qc);
  }
  return out;
}

Rational ScalarFunctional::eval(const Model& m, const Element& x) const {
  Rational out(0);
  if (x.zero()) return out;
  std::map<Weight, Element> by_weight;
  for (auto& [s, c] : x.terms()) by_weight[m.state_weight(s)].add(s, c);
  for (auto& [w, comp] : by_weight) {
    auto it = coeffs.find(w);
    if (it == coeffs.end()) continue;
    auto coords = m.block_coords({w, 0}, comp);
    if (!coords)
      throw std::invalid_argument("functional applied off degree 0");
    for (size_t j = 0; j < coords->size(); ++j)
      out += (*coords)[j] * it->second[j];
  }
  return out;
}

ScalarFunctional make_functional(const Model& m, std::map<Weight, Vec> raw) {
  ScalarFunctional f{std::move(raw)};
  for (auto& [w, vec] : f.coeffs) {
    if (static_cast<int>(vec.size()) != m.block_dim({w, 0}))
      throw std::invalid_argument("functional length mismatch at weight " +
                                  weight_str(w));
  }
  // must vanish on D* A_1
  for (const Weight& w : m.weights_up_to_len(m.universe().max_weight_len)) {
    if (m.min_degree(w) > 1) continue;
    for (auto& s : m.block_basis({w, 1})) {
      Element v = m.dstar(s);
      if (v.zero()) continue;
      if (f.eval(m, v) != 0)
        throw std::invalid_argument(
            "functional does not vanish on D*A_1 (weight " + weight_str(w) +
            ")");
    }
  }
  return f;
}

QValue pair_canonical(const Model& m, const QSpace& qs, const Element& a,
                      const Element& b) {
  return project_q(m, qs, pair_raw(m, a, b));
}

Rational pair_scalar(const Model& m, const ScalarFunctional& f,
                     const Element& a, const Element& b) {
  return f.eval(m, pair_raw(m, a, b));
}

GramBlock gram_block(const Model& m, const QSpace& qs, const Weight& lam,
                     const Weight& mu, int d) {
  if (!m.weight_additive())
    throw std::invalid_argument(
        "weight-keyed gram blocks need additive weights; use gram_degree");
  GramBlock g;
  g.lam = lam;
  g.mu = mu;
  g.d = d;
  g.value_weight = weight_add(lam, mu);
  g.qdim = qs.dim(g.value_weight);
  auto rows = m.block_basis({lam, d});
  auto cols = m.block_basis({mu, d});
  g.comps.assign(g.qdim, Mat(static_cast<int>(rows.size()),
                             static_cast<int>(cols.size())));
  if (g.qdim == 0) return g;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      QValue v = pair_canonical(m, qs, rows[i], cols[j]);
      auto it = v.find(g.value_weight);
      if (it == v.end()) continue;
      for (int c = 0; c < g.qdim; ++c)
        g.comps[c].at(static_cast<int>(i), static_cast<int>(j)) =
            it->second[c];
    }
  return g;
}

Mat gram_scalar(const Model& m, const ScalarFunctional& f,
                const std::vector<Element>& rows,
                const std::vector<Element>& cols) {
  Mat g(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      g.at(static_cast<int>(i), static_cast<int>(j)) =
          pair_scalar(m, f, rows[i], cols[j]);
  return g;
}

Mat gram_degree(const Model& m, const QSpace& qs, int d) {
  auto basis = degree_basis(m, d);
  Mat g(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      QValue v = pair_canonical(m, qs, basis[i], basis[j]);
      if (v.empty()) continue;
      if (v.size() != 1 || v.begin()->second.size() != 1)
        throw std::logic_error("degree-wide gram expects dim Q <= 1");
      g.at(static_cast<int>(i), static_cast<int>(j)) =
          v.begin()->second[0];
    }
  return g;
}

std::map<Weight, int> forms_dimension(const Model& m) {
  std::map<Weight, int> out;
  int cap = std::min(2 * m.scan().max_weight_len, m.universe().max_weight_len);
  for (const Weight& w : m.weights_up_to_len(cap)) {
    if (m.min_degree(w) > 0) continue;
    BlockKey k0{w, 0};
    int dim0 = m.block_dim(k0);
    if (dim0 == 0) continue;
    Mat img(0, dim0);
    if (m.min_degree(w) <= 1) {
      for (auto& s : m.block_basis({w, 1})) {
        Element v = m.dstar(s);
        auto coords = m.block_coords(k0, v);
        if (coords) img.append_row(*coords);
      }
    }
    out[w] = dim0 - rank(img);
  }
  return out;
}

bool RadicalReport::all_zero() const {
  for (auto& b : blocks)
    if (b.radical_dim != 0) return false;
  return true;
}

bool RadicalReport::all_full() const {
  for (auto& b : blocks)
    if (b.radical_dim != b.dim) return false;
  return true;
}

namespace {

RadicalBlock radical_common(const Model& m, const QSpace& qs,
                            const BlockKey& key,
                            const std::vector<Element>& basis,
                            const std::vector<BlockKey>& partner_blocks,
                            bool exact_base) {
  RadicalBlock rb;
  rb.block = key;
  rb.dim = static_cast<int>(basis.size());
  rb.exact = exact_base && qs.all_exact;
  if (basis.empty()) return rb;

  Mat rows(0, rb.dim);
  for (const BlockKey& pk : partner_blocks) {
    Weight nu = m.weight_additive() ? weight_add(key.w, pk.w)
                                    : Weight(m.rank(), 0);
    if (m.min_degree(nu) > 0) continue;  // A_0 empty there: Q_nu = 0
    const QSpace::WeightData* wd = qs.find(nu);
    if (!wd) {
      rb.exact = false;  // unknown Q beyond the computed cap
      continue;
    }
    if (wd->comp.empty()) continue;  // pairing lands in a zero quotient
    rb.partners.push_back(pk.w);
    int q = static_cast<int>(wd->comp.size());
    for (auto& y : m.block_basis(pk)) {
      std::vector<Vec> cs(static_cast<size_t>(q), Vec(rb.dim, Rational(0)));
      for (int j = 0; j < rb.dim; ++j) {
        QValue v = pair_canonical(m, qs, basis[j], y);
        auto it = v.find(nu);
        if (it == v.end()) continue;
        for (int c = 0; c < q; ++c) cs[c][j] = it->second[c];
      }
      for (auto& row : cs) rows.append_row(row);
    }
  }

  for (Vec& kv : kernel_basis(rows)) {
    Element e;
    for (int j = 0; j < rb.dim; ++j)
      if (kv[j] != 0) e += kv[j] * basis[j];
    rb.kernel.push_back(std::move(e));
  }
  rb.radical_dim = static_cast<int>(rb.kernel.size());
  return rb;
}

}  // namespace

RadicalBlock radical_block(const Model& m, const QSpace& qs, const Weight& lam,
                           int d) {
  BlockKey key{lam, d};
  auto basis = m.block_basis(key);
  int cap = m.universe().max_weight_len;
  std::vector<BlockKey> partners;
  for (const Weight& mu : m.weights_up_to_len(cap)) {
    if (m.min_degree(mu) > d) continue;
    BlockKey pk{mu, d};
    if (m.block_dim(pk) > 0) partners.push_back(pk);
  }
  bool beyond_clear = m.floor_monotone() && m.floor_at_len(cap + 1) > d;
  return radical_common(m, qs, key, basis, partners, beyond_clear);
}

RadicalBlock radical_degree(const Model& m, const QSpace& qs, int d) {
  BlockKey key{Weight{}, d};
  std::vector<Element> basis = degree_basis(m, d);
  auto partners = degree_blocks(m, d);
  RadicalBlock rb = radical_common(m, qs, key, basis, partners, true);
  return rb;
}

RadicalReport radical(const Model& m, const QSpace& qs, int degree_cutoff) {
  RadicalReport rep;
  if (m.weight_additive()) {
    for (const BlockKey& k : blocks_up_to(m, degree_cutoff))
      rep.blocks.push_back(radical_block(m, qs, k.w, k.d));
  } else {
    for (int d = 0; d <= degree_cutoff; ++d) {
      RadicalBlock rb = radical_degree(m, qs, d);
      if (rb.dim > 0) rep.blocks.push_back(std::move(rb));
    }
  }
  return rep;
}

// ---- QuotientModel ----

QuotientModel::QuotientModel(std::shared_ptr<const Model> parent,
                             const RadicalReport& rad)
    : parent_(std::move(parent)) {
  universe_ = Cutoffs{0, 0};
  for (const RadicalBlock& rb : rad.blocks) {
    if (rb.block.w.empty()) {
      // degree-wide entry (non-additive weights): only the trivial kernels
      // split over weight blocks
      if (rb.radical_dim != 0 && rb.radical_dim != rb.dim)
        throw std::logic_error(
            "degree-wide radical does not split over weight blocks");
      for (const Weight& w :
           parent_->weights_up_to_len(parent_->universe().max_weight_len)) {
        if (parent_->min_degree(w) > rb.block.d) continue;
        BlockKey k{w, rb.block.d};
        auto basis = parent_->block_basis(k);
        if (basis.empty()) continue;
        BlockData bd;
        bd.parent_basis = basis;
        Mat rows(0, static_cast<int>(basis.size()));
        if (rb.radical_dim == rb.dim) rows = Mat::identity(basis.size());
        bd.rad = rref(std::move(rows));
        std::vector<bool> is_pivot(basis.size(), false);
        for (int p : bd.rad.pivots) is_pivot[p] = true;
        for (size_t j = 0; j < basis.size(); ++j)
          if (!is_pivot[j]) bd.comp.push_back(static_cast<int>(j));
        universe_.max_degree = std::max(universe_.max_degree, k.d);
        universe_.max_weight_len =
            std::max(universe_.max_weight_len, weight_len(w));
        blocks_.emplace(k, std::move(bd));
      }
      continue;
    }
    BlockData bd;
    bd.parent_basis = parent_->block_basis(rb.block);
    Mat rows(0, rb.dim);
    for (const Element& kv : rb.kernel) {
      auto coords = parent_->block_coords(rb.block, kv);
      rows.append_row(*coords);
    }
    bd.rad = rref(std::move(rows));
    std::vector<bool> is_pivot(bd.parent_basis.size(), false);
    for (int p : bd.rad.pivots) is_pivot[p] = true;
    for (size_t j = 0; j < bd.parent_basis.size(); ++j)
      if (!is_pivot[j]) bd.comp.push_back(static_cast<int>(j));
    universe_.max_degree = std::max(universe_.max_degree, rb.block.d);
    universe_.max_weight_len =
        std::max(universe_.max_weight_len, weight_len(rb.block.w));
    blocks_.emplace(rb.block, std::move(bd));
  }
}

const QuotientModel::BlockData* QuotientModel::block(const BlockKey& k) const {
  auto it = blocks_.find(k);
  return it == blocks_.end() ? nullptr : &it->second;
}

Element QuotientModel::project(const Element& x) const {
  Element out;
  for (auto& [k, comp] : split_blocks(*parent_, x)) {
    const BlockData* bd = block(k);
    if (!bd)
      throw CutoffExceeded("quotient block " + weight_str(k.w) + " deg " +
                               std::to_string(k.d) +
                               " outside the radical coverage",
                           k.d, weight_len(k.w));
    auto coords = parent_->block_coords(k, comp);
    Vec reduced = reduce_against(bd->rad, *coords);
    for (size_t j = 0; j < reduced.size(); ++j)
      if (reduced[j] != 0)
        out += reduced[j] * bd->parent_basis[j];
  }
  return out;
}

std::vector<Element> QuotientModel::generator_elements() const {
  std::vector<Element> out;
  for (auto& g : parent_->generator_elements()) out.push_back(project(g));
  return out;
}

Element QuotientModel::unit() const { return project(parent_->unit()); }

std::vector<Weight> QuotientModel::weights_up_to_len(int len_cap) const {
  std::set<Weight> seen;
  for (auto& [k, bd] : blocks_)
    if (weight_len(k.w) <= len_cap) seen.insert(k.w);
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    if (weight_len(a) != weight_len(b)) return weight_len(a) < weight_len(b);
    return a < b;
  });
  return out;
}

int QuotientModel::min_degree(const Weight& w) const {
  return parent_->min_degree(w);
}

std::vector<Element> QuotientModel::block_basis(const BlockKey& k) const {
  const BlockData* bd = block(k);
  if (!bd) {
    // blocks the parent does not populate are empty in the quotient too
    if (parent_->block_dim(k) == 0) return {};
    throw CutoffExceeded("quotient block outside the radical coverage", k.d,
                         weight_len(k.w));
  }
  std::vector<Element> out;
  for (int j : bd->comp) out.push_back(bd->parent_basis[j]);
  return out;
}

std::optional<Vec> QuotientModel::block_coords(const BlockKey& k,
                                               const Element& x) const {
  const BlockData* bd = block(k);
  if (!bd) return x.zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
  Element p = project(x);
  auto coords = parent_->block_coords(k, p);
  if (!coords) return std::nullopt;
  Vec out;
  for (int j : bd->comp) out.push_back((*coords)[j]);
  return out;
}

Element QuotientModel::product(const Element& a, int n,
                               const Element& b) const {
  return project(parent_->product(a, n, b));
}

Element QuotientModel::d(const Element& x) const {
  return project(parent_->d(x));
}

Element QuotientModel::dstar(const Element& x) const {
  return project(parent_->dstar(x));
}

// ---- suites ----

Report verify_symmetry_and_bijection(const Model& m, int cutoff,
                                     uint64_t seed) {
  Report rep;
  rep.suite = "forms";
  rep.seed = seed;
  QSpace qs = i0_basis(m);
  auto basis = basis_elements(m, cutoff);

  auto expect = [&](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.fail(what);
  };

  // (a) diagonal gram blocks are symmetric
  if (m.weight_additive()) {
    for (const BlockKey& k : blocks_up_to(m, cutoff)) {
      if (!rep.passed) break;
      GramBlock g = gram_block(m, qs, k.w, k.w, k.d);
      for (int c = 0; c < g.qdim && rep.passed; ++c)
        for (int i = 0; i < g.comps[c].rows; ++i)
          for (int j = 0; j < i; ++j)
            expect(g.comps[c].at(i, j) == g.comps[c].at(j, i),
                   "gram block (" + weight_str(k.w) + "," +
                       std::to_string(k.d) + ") is not symmetric");
    }
  } else {
    int lo = 0;
    for (int dd = lo; dd <= cutoff && rep.passed; ++dd) {
      Mat g = gram_degree(m, qs, dd);
      for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < i; ++j)
          expect(g.at(i, j) == g.at(j, i),
                 "degree gram " + std::to_string(dd) + " is not symmetric");
    }
  }

  // (b) invariance: <a(n)x, y> = <x, a(n)* y> and <Dx, y> = <x, D*y>
  Rng rng(seed);
  std::vector<Element> gens = m.generator_elements();
  for (int s = 0; s < 60 && rep.passed; ++s) {
    Element a = (s < static_cast<int>(gens.size()) && !gens[s].zero())
                    ? gens[s]
                    : random_homogeneous(m, rng, basis);
    Element x = random_homogeneous(m, rng, basis);
    Element y = random_homogeneous(m, rng, basis);
    if (a.zero() || x.zero() || y.zero()) continue;
    int da = degree_of(m, a), dx = degree_of(m, x), dy = degree_of(m, y);
    int nn = da + dx - dy - 1;  // makes deg a(n)x = deg y
    try {
      ++rep.checks;
      QValue lhs = pair_canonical(m, qs, m.product(a, nn, x), y);
      QValue rhs =
          pair_canonical(m, qs, x, apply_word(m, adjoint_mode(m, a, nn), y));
      if (!(lhs == rhs))
        rep.fail("invariance <a(n)x,y> = <x,a(n)*y> fails at n=" +
                 std::to_string(nn) + ", a=" + a.str() + ", x=" + x.str() +
                 ", y=" + y.str());
    } catch (const CutoffExceeded&) {
      --rep.checks;
      ++rep.skipped;
    }
  }
  for (auto& x : basis) {
    if (!rep.passed) break;
    for (auto& y : basis) {
      if (y.key.d != x.key.d + 1) continue;
      try {
        ++rep.checks;
        QValue lhs = pair_canonical(m, qs, m.d(x.el), y.el);
        QValue rhs = pair_canonical(m, qs, x.el, m.dstar(y.el));
        if (!(lhs == rhs))
          rep.fail("<Dx,y> = <x,D*y> fails at x=" + x.el.str() +
                   ", y=" + y.el.str());
      } catch (const CutoffExceeded&) {
        --rep.checks;
        ++rep.skipped;
      }
    }
  }

  // (c) round trip: <1, x> recovers the projection (and any valid f)
  Element unit = m.unit();
  for (auto& wd : qs.data) {
    if (!rep.passed) break;
    for (auto& x : wd.a0_basis) {
      expect(pair_canonical(m, qs, unit, x) == project_q(m, qs, x),
             "round trip <1,x> != pi(x) at x=" + x.str());
    }
  }
  // scalar functional round trip on the first weight with Q != 0
  for (auto& wd : qs.data) {
    if (wd.comp.empty()) continue;
    std::map<Weight, Vec> raw;
    Vec v(wd.a0_basis.size(), Rational(0));
    v[wd.comp[0]] = 1;
    raw[wd.w] = v;
    ScalarFunctional f = make_functional(m, std::move(raw));
    for (auto& x : wd.a0_basis)
      expect(pair_scalar(m, f, unit, x) == f.eval(m, x),
             "scalar round trip f != <1,.> at x=" + x.str());
    break;
  }

  // pairing across distinct degrees is exactly zero
  for (auto& x : basis) {
    if (!rep.passed) break;
    for (auto& y : basis) {
      if (x.key.d == y.key.d) continue;
      ++rep.checks;
      if (!pair_canonical(m, qs, x.el, y.el).empty()) {
        rep.fail("cross-degree pairing is nonzero: x=" + x.el.str() +
                 ", y=" + y.el.str());
        break;
      }
    }
  }

  if (rep.skipped > 0)
    rep.notes.push_back(std::to_string(rep.skipped) +
                        " instances skipped at the universe boundary");
  return rep;
}

Report verify_rad0(const Model& m, int cutoff) {
  Report rep;
  rep.suite = "rad0";

  auto expect = [&](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.fail(what);
  };

  int wcap = m.scan().max_weight_len;
  // (1) no negative-degree blocks
  for (const Weight& w : m.weights_up_to_len(wcap)) {
    for (int dd = m.min_degree(w); dd < 0 && dd <= cutoff; ++dd)
      expect(m.block_dim({w, dd}) == 0,
             "negative-degree block (" + weight_str(w) + "," +
                 std::to_string(dd) + ") is nonzero");
  }
  if (!rep.passed) return rep;

  // degree-0 and degree-1 spaces
  std::vector<Element> a0 = degree_basis(m, 0);
  std::vector<Element> a1 = degree_basis(m, 1);
  Element unit = m.unit();

  // D* A_1 = 0 (so I_0 = 0 and the canonical form is A_0-valued)
  for (auto& u : a1)
    expect(m.dstar(u).zero(), "D*A_1 != 0 at " + u.str());

  // (2) A_0 is commutative, associative, unital under a(-1)b
  for (auto& u : a0) {
    expect(m.product(unit, -1, u) == u, "1(-1)u != u");
    expect(m.product(u, -1, unit) == u, "u(-1)1 != u");
    for (auto& v : a0) {
      if (!rep.passed) break;
      expect(m.product(u, -1, v) == m.product(v, -1, u),
             "A_0 product is not commutative at u=" + u.str() +
                 ", v=" + v.str());
      for (auto& w : a0) {
        if (!rep.passed) break;
        expect(m.product(m.product(u, -1, v), -1, w) ==
                   m.product(u, -1, m.product(v, -1, w)),
               "A_0 product is not associative");
      }
    }
  }
  if (!rep.passed) return rep;

  // (3) D A_0 = 0 and A_0(n) A = 0 for n != -1
  auto basis = basis_elements(m, cutoff);
  for (auto& u : a0) {
    expect(m.d(u).zero(), "D A_0 != 0 at " + u.str());
    for (auto& x : basis) {
      if (!rep.passed) break;
      for (int n = -cutoff - 2; n <= 1; ++n) {
        if (n == -1) continue;
        try {
          ++rep.checks;
          if (!m.product(u, n, x.el).zero()) {
            rep.fail("A_0(" + std::to_string(n) + ")x != 0 at u=" + u.str() +
                     ", x=" + x.el.str());
            break;
          }
        } catch (const CutoffExceeded&) {
          --rep.checks;
          ++rep.skipped;
        }
      }
    }
  }
  if (!rep.passed) return rep;

  // (4) the canonical A_0-valued form is A_0-bilinear
  QSpace qs = i0_basis(m);
  for (auto& wd : qs.data)
    expect(wd.comp.size() == wd.a0_basis.size(),
           "I_0 != 0 in a radical-free model at weight " + weight_str(wd.w));
  auto value_elem = [&](const QValue& v) {
    Element e;
    for (auto& [w, coords] : v) {
      const QSpace::WeightData* wd = qs.find(w);
      for (size_t j = 0; j < coords.size(); ++j)
        if (coords[j] != 0) e += coords[j] * wd->a0_basis[wd->comp[j]];
    }
    return e;
  };
  for (auto& u : a0) {
    if (!rep.passed) break;
    for (auto& x : basis) {
      if (!rep.passed) break;
      for (auto& y : basis) {
        if (y.key.d != x.key.d) continue;
        try {
          ++rep.checks;
          Element lhs = value_elem(
              pair_canonical(m, qs, m.product(u, -1, x.el), y.el));
          Element rhs = m.product(
              u, -1, value_elem(pair_canonical(m, qs, x.el, y.el)));
          if (!(lhs == rhs)) {
            rep.fail("form is not A_0-bilinear at u=" + u.str() +
                     ", x=" + x.el.str() + ", y=" + y.el.str());
            break;
          }
        } catch (const CutoffExceeded&) {
          --rep.checks;
          ++rep.skipped;
        }
      }
    }
  }
  if (!rep.passed) return rep;

  // (5) A_1 bracket: antisymmetric, with <a,b> = a(1)b
  for (auto& a : a1) {
    if (!rep.passed) break;
    for (auto& b : a1) {
      expect(m.product(a, 0, b) == -m.product(b, 0, a),
             "A_1 bracket is not antisymmetric");
      Element ab1 = m.product(a, 1, b);
      Element paired = value_elem(pair_canonical(m, qs, a, b));
      expect(paired == ab1, "<a,b> != a(1)b on A_1 at a=" + a.str() +
                                ", b=" + b.str());
      if (!rep.passed) break;
    }
  }

  if (rep.skipped > 0)
    rep.notes.push_back(std::to_string(rep.skipped) +
                        " instances skipped at the universe boundary");
  return rep;
}

}  // namespace vak

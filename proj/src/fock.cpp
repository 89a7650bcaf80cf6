#include "vak/fock.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

#include "vak/partitions.hpp"

namespace vak {

namespace {

std::vector<int> add_vec(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// Keeps the per-direction part list weakly decreasing.
FockState with_part(const FockState& s, int dir, int n) {
  FockState t = s;
  auto& p = t.parts[dir];
  p.insert(std::upper_bound(p.begin(), p.end(), n, std::greater<int>()), n);
  return t;
}

int max_part(const Element& x) {
  int m = 0;
  for (auto& [s, c] : x.terms())
    for (auto& p : s.parts)
      if (!p.empty()) m = std::max(m, p[0]);
  return m;
}

}  // namespace

// ---- Cocycle ----

Cocycle::Cocycle(const std::vector<std::vector<long>>& gram, bool corrupt)
    : rank_(static_cast<int>(gram.size())),
      neg_(gram.size(), std::vector<int>(gram.size(), 0)) {
  if (corrupt) return;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < i; ++j)
      if (gram[i][j] % 2 != 0) neg_[i][j] = 1;
}

int Cocycle::eval(const std::vector<int>& alpha,
                  const std::vector<int>& beta) const {
  long par = 0;
  for (int i = 0; i < rank_; ++i) {
    if (alpha[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (neg_[i][j] && beta[j] != 0) par += static_cast<long>(alpha[i]) * beta[j];
  }
  return parity_sign(par);
}

// ---- FockModel ----

namespace {

// Sylvester criterion with exact arithmetic.
bool positive_definite(const std::vector<std::vector<long>>& g) {
  int n = static_cast<int>(g.size());
  for (int k = 1; k <= n; ++k) {
    Mat minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor.at(i, j) = Rational(g[i][j]);
    // determinant via fraction-free elimination on the rref path: use the
    // product of pivots times the row-swap sign of a plain elimination
    Rational det(1);
    Mat m = minor;
    for (int c = 0; c < k; ++c) {
      int sel = -1;
      for (int r = c; r < k; ++r)
        if (m.at(r, c) != 0) {
          sel = r;
          break;
        }
      if (sel < 0) return false;  // singular minor
      if (sel != c) {
        for (int j = 0; j < k; ++j) std::swap(m.at(sel, j), m.at(c, j));
        det = -det;
      }
      det *= m.at(c, c);
      for (int r = c + 1; r < k; ++r) {
        if (m.at(r, c) == 0) continue;
        Rational f = m.at(r, c) / m.at(c, c);
        for (int j = c; j < k; ++j) m.at(r, j) -= f * m.at(c, j);
      }
    }
    if (det <= 0) return false;
  }
  return true;
}

}  // namespace

FockModel::FockModel(std::string name, std::vector<std::string> generator_names,
                     std::vector<std::vector<long>> gram, bool lattice,
                     Cocycle cocycle, Cutoffs universe, Cutoffs scan)
    : name_(std::move(name)),
      rank_(static_cast<int>(generator_names.size())),
      names_(std::move(generator_names)),
      gram_(std::move(gram)),
      lattice_(lattice),
      posdef_(positive_definite(gram_)),
      cocycle_(std::move(cocycle)),
      universe_(universe),
      scan_(scan) {}

int FockModel::floor_at_len(int len) const {
  if (!lattice_) return len;  // r parts of size >= 1
  bool found = false;
  long best = 0;
  std::vector<int> cur(rank_, 0);
  std::function<void(int, int)> rec = [&](int dir, int budget) {
    if (dir == rank_) {
      if (budget != 0) return;
      long hn = pairing(cur, cur) / 2;
      if (!found || hn < best) best = hn;
      found = true;
      return;
    }
    for (int v = -budget; v <= budget; ++v) {
      cur[dir] = v;
      rec(dir + 1, budget - (v < 0 ? -v : v));
    }
    cur[dir] = 0;
  };
  rec(0, len);
  return found ? static_cast<int>(best) : std::numeric_limits<int>::max();
}

Element FockModel::unit() const {
  FockState s;
  s.alpha.assign(rank_, 0);
  s.parts.assign(rank_, {});
  return Element::single(std::move(s));
}

long FockModel::pairing(const std::vector<int>& a,
                        const std::vector<int>& b) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j] != 0) s += static_cast<long>(a[i]) * gram_[i][j] * b[j];
  }
  return s;
}

int FockModel::half_norm(const std::vector<int>& alpha) const {
  long n = pairing(alpha, alpha);
  assert(n % 2 == 0);
  return static_cast<int>(n / 2);
}

int FockModel::state_degree(const FockState& s) const {
  return s.parts_total() + half_norm(s.alpha);
}

Weight FockModel::state_weight(const FockState& s) const {
  if (lattice_) return s.alpha;
  return Weight{s.parts_count()};
}

void FockModel::check_universe(const std::vector<int>& alpha, int degree,
                               const char* what) const {
  int wl = 0;
  for (int x : alpha) wl += x < 0 ? -x : x;
  if (wl > universe_.max_weight_len) {
    std::ostringstream os;
    os << what << ": block escapes universe, needs max_weight_len >= " << wl
       << " (configured " << universe_.max_weight_len << ")";
    throw CutoffExceeded(os.str(), universe_.max_degree, wl);
  }
  if (degree > universe_.max_degree) {
    std::ostringstream os;
    os << what << ": block escapes universe, needs max_degree >= " << degree
       << " (configured " << universe_.max_degree << ")";
    throw CutoffExceeded(os.str(), degree, universe_.max_weight_len);
  }
}

std::vector<Weight> FockModel::weights_up_to_len(int len_cap) const {
  std::vector<Weight> out;
  if (!lattice_) {
    int top = std::min(len_cap, universe_.max_degree);
    for (int r = 0; r <= top; ++r) out.push_back(Weight{r});
    return out;
  }
  len_cap = std::min(len_cap, universe_.max_weight_len);
  Weight cur(rank_, 0);
  std::function<void(int, int)> rec = [&](int dir, int budget) {
    if (dir == rank_) {
      out.push_back(cur);
      return;
    }
    for (int v = -budget; v <= budget; ++v) {
      cur[dir] = v;
      rec(dir + 1, budget - (v < 0 ? -v : v));
    }
    cur[dir] = 0;
  };
  rec(0, len_cap);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    if (weight_len(a) != weight_len(b)) return weight_len(a) < weight_len(b);
    return a < b;
  });
  return out;
}

int FockModel::min_degree(const Weight& w) const {
  if (!lattice_) return w[0];  // r parts, each of size >= 1
  return half_norm(w);
}

std::vector<FockState> FockModel::block_states(const BlockKey& k) const {
  std::vector<FockState> out;
  std::vector<int> alpha;
  int n;
  if (!lattice_) {
    alpha.assign(rank_, 0);
    n = k.d;
    for (auto& p : partitions_exact_parts(n, k.w[0])) {
      FockState s;
      s.alpha = alpha;
      s.parts.assign(rank_, {});
      s.parts[0] = p;
      out.push_back(std::move(s));
    }
    return out;
  }
  alpha = k.w;
  n = k.d - half_norm(alpha);
  if (n < 0) return out;
  // Per-direction partition tuples: direction budget descending, partitions
  // reverse-lexicographic within each direction.
  FockState cur;
  cur.alpha = alpha;
  cur.parts.assign(rank_, {});
  std::function<void(int, int)> rec = [&](int dir, int budget) {
    if (dir == rank_) {
      if (budget == 0) out.push_back(cur);
      return;
    }
    if (dir == rank_ - 1) {
      for (auto& p : partitions_of(budget)) {
        cur.parts[dir] = p;
        rec(dir + 1, 0);
      }
      cur.parts[dir].clear();
      return;
    }
    for (int take = budget; take >= 0; --take) {
      for (auto& p : partitions_of(take)) {
        cur.parts[dir] = p;
        rec(dir + 1, budget - take);
      }
    }
    cur.parts[dir].clear();
  };
  rec(0, n);
  return out;
}

std::vector<Element> FockModel::block_basis(const BlockKey& k) const {
  check_universe(lattice_ ? k.w : std::vector<int>(rank_, 0), k.d,
                 "block_basis");
  std::vector<Element> out;
  for (auto& s : block_states(k)) out.push_back(Element::single(s));
  return out;
}

std::optional<Vec> FockModel::block_coords(const BlockKey& k,
                                           const Element& x) const {
  std::vector<FockState> states = block_states(k);
  std::map<FockState, int> index;
  for (size_t i = 0; i < states.size(); ++i)
    index.emplace(states[i], static_cast<int>(i));
  Vec v(states.size(), Rational(0));
  for (auto& [s, c] : x.terms()) {
    auto it = index.find(s);
    if (it == index.end()) return std::nullopt;
    v[it->second] = c;
  }
  return v;
}

int FockModel::vanish_bound(const Element& a, const Element& b) const {
  int bound = std::numeric_limits<int>::min();
  for (auto& [s, sc] : a.terms())
    for (auto& [t, tc] : b.terms()) {
      int floor = half_norm(add_vec(s.alpha, t.alpha));
      bound = std::max(bound, state_degree(s) + state_degree(t) - floor);
    }
  return bound == std::numeric_limits<int>::min() ? 0 : bound;
}

Element FockModel::alpha_ann_mode(const std::vector<int>& alpha, int m,
                                  const Element& x) const {
  assert(m >= 0);
  Element out;
  if (m == 0) {
    for (auto& [s, c] : x.terms()) {
      long eig = pairing(alpha, s.alpha);
      if (eig != 0) out.add(s, c * eig);
    }
    return out;
  }
  std::vector<long> cvec(rank_, 0);
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i)
      if (alpha[i] != 0) cvec[j] += static_cast<long>(alpha[i]) * gram_[i][j];
  // Commute h_alpha(m) through the creation monomial; each removable part of
  // size m in direction j contributes m <alpha, g_j> times its multiplicity.
  for (auto& [s, c] : x.terms()) {
    for (int j = 0; j < rank_; ++j) {
      if (cvec[j] == 0) continue;
      auto& p = s.parts[j];
      long mult = std::count(p.begin(), p.end(), m);
      if (mult == 0) continue;
      FockState t = s;
      auto it = std::find(t.parts[j].begin(), t.parts[j].end(), m);
      t.parts[j].erase(it);
      out.add(t, c * Rational(static_cast<long>(m) * cvec[j] * mult));
    }
  }
  return out;
}

Element FockModel::alpha_creation(const std::vector<int>& alpha, int k,
                                  const Element& x) const {
  assert(k >= 1);
  Element out;
  for (auto& [s, c] : x.terms())
    for (int j = 0; j < rank_; ++j)
      if (alpha[j] != 0) out.add(with_part(s, j, k), c * alpha[j]);
  return out;
}

int FockModel::ann_bound(const std::vector<int>& alpha,
                         const FockState& t) const {
  int bound = pairing(alpha, t.alpha) != 0 ? 1 : 0;
  for (int j = 0; j < rank_; ++j) {
    long cj = 0;
    for (int i = 0; i < rank_; ++i)
      if (alpha[i] != 0) cj += static_cast<long>(alpha[i]) * gram_[i][j];
    if (cj == 0 || t.parts[j].empty()) continue;
    bound = std::max(bound, t.parts[j][0] + 1);
  }
  return bound;
}

namespace {

const LocalityMatrix& checked_locality_matrix(const LocalityMatrix& nm) {
  size_t r = nm.generators.size();
  if (nm.n.size() != r)
    throw std::invalid_argument("locality matrix size mismatch");
  for (size_t i = 0; i < r; ++i) {
    if (nm.n[i].size() != r)
      throw std::invalid_argument("locality matrix is not square");
    if (nm.n[i][i] % 2 != 0) throw std::invalid_argument("N(a,a) must be even");
    for (size_t j = 0; j < r; ++j)
      if (nm.n[i][j] != nm.n[j][i])
        throw std::invalid_argument("locality matrix must be symmetric");
  }
  return nm;
}

}  // namespace

Element FockModel::coord_mode(int dir, int m, const Element& x) const {
  std::vector<int> e(rank_, 0);
  e[dir] = 1;
  if (m >= 0) return alpha_ann_mode(e, m, x);
  Element out;
  for (auto& [s, c] : x.terms()) {
    check_universe(s.alpha, state_degree(s) - m, "coord_mode");
    out.add(with_part(s, dir, -m), c);
  }
  return out;
}

Element FockModel::product(const Element& a, int n, const Element& b) const {
  Element out;
  for (auto& [s, sc] : a.terms())
    for (auto& [t, tc] : b.terms()) {
      Element p = product_states(s, n, t);
      if (!p.zero()) out += (sc * tc) * p;
    }
  return out;
}

Element FockModel::product_states(const FockState& s, int m,
                                  const FockState& t) const {
  std::vector<int> alpha = add_vec(s.alpha, t.alpha);
  int dres = state_degree(s) + state_degree(t) - m - 1;
  if (dres < half_norm(alpha)) return {};  // below the sector floor
  check_universe(alpha, dres, "product");

  std::tuple<FockState, int, FockState> key{s, m, t};
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  Element out;
  if (s.is_vacuum()) {
    if (m == -1) out = Element::single(t);
  } else if (s.pure_exponential()) {
    out = expo_product(s.alpha, m, t);
  } else {
    // Peel the leading creation mode: s = h_i(-n1) rest, then rewrite
    // (a(-n1) rest)(m) t with the associativity identity. The first sum stops
    // when the inner product is degree-forced to zero, the second when the
    // annihilation mode exceeds its bound on t.
    int i = 0;
    while (s.parts[i].empty()) ++i;
    int n1 = s.parts[i][0];
    FockState rest = s;
    rest.parts[i].erase(rest.parts[i].begin());
    int rest_deg = state_degree(rest);

    std::vector<int> ei(rank_, 0);
    ei[i] = 1;

    int inner_floor = half_norm(add_vec(rest.alpha, t.alpha));
    int first_stop = rest_deg + state_degree(t) - inner_floor;  // m+u >= this => 0
    for (int u = 0; m + u < first_stop; ++u) {
      Element inner = product_states(rest, m + u, t);
      if (inner.zero()) continue;
      Rational coef = Rational(binomial(-n1, u)) * parity_sign(u);
      Element created;
      for (auto& [is, ic] : inner.terms())
        created.add(with_part(is, i, n1 + u), ic);
      created *= coef;
      out += created;
    }

    int qmax = ann_bound(ei, t);
    for (int q = 0; q < qmax; ++q) {
      long u = -static_cast<long>(n1) - q;
      Element tt = alpha_ann_mode(ei, q, Element::single(t));
      if (tt.zero()) continue;
      Rational coef = Rational(binomial(-n1, q)) * Rational(-parity_sign(u));
      Element res;
      for (auto& [ts, tc] : tt.terms())
        res += tc * product_states(rest, static_cast<int>(m + u), ts);
      out += coef * res;
    }
  }

  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(std::move(key), out);
  }
  return out;
}

Element FockModel::expo_product(const std::vector<int>& alpha, int m,
                                const FockState& t) const {
  const std::vector<int>& beta = t.alpha;
  long ab = pairing(alpha, beta);
  long p = -static_cast<long>(m) - 1 - ab;

  // exp(-sum_{k>=1} h_alpha(k)/k z^{-k}) t, collected by the z^{-j} shift.
  std::map<int, Element> acc;
  std::map<int, Element> cur;
  acc[0] = Element::single(t);
  cur[0] = acc[0];
  for (long pw = 1; !cur.empty(); ++pw) {
    std::map<int, Element> next;
    for (auto& [j, el] : cur) {
      int kmax = max_part(el);
      for (int k = 1; k <= kmax; ++k) {
        Element y = alpha_ann_mode(alpha, k, el);
        if (y.zero()) continue;
        Rational f(-1, k * pw);
        f.canonicalize();
        next[j + k] += f * y;
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.zero() ? next.erase(it) : std::next(it);
    for (auto& [j, el] : next) acc[j] += el;
    cur = std::move(next);
  }

  std::vector<int> gamma = add_vec(alpha, beta);
  Element out;
  for (auto& [j, el] : acc) {
    long q = p + j;
    if (q < 0) continue;
    // Shift the exponential sector, then apply the z^q creation coefficient
    // of exp(sum_{k>=1} h_alpha(-k)/k z^k).
    Element shifted;
    for (auto& [s, c] : el.terms()) {
      FockState ns = s;
      ns.alpha = gamma;
      shifted.add(ns, c);
    }
    if (q == 0) {
      out += shifted;
      continue;
    }
    for (auto& part : partitions_of(static_cast<int>(q))) {
      Rational coef(1);
      for (size_t a = 0; a < part.size();) {
        size_t b = a;
        while (b < part.size() && part[b] == part[a]) ++b;
        long k = part[a];
        long mult = static_cast<long>(b - a);
        BigInt den = factorial(mult);
        for (long e = 0; e < mult; ++e) den *= k;
        Rational f(BigInt(1), den);
        f.canonicalize();
        coef *= f;
        a = b;
      }
      Element y = shifted;
      for (int k : part) y = alpha_creation(alpha, k, y);
      out += coef * y;
    }
  }
  out *= Rational(cocycle_.eval(alpha, beta));
  return out;
}

Element FockModel::d(const Element& x) const {
  Element out;
  for (auto& [s, c] : x.terms()) {
    check_universe(s.alpha, state_degree(s) + 1, "d");
    for (int j = 0; j < rank_; ++j) {
      for (size_t idx = 0; idx < s.parts[j].size(); ++idx) {
        int n = s.parts[j][idx];
        FockState ns = s;
        ns.parts[j].erase(ns.parts[j].begin() + static_cast<long>(idx));
        out.add(with_part(ns, j, n + 1), c * n);
      }
      if (s.alpha[j] != 0) out.add(with_part(s, j, 1), c * s.alpha[j]);
    }
  }
  return out;
}

Element FockModel::dstar(const Element& x) const {
  if (x.zero()) return {};
  return product(omega_, 2, x);
}

// ---- HeisenbergModel ----

HeisenbergModel::HeisenbergModel(const Rational& k, Cutoffs universe,
                                 Cutoffs scan)
    : FockModel("heisenberg", {"a"}, {{1}}, /*lattice=*/false, Cocycle{},
                universe, scan),
      k_(k) {
  set_omega(omega_element(k));
}

std::shared_ptr<HeisenbergModel> HeisenbergModel::make(const Rational& k,
                                                       int scan_degree) {
  int u = 3 * scan_degree + 6;
  return std::make_shared<HeisenbergModel>(k, Cutoffs{u, u},
                                           Cutoffs{scan_degree, scan_degree});
}

Element HeisenbergModel::omega_element(const Rational& k) {
  FockState s11;
  s11.alpha = {0};
  s11.parts = {{1, 1}};
  FockState s2;
  s2.alpha = {0};
  s2.parts = {{2}};
  Element w = Element::single(s11, Rational(1, 2));
  w += Element::single(s2, k);
  return w;
}

std::vector<Element> HeisenbergModel::generator_elements() const {
  FockState a;
  a.alpha = {0};
  a.parts = {{1}};
  return {Element::single(a)};
}

std::vector<Element> HeisenbergModel::fock_basis(int d) const {
  std::vector<Element> out;
  if (d < 0) return out;
  for (auto& p : partitions_of(d)) {
    FockState s;
    s.alpha = {0};
    s.parts = {p};
    out.push_back(Element::single(std::move(s)));
  }
  return out;
}

// ---- LatticeModel ----

namespace {

std::vector<std::vector<long>> negate(const std::vector<std::vector<long>>& n) {
  auto g = n;
  for (auto& row : g)
    for (auto& x : row) x = -x;
  return g;
}

Mat gram_inverse_or_throw(const std::vector<std::vector<long>>& gram) {
  int r = static_cast<int>(gram.size());
  Mat aug(r, 2 * r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) aug.at(i, j) = Rational(gram[i][j]);
    aug.at(i, r + i) = 1;
  }
  Rref rr = rref(std::move(aug));
  for (int i = 0; i < r; ++i)
    if (static_cast<int>(rr.pivots.size()) <= i || rr.pivots[i] != i)
      throw DegenerateLattice("lattice form <a,b> = -N(a,b) is degenerate");
  Mat inv(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) inv.at(i, j) = rr.m.at(i, r + j);
  return inv;
}

}  // namespace

LatticeModel::LatticeModel(LocalityMatrix nm, Cutoffs universe, Cutoffs scan,
                           bool corrupt_cocycle)
    : FockModel("lattice", checked_locality_matrix(nm).generators,
                negate(nm.n), /*lattice=*/true,
                Cocycle(negate(nm.n), corrupt_cocycle), universe, scan),
      nm_(std::move(nm)) {
  Mat inv = gram_inverse_or_throw(gram_);
  // Standard conformal vector 1/2 sum_{i,j} (G^{-1})_{ij} h_i(-1) h_j(-1) 1.
  Element w;
  for (int i = 0; i < rank_; ++i)
    for (int j = i; j < rank_; ++j) {
      Rational coef = inv.at(i, j);
      if (i == j)
        coef *= Rational(1, 2);
      if (coef == 0) continue;
      FockState s;
      s.alpha.assign(rank_, 0);
      s.parts.assign(rank_, {});
      s.parts[i].push_back(1);
      s.parts[j].insert(
          std::upper_bound(s.parts[j].begin(), s.parts[j].end(), 1,
                           std::greater<int>()),
          1);
      w += Element::single(std::move(s), coef);
    }
  set_omega(std::move(w));
}

std::shared_ptr<LatticeModel> LatticeModel::make(LocalityMatrix nm,
                                                 int scan_degree,
                                                 int scan_weight_len,
                                                 bool corrupt_cocycle) {
  int ud = 3 * (scan_degree < 0 ? -scan_degree : scan_degree) + 8;
  int uw = 3 * scan_weight_len;
  return std::make_shared<LatticeModel>(std::move(nm), Cutoffs{ud, uw},
                                        Cutoffs{scan_degree, scan_weight_len},
                                        corrupt_cocycle);
}

std::vector<Element> LatticeModel::generator_elements() const {
  std::vector<Element> out;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> alpha(rank_, 0);
    alpha[i] = 1;
    out.push_back(exponential(alpha));
  }
  return out;
}

Element LatticeModel::exponential(const std::vector<int>& alpha) const {
  FockState s;
  s.alpha = alpha;
  s.parts.assign(rank_, {});
  check_universe(alpha, state_degree(s), "exponential");
  return Element::single(std::move(s));
}

Element LatticeModel::h_element(int dir) const {
  FockState s;
  s.alpha.assign(rank_, 0);
  s.parts.assign(rank_, {});
  s.parts[dir].push_back(1);
  return Element::single(std::move(s));
}

}  // namespace vak

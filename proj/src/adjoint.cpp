#include "vak/adjoint.hpp"

#include <algorithm>
#include <sstream>

namespace vak {

Element apply_word(const Model& m, const ModeWord& w, const Element& x) {
  Element out;
  for (const ModeChain& chain : w.chains) {
    Element cur = x;
    for (auto it = chain.rbegin(); it != chain.rend() && !cur.zero(); ++it)
      cur = m.product(it->a, it->m, cur);
    out += cur;
  }
  return out;
}

ModeWord adjoint_mode(const Model& m, const Element& a, int mode) {
  ModeWord w;
  if (a.zero()) return w;
  int d = degree_of(m, a);
  Rational sign(parity_sign(d));
  Element cur = a;
  BigInt fact = 1;
  int guard = 4 * (m.universe().max_degree + 1) + 64;
  for (int i = 0; !cur.zero(); ++i) {
    if (i > guard) throw std::logic_error("D* is not locally nilpotent");
    if (i > 0) fact *= i;
    Rational coef = sign / Rational(fact);
    w.chains.push_back({ModeTerm{coef * cur, 2 * d - mode - 2 - i}});
    cur = m.dstar(cur);
  }
  return w;
}

ModeWord adjoint_word(const Model& m, const ModeWord& w) {
  ModeWord out;
  for (const ModeChain& chain : w.chains) {
    // (T1 ... Tk)* = Tk* ... T1*: reverse the chain and star each mode,
    // distributing the mode sums into chains.
    std::vector<ModeChain> acc{ModeChain{}};
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      ModeWord star = adjoint_mode(m, it->a, it->m);
      std::vector<ModeChain> next;
      for (const ModeChain& pc : acc)
        for (const ModeChain& sc : star.chains) {
          ModeChain nc = pc;
          nc.insert(nc.end(), sc.begin(), sc.end());
          next.push_back(std::move(nc));
        }
      acc = std::move(next);
    }
    out.chains.insert(out.chains.end(), acc.begin(), acc.end());
  }
  return out;
}

namespace {

constexpr int kReachPad = 4;

// The degree-d space that can contain v: a single block for weight-additive
// models, the union over all partition-length blocks otherwise.
std::vector<BlockKey> space_keys(const Model& m, const Weight& w, int d) {
  if (m.weight_additive()) return {BlockKey{w, d}};
  std::vector<BlockKey> keys;
  for (const Weight& u : m.weights_up_to_len(m.universe().max_weight_len)) {
    BlockKey k{u, d};
    if (m.min_degree(u) <= d && m.block_dim(k) > 0) keys.push_back(k);
  }
  return keys;
}

std::optional<Vec> space_coords(const Model& m,
                                const std::vector<BlockKey>& keys,
                                const Element& v) {
  auto blocks = split_blocks(m, v);
  Vec out;
  for (const BlockKey& k : keys) {
    auto it = blocks.find(k);
    Element comp = (it == blocks.end()) ? Element{} : it->second;
    auto c = m.block_coords(k, comp);
    if (!c) return std::nullopt;
    out.insert(out.end(), c->begin(), c->end());
    if (it != blocks.end()) blocks.erase(it);
  }
  if (!blocks.empty()) return std::nullopt;  // leftover states outside keys
  return out;
}

}  // namespace

Report verify_involution(const Model& m, int cutoff) {
  Report rep;
  rep.suite = "involution";
  int reach = std::min(cutoff + kReachPad, m.universe().max_degree);
  auto basis = basis_elements(m, cutoff);

  for (auto& a : basis) {
    if (!rep.passed) break;
    for (auto& x : basis) {
      if (!rep.passed) break;
      int m_lo = a.key.d + x.key.d - 1 - reach;
      int m_hi = m.vanish_bound(a.el, x.el) + 2;
      for (int mm = m_lo; mm <= m_hi; ++mm) {
        try {
          ++rep.checks;
          ModeWord ws = adjoint_mode(m, a.el, mm);
          ModeWord wss = adjoint_word(m, ws);
          Element lhs = apply_word(m, wss, x.el);
          Element rhs = m.product(a.el, mm, x.el);
          if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "a(m)** != a(m) at m=" << mm << ", a=" << a.el.str()
               << ", x=" << x.el.str();
            rep.fail(os.str());
          }
        } catch (const CutoffExceeded&) {
          --rep.checks;
          ++rep.skipped;
        }
      }
    }
  }
  return rep;
}

Report verify_antihom(const Model& m, int cutoff, int samples, uint64_t seed) {
  Report rep;
  rep.suite = "antihom";
  rep.seed = seed;
  int reach = std::min(cutoff + kReachPad, m.universe().max_degree);
  auto basis = basis_elements(m, cutoff);

  auto commutator_identity = [&](const Element& a, const Element& b,
                                 const Element& x, int mm, int nn) {
    if (!rep.passed) return;
    try {
      ++rep.checks;
      ModeWord as = adjoint_mode(m, a, mm);
      ModeWord bs = adjoint_mode(m, b, nn);
      Element lhs = apply_word(m, bs, apply_word(m, as, x)) -
                    apply_word(m, as, apply_word(m, bs, x));
      Element rhs;
      int smax = m.vanish_bound(a, b);
      for (int s = 0; s < smax; ++s) {
        if (mm >= 0 && s > mm) break;
        Element ab = m.product(a, s, b);
        if (ab.zero()) continue;
        BigInt bi = binomial(mm, s);
        if (bi == 0) continue;
        rhs += Rational(bi) *
               apply_word(m, adjoint_mode(m, ab, mm + nn - s), x);
      }
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "[b(n)*,a(m)*] identity fails at m=" << mm << ", n=" << nn
           << ", a=" << a.str() << ", b=" << b.str() << ", x=" << x.str();
        rep.fail(os.str());
      }
    } catch (const CutoffExceeded&) {
      --rep.checks;
      ++rep.skipped;
    }
  };

  auto dstar_identity = [&](const Element& a, const Element& x, int mm) {
    if (!rep.passed) return;
    try {
      ++rep.checks;
      ModeWord as = adjoint_mode(m, a, mm);
      Element lhs =
          apply_word(m, as, m.dstar(x)) - m.dstar(apply_word(m, as, x));
      Element rhs =
          Rational(-mm) * apply_word(m, adjoint_mode(m, a, mm - 1), x);
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "[a(m)*,D*] identity fails at m=" << mm << ", a=" << a.str()
           << ", x=" << x.str();
        rep.fail(os.str());
      }
    } catch (const CutoffExceeded&) {
      --rep.checks;
      ++rep.skipped;
    }
  };

  auto window_pair = [&](const Element& a, const Element& b,
                         const Element& x) {
    int da = degree_of(m, a), db = degree_of(m, b), dx = degree_of(m, x);
    int m_lo = da - dx - 1 - reach, m_hi = da - dx - 1 + reach;
    for (int mm = m_lo; mm <= m_hi; ++mm) {
      int r1 = dx + mm + 1 - da;
      int n_lo = db - r1 - 1 - reach, n_hi = db - r1 - 1 + reach;
      for (int nn = n_lo; nn <= n_hi; ++nn)
        commutator_identity(a, b, x, mm, nn);
    }
  };

  std::vector<Element> gens = m.generator_elements();
  for (const Element& a : gens) {
    if (a.zero()) continue;
    for (const Element& b : gens) {
      if (b.zero()) continue;
      for (auto& x : basis) {
        if (!rep.passed) break;
        window_pair(a, b, x.el);
      }
    }
    for (auto& x : basis) {
      if (!rep.passed) break;
      int da = degree_of(m, a), dx = x.key.d;
      for (int mm = da - dx - 1 - reach; mm <= da - dx + reach; ++mm)
        dstar_identity(a, x.el, mm);
    }
  }

  Rng rng(seed);
  for (int s = 0; s < samples && rep.passed; ++s) {
    Element a = random_homogeneous(m, rng, basis);
    Element b = random_homogeneous(m, rng, basis);
    Element x = random_homogeneous(m, rng, basis);
    if (a.zero() || b.zero() || x.zero()) continue;
    int da = degree_of(m, a), db = degree_of(m, b), dx = degree_of(m, x);
    int mm = static_cast<int>(
        rng.range(da - dx - 1 - reach, da - dx - 1 + reach));
    int r1 = dx + mm + 1 - da;
    int nn =
        static_cast<int>(rng.range(db - r1 - 1 - reach, db - r1 - 1 + reach));
    commutator_identity(a, b, x, mm, nn);
    dstar_identity(a, x, mm);
  }

  if (rep.skipped > 0)
    rep.notes.push_back(std::to_string(rep.skipped) +
                        " instances skipped at the universe boundary");
  return rep;
}

Report verify_lemma_dst(const Model& m, int cutoff) {
  Report rep;
  rep.suite = "lemma-dst";
  int reach = std::min(cutoff + kReachPad, m.universe().max_degree);
  auto basis = basis_elements(m, cutoff);

  for (auto& a : basis) {
    if (!rep.passed) break;
    int da = a.key.d;
    // highest i with D*^(i) a nonzero bounds the mode indices below
    int orda = ord(m, a.el);
    for (auto& b : basis) {
      if (!rep.passed) break;
      int db = b.key.d;
      int ordb = ord(m, b.el);

      std::vector<int> modes;
      // m >= 0 with the result inside reach
      for (int mm = 0; mm <= reach + da - db - 1; ++mm) modes.push_back(mm);
      // m < -ord b - 1, down to where every mode index is degree-forced zero
      int floor_m = 0;
      {
        Element cur = a.el;
        bool first = true;
        for (int i = 0; i <= orda; ++i) {
          int vb = m.vanish_bound(cur, b.el);
          int mf = 2 * da - 1 - i - vb;
          floor_m = first ? mf : std::min(floor_m, mf);
          first = false;
          cur = m.dstar(cur);
          if (cur.zero()) break;
        }
      }
      for (int mm = -ordb - 2; mm >= floor_m; --mm) modes.push_back(mm);

      for (int mm : modes) {
        try {
          ++rep.checks;
          Element v = apply_word(m, adjoint_mode(m, a.el, mm), b.el);
          if (v.zero()) continue;
          int ev = degree_of(m, v);
          Weight wv = m.state_weight(v.terms().begin()->first);
          auto keys = space_keys(m, wv, ev);
          auto vc = space_coords(m, keys, v);
          if (!vc) {
            rep.fail("a(m)*b landed outside its expected block");
            break;
          }
          // image of D* from degree ev+1
          auto src_keys = space_keys(m, wv, ev + 1);
          Mat img(static_cast<int>(vc->size()), 0);
          std::vector<Vec> cols;
          for (auto& sk : src_keys)
            for (auto& s : m.block_basis(sk)) {
              auto c = space_coords(m, keys, m.dstar(s));
              if (c) cols.push_back(*c);
            }
          Mat mat(static_cast<int>(vc->size()),
                  static_cast<int>(cols.size()));
          for (size_t j = 0; j < cols.size(); ++j)
            for (size_t i = 0; i < vc->size(); ++i)
              mat.at(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
          if (!solve(mat, *vc)) {
            std::ostringstream os;
            os << "a(m)*b not in D*A at m=" << mm << ", a=" << a.el.str()
               << ", b=" << b.el.str() << ", a(m)*b=" << v.str();
            rep.fail(os.str());
            break;
          }
        } catch (const CutoffExceeded&) {
          --rep.checks;
          ++rep.skipped;
        }
      }
    }
  }
  if (rep.skipped > 0)
    rep.notes.push_back(std::to_string(rep.skipped) +
                        " instances skipped at the universe boundary");
  return rep;
}

}  // namespace vak

#pragma once

// Untwisted reference implementations. They read raw structure constants
// and use the textbook formulas with every twist equal to the identity;
// nothing here calls into the library's evaluation helpers.

#include <map>
#include <tuple>

#include "support.hpp"

namespace hht::classical {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
using TripleElt = std::map<Triple, Scalar>;

inline bool is_identity(const LinMap& m) { return m == LinMap::identity(m.field(), m.dom_dim()); }

/// Associativity, unit, coassociativity, counit, bialgebra compatibility and
/// the antipode laws, all on basis elements.
inline bool hopf_ok(const HomHopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  const auto& m = h.algebra().mul;
  const auto& d = h.coalgebra().comul;
  const Vec& u = h.algebra().unit;
  const Vec& eps = h.coalgebra().counit;
  const LinMap& S = h.antipode;
  auto delta = [](std::size_t a, std::size_t b) { return a == b; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t r = 0; r < n; ++r) {
          Scalar left = f.zero(), right = f.zero();
          for (std::size_t k = 0; k < n; ++k) {
            if (!m.at(i, j, k).is_zero()) left += m.at(i, j, k) * m.at(k, l, r);
            if (!m.at(j, l, k).is_zero()) right += m.at(j, l, k) * m.at(i, k, r);
          }
          if (!(left == right)) return false;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) {
      Scalar ul = f.zero(), ur = f.zero(), cl = f.zero(), cr = f.zero();
      for (std::size_t k = 0; k < n; ++k) {
        ul += u[k] * m.at(k, i, r);
        ur += u[k] * m.at(i, k, r);
        cl += eps[k] * d.at(i, k, r);
        cr += eps[k] * d.at(i, r, k);
      }
      const Scalar want = delta(i, r) ? f.one() : f.zero();
      if (!(ul == want && ur == want && cl == want && cr == want)) return false;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          Scalar left = f.zero(), right = f.zero();
          for (std::size_t k = 0; k < n; ++k) {
            if (!d.at(i, k, c).is_zero()) left += d.at(i, k, c) * d.at(k, a, b);
            if (!d.at(i, a, k).is_zero()) right += d.at(i, a, k) * d.at(k, b, c);
          }
          if (!(left == right)) return false;
        }
  // Delta(ij) = Delta(i)Delta(j), eps(ij) = eps(i)eps(j)
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> dterms(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t qq = 0; qq < n; ++qq)
        if (!d.at(i, p, qq).is_zero()) dterms[i].emplace_back(p, qq, d.at(i, p, qq));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar e_ij = f.zero();
      for (std::size_t k = 0; k < n; ++k) e_ij += m.at(i, j, k) * eps[k];
      if (!(e_ij == eps[i] * eps[j])) return false;
      std::vector<Scalar> left(n * n, f.zero()), right(n * n, f.zero());
      for (std::size_t k = 0; k < n; ++k)
        if (!m.at(i, j, k).is_zero())
          for (const auto& [a, b, c] : dterms[k]) left[a * n + b] += m.at(i, j, k) * c;
      for (const auto& [p, qq, c1] : dterms[i])
        for (const auto& [r, s, c2] : dterms[j])
          for (std::size_t a = 0; a < n; ++a) {
            if (m.at(p, r, a).is_zero()) continue;
            for (std::size_t b = 0; b < n; ++b) right[a * n + b] += c1 * c2 * m.at(p, r, a) * m.at(qq, s, b);
          }
      if (left != right) return false;
    }
  Scalar eu = f.zero();
  for (std::size_t k = 0; k < n; ++k) eu += eps[k] * u[k];
  if (!(eu == f.one())) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar du = f.zero();
      for (std::size_t k = 0; k < n; ++k) du += u[k] * d.at(k, a, b);
      if (!(du == u[a] * u[b])) return false;
    }
  // S(i1) i2 = eps(i) 1 = i1 S(i2)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Scalar left = f.zero(), right = f.zero();
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t qq = 0; qq < n; ++qq) {
          if (d.at(i, p, qq).is_zero()) continue;
          for (std::size_t r = 0; r < n; ++r) {
            left += d.at(i, p, qq) * S.at(r, p) * m.at(r, qq, k);
            right += d.at(i, p, qq) * S.at(r, qq) * m.at(p, r, k);
          }
        }
      if (!(left == eps[i] * u[k] && right == eps[i] * u[k])) return false;
    }
  return true;
}

/// (a#h)(b#k) = a(h1.b) # h2 k on B (x) H, B-major.
inline StructureTensor smash_product(const HomHopfAlgebra& B, const HomHopfAlgebra& H, const StructureTensor& act) {
  const std::size_t nb = B.dim(), nh = H.dim(), n = nb * nh;
  const auto& mb = B.algebra().mul;
  const auto& mh = H.algebra().mul;
  const auto& dh = H.coalgebra().comul;
  StructureTensor t(B.field(), n, n, n);
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t k = 0; k < nh; ++k)
          for (std::size_t h1 = 0; h1 < nh; ++h1)
            for (std::size_t h2 = 0; h2 < nh; ++h2) {
              const Scalar& c = dh.at(h, h1, h2);
              if (c.is_zero()) continue;
              for (std::size_t r = 0; r < nb; ++r) {
                if (act.at(h1, b, r).is_zero()) continue;
                for (std::size_t x = 0; x < nb; ++x)
                  for (std::size_t y = 0; y < nh; ++y)
                    t.at(a * nh + h, b * nh + k, x * nh + y) += c * act.at(h1, b, r) * mb.at(a, r, x) * mh.at(h2, k, y);
              }
            }
  return t;
}

/// Delta(a#h) = a1 # h1(0) (x) a2 h1(1) # h2, with co[h][h'][b] for h -> h' (x) b.
inline StructureTensor smash_coproduct(const HomHopfAlgebra& B, const HomHopfAlgebra& H, const StructureTensor& co) {
  const std::size_t nb = B.dim(), nh = H.dim(), n = nb * nh;
  const auto& mb = B.algebra().mul;
  const auto& db = B.coalgebra().comul;
  const auto& dh = H.coalgebra().comul;
  StructureTensor t(B.field(), n, n, n);
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t a1 = 0; a1 < nb; ++a1)
        for (std::size_t a2 = 0; a2 < nb; ++a2) {
          if (db.at(a, a1, a2).is_zero()) continue;
          for (std::size_t h1 = 0; h1 < nh; ++h1)
            for (std::size_t h2 = 0; h2 < nh; ++h2) {
              if (dh.at(h, h1, h2).is_zero()) continue;
              for (std::size_t h0 = 0; h0 < nh; ++h0)
                for (std::size_t b = 0; b < nb; ++b) {
                  if (co.at(h1, h0, b).is_zero()) continue;
                  for (std::size_t c = 0; c < nb; ++c)
                    t.at(a * nh + h, a1 * nh + h0, c * nh + h2) +=
                        db.at(a, a1, a2) * dh.at(h, h1, h2) * co.at(h1, h0, b) * mb.at(a2, b, c);
                }
            }
        }
  return t;
}

/// S(a#h) = (1 # S(h0)) (S(a h1) # 1), using the classical smash table.
inline LinMap bicross_antipode(const HomHopfAlgebra& B, const HomHopfAlgebra& H, const StructureTensor& co,
                               const StructureTensor& smash) {
  const std::size_t nb = B.dim(), nh = H.dim(), n = nb * nh;
  const Field f = B.field();
  const auto& mb = B.algebra().mul;
  LinMap s(f, n, n);
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t h0 = 0; h0 < nh; ++h0)
        for (std::size_t b = 0; b < nb; ++b) {
          if (co.at(h, h0, b).is_zero()) continue;
          for (std::size_t c = 0; c < nb; ++c) {          // a h1 = sum c
            if (mb.at(a, b, c).is_zero()) continue;
            for (std::size_t sc = 0; sc < nb; ++sc)       // S_B(c)
              for (std::size_t sh = 0; sh < nh; ++sh) {   // S_H(h0)
                const Scalar coef = co.at(h, h0, b) * mb.at(a, b, c) * B.antipode.at(sc, c) * H.antipode.at(sh, h0);
                if (coef.is_zero()) continue;
                for (std::size_t bu = 0; bu < nb; ++bu)
                  for (std::size_t hu = 0; hu < nh; ++hu) {
                    const Scalar w = coef * B.algebra().unit[bu] * H.algebra().unit[hu];
                    if (w.is_zero()) continue;
                    for (std::size_t out = 0; out < n; ++out)
                      s.at(out, a * nh + h) += w * smash.at(bu * nh + sh, sc * nh + hu, out);
                  }
              }
          }
        }
  return s;
}

/// The classical Drinfeld double of a finite group algebra on kG (x) k^G,
/// group-major, with basis h (x) delta_x:
///   (h (x) delta_x)(k (x) delta_y) = [y = k x k^-1] kh (x) delta_y
///   Delta(h (x) delta_x) = sum_{yz = x} (h (x) delta_y) (x) (h (x) delta_z)
/// unit 1 (x) sum_x delta_x, counit [x = 1].
struct GroupDouble {
  std::size_t order;
  StructureTensor mul, comul;
  Vec unit, counit;
};

inline GroupDouble group_double(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& g) {
  auto inv = [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y)
      if (g(x, y) == 0) return y;
    return std::size_t{0};
  };
  const std::size_t N = n * n;
  GroupDouble d{n, StructureTensor(Q, N, N, N), StructureTensor(Q, N, N, N), Vec(Q, N), Vec(Q, N)};
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t y = 0; y < n; ++y)
          if (g(g(k, x), inv(k)) == y) d.mul.at(h * n + x, k * n + y, g(k, h) * n + y) = Q.one();
      for (std::size_t y = 0; y < n; ++y) d.comul.at(h * n + x, h * n + y, h * n + g(inv(y), x)) = Q.one();
    }
  for (std::size_t x = 0; x < n; ++x) d.unit[x] = Q.one();
  for (std::size_t h = 0; h < n; ++h) d.counit[h * n] = Q.one();
  return d;
}

/// R = sum_x (1 (x) delta_x) (x) (x^-1 (x) sum_y delta_y).
inline Vec group_double_r(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& g) {
  const std::size_t N = n * n;
  Vec r(Q, N * N);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t xi = 0;
    while (g(x, xi) != 0) ++xi;
    for (std::size_t y = 0; y < n; ++y) r[pair_index(x, xi * n + y, N)] = Q.one();
  }
  return r;
}

/// R12 R13 R23 = R23 R13 R12 in an associative algebra given by its table.
inline bool qybe(const StructureTensor& m, const Vec& unit, const Vec& r) {
  const std::size_t n = m.d0();
  auto terms = [&](const Vec& rv) {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!rv[i * n + j].is_zero()) out.emplace_back(i, j, rv[i * n + j]);
    return out;
  };
  const auto rt = terms(r);
  auto leg = [&](int slot_a, int slot_b) {
    TripleElt t;
    const int pad = 3 - slot_a - slot_b;
    for (const auto& [i, j, c] : rt)
      for (std::size_t u = 0; u < n; ++u) {
        if (unit[u].is_zero()) continue;
        std::array<std::size_t, 3> idx{};
        idx[slot_a] = i;
        idx[slot_b] = j;
        idx[pad] = u;
        t[{idx[0], idx[1], idx[2]}] += c * unit[u];
      }
    return t;
  };
  auto times = [&](const TripleElt& x, const TripleElt& y) {
    TripleElt out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y)
        for (std::size_t p = 0; p < n; ++p) {
          const Scalar& m0 = m.at(std::get<0>(a), std::get<0>(b), p);
          if (m0.is_zero()) continue;
          for (std::size_t qq = 0; qq < n; ++qq) {
            const Scalar& m1 = m.at(std::get<1>(a), std::get<1>(b), qq);
            if (m1.is_zero()) continue;
            for (std::size_t s = 0; s < n; ++s) {
              const Scalar& m2 = m.at(std::get<2>(a), std::get<2>(b), s);
              if (m2.is_zero()) continue;
              out[{p, qq, s}] += ca * cb * m0 * m1 * m2;
            }
          }
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  };
  const TripleElt r12 = leg(0, 1), r13 = leg(0, 2), r23 = leg(1, 2);
  return times(times(r12, r13), r23) == times(times(r23, r13), r12);
}

}  // namespace hht::classical

#pragma once

#include <array>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "homhopf/actions.hpp"
#include "homhopf/document.hpp"
#include "homhopf/linear.hpp"
#include "homhopf/products.hpp"
#include "homhopf/rmatrix.hpp"
#include "homhopf/structures.hpp"

namespace hht {

using namespace homhopf;

inline const Field Q = Field::rational();

inline Scalar q(std::int64_t n, std::int64_t d = 1) { return Q.from_ratio(n, d); }

inline Vec vec(std::initializer_list<Scalar> xs) { return Vec(Q, std::vector<Scalar>(xs)); }

inline Vec e(std::size_t n, std::size_t i) { return Vec::basis(Q, n, i); }

inline LinMap mat(std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> entries, Field f = Q) {
  LinMap m(f, rows, cols);
  std::size_t k = 0;
  for (std::int64_t v : entries) {
    m.at(k / cols, k % cols) = f.from_int(v);
    ++k;
  }
  return m;
}

inline HomHopfAlgebra hopf(const std::string& name) { return document_hopf(builtin_example(name)); }

inline std::shared_ptr<const HomHopfAlgebra> share(HomHopfAlgebra h) {
  return std::make_shared<const HomHopfAlgebra>(std::move(h));
}

// Sweedler basis: 1, g, x, gx.
enum : std::size_t { s1 = 0, sg = 1, sx = 2, sgx = 3 };

/// R = 1/2 (1(x)1 + 1(x)g + g(x)1 + sign * g(x)g) on the sweedler host.
inline Vec sweedler_r(int sign = -1) {
  Vec r(Q, 16);
  r[pair_index(s1, s1, 4)] = q(1, 2);
  r[pair_index(s1, sg, 4)] = q(1, 2);
  r[pair_index(sg, s1, 4)] = q(1, 2);
  r[pair_index(sg, sg, 4)] = q(sign, 2);
  return r;
}

inline BicrossData worked_bicross_data() {
  const AlgebraDocument hd = builtin_example("bicross-2-5-data");
  BicrossData d{hopf("bicross-2-5-B"), document_hopf(hd), {}, {}};
  d.act.act = materialize(*hd.action, Q, 2, 2, 2, "action");
  d.co.coact = materialize(*hd.coaction, Q, 2, 2, 2, "coaction");
  return d;
}

/// Group algebra kG with identity twist, from a multiplication table on
/// element indices (index 0 is the identity).
inline HomHopfAlgebra group_algebra(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  HomHopfAlgebra h;
  auto& a = h.bialgebra.algebra;
  auto& c = h.bialgebra.coalgebra;
  a.dim = c.dim = n;
  a.mul = StructureTensor(Q, n, n, n);
  c.comul = StructureTensor(Q, n, n, n);
  a.unit = Vec::basis(Q, n, 0);
  c.counit = Vec(Q, n);
  a.alpha = c.gamma = LinMap::identity(Q, n);
  h.antipode = LinMap(Q, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    c.counit[i] = Q.one();
    c.comul.at(i, i, i) = Q.one();
    for (std::size_t j = 0; j < n; ++j) {
      a.mul.at(i, j, mul(i, j)) = Q.one();
      if (mul(i, j) == 0) h.antipode.at(j, i) = Q.one();
    }
  }
  return h;
}

inline std::size_t z3(std::size_t i, std::size_t j) { return (i + j) % 3; }

// S3 as permutations of {0,1,2}; element 0 is the identity.
inline const std::vector<std::array<int, 3>>& s3_elements() {
  static const std::vector<std::array<int, 3>> els = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                                      {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  return els;
}

inline std::size_t s3(std::size_t i, std::size_t j) {
  const auto& els = s3_elements();
  std::array<int, 3> p{};
  for (int k = 0; k < 3; ++k) p[k] = els[i][els[j][k]];
  for (std::size_t r = 0; r < els.size(); ++r)
    if (els[r] == p) return r;
  return 0;
}

inline HomHopfAlgebra ks3() { return group_algebra(6, s3); }

/// A nonzero rational in a small range, denominators up to 3.
inline Scalar random_nonzero(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  for (;;) {
    const int n = num(rng);
    if (n != 0) return q(n, den(rng));
  }
}

inline bool caught(const std::function<bool()>& passes) {
  try {
    return !passes();
  } catch (const std::exception&) {
    return true;
  }
}

}  // namespace hht

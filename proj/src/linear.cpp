#include "homhopf/linear.hpp"

#include <numeric>
#include <utility>

namespace homhopf {

Vec::Vec(Field f, std::size_t dim) : field_(f), c_(dim, f.zero()) {}

Vec::Vec(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& s : c_)
    if (s.field() != f) throw FieldMismatch("vector coefficient outside the vector's field");
}

Vec Vec::basis(Field f, std::size_t dim, std::size_t i) {
  Vec v(f, dim);
  v[i] = f.one();
  return v;
}

bool Vec::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

std::size_t Vec::nonzeros() const {
  std::size_t n = 0;
  for (const auto& s : c_)
    if (!s.is_zero()) ++n;
  return n;
}

void Vec::axpy(const Scalar& a, const Vec& x) {
  if (x.dim() != dim()) throw DimMismatch("axpy: " + std::to_string(dim()) + " vs " + std::to_string(x.dim()));
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!x.c_[i].is_zero()) c_[i] += a * x.c_[i];
}

Vec& Vec::operator+=(const Vec& o) {
  if (o.dim() != dim()) throw DimMismatch("vector sum dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (o.dim() != dim()) throw DimMismatch("vector difference dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

bool operator==(const Vec& a, const Vec& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw DimMismatch("dot: dimension mismatch");
  Scalar s = a.field().zero();
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

LinMap::LinMap(Field f, std::size_t cod_dim, std::size_t dom_dim)
    : field_(f), cod_(cod_dim), dom_(dom_dim), m_(cod_dim * dom_dim, f.zero()) {}

LinMap LinMap::identity(Field f, std::size_t n) {
  LinMap m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

LinMap LinMap::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) throw DimMismatch("from_columns: no columns");
  LinMap m(cols[0].field(), cols[0].dim(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].dim() != m.cod_) throw DimMismatch("from_columns: ragged columns");
    for (std::size_t i = 0; i < m.cod_; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec LinMap::column(std::size_t j) const {
  Vec v(field_, cod_);
  for (std::size_t i = 0; i < cod_; ++i) v[i] = at(i, j);
  return v;
}

Vec LinMap::apply(const Vec& v) const {
  if (v.dim() != dom_) throw DimMismatch("apply: map domain " + std::to_string(dom_) + " vs vector " + std::to_string(v.dim()));
  Vec out(field_, cod_);
  v.for_each_nonzero([&](std::size_t j, const Scalar& x) {
    for (std::size_t i = 0; i < cod_; ++i)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * x;
  });
  return out;
}

bool operator==(const LinMap& a, const LinMap& b) {
  return a.field_ == b.field_ && a.cod_ == b.cod_ && a.dom_ == b.dom_ && a.m_ == b.m_;
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (g.dom_dim() != f.cod_dim()) throw DimMismatch("compose: inner dimensions differ");
  LinMap out(f.field(), g.cod_dim(), f.dom_dim());
  for (std::size_t i = 0; i < g.cod_dim(); ++i)
    for (std::size_t k = 0; k < g.dom_dim(); ++k) {
      if (g.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < f.dom_dim(); ++j)
        if (!f.at(k, j).is_zero()) out.at(i, j) += g.at(i, k) * f.at(k, j);
    }
  return out;
}

LinMap power(const LinMap& f, int k) {
  if (!f.square()) throw DimMismatch("power of a non-square map");
  LinMap base = k < 0 ? invert_map(f) : f;
  LinMap out = LinMap::identity(f.field(), f.dom_dim());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = compose(base, out);
  return out;
}

LinMap invert_map(const LinMap& f) {
  if (!f.square()) throw DimMismatch("invert_map: map is not square");
  const std::size_t n = f.dom_dim();
  const Field fld = f.field();
  LinMap a = f;
  LinMap inv = LinMap::identity(fld, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularMap("linear map is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const Scalar s = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= s;
      inv.at(col, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      const Scalar m = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a.at(col, j).is_zero()) a.at(r, j) -= m * a.at(col, j);
        if (!inv.at(col, j).is_zero()) inv.at(r, j) -= m * inv.at(col, j);
      }
    }
  }
  return inv;
}

LinMap tensor_of_maps(const LinMap& f, const LinMap& g) {
  LinMap out(f.field(), f.cod_dim() * g.cod_dim(), f.dom_dim() * g.dom_dim());
  for (std::size_t i = 0; i < f.cod_dim(); ++i)
    for (std::size_t j = 0; j < f.dom_dim(); ++j) {
      if (f.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < g.cod_dim(); ++k)
        for (std::size_t l = 0; l < g.dom_dim(); ++l)
          out.at(pair_index(i, k, g.cod_dim()), pair_index(j, l, g.dom_dim())) = f.at(i, j) * g.at(k, l);
    }
  return out;
}

LinMap dual_map(const LinMap& f) {
  LinMap out(f.field(), f.dom_dim(), f.cod_dim());
  for (std::size_t i = 0; i < f.cod_dim(); ++i)
    for (std::size_t j = 0; j < f.dom_dim(); ++j) out.at(j, i) = f.at(i, j);
  return out;
}

StructureTensor::StructureTensor(Field f, std::size_t d0, std::size_t d1, std::size_t d2)
    : field_(f), d0_(d0), d1_(d1), d2_(d2), c_(d0 * d1 * d2, f.zero()) {}

Vec StructureTensor::fiber(std::size_t i, std::size_t j) const {
  Vec v(field_, d2_);
  for (std::size_t k = 0; k < d2_; ++k) v[k] = at(i, j, k);
  return v;
}

Vec StructureTensor::slice(std::size_t i) const {
  Vec v(field_, d1_ * d2_);
  for (std::size_t j = 0; j < d1_; ++j)
    for (std::size_t k = 0; k < d2_; ++k) v[pair_index(j, k, d2_)] = at(i, j, k);
  return v;
}

bool operator==(const StructureTensor& a, const StructureTensor& b) {
  return a.field_ == b.field_ && a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.c_ == b.c_;
}

Vec apply_structure(const StructureTensor& t, const Vec& x, const Vec& y) {
  if (x.dim() != t.d0() || y.dim() != t.d1())
    throw DimMismatch("apply_structure: inputs " + std::to_string(x.dim()) + "," + std::to_string(y.dim()) +
                      " vs tensor " + std::to_string(t.d0()) + "x" + std::to_string(t.d1()));
  Vec out(t.field(), t.d2());
  x.for_each_nonzero([&](std::size_t i, const Scalar& a) {
    y.for_each_nonzero([&](std::size_t j, const Scalar& b) {
      const Scalar ab = a * b;
      for (std::size_t k = 0; k < t.d2(); ++k)
        if (!t.at(i, j, k).is_zero()) out[k] += ab * t.at(i, j, k);
    });
  });
  return out;
}

Vec coapply_structure(const StructureTensor& t, const Vec& x) {
  if (x.dim() != t.d0()) throw DimMismatch("coapply_structure: input " + std::to_string(x.dim()) + " vs tensor " + std::to_string(t.d0()));
  Vec out(t.field(), t.d1() * t.d2());
  x.for_each_nonzero([&](std::size_t i, const Scalar& a) {
    for (std::size_t j = 0; j < t.d1(); ++j)
      for (std::size_t k = 0; k < t.d2(); ++k)
        if (!t.at(i, j, k).is_zero()) out[pair_index(j, k, t.d2())] += a * t.at(i, j, k);
  });
  return out;
}

std::vector<PairTerm> pair_terms(const Vec& t, std::size_t d_right) {
  std::vector<PairTerm> out;
  t.for_each_nonzero([&](std::size_t idx, const Scalar& c) { out.push_back({idx / d_right, idx % d_right, c}); });
  return out;
}

namespace {

void outer_rec(Vec& acc, const Scalar& coef, const std::vector<const Vec*>& fs, std::size_t depth, std::size_t base) {
  if (depth == fs.size()) {
    acc[base] += coef;
    return;
  }
  const Vec& f = *fs[depth];
  f.for_each_nonzero([&](std::size_t i, const Scalar& c) {
    outer_rec(acc, coef * c, fs, depth + 1, base * f.dim() + i);
  });
}

}  // namespace

void add_outer(Vec& acc, const Scalar& coef, std::initializer_list<const Vec*> factors) {
  std::vector<const Vec*> fs(factors);
  std::size_t total = 1;
  for (const Vec* f : fs) total *= f->dim();
  if (total != acc.dim()) throw DimMismatch("add_outer: accumulator has the wrong dimension");
  if (coef.is_zero()) return;
  outer_rec(acc, coef, fs, 0, 0);
}

Vec outer(std::initializer_list<const Vec*> factors) {
  std::size_t total = 1;
  Field f = Field::rational();
  for (const Vec* v : factors) {
    total *= v->dim();
    f = v->field();
  }
  Vec acc(f, total);
  add_outer(acc, f.one(), factors);
  return acc;
}

std::vector<std::size_t> unflatten(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t s = dims.size(); s-- > 0;) {
    out[s] = index % dims[s];
    index /= dims[s];
  }
  return out;
}

Vec apply_to_slot(const Vec& t, std::span<const std::size_t> dims, std::size_t slot, const LinMap& f) {
  if (slot >= dims.size() || f.dom_dim() != dims[slot]) throw DimMismatch("apply_to_slot: bad slot or map");
  std::size_t total = 1, inner = 1;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    total *= dims[s];
    if (s > slot) inner *= dims[s];
  }
  if (total != t.dim()) throw DimMismatch("apply_to_slot: tensor does not match dims");
  const std::size_t n_in = dims[slot], n_out = f.cod_dim();
  Vec out(t.field(), total / n_in * n_out);
  t.for_each_nonzero([&](std::size_t idx, const Scalar& c) {
    const std::size_t lo = idx % inner;
    const std::size_t mid = (idx / inner) % n_in;
    const std::size_t hi = idx / inner / n_in;
    for (std::size_t r = 0; r < n_out; ++r)
      if (!f.at(r, mid).is_zero()) out[(hi * n_out + r) * inner + lo] += c * f.at(r, mid);
  });
  return out;
}

Vec flip(const Vec& t, std::size_t d0, std::size_t d1) {
  if (t.dim() != d0 * d1) throw DimMismatch("flip: dimension mismatch");
  Vec out(t.field(), t.dim());
  t.for_each_nonzero([&](std::size_t idx, const Scalar& c) { out[pair_index(idx % d1, idx / d1, d0)] = c; });
  return out;
}

std::string to_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

SparseVec SparseVec::from_dense(const Vec& v) {
  SparseVec s(v.field(), v.dim());
  v.for_each_nonzero([&](std::size_t i, const Scalar& c) { s.nz_.emplace(i, c); });
  return s;
}

Scalar SparseVec::at(std::size_t index) const {
  auto it = nz_.find(index);
  return it == nz_.end() ? field_.zero() : it->second;
}

void SparseVec::add(std::size_t index, const Scalar& c) {
  if (index >= dim_) throw DimMismatch("SparseVec index out of range");
  if (c.is_zero()) return;
  auto [it, fresh] = nz_.try_emplace(index, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) nz_.erase(it);
}

namespace {

void sparse_outer_rec(SparseVec& acc, const Scalar& coef, const std::vector<const Vec*>& fs, std::size_t depth,
                      std::size_t base) {
  if (depth == fs.size()) {
    acc.add(base, coef);
    return;
  }
  const Vec& f = *fs[depth];
  f.for_each_nonzero([&](std::size_t i, const Scalar& c) {
    sparse_outer_rec(acc, coef * c, fs, depth + 1, base * f.dim() + i);
  });
}

}  // namespace

void SparseVec::add_outer(const Scalar& coef, std::initializer_list<const Vec*> factors) {
  std::vector<const Vec*> fs(factors);
  std::size_t total = 1;
  for (const Vec* f : fs) total *= f->dim();
  if (total != dim_) throw DimMismatch("SparseVec::add_outer: wrong dimension");
  if (coef.is_zero()) return;
  sparse_outer_rec(*this, coef, fs, 0, 0);
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
  if (o.dim_ != dim_) throw DimMismatch("SparseVec sum dimension mismatch");
  for (const auto& [i, c] : o.nz_) add(i, c);
  return *this;
}

Vec SparseVec::to_dense() const {
  Vec v(field_, dim_);
  for (const auto& [i, c] : nz_) v[i] = c;
  return v;
}

std::string to_string(const SparseVec& v) {
  if (v.dim() <= 16) return to_string(v.to_dense());
  std::string s = "{";
  bool first = true;
  for (const auto& [i, c] : v.entries()) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(i) + ": " + c.to_string();
  }
  return s + "} (dim " + std::to_string(v.dim()) + ")";
}

SolveResult solve_linear_system(Field f, std::size_t unknowns, const std::vector<LinearEquation>& equations) {
  // Dense augmented matrix; zero checks keep elimination cheap on the sparse
  // systems produced by the antipode solver.
  const std::size_t rows = equations.size(), cols = unknowns + 1;
  std::vector<Scalar> m(rows * cols, f.zero());
  auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return m[r * cols + c]; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (const auto& [k, c] : equations[r].terms) {
      if (k >= unknowns) throw DimMismatch("equation refers to an unknown out of range");
      at(r, k) += c;
    }
    at(r, unknowns) = equations[r].rhs;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < unknowns && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && at(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    const Scalar inv = at(rank, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!at(rank, j).is_zero()) at(rank, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || at(r, c).is_zero()) continue;
      const Scalar factor = at(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!at(rank, j).is_zero()) at(r, j) -= factor * at(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (!at(r, unknowns).is_zero()) return {SolveStatus::Inconsistent, {}};
  if (rank < unknowns) return {SolveStatus::Underdetermined, {}};
  std::vector<Scalar> x(unknowns, f.zero());
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = at(r, unknowns);
  return {SolveStatus::Unique, std::move(x)};
}

}  // namespace homhopf

#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "homhopf/scalar.hpp"

namespace homhopf {

struct DimMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMap : std::domain_error {
  using std::domain_error::domain_error;
};

/// Basis-pair flattening used by every tensor in the library: the first
/// factor is major, so e_i (x) e_j sits at i * (dim of second factor) + j.
/// Deeper tensors nest the same way.
constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t second_dim) {
  return i * second_dim + j;
}

/// Dense coefficient vector. Also used for flattened elements of tensor
/// powers (see pair_index) and for covectors such as counits.
class Vec {
public:
  Vec() : field_(Field::rational()) {}
  Vec(Field f, std::size_t dim);
  Vec(Field f, std::vector<Scalar> coeffs);

  static Vec basis(Field f, std::size_t dim, std::size_t i);

  std::size_t dim() const { return c_.size(); }
  Field field() const { return field_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  std::span<const Scalar> coeffs() const { return c_; }
  bool is_zero() const;
  std::size_t nonzeros() const;

  /// this += a * x
  void axpy(const Scalar& a, const Vec& x);
  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }
  friend bool operator==(const Vec& a, const Vec& b);

  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) fn(i, c_[i]);
  }

private:
  Field field_;
  std::vector<Scalar> c_;
};

/// Scalar pairing sum_i a_i b_i (covector applied to vector).
Scalar dot(const Vec& a, const Vec& b);

/// Linear map as a cod_dim x dom_dim matrix; column j is the image of e_j.
class LinMap {
public:
  LinMap() : field_(Field::rational()) {}
  LinMap(Field f, std::size_t cod_dim, std::size_t dom_dim);

  static LinMap identity(Field f, std::size_t n);
  static LinMap from_columns(const std::vector<Vec>& cols);

  std::size_t cod_dim() const { return cod_; }
  std::size_t dom_dim() const { return dom_; }
  bool square() const { return cod_ == dom_; }
  Field field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return m_[r * dom_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return m_[r * dom_ + c]; }

  Vec column(std::size_t j) const;
  Vec apply(const Vec& v) const;
  Vec operator()(const Vec& v) const { return apply(v); }

  friend bool operator==(const LinMap& a, const LinMap& b);

private:
  Field field_;
  std::size_t cod_ = 0, dom_ = 0;
  std::vector<Scalar> m_;
};

/// g o f
LinMap compose(const LinMap& g, const LinMap& f);
/// f^k for a square map; negative k uses invert_map.
LinMap power(const LinMap& f, int k);

/// Exact Gauss-Jordan inverse. Throws SingularMap.
LinMap invert_map(const LinMap& f);
/// Kronecker product under the pair_index convention.
LinMap tensor_of_maps(const LinMap& f, const LinMap& g);
/// Transpose: the matrix of f* in the dual bases.
LinMap dual_map(const LinMap& f);

/// Rank-3 coefficient array, coeffs[i][j][k] stored row-major.
///  multiplication:   e_i e_j = sum_k t[i][j][k] e_k
///  comultiplication: Delta(e_i) = sum_{j,k} t[i][j][k] e_j (x) e_k
///  left action H(x)M->M:  t[h][m][k]; coaction M->M(x)C: t[m][j][k]
class StructureTensor {
public:
  StructureTensor() : field_(Field::rational()) {}
  StructureTensor(Field f, std::size_t d0, std::size_t d1, std::size_t d2);

  std::size_t d0() const { return d0_; }
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  Field field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * d1_ + j) * d2_ + k]; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * d1_ + j) * d2_ + k]; }

  /// The d2-vector t[i][j][*].
  Vec fiber(std::size_t i, std::size_t j) const;
  /// The flattened (d1*d2)-vector t[i][*][*].
  Vec slice(std::size_t i) const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b);

private:
  Field field_;
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Scalar> c_;
};

/// sum_{i,j} x_i y_j t[i][j][*]. Throws DimMismatch.
Vec apply_structure(const StructureTensor& t, const Vec& x, const Vec& y);
/// sum_i x_i t[i][*][*] flattened as a (d1*d2)-vector. Throws DimMismatch.
Vec coapply_structure(const StructureTensor& t, const Vec& x);

/// One nonzero term of a flattened two-slot tensor.
struct PairTerm {
  std::size_t left, right;
  Scalar coef;
};
/// Nonzero terms of a flattened d_left x d_right tensor.
std::vector<PairTerm> pair_terms(const Vec& t, std::size_t d_right);

/// acc += coef * (f_0 (x) f_1 (x) ... ), flattened first-factor-major.
void add_outer(Vec& acc, const Scalar& coef, std::initializer_list<const Vec*> factors);
Vec outer(std::initializer_list<const Vec*> factors);

/// Applies f to one slot of a flattened multi-slot tensor.
Vec apply_to_slot(const Vec& t, std::span<const std::size_t> dims, std::size_t slot, const LinMap& f);
/// Swaps the two slots of a flattened d0 x d1 tensor.
Vec flip(const Vec& t, std::size_t d0, std::size_t d1);
/// Splits a flat index into per-slot indices.
std::vector<std::size_t> unflatten(std::size_t index, std::span<const std::size_t> dims);

std::string to_string(const Vec& v);

/// Sparse coefficient vector for elements of large tensor powers, where a
/// dense Vec would be mostly zeros. Zero entries are never stored.
class SparseVec {
public:
  SparseVec() : field_(Field::rational()) {}
  SparseVec(Field f, std::size_t dim) : field_(f), dim_(dim) {}
  static SparseVec from_dense(const Vec& v);

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const std::map<std::size_t, Scalar>& entries() const { return nz_; }
  bool is_zero() const { return nz_.empty(); }
  Scalar at(std::size_t index) const;

  void add(std::size_t index, const Scalar& c);
  /// this += coef * (f_0 (x) f_1 (x) ...), flattened first-factor-major.
  void add_outer(const Scalar& coef, std::initializer_list<const Vec*> factors);
  SparseVec& operator+=(const SparseVec& o);
  Vec to_dense() const;

  friend bool operator==(const SparseVec& a, const SparseVec& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.nz_ == b.nz_;
  }

private:
  Field field_;
  std::size_t dim_ = 0;
  std::map<std::size_t, Scalar> nz_;
};

/// Dense for short vectors, "{index: coef, ...}" otherwise.
std::string to_string(const SparseVec& v);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveStatus status;
  std::vector<Scalar> solution;  // filled only when status is Unique
};

/// One equation sum_k coef_k x_{index_k} = rhs.
struct LinearEquation {
  std::vector<std::pair<std::size_t, Scalar>> terms;
  Scalar rhs;
};

/// Exact Gaussian elimination over the scalar field.
SolveResult solve_linear_system(Field f, std::size_t unknowns, const std::vector<LinearEquation>& equations);

}  // namespace homhopf

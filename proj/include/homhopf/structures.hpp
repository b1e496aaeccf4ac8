#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homhopf/linear.hpp"
#include "homhopf/report.hpp"

namespace homhopf {

/// Unital monoidal Hom-associative algebra (A, alpha).
struct HomAlgebra {
  std::size_t dim = 0;
  StructureTensor mul;
  Vec unit;
  LinMap alpha;
  Field field() const { return mul.field(); }
};

/// Counital monoidal Hom-coassociative coalgebra (C, gamma).
struct HomCoalgebra {
  std::size_t dim = 0;
  StructureTensor comul;
  Vec counit;
  LinMap gamma;
  Field field() const { return comul.field(); }
};

struct HomBialgebra {
  HomAlgebra algebra;
  HomCoalgebra coalgebra;
  std::size_t dim() const { return algebra.dim; }
  Field field() const { return algebra.field(); }
};

struct HomHopfAlgebra;

/// Where a constructed algebra came from. Drinfeld doubles keep their base
/// algebra so the canonical R-matrix can be rebuilt.
struct Provenance {
  std::string construction;
  std::vector<std::string> factors;
  std::shared_ptr<const HomHopfAlgebra> base;
};

struct HomHopfAlgebra {
  HomBialgebra bialgebra;
  LinMap antipode;
  std::optional<Provenance> provenance;

  const HomAlgebra& algebra() const { return bialgebra.algebra; }
  const HomCoalgebra& coalgebra() const { return bialgebra.coalgebra; }
  std::size_t dim() const { return bialgebra.dim(); }
  Field field() const { return bialgebra.field(); }
  const LinMap& twist() const { return bialgebra.algebra.alpha; }
};

/// Powers f^k for |k| <= kMaxPower, computed once.
class TwistPowers {
public:
  static constexpr int kMaxPower = 4;
  /// Throws SingularMap if f is not invertible.
  explicit TwistPowers(const LinMap& f);

  const LinMap& map(int k) const;
  const Vec& on_basis(int k, std::size_t i) const;
  Vec apply(int k, const Vec& v) const;

private:
  std::vector<LinMap> maps_;
  std::vector<std::vector<Vec>> cols_;
};

struct Term {
  std::size_t index;
  Scalar coef;
};

/// Evaluation helpers over a HomAlgebra with a sparse product table.
class AlgebraOps {
public:
  explicit AlgebraOps(const HomAlgebra& a);

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const Vec& e(std::size_t i) const { return basis_[i]; }
  const Vec& one() const { return unit_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec mul_basis(std::size_t i, std::size_t j) const;
  Vec twist(int k, const Vec& v) const { return powers_.apply(k, v); }
  const Vec& twist_basis(int k, std::size_t i) const { return powers_.on_basis(k, i); }
  const TwistPowers& powers() const { return powers_; }

private:
  std::size_t dim_;
  Field field_;
  std::vector<Vec> basis_;
  Vec unit_;
  std::vector<std::vector<Term>> table_;
  TwistPowers powers_;
};

/// Evaluation helpers over a HomCoalgebra with sparse coproducts.
class CoalgebraOps {
public:
  explicit CoalgebraOps(const HomCoalgebra& c);

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const Vec& e(std::size_t i) const { return basis_[i]; }
  /// Sweedler terms of Delta(e_i).
  const std::vector<PairTerm>& coproduct(std::size_t i) const { return terms_[i]; }
  /// Sweedler terms of Delta(x), combined over x's coordinates.
  std::vector<PairTerm> coproduct(const Vec& x) const;
  Vec comul(const Vec& x) const;
  const Scalar& counit_basis(std::size_t i) const { return counit_[i]; }
  Scalar counit(const Vec& x) const { return dot(counit_, x); }
  const Vec& counit_vec() const { return counit_; }

  Vec twist(int k, const Vec& v) const { return powers_.apply(k, v); }
  const Vec& twist_basis(int k, std::size_t i) const { return powers_.on_basis(k, i); }

private:
  std::size_t dim_;
  Field field_;
  std::vector<Vec> basis_;
  std::vector<std::vector<PairTerm>> terms_;
  Vec counit_;
  TwistPowers powers_;
};

class HopfOps {
public:
  explicit HopfOps(const HomHopfAlgebra& h);

  const AlgebraOps& alg() const { return alg_; }
  const CoalgebraOps& co() const { return co_; }
  std::size_t dim() const { return alg_.dim(); }
  Field field() const { return alg_.field(); }

  const Vec& antipode_basis(std::size_t i) const { return s_cols_[i]; }
  Vec antipode(const Vec& v) const { return s_.apply(v); }
  bool antipode_invertible() const { return s_inv_.has_value(); }
  /// Throws SingularMap when S is not invertible.
  Vec antipode_inverse(const Vec& v) const;

private:
  AlgebraOps alg_;
  CoalgebraOps co_;
  LinMap s_;
  std::vector<Vec> s_cols_;
  std::optional<LinMap> s_inv_;
};

/// Product in A_0 (x) A_1 (x) ... with slotwise multiplication.
SparseVec slotwise_product(std::span<const AlgebraOps* const> slots, const SparseVec& x, const SparseVec& y);

/// Throws DimMismatch / FieldMismatch on inconsistent shapes.
void validate_shapes(const HomAlgebra& a);
void validate_shapes(const HomCoalgebra& c);
void validate_shapes(const HomHopfAlgebra& h);

AxiomReport check_hom_algebra(const HomAlgebra& a, const CheckOptions& opts = {});
/// Also verifies the five- and four-fold Sweedler rearrangements that
/// follow from Hom-coassociativity.
AxiomReport check_hom_coalgebra(const HomCoalgebra& c, const CheckOptions& opts = {});
/// Chains the algebra and coalgebra reports, then the compatibility laws.
AxiomReport check_hom_bialgebra(const HomBialgebra& b, const CheckOptions& opts = {});
/// Chains the bialgebra report, then the antipode laws and the derived
/// anti-(co)multiplicativity of S.
AxiomReport check_hopf(const HomHopfAlgebra& h, const CheckOptions& opts = {});

/// Solves S(h1)h2 = eps(h)1 = h1S(h2), S alpha = alpha S for S.
/// Throws NoAntipode or NonUniqueAntipode.
LinMap solve_antipode(const HomBialgebra& b);

/// H* with the transposed structure; verified, throws DualAxiomFailure.
HomHopfAlgebra dual_hopf(const HomHopfAlgebra& h, const CheckOptions& opts = {});
/// H^op with flipped product and S^{-1}; verified, throws OpAxiomFailure
/// or SingularMap.
HomHopfAlgebra opposite_hopf(const HomHopfAlgebra& h, const CheckOptions& opts = {});

}  // namespace homhopf

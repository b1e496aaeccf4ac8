#pragma once

#include "homhopf/structures.hpp"

namespace homhopf {

enum class ActionSide { Left, Right };

/// A Hom-module structure given by structure constants.
///  Left  (a . m):  act[a][m][k], dims dim A x dim M x dim M
///  Right (m <| a): act[m][a][k], dims dim M x dim A x dim M
struct ModuleAction {
  StructureTensor act;
  ActionSide side = ActionSide::Left;
};

/// Right Hom-comodule structure rho: M -> M (x) C, coact[m][m'][c].
struct Coaction {
  StructureTensor coact;
};

/// Evaluates an action with the acting element first for both sides.
class ActionOps {
public:
  ActionOps(const ModuleAction& a, std::size_t acting_dim, std::size_t carrier_dim);
  std::size_t acting_dim() const { return acting_; }
  std::size_t carrier_dim() const { return carrier_; }
  /// a . m (left) or m <| a (right).
  Vec apply(const Vec& acting, const Vec& carrier) const;
  Vec apply_basis(std::size_t a, std::size_t m) const;

private:
  ModuleAction action_;
  std::size_t acting_, carrier_;
};

/// rho on basis elements and vectors, as sparse (m', c) terms.
class CoactionOps {
public:
  CoactionOps(const Coaction& c, std::size_t carrier_dim, std::size_t coacting_dim);
  const std::vector<PairTerm>& terms(std::size_t m) const { return terms_[m]; }
  std::vector<PairTerm> terms(const Vec& v) const;
  Vec apply(const Vec& v) const;

private:
  std::size_t carrier_, coacting_;
  std::vector<std::vector<PairTerm>> terms_;
};

/// h . m = eps(h) mu(m) (left) or m <| h = eps(h) mu(m) (right).
ModuleAction trivial_action(const HomCoalgebra& acting, const LinMap& carrier_twist, ActionSide side = ActionSide::Left);
/// rho(m) = mu^{-1}(m) (x) 1.
Coaction trivial_coaction(const LinMap& carrier_twist, const HomAlgebra& coacting);

/// The three Hom-module laws.
AxiomReport check_module(const HomAlgebra& acting, const LinMap& carrier_twist, const ModuleAction& act,
                         const CheckOptions& opts = {});
/// Module laws plus h.(ab) = (h1.a)(h2.b) and h.1 = eps(h)1. Left actions only.
AxiomReport check_module_algebra(const HomBialgebra& acting, const HomAlgebra& carrier, const ModuleAction& act,
                                 const CheckOptions& opts = {});
/// Module laws plus compatibility with the carrier's coproduct and counit.
AxiomReport check_module_coalgebra(const HomBialgebra& acting, const HomCoalgebra& carrier, const ModuleAction& act,
                                   const CheckOptions& opts = {});
/// The three Hom-comodule laws.
AxiomReport check_comodule(const LinMap& carrier_twist, const HomCoalgebra& coacting, const Coaction& co,
                           const CheckOptions& opts = {});
/// Comodule laws plus the two comodule-coalgebra conditions.
AxiomReport check_comodule_coalgebra(const HomCoalgebra& carrier, const HomBialgebra& coacting, const Coaction& co,
                                     const CheckOptions& opts = {});

/// B # H with (a#h)(b#k) = a(h1 . beta^-1(b)) # alpha(h2)k, B-major.
/// Throws IncompatibleAction, or ConstructionFailure if the result fails
/// the algebra axioms.
HomAlgebra smash_product(const HomAlgebra& b, const HomBialgebra& h, const ModuleAction& act,
                         const CheckOptions& opts = {});
/// Coalgebra on B (x) H with
/// Delta(a#h) = a1 # alpha(h1(0)) (x) beta^-1(a2)h1(1) # h2 and counit
/// eps_B (x) eps_H. Throws IncompatibleCoaction or ConstructionFailure.
HomCoalgebra smash_coproduct(const HomBialgebra& b, const HomCoalgebra& h, const Coaction& co,
                             const CheckOptions& opts = {});

/// The unverified product and coproduct tensors, exposed for diagnostics.
StructureTensor smash_product_tensor(const HomAlgebra& b, const HomBialgebra& h, const ModuleAction& act);
StructureTensor smash_coproduct_tensor(const HomBialgebra& b, const HomCoalgebra& h, const Coaction& co);

/// Plain tensor-product structures (twist beta (x) alpha).
HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b);
HomCoalgebra tensor_coalgebra(const HomCoalgebra& a, const HomCoalgebra& b);

}  // namespace homhopf

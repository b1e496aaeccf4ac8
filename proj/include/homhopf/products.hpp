#pragma once

#include "homhopf/actions.hpp"

namespace homhopf {

/// H acts on B from the left (act[h][b][b']) and B coacts on H from the
/// right (co[h][h'][b]).
struct BicrossData {
  HomHopfAlgebra B;
  HomHopfAlgebra H;
  ModuleAction act;
  Coaction co;
};

/// B is the left factor of B |><| H. Both actions are indexed with the H
/// element first:
///   left_act  (h |> a): [h][a][a'] in B
///   right_act (h <| a): [h][a][h'] in H
struct MatchedPair {
  HomHopfAlgebra B;
  HomHopfAlgebra H;
  StructureTensor left_act;
  StructureTensor right_act;
};

/// Conditions (a)-(e) for B # H to be a bialgebra, one identity each.
AxiomReport check_bicross_conditions(const BicrossData& d, const CheckOptions& opts = {});
/// Module-algebra, comodule-coalgebra and the five conditions, chained.
AxiomReport check_bicross_data(const BicrossData& d, const CheckOptions& opts = {});

/// S(a#h) = (1 # S_H(h(0))) (S_B(beta^-2(a) beta^-1(h(1))) # 1), evaluated in
/// the (unverified) smash algebra.
LinMap bicross_antipode(const BicrossData& d);

/// Smash product, smash coproduct and the antipode above. Throws
/// BicrossConditionFailure, or ConstructionFailure if the assembled
/// structure fails check_hopf.
HomHopfAlgebra bicrossproduct(const BicrossData& d, const CheckOptions& opts = {});

struct MirrorStructure {
  HomHopfAlgebra op;  // H^op, the acting algebra
  ModuleAction action;  // h . a = (S(h1) alpha^-1(a)) alpha(h2)
  Coaction coaction;  // rho(h) = alpha(h12) (x) S(h11) alpha^-1(h2)
};

/// Canonical action of H^op on H and coaction of H on H^op, each verified.
/// Throws InvalidInput, IncompatibleAction or IncompatibleCoaction.
MirrorStructure mirror_structure(const HomHopfAlgebra& h, const CheckOptions& opts = {});
/// BicrossData with B = H and the acting algebra H^op.
BicrossData mirror_data(const HomHopfAlgebra& h, const CheckOptions& opts = {});

/// Closed product and coproduct tensors of H * H^op.
StructureTensor mirror_closed_product(const HomHopfAlgebra& h);
StructureTensor mirror_closed_coproduct(const HomHopfAlgebra& h);

/// Bicrossproduct H * H^op, cross-checked against the closed formulas.
/// Throws MirrorMismatch on disagreement.
HomHopfAlgebra mirror_bicrossproduct(const HomHopfAlgebra& h, const CheckOptions& opts = {});

/// Module-coalgebra checks of both actions (prefixed "left_action." and
/// "right_action."), then the matched-pair conditions.
AxiomReport check_matched_pair(const MatchedPair& p, const CheckOptions& opts = {});

StructureTensor double_cross_product_tensor(const MatchedPair& p);
LinMap double_cross_antipode(const MatchedPair& p);
/// B |><| H. Throws MatchedPairFailure or ConstructionFailure.
HomHopfAlgebra double_cross_product(const MatchedPair& p, const CheckOptions& opts = {});

/// The matched pair (H, B*) induced by bicross data:
///   f |> h = <f, beta(h(1))> alpha^2(h(0)),
///   <f <| h, a> = <f, alpha^-1(h) . beta^-2(a)>.
/// Throws BicrossConditionFailure or MatchedPairFailure.
MatchedPair dual_pair_actions(const BicrossData& d, const CheckOptions& opts = {});
/// The actions of dual_pair_actions without any verification.
MatchedPair dual_pair_actions_unchecked(const BicrossData& d);

/// Closed product of D(H) on H (x) H*, H-major:
/// (h|f)(k|g) = alpha^2(k21)h | [a -> <f, S(k1)(alpha^-2(a)k22)>] g.
StructureTensor drinfeld_closed_product(const HomHopfAlgebra& h);

/// D(H) = H^op |><| H*, built through dual_pair_actions on the mirror data
/// and cross-checked against the closed product. The result carries a
/// "drinfeld_double" provenance naming H as its base.
/// Throws InvalidInput, SingularMap or DoubleMismatch.
HomHopfAlgebra drinfeld_double(const HomHopfAlgebra& h, const CheckOptions& opts = {});

}  // namespace homhopf

#pragma once

#include <memory>

#include "homhopf/structures.hpp"

namespace homhopf {

/// R in H (x) H; coeffs has length n^2 and coeffs[pair_index(i, j, n)] is
/// the coefficient of e_i (x) e_j.
struct RVector {
  std::shared_ptr<const HomHopfAlgebra> host;
  Vec coeffs;
};

/// Throws DimMismatch when coeffs does not fit the host.
RVector make_rvector(std::shared_ptr<const HomHopfAlgebra> host, Vec coeffs);

/// Counit normalization on both legs, Delta^op(x)R = R Delta(x), and the
/// two coproduct laws written with a second copy r of R:
///   (Delta (x) id)R = alpha(R1) (x) alpha(r1) (x) alpha(R2 r2)
///   (id (x) Delta)R = alpha(R1 r1) (x) alpha(r2) (x) alpha(R2)
AxiomReport check_quasitriangular(const RVector& r, const CheckOptions& opts = {});

/// R12(R13 R23) = (R13 R23)R12 and (R12 R13)R23 = R23(R13 R12), with
/// products taken slotwise in H (x) H (x) H and brackets as written.
AxiomReport check_qhybe(const RVector& r, const CheckOptions& opts = {});

/// R12(R13 R23) = (R23 R13)R12, the form the intertwining law produces
/// from the first coproduct law. Diagnostic companion to check_qhybe.
AxiomReport check_qhybe_variant(const RVector& r, const CheckOptions& opts = {});

/// The leg embeddings R12, R13, R23 in H (x) H (x) H.
SparseVec r_leg(const RVector& r, int first, int second);

/// R = sum_i (1 |x h*_i) (x) (S^-1(h_i) |x eps) on a double built by
/// drinfeld_double. Throws MissingDoubleTag without that provenance.
RVector canonical_double_r(std::shared_ptr<const HomHopfAlgebra> d);

}  // namespace homhopf

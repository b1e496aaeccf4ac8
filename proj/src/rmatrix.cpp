#include "homhopf/rmatrix.hpp"

#include <array>

namespace homhopf {

RVector make_rvector(std::shared_ptr<const HomHopfAlgebra> host, Vec coeffs) {
  const std::size_t n = host->dim();
  if (coeffs.dim() != n * n)
    throw DimMismatch("R has " + std::to_string(coeffs.dim()) + " coefficients, host needs " + std::to_string(n * n));
  if (coeffs.field() != host->field()) throw FieldMismatch("R and its host use different fields");
  return RVector{std::move(host), std::move(coeffs)};
}

AxiomReport check_quasitriangular(const RVector& r, const CheckOptions& opts) {
  const HomHopfAlgebra& h = *r.host;
  AlgebraOps A(h.algebra());
  CoalgebraOps C(h.coalgebra());
  const std::size_t n = A.dim();
  const Field f = A.field();
  const std::array<const AlgebraOps*, 2> two{&A, &A};
  const std::vector<PairTerm> terms = pair_terms(r.coeffs, n);
  const SparseVec R = SparseVec::from_dense(r.coeffs);
  ReportBuilder rb("quasitriangular", opts);
  for (const char* id : {"qt_counit_left", "qt_counit_right", "qt_intertwine", "qt_coproduct_left", "qt_coproduct_right"})
    rb.declare(id);

  Vec left(f, n), right(f, n);
  for (const PairTerm& t : terms) {
    left.axpy(t.coef * C.counit_basis(t.left), A.e(t.right));
    right.axpy(t.coef * C.counit_basis(t.right), A.e(t.left));
  }
  rb.compare("qt_counit_left", {}, left, A.one());
  rb.compare("qt_counit_right", {}, right, A.one());

  for (std::size_t x = 0; x < n; ++x) {
    const Vec dx = C.comul(A.e(x));
    const SparseVec lhs = slotwise_product(two, SparseVec::from_dense(flip(dx, n, n)), R);
    const SparseVec rhs = slotwise_product(two, R, SparseVec::from_dense(dx));
    rb.compare("qt_intertwine", {x}, lhs, rhs);
  }

  SparseVec dl(f, n * n * n), dr(f, n * n * n), cl(f, n * n * n), cr(f, n * n * n);
  for (const PairTerm& t : terms) {
    for (const PairTerm& d : C.coproduct(t.left)) dl.add_outer(t.coef * d.coef, {&A.e(d.left), &A.e(d.right), &A.e(t.right)});
    for (const PairTerm& d : C.coproduct(t.right)) dr.add_outer(t.coef * d.coef, {&A.e(t.left), &A.e(d.left), &A.e(d.right)});
    for (const PairTerm& s : terms) {
      const Scalar c = t.coef * s.coef;
      const Vec rr = A.twist(1, A.mul_basis(t.right, s.right));
      cl.add_outer(c, {&A.twist_basis(1, t.left), &A.twist_basis(1, s.left), &rr});
      const Vec ll = A.twist(1, A.mul_basis(t.left, s.left));
      cr.add_outer(c, {&ll, &A.twist_basis(1, s.right), &A.twist_basis(1, t.right)});
    }
  }
  rb.compare("qt_coproduct_left", {}, dl, cl);
  rb.compare("qt_coproduct_right", {}, dr, cr);
  return std::move(rb).finish();
}

SparseVec r_leg(const RVector& r, int first, int second) {
  const std::size_t n = r.host->dim();
  const Vec& one = r.host->algebra().unit;
  SparseVec out(r.coeffs.field(), n * n * n);
  const Vec* slots[3];
  for (const PairTerm& t : pair_terms(r.coeffs, n)) {
    const Vec a = Vec::basis(one.field(), n, t.left), b = Vec::basis(one.field(), n, t.right);
    for (int s = 0; s < 3; ++s) slots[s] = &one;
    slots[first - 1] = &a;
    slots[second - 1] = &b;
    out.add_outer(t.coef, {slots[0], slots[1], slots[2]});
  }
  return out;
}

AxiomReport check_qhybe(const RVector& r, const CheckOptions& opts) {
  AlgebraOps A(r.host->algebra());
  const std::array<const AlgebraOps*, 3> three{&A, &A, &A};
  auto mul = [&](const SparseVec& x, const SparseVec& y) { return slotwise_product(three, x, y); };
  const SparseVec r12 = r_leg(r, 1, 2), r13 = r_leg(r, 1, 3), r23 = r_leg(r, 2, 3);
  ReportBuilder rb("qhybe", opts);
  const SparseVec r13r23 = mul(r13, r23);
  rb.compare("qhybe_r12_r13r23", {}, mul(r12, r13r23), mul(r13r23, r12));
  rb.compare("qhybe_r12r13_r23", {}, mul(mul(r12, r13), r23), mul(r23, mul(r13, r12)));
  return std::move(rb).finish();
}

AxiomReport check_qhybe_variant(const RVector& r, const CheckOptions& opts) {
  AlgebraOps A(r.host->algebra());
  const std::array<const AlgebraOps*, 3> three{&A, &A, &A};
  auto mul = [&](const SparseVec& x, const SparseVec& y) { return slotwise_product(three, x, y); };
  const SparseVec r12 = r_leg(r, 1, 2), r13 = r_leg(r, 1, 3), r23 = r_leg(r, 2, 3);
  ReportBuilder rb("qhybe_variant", opts);
  rb.compare("qhybe_r12_r13r23_swapped", {}, mul(r12, mul(r13, r23)), mul(mul(r23, r13), r12));
  return std::move(rb).finish();
}

RVector canonical_double_r(std::shared_ptr<const HomHopfAlgebra> d) {
  if (!d->provenance || d->provenance->construction != "drinfeld_double" || !d->provenance->base)
    throw MissingDoubleTag("algebra does not carry Drinfeld double provenance");
  const HomHopfAlgebra& h = *d->provenance->base;
  const std::size_t n = h.dim(), N = n * n;
  if (d->dim() != N) throw DimMismatch("double has dimension " + std::to_string(d->dim()) + ", expected " + std::to_string(N));
  HopfOps H(h);
  const Field f = h.field();
  const Vec& eps = h.coalgebra().counit;  // unit of H*
  Vec coeffs(f, N * N);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec hi = Vec::basis(f, n, i);
    const Vec left = outer({&h.algebra().unit, &hi});
    const Vec sinv = H.antipode_inverse(hi);
    const Vec right = outer({&sinv, &eps});
    add_outer(coeffs, f.one(), {&left, &right});
  }
  return make_rvector(std::move(d), std::move(coeffs));
}

}  // namespace homhopf

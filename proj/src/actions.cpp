#include "homhopf/actions.hpp"

namespace homhopf {

ActionOps::ActionOps(const ModuleAction& a, std::size_t acting_dim, std::size_t carrier_dim)
    : action_(a), acting_(acting_dim), carrier_(carrier_dim) {
  const StructureTensor& t = a.act;
  const bool left = a.side == ActionSide::Left;
  const std::size_t d0 = left ? acting_dim : carrier_dim, d1 = left ? carrier_dim : acting_dim;
  if (t.d0() != d0 || t.d1() != d1 || t.d2() != carrier_dim)
    throw DimMismatch("action tensor is " + std::to_string(t.d0()) + "x" + std::to_string(t.d1()) + "x" +
                      std::to_string(t.d2()) + ", expected " + std::to_string(d0) + "x" + std::to_string(d1) + "x" +
                      std::to_string(carrier_dim));
}

Vec ActionOps::apply(const Vec& acting, const Vec& carrier) const {
  if (action_.side == ActionSide::Left) return apply_structure(action_.act, acting, carrier);
  return apply_structure(action_.act, carrier, acting);
}

Vec ActionOps::apply_basis(std::size_t a, std::size_t m) const {
  return action_.side == ActionSide::Left ? action_.act.fiber(a, m) : action_.act.fiber(m, a);
}

CoactionOps::CoactionOps(const Coaction& c, std::size_t carrier_dim, std::size_t coacting_dim)
    : carrier_(carrier_dim), coacting_(coacting_dim) {
  const StructureTensor& t = c.coact;
  if (t.d0() != carrier_dim || t.d1() != carrier_dim || t.d2() != coacting_dim)
    throw DimMismatch("coaction tensor is " + std::to_string(t.d0()) + "x" + std::to_string(t.d1()) + "x" +
                      std::to_string(t.d2()) + ", expected " + std::to_string(carrier_dim) + "x" +
                      std::to_string(carrier_dim) + "x" + std::to_string(coacting_dim));
  terms_.resize(carrier_dim);
  for (std::size_t m = 0; m < carrier_dim; ++m)
    for (std::size_t j = 0; j < carrier_dim; ++j)
      for (std::size_t k = 0; k < coacting_dim; ++k)
        if (!t.at(m, j, k).is_zero()) terms_[m].push_back({j, k, t.at(m, j, k)});
}

Vec CoactionOps::apply(const Vec& v) const {
  Vec out(v.field(), carrier_ * coacting_);
  v.for_each_nonzero([&](std::size_t m, const Scalar& a) {
    for (const PairTerm& t : terms_[m]) out[pair_index(t.left, t.right, coacting_)] += a * t.coef;
  });
  return out;
}

std::vector<PairTerm> CoactionOps::terms(const Vec& v) const { return pair_terms(apply(v), coacting_); }

ModuleAction trivial_action(const HomCoalgebra& acting, const LinMap& carrier_twist, ActionSide side) {
  const std::size_t na = acting.dim, nm = carrier_twist.dom_dim();
  ModuleAction a;
  a.side = side;
  a.act = side == ActionSide::Left ? StructureTensor(acting.field(), na, nm, nm)
                                   : StructureTensor(acting.field(), nm, na, nm);
  for (std::size_t h = 0; h < na; ++h)
    for (std::size_t m = 0; m < nm; ++m)
      for (std::size_t k = 0; k < nm; ++k) {
        const Scalar c = acting.counit[h] * carrier_twist.at(k, m);
        if (side == ActionSide::Left)
          a.act.at(h, m, k) = c;
        else
          a.act.at(m, h, k) = c;
      }
  return a;
}

Coaction trivial_coaction(const LinMap& carrier_twist, const HomAlgebra& coacting) {
  const std::size_t nm = carrier_twist.dom_dim(), nc = coacting.dim;
  const LinMap inv = invert_map(carrier_twist);
  Coaction c{StructureTensor(coacting.field(), nm, nm, nc)};
  for (std::size_t m = 0; m < nm; ++m)
    for (std::size_t j = 0; j < nm; ++j)
      for (std::size_t k = 0; k < nc; ++k) c.coact.at(m, j, k) = inv.at(j, m) * coacting.unit[k];
  return c;
}

namespace {

std::vector<Vec> basis_vectors(Field f, std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Vec::basis(f, n, i));
  return out;
}

void module_laws_into(ReportBuilder& rb, const AlgebraOps& A, const TwistPowers& mu, const ActionOps& act,
                      ActionSide side) {
  const std::size_t na = A.dim(), nm = act.carrier_dim();
  const Field f = A.field();
  const bool left = side == ActionSide::Left;
  rb.declare("module_associativity");
  rb.declare("module_unit");
  rb.declare("module_twist");
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      const Vec ab = A.mul_basis(a, b);
      for (std::size_t m = 0; m < nm; ++m) {
        if (left)
          // alpha(a)(b.m) = (ab).mu(m)
          rb.compare("module_associativity", {a, b, m}, act.apply(A.twist_basis(1, a), act.apply_basis(b, m)),
                     act.apply(ab, mu.on_basis(1, m)));
        else
          // (m<|a)<|alpha(b) = mu(m)<|(ab)
          rb.compare("module_associativity", {m, a, b}, act.apply(A.twist_basis(1, b), act.apply_basis(a, m)),
                     act.apply(ab, mu.on_basis(1, m)));
      }
    }
  for (std::size_t m = 0; m < nm; ++m)
    rb.compare("module_unit", {m}, act.apply(A.one(), Vec::basis(f, nm, m)), mu.on_basis(1, m));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t m = 0; m < nm; ++m) {
      const Vec lhs = mu.apply(1, act.apply_basis(a, m));
      const Vec rhs = act.apply(A.twist_basis(1, a), mu.on_basis(1, m));
      if (left)
        rb.compare("module_twist", {a, m}, lhs, rhs);
      else
        rb.compare("module_twist", {m, a}, lhs, rhs);
    }
}

void comodule_laws_into(ReportBuilder& rb, const TwistPowers& mu, const CoalgebraOps& C, const CoactionOps& rho,
                        std::size_t nm) {
  const std::size_t nc = C.dim();
  const Field f = C.field();
  const std::vector<Vec> em = basis_vectors(f, nm);
  rb.declare("comodule_coassociativity");
  rb.declare("comodule_counit");
  rb.declare("comodule_twist");
  for (std::size_t m = 0; m < nm; ++m) {
    SparseVec lhs(f, nm * nc * nc), rhs(f, nm * nc * nc);
    Vec counit_side(f, nm);
    SparseVec twisted(f, nm * nc);
    for (const PairTerm& t : rho.terms(m)) {
      // mu^-1(m0) (x) Delta(m1) = rho(m0) (x) gamma^-1(m1)
      for (const PairTerm& d : C.coproduct(t.right))
        lhs.add_outer(t.coef * d.coef, {&mu.on_basis(-1, t.left), &C.e(d.left), &C.e(d.right)});
      for (const PairTerm& r : rho.terms(t.left))
        rhs.add_outer(t.coef * r.coef, {&em[r.left], &C.e(r.right), &C.twist_basis(-1, t.right)});
      counit_side.axpy(t.coef * C.counit_basis(t.right), em[t.left]);
      twisted.add_outer(t.coef, {&mu.on_basis(1, t.left), &C.twist_basis(1, t.right)});
    }
    rb.compare("comodule_coassociativity", {m}, lhs, rhs);
    rb.compare("comodule_counit", {m}, counit_side, mu.on_basis(-1, m));
    rb.compare("comodule_twist", {m}, SparseVec::from_dense(rho.apply(mu.on_basis(1, m))), twisted);
  }
}

}  // namespace

AxiomReport check_module(const HomAlgebra& acting, const LinMap& carrier_twist, const ModuleAction& act,
                         const CheckOptions& opts) {
  AlgebraOps A(acting);
  TwistPowers mu(carrier_twist);
  ActionOps op(act, A.dim(), carrier_twist.dom_dim());
  ReportBuilder rb("module", opts);
  module_laws_into(rb, A, mu, op, act.side);
  return std::move(rb).finish();
}

AxiomReport check_module_algebra(const HomBialgebra& acting, const HomAlgebra& carrier, const ModuleAction& act,
                                 const CheckOptions& opts) {
  if (act.side != ActionSide::Left) throw std::invalid_argument("module algebra check expects a left action");
  AlgebraOps H(acting.algebra);
  CoalgebraOps HC(acting.coalgebra);
  AlgebraOps B(carrier);
  ActionOps op(act, H.dim(), B.dim());
  ReportBuilder rb("module_algebra", opts);
  module_laws_into(rb, H, B.powers(), op, act.side);
  rb.declare("module_algebra_product");
  rb.declare("module_algebra_unit");
  const std::size_t nh = H.dim(), nb = B.dim();
  const Field f = B.field();
  for (std::size_t h = 0; h < nh; ++h) {
    for (std::size_t a = 0; a < nb; ++a)
      for (std::size_t b = 0; b < nb; ++b) {
        Vec rhs(f, nb);
        for (const PairTerm& t : HC.coproduct(h))
          rhs.axpy(t.coef, B.mul(op.apply_basis(t.left, a), op.apply_basis(t.right, b)));
        rb.compare("module_algebra_product", {h, a, b}, op.apply(H.e(h), B.mul_basis(a, b)), rhs);
      }
    rb.compare("module_algebra_unit", {h}, op.apply(H.e(h), B.one()), HC.counit_basis(h) * B.one());
  }
  return std::move(rb).finish();
}

AxiomReport check_module_coalgebra(const HomBialgebra& acting, const HomCoalgebra& carrier, const ModuleAction& act,
                                   const CheckOptions& opts) {
  AlgebraOps H(acting.algebra);
  CoalgebraOps HC(acting.coalgebra);
  CoalgebraOps B(carrier);
  TwistPowers mu(carrier.gamma);
  ActionOps op(act, H.dim(), B.dim());
  ReportBuilder rb("module_coalgebra", opts);
  module_laws_into(rb, H, mu, op, act.side);
  rb.declare("module_coalgebra_comul");
  rb.declare("module_coalgebra_counit");
  const std::size_t nh = H.dim(), nb = B.dim();
  const Field f = B.field();
  const bool left = act.side == ActionSide::Left;
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t a = 0; a < nb; ++a) {
      const Vec ha = op.apply_basis(h, a);
      SparseVec rhs(f, nb * nb);
      for (const PairTerm& s : HC.coproduct(h))
        for (const PairTerm& t : B.coproduct(a)) {
          const Vec l = op.apply_basis(s.left, t.left), r = op.apply_basis(s.right, t.right);
          rhs.add_outer(s.coef * t.coef, {&l, &r});
        }
      const SparseVec lhs = SparseVec::from_dense(B.comul(ha));
      const Scalar eps_l = B.counit(ha), eps_r = HC.counit_basis(h) * B.counit_basis(a);
      if (left) {
        rb.compare("module_coalgebra_comul", {h, a}, lhs, rhs);
        rb.compare("module_coalgebra_counit", {h, a}, eps_l, eps_r);
      } else {
        rb.compare("module_coalgebra_comul", {a, h}, lhs, rhs);
        rb.compare("module_coalgebra_counit", {a, h}, eps_l, eps_r);
      }
    }
  return std::move(rb).finish();
}

AxiomReport check_comodule(const LinMap& carrier_twist, const HomCoalgebra& coacting, const Coaction& co,
                           const CheckOptions& opts) {
  TwistPowers mu(carrier_twist);
  CoalgebraOps C(coacting);
  const std::size_t nm = carrier_twist.dom_dim();
  CoactionOps rho(co, nm, C.dim());
  ReportBuilder rb("comodule", opts);
  comodule_laws_into(rb, mu, C, rho, nm);
  return std::move(rb).finish();
}

AxiomReport check_comodule_coalgebra(const HomCoalgebra& carrier, const HomBialgebra& coacting, const Coaction& co,
                                     const CheckOptions& opts) {
  CoalgebraOps H(carrier);
  TwistPowers mu(carrier.gamma);
  AlgebraOps B(coacting.algebra);
  CoalgebraOps BC(coacting.coalgebra);
  const std::size_t nh = H.dim(), nb = B.dim();
  CoactionOps rho(co, nh, nb);
  ReportBuilder rb("comodule_coalgebra", opts);
  comodule_laws_into(rb, mu, BC, rho, nh);
  rb.declare("comodule_coalgebra_comul");
  rb.declare("comodule_coalgebra_counit");
  const Field f = H.field();
  for (std::size_t c = 0; c < nh; ++c) {
    // c(0)1 (x) c(0)2 (x) c(1) = c1(0) (x) c2(0) (x) c1(1)c2(1)
    SparseVec lhs(f, nh * nh * nb), rhs(f, nh * nh * nb);
    Vec eps_side(f, nb);
    for (const PairTerm& t : rho.terms(c)) {
      for (const PairTerm& d : H.coproduct(t.left))
        lhs.add_outer(t.coef * d.coef, {&H.e(d.left), &H.e(d.right), &B.e(t.right)});
      eps_side.axpy(t.coef * H.counit_basis(t.left), B.e(t.right));
    }
    for (const PairTerm& d : H.coproduct(c))
      for (const PairTerm& r1 : rho.terms(d.left))
        for (const PairTerm& r2 : rho.terms(d.right)) {
          const Vec prod = B.mul_basis(r1.right, r2.right);
          rhs.add_outer(d.coef * r1.coef * r2.coef, {&H.e(r1.left), &H.e(r2.left), &prod});
        }
    rb.compare("comodule_coalgebra_comul", {c}, lhs, rhs);
    rb.compare("comodule_coalgebra_counit", {c}, eps_side, H.counit_basis(c) * B.one());
  }
  return std::move(rb).finish();
}

StructureTensor smash_product_tensor(const HomAlgebra& b, const HomBialgebra& h, const ModuleAction& act) {
  AlgebraOps B(b);
  AlgebraOps H(h.algebra);
  CoalgebraOps HC(h.coalgebra);
  ActionOps op(act, H.dim(), B.dim());
  const std::size_t nb = B.dim(), nh = H.dim(), n = nb * nh;
  StructureTensor t(B.field(), n, n, n);
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t x = 0; x < nh; ++x)
      for (std::size_t c = 0; c < nb; ++c)
        for (std::size_t k = 0; k < nh; ++k) {
          // (a#x)(c#k) = a(x1 . beta^-1(c)) # alpha(x2)k
          Vec acc(B.field(), n);
          for (const PairTerm& s : HC.coproduct(x)) {
            const Vec left = B.mul(B.e(a), op.apply(H.e(s.left), B.twist_basis(-1, c)));
            const Vec right = H.mul(H.twist_basis(1, s.right), H.e(k));
            add_outer(acc, s.coef, {&left, &right});
          }
          const std::size_t i = pair_index(a, x, nh), j = pair_index(c, k, nh);
          for (std::size_t o = 0; o < n; ++o) t.at(i, j, o) = acc[o];
        }
  return t;
}

StructureTensor smash_coproduct_tensor(const HomBialgebra& b, const HomCoalgebra& h, const Coaction& co) {
  AlgebraOps B(b.algebra);
  CoalgebraOps BC(b.coalgebra);
  CoalgebraOps H(h);
  const std::size_t nb = B.dim(), nh = H.dim(), n = nb * nh;
  CoactionOps rho(co, nh, nb);
  StructureTensor t(B.field(), n, n, n);
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t x = 0; x < nh; ++x) {
      // a1 # alpha(x1(0)) (x) beta^-1(a2)x1(1) # x2
      Vec acc(B.field(), n * n);
      for (const PairTerm& da : BC.coproduct(a))
        for (const PairTerm& dx : H.coproduct(x))
          for (const PairTerm& r : rho.terms(dx.left)) {
            const Vec third = B.mul(B.twist_basis(-1, da.right), B.e(r.right));
            add_outer(acc, da.coef * dx.coef * r.coef,
                      {&B.e(da.left), &H.twist_basis(1, r.left), &third, &H.e(dx.right)});
          }
      const std::size_t i = pair_index(a, x, nh);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) t.at(i, p, q) = acc[pair_index(p, q, n)];
    }
  return t;
}

HomAlgebra smash_product(const HomAlgebra& b, const HomBialgebra& h, const ModuleAction& act, const CheckOptions& opts) {
  AxiomReport pre = check_module_algebra(h, b, act, opts);
  if (!pre.passed()) throw IncompatibleAction("action is not a module-algebra action", std::move(pre));
  HomAlgebra out;
  out.dim = b.dim * h.dim();
  out.mul = smash_product_tensor(b, h, act);
  out.unit = outer({&b.unit, &h.algebra.unit});
  out.alpha = tensor_of_maps(b.alpha, h.algebra.alpha);
  AxiomReport post = check_hom_algebra(out, opts);
  if (!post.passed()) throw ConstructionFailure("smash product fails the Hom-algebra axioms", std::move(post));
  return out;
}

HomCoalgebra smash_coproduct(const HomBialgebra& b, const HomCoalgebra& h, const Coaction& co, const CheckOptions& opts) {
  AxiomReport pre = check_comodule_coalgebra(h, b, co, opts);
  if (!pre.passed()) throw IncompatibleCoaction("coaction is not a comodule-coalgebra coaction", std::move(pre));
  HomCoalgebra out;
  out.dim = b.dim() * h.dim;
  out.comul = smash_coproduct_tensor(b, h, co);
  out.counit = outer({&b.coalgebra.counit, &h.counit});
  out.gamma = tensor_of_maps(b.coalgebra.gamma, h.gamma);
  AxiomReport post = check_hom_coalgebra(out, opts);
  if (!post.passed()) throw ConstructionFailure("smash coproduct fails the Hom-coalgebra axioms", std::move(post));
  return out;
}

HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b) {
  const std::size_t na = a.dim, nb = b.dim, n = na * nb;
  HomAlgebra out{n, StructureTensor(a.field(), n, n, n), outer({&a.unit, &b.unit}), tensor_of_maps(a.alpha, b.alpha)};
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          const Vec x = a.mul.fiber(i, k), y = b.mul.fiber(j, l);
          const Vec xy = outer({&x, &y});
          for (std::size_t o = 0; o < n; ++o) out.mul.at(pair_index(i, j, nb), pair_index(k, l, nb), o) = xy[o];
        }
  return out;
}

HomCoalgebra tensor_coalgebra(const HomCoalgebra& a, const HomCoalgebra& b) {
  const std::size_t na = a.dim, nb = b.dim, n = na * nb;
  HomCoalgebra out{n, StructureTensor(a.field(), n, n, n), outer({&a.counit, &b.counit}),
                   tensor_of_maps(a.gamma, b.gamma)};
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t p = 0; p < na; ++p)
        for (std::size_t q = 0; q < na; ++q) {
          if (a.comul.at(i, p, q).is_zero()) continue;
          for (std::size_t r = 0; r < nb; ++r)
            for (std::size_t s = 0; s < nb; ++s)
              if (!b.comul.at(j, r, s).is_zero())
                out.comul.at(pair_index(i, j, nb), pair_index(p, r, nb), pair_index(q, s, nb)) +=
                    a.comul.at(i, p, q) * b.comul.at(j, r, s);
        }
  return out;
}

}  // namespace homhopf

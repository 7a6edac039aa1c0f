#include "fusioncat/induction.hpp"

#include "fusioncat/qsystem.hpp"

namespace fcat {

InducedBimodule schauenburg_induce(const SkeletalCategory& cat, const QSystem& q,
                                   const HalfBraidedObject& z) {
  InducedBimodule ind;
  ind.x = z.underlying;
  ind.q = q;
  ind.bimodule.side = ModuleSide::Bi;
  ind.bimodule.m = word_expr(cat, {z.underlying, q.q});
  {
    WordOp w(cat, std::vector<ObjectExpr>{z.underlying, q.q, q.q});
    w.apply(1, 3, q.product(), {q.q});
    ind.bimodule.right = w.morphism();
  }
  {
    const Morphism cq = braiding_at(cat, z, q.q);
    WordOp w(cat, std::vector<ObjectExpr>{q.q, z.underlying, q.q});
    w.apply(0, 2, cq, {z.underlying, q.q});
    w.apply(1, 3, q.product(), {q.q});
    ind.bimodule.left = w.morphism();
  }
  return ind;
}

Morphism induced_sigma(const SkeletalCategory& cat, const QSystem& q,
                       const HalfBraidedObject& z, const ModuleStructure& y) {
  const Morphism cy = braiding_at(cat, z, y.m);
  WordOp w(cat, std::vector<ObjectExpr>{y.m, z.underlying, q.q});
  w.apply(0, 2, cy, {z.underlying, y.m});
  w.apply(1, 3, y.right, {y.m});
  w.apply(1, 1, q.v, {q.q});
  return w.morphism();
}

CheckReport verify_induction(const SkeletalCategory& cat, const QSystem& q,
                             const HalfBraidedObject& z,
                             const std::vector<ObjectExpr>& middles) {
  CheckReport rep;
  const double tol = cat.tol();
  InducedBimodule ind = schauenburg_induce(cat, q, z);
  rep.merge(verify_module(cat, q, ind.bimodule), "induced.");

  // sigma multiplicativity (sigma_Z (x) i)(i (x) sigma_Y) = sigma_{Z (x) Y}
  // over pairs of free bimodules, and descent through P_{Z,Y}
  double mult_res = 0, descent_res = 0;
  for (const ObjectExpr& a : middles)
    for (const ObjectExpr& b : middles) {
      const ModuleStructure ya = free_bimodule(cat, q, a);
      const ModuleStructure yb = free_bimodule(cat, q, b);
      const Morphism sa = induced_sigma(cat, q, z, ya);
      const Morphism sb = induced_sigma(cat, q, z, yb);

      ModuleStructure yab;
      yab.side = ModuleSide::Bi;
      yab.m = word_expr(cat, {ya.m, yb.m});
      {
        WordOp w(cat, std::vector<ObjectExpr>{q.q, ya.m, yb.m});
        w.apply(0, 2, ya.left, {ya.m});
        yab.left = w.morphism();
      }
      {
        WordOp w(cat, std::vector<ObjectExpr>{ya.m, yb.m, q.q});
        w.apply(1, 3, yb.right, {yb.m});
        yab.right = w.morphism();
      }
      const Morphism sab = induced_sigma(cat, q, z, yab);

      WordOp lhs(cat, std::vector<ObjectExpr>{ya.m, yb.m, z.underlying, q.q});
      lhs.apply(1, 4, sb, {z.underlying, q.q, yb.m});
      lhs.apply(0, 3, sa, {z.underlying, q.q, ya.m});
      mult_res = std::max(mult_res, distance(lhs.morphism(), sab));

      // (i_{XQ} (x) P_{A,B}) sigma_{A (x) B} = sigma_{A (x)_Q B} (P (x) i_{XQ})
      RelativeTensorData rt = relative_tensor(cat, q, ya, yb);
      const ModuleStructure yq = descend_bimodule(cat, q, ya, yb, rt);
      const Morphism sq = induced_sigma(cat, q, z, yq);
      WordOp left(cat, std::vector<ObjectExpr>{ya.m, yb.m, z.underlying, q.q});
      left.apply(0, 2, rt.structure, {rt.product});
      const Morphism l = compose(sq, left.morphism());
      WordOp right(cat, std::vector<ObjectExpr>{ya.m, yb.m, z.underlying, q.q});
      right.apply(0, 4, sab, {z.underlying, q.q, ya.m, yb.m});
      right.apply(2, 4, rt.structure, {rt.product});
      descent_res = std::max(descent_res, distance(l, right.morphism()));
    }
  rep.add("induced.sigma-mult", "induced-braiding-multiplicativity", mult_res, tol);
  rep.add("induced.sigma-descent", "induced-braiding-descent", descent_res, tol);

  // unitarity of the descended braiding against the model structure maps:
  // tilde c_Y is c_Y between the models Y (x) X and X (x) Y
  double unit_res = 0;
  for (const ObjectExpr& a : middles) {
    const ModuleStructure ya = free_bimodule(cat, q, a);
    const Morphism cy = braiding_at(cat, z, ya.m);
    unit_res = std::max(
        unit_res, distance(compose(cy.dagger(), cy), Morphism::identity(cy.src())));
    unit_res = std::max(
        unit_res, distance(compose(cy, cy.dagger()), Morphism::identity(cy.tgt())));
  }
  rep.add("induced.tilde-c-unitary", "induced-braiding-unitarity", unit_res, tol);
  return rep;
}

Morphism ts_morphism(const SkeletalCategory& cat, const QSystem& q,
                     const HalfBraidedObject& z, const Morphism& s) {
  if (!(s.src() == q.q) || !(s.tgt() == z.underlying))
    throw ShapeError("T^S needs S : Q -> X");
  const Morphism cq = braiding_at(cat, z, q.q);
  WordOp w(cat, std::vector<ObjectExpr>{q.q});
  w.apply(0, 1, iterated_coproduct(cat, q, 3), {q.q, q.q, q.q, q.q});
  w.apply(1, 2, s, {z.underlying});
  w.apply(0, 2, cq, {z.underlying, q.q});
  w.apply(1, 3, compose(q.v.dagger(), q.w.dagger()), {});
  return w.morphism();
}

TsCheck bimodule_morphisms_ts(const SkeletalCategory& cat, const QSystem& q,
                              const HalfBraidedObject& z) {
  TsCheck out;
  const ObjectExpr& x = z.underlying;
  const Morphism cq = braiding_at(cat, z, q.q);
  const std::vector<Morphism> basis = hom_basis(q.q, x);
  out.hom_dim_qx = static_cast<long>(basis.size());

  // the characterizing equation of right-modular maps (T (x) i) w that also
  // respect the left action:
  //   (T (x) i) w w* = (i (x) w*)(c_Q (x) i)(i (x) T (x) i)(i (x) w)
  auto lhs_of = [&](const Morphism& t) {
    WordOp w(cat, std::vector<ObjectExpr>{q.q, q.q});
    w.apply_endo(0, 2, compose(q.w, q.w.dagger()));
    w.apply(0, 1, t, {x});
    return w.morphism();
  };
  auto rhs_of = [&](const Morphism& t) {
    WordOp w(cat, std::vector<ObjectExpr>{q.q, q.q});
    w.apply(1, 2, q.w, {q.q, q.q});
    w.apply(1, 2, t, {x});
    w.apply(0, 2, cq, {x, q.q});
    w.apply(1, 3, q.w.dagger(), {q.q});
    return w.morphism();
  };

  if (!basis.empty()) {
    Mat sys(vectorize_morphism(lhs_of(basis[0]) - rhs_of(basis[0])).size(),
            static_cast<long>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
      sys.col(static_cast<long>(k)) = vectorize_morphism(lhs_of(basis[k]) - rhs_of(basis[k]));
    out.solution_dim = static_cast<long>(basis.size()) - matrix_rank(sys);

    Mat img(vectorize_morphism(ts_morphism(cat, q, z, basis[0])).size(),
            static_cast<long>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
      img.col(static_cast<long>(k)) = vectorize_morphism(ts_morphism(cat, q, z, basis[k]));
    out.image_dim = matrix_rank(img);

    // every T^S comes from a T = (i (x) v*) T^S satisfying the equation
    for (std::size_t k = 0; k < basis.size(); ++k) {
      WordOp w(cat, std::vector<ObjectExpr>{q.q});
      w.apply(0, 1, ts_morphism(cat, q, z, basis[k]), {x, q.q});
      w.apply(1, 2, q.v.dagger(), {});
      const Morphism t = w.morphism();
      out.char_residual =
          std::max(out.char_residual, distance(lhs_of(t), rhs_of(t)));
    }
  }
  out.match = out.image_dim == out.solution_dim;
  return out;
}

TransferReport transfer_almost_invariant(const SkeletalCategory& cat, const QSystem& q,
                                         const HalfBraidedObject& z, const Morphism& xi,
                                         const std::vector<LabelId>& test_labels) {
  if (!(xi.src() == cat.unit_expr()) || !(xi.tgt() == z.underlying))
    throw ShapeError("transfer needs a vector 1 -> X");
  TransferReport rep;
  const Morphism s = compose(xi, q.v.dagger());
  rep.xi_tilde = ts_morphism(cat, q, z, s) * Cplx(1.0 / q.dim_q);

  const Morphism xi_i = tensor(cat.rules(), xi, Morphism::identity(q.q));
  rep.r1 = distance(rep.xi_tilde, xi_i);
  rep.norm_deviation = rep.r1;

  auto source_residual = [&](const ObjectExpr& yobj) {
    const Morphism cy = braiding_at(cat, z, yobj);
    const Morphism lhs =
        compose(cy, tensor(cat.rules(), Morphism::identity(yobj), xi));
    const Morphism rhs = tensor(cat.rules(), xi, Morphism::identity(yobj));
    return distance(lhs, rhs);
  };
  rep.source_q = source_residual(q.q);

  bool ok = rep.r1 <= std::sqrt(q.dim_q) * rep.source_q + cat.tol();
  for (LabelId ylab : test_labels) {
    const ModuleStructure y = free_bimodule(cat, q, cat.simple(ylab));
    // (i (x) m^r_Y)(c_Y (x) i)(i (x) xi~)(i (x) v)  vs
    // (i (x) m^l_Y)(xi~ (x) i)(v (x) i)
    WordOp e1(cat, std::vector<ObjectExpr>{y.m});
    e1.apply(1, 1, q.v, {q.q});
    e1.apply(1, 2, rep.xi_tilde, {z.underlying, q.q});
    e1.apply(0, 2, braiding_at(cat, z, y.m), {z.underlying, y.m});
    e1.apply(1, 3, y.right, {y.m});
    WordOp e2(cat, std::vector<ObjectExpr>{y.m});
    e2.apply(0, 0, q.v, {q.q});
    e2.apply(0, 1, rep.xi_tilde, {z.underlying, q.q});
    e2.apply(1, 3, y.left, {y.m});
    const double r2 = distance(e1.morphism(), e2.morphism());
    rep.r2[ylab] = r2;
    const double src = source_residual(y.m);
    rep.source[ylab] = src;
    ok = ok && r2 <= std::sqrt(q.dim_q) * src + 2.0 * q.dim_q * rep.source_q + cat.tol();
  }
  rep.bounds_hold = ok;
  return rep;
}

}  // namespace fcat

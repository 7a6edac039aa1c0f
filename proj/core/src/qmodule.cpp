#include "fusioncat/qmodule.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <random>

namespace fcat {

namespace {

Morphism left_action_dual_form(const SkeletalCategory& cat, const QSystem& q,
                               const Morphism& m) {
  // (i (x) m)(wv (x) i) : M -> Q (x) M, the required adjoint of the action
  const ObjectExpr mob = m.tgt();
  WordOp w(cat, std::vector<ObjectExpr>{mob});
  w.apply(0, 0, compose(q.w, q.v), {q.q, q.q});
  w.apply(1, 3, m, {mob});
  return w.morphism();
}

Morphism right_action_dual_form(const SkeletalCategory& cat, const QSystem& q,
                                const Morphism& m) {
  // (m (x) i)(i (x) wv) : M -> M (x) Q
  const ObjectExpr mob = m.tgt();
  WordOp w(cat, std::vector<ObjectExpr>{mob});
  w.apply(1, 1, compose(q.w, q.v), {q.q, q.q});
  w.apply(0, 2, m, {mob});
  return w.morphism();
}

double action_residuals(const SkeletalCategory& cat, const QSystem& q, const Morphism& act,
                        bool leftside, double* star_res, double* mmstar_res,
                        double* mstarm_res) {
  const ObjectExpr mob = act.tgt();
  const Morphism id_m = Morphism::identity(mob);
  double assoc, unit;
  if (leftside) {
    WordOp a(cat, std::vector<ObjectExpr>{q.q, q.q, mob});
    a.apply(0, 2, q.product(), {q.q});
    a.apply(0, 2, act, {mob});
    WordOp b(cat, std::vector<ObjectExpr>{q.q, q.q, mob});
    b.apply(1, 3, act, {mob});
    b.apply(0, 2, act, {mob});
    assoc = distance(a.morphism(), b.morphism());
    WordOp u(cat, std::vector<ObjectExpr>{mob});
    u.apply(0, 0, q.v, {q.q});
    u.apply(0, 2, act, {mob});
    unit = distance(u.morphism(), id_m);
    if (star_res) *star_res = distance(act.dagger(), left_action_dual_form(cat, q, act));
    if (mstarm_res) {
      // m* m = (i (x) m)(w (x) i)
      WordOp c(cat, std::vector<ObjectExpr>{q.q, mob});
      c.apply(0, 1, q.w, {q.q, q.q});
      c.apply(1, 3, act, {mob});
      *mstarm_res = distance(compose(act.dagger(), act), c.morphism());
    }
  } else {
    WordOp a(cat, std::vector<ObjectExpr>{mob, q.q, q.q});
    a.apply(1, 3, q.product(), {q.q});
    a.apply(0, 2, act, {mob});
    WordOp b(cat, std::vector<ObjectExpr>{mob, q.q, q.q});
    b.apply(0, 2, act, {mob});
    b.apply(0, 2, act, {mob});
    assoc = distance(a.morphism(), b.morphism());
    WordOp u(cat, std::vector<ObjectExpr>{mob});
    u.apply(1, 1, q.v, {q.q});
    u.apply(0, 2, act, {mob});
    unit = distance(u.morphism(), id_m);
    if (star_res) *star_res = distance(act.dagger(), right_action_dual_form(cat, q, act));
    if (mstarm_res) {
      // m* m = (m (x) i)(i (x) w)
      WordOp c(cat, std::vector<ObjectExpr>{mob, q.q});
      c.apply(1, 2, q.w, {q.q, q.q});
      c.apply(0, 2, act, {mob});
      *mstarm_res = distance(compose(act.dagger(), act), c.morphism());
    }
  }
  if (mmstar_res)
    *mmstar_res =
        distance(compose(act, act.dagger()), Morphism::identity(mob) * Cplx(q.dim_q));
  return std::max(assoc, unit);
}

}  // namespace

ModuleStructure regular_module(const SkeletalCategory& cat, const QSystem& q,
                               ModuleSide side) {
  (void)cat;
  ModuleStructure mod;
  mod.side = side;
  mod.m = q.q;
  mod.left = q.product();
  mod.right = q.product();
  return mod;
}

ModuleStructure free_bimodule(const SkeletalCategory& cat, const QSystem& q,
                              const ObjectExpr& middle) {
  ModuleStructure mod;
  mod.side = ModuleSide::Bi;
  mod.m = word_expr(cat, {q.q, middle, q.q});
  {
    WordOp w(cat, std::vector<ObjectExpr>{q.q, q.q, middle, q.q});
    w.apply(0, 2, q.product(), {q.q});
    mod.left = w.morphism();
  }
  {
    WordOp w(cat, std::vector<ObjectExpr>{q.q, middle, q.q, q.q});
    w.apply(2, 4, q.product(), {q.q});
    mod.right = w.morphism();
  }
  return mod;
}

CheckReport verify_module(const SkeletalCategory& cat, const QSystem& q,
                          const ModuleStructure& mod) {
  CheckReport rep;
  const double tol = cat.tol();
  if (mod.side != ModuleSide::Right) {
    double star = 0, mmstar = 0, mstarm = 0;
    const double au = action_residuals(cat, q, mod.left, true, &star, &mmstar, &mstarm);
    rep.add("module.left.axioms", "module-associativity-unit", au, tol);
    rep.add("module.left.star", "module-star-compat", star, tol);
    rep.add("module.left.mmstar", "action-coisometry", mmstar, tol);
    rep.add("module.left.mstarm", "action-gram-identity", mstarm, tol);
  }
  if (mod.side != ModuleSide::Left) {
    double star = 0, mmstar = 0, mstarm = 0;
    const double au = action_residuals(cat, q, mod.right, false, &star, &mmstar, &mstarm);
    rep.add("module.right.axioms", "module-associativity-unit", au, tol);
    rep.add("module.right.star", "module-star-compat", star, tol);
    rep.add("module.right.mmstar", "action-coisometry", mmstar, tol);
    rep.add("module.right.mstarm", "action-gram-identity", mstarm, tol);
  }
  if (mod.side == ModuleSide::Bi) {
    // the two actions commute
    WordOp a(cat, std::vector<ObjectExpr>{q.q, mod.m, q.q});
    a.apply(1, 3, mod.right, {mod.m});
    a.apply(0, 2, mod.left, {mod.m});
    WordOp b(cat, std::vector<ObjectExpr>{q.q, mod.m, q.q});
    b.apply(0, 2, mod.left, {mod.m});
    b.apply(0, 2, mod.right, {mod.m});
    rep.add("module.bi.commute", "left-right-commutation",
            distance(a.morphism(), b.morphism()), tol);
  }
  return rep;
}

namespace {

Morphism sqrt_positive(const Morphism& a, bool inverse) {
  Morphism out(a.src(), a.tgt());
  for (const auto& [r, b] : a.blocks()) {
    Eigen::SelfAdjointEigenSolver<Mat> es(Mat(0.5 * (b + b.adjoint())));
    Eigen::VectorXd vals = es.eigenvalues();
    Eigen::VectorXd roots(vals.size());
    for (long i = 0; i < vals.size(); ++i) {
      if (vals(i) <= 0) throw DiagnosticError("action Gram matrix not positive");
      roots(i) = inverse ? 1.0 / std::sqrt(vals(i)) : std::sqrt(vals(i));
    }
    out.set_block(r, es.eigenvectors() * roots.asDiagonal().toDenseMatrix().cast<Cplx>() *
                         es.eigenvectors().adjoint());
  }
  return out;
}

}  // namespace

std::vector<ModuleStructure> solve_modules(const SkeletalCategory& cat, const QSystem& q,
                                           const ObjectExpr& m, ModuleSide side) {
  if (side == ModuleSide::Bi)
    throw InputError("solve_modules handles one side at a time");
  const bool leftside = side == ModuleSide::Left;
  const FusionRules& rules = cat.rules();
  const ObjectExpr domain =
      leftside ? tensor_expr(rules, q.q, m) : tensor_expr(rules, m, q.q);

  // unknowns: Hom(domain, m); unit constraint pins an affine slice
  const std::vector<Morphism> basis = hom_basis(domain, m);
  const long dim = static_cast<long>(basis.size());
  if (dim == 0) return {};

  auto unit_map = [&](const Morphism& t) {
    WordOp u(cat, std::vector<ObjectExpr>{m});
    if (leftside) {
      u.apply(0, 0, q.v, {q.q});
      u.apply(0, 2, t, {m});
    } else {
      u.apply(1, 1, q.v, {q.q});
      u.apply(0, 2, t, {m});
    }
    return u.morphism();
  };
  auto assoc_gap = [&](const Morphism& t) {
    if (leftside) {
      WordOp a(cat, std::vector<ObjectExpr>{q.q, q.q, m});
      a.apply(0, 2, q.product(), {q.q});
      a.apply(0, 2, t, {m});
      WordOp b(cat, std::vector<ObjectExpr>{q.q, q.q, m});
      b.apply(1, 3, t, {m});
      b.apply(0, 2, t, {m});
      return a.morphism() - b.morphism();
    }
    WordOp a(cat, std::vector<ObjectExpr>{m, q.q, q.q});
    a.apply(1, 3, q.product(), {q.q});
    a.apply(0, 2, t, {m});
    WordOp b(cat, std::vector<ObjectExpr>{m, q.q, q.q});
    b.apply(0, 2, t, {m});
    b.apply(0, 2, t, {m});
    return a.morphism() - b.morphism();
  };

  // affine solve of the unit constraint: U x = vec(id)
  const long urows = vectorize_morphism(unit_map(basis[0])).size();
  Mat u(urows, dim);
  for (long k = 0; k < dim; ++k) u.col(k) = vectorize_morphism(unit_map(basis[k]));
  const Vec rhs = vectorize_morphism(Morphism::identity(m));
  Eigen::JacobiSVD<Mat> usvd(u, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vec x0 = usvd.solve(rhs);
  if ((u * x0 - rhs).norm() > 1e-9) return {};  // unit constraint unsatisfiable

  // nullspace parametrization
  const auto& sv = usvd.singularValues();
  long rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10 * std::max(1.0, sv(0))) ++rank;
  const Mat nullbasis = usvd.matrixV().rightCols(dim - rank);
  const long free_dim = nullbasis.cols();

  auto realize = [&](const Vec& x) { return morphism_from_vector(domain, m, x); };

  std::vector<Vec> algebraic;
  std::mt19937 rng(2718281);
  std::normal_distribution<double> g;
  const int starts = free_dim == 0 ? 1 : 64;
  for (int start = 0; start < starts; ++start) {
    Vec y = Vec::Zero(free_dim);
    if (start > 0)
      for (long i = 0; i < free_dim; ++i) y(i) = Cplx(g(rng), g(rng));
    // damped Gauss-Newton over the affine slice; the residual is polynomial
    // in the free parameters, so a complex Jacobian suffices
    for (int it = 0; it < 120 && free_dim > 0; ++it) {
      const Vec x = x0 + nullbasis * y;
      const Vec f = vectorize_morphism(assoc_gap(realize(x)));
      if (f.norm() < 1e-13) break;
      const double h = 1e-7;
      Mat jac(f.size(), free_dim);
      for (long k = 0; k < free_dim; ++k) {
        Vec yp = y;
        yp(k) += h;
        jac.col(k) = (vectorize_morphism(assoc_gap(realize(x0 + nullbasis * yp))) - f) / h;
      }
      const Vec step = (jac.adjoint() * jac +
                        1e-10 * Mat::Identity(free_dim, free_dim))
                           .ldlt()
                           .solve(jac.adjoint() * f);
      y -= step;
      if (step.norm() < 1e-14) break;
    }
    const Vec x = x0 + nullbasis * y;
    if (vectorize_morphism(assoc_gap(realize(x))).norm() < 1e-9) algebraic.push_back(x);
  }

  // renormalize, then dedup up to module isomorphism
  std::vector<ModuleStructure> out;
  for (const Vec& x : algebraic) {
    Morphism t = realize(x);
    const Morphism a = compose(t, t.dagger());
    Morphism act;
    try {
      const Morphism ainvr = sqrt_positive(a, true);
      const Morphism ar = sqrt_positive(a, false);
      act = leftside ? compose(ainvr, compose(t, tensor(rules, Morphism::identity(q.q), ar)))
                     : compose(ainvr, compose(t, tensor(rules, ar, Morphism::identity(q.q))));
    } catch (const DiagnosticError&) {
      continue;
    }
    ModuleStructure mod;
    mod.side = side;
    mod.m = m;
    (leftside ? mod.left : mod.right) = act;
    if (!verify_module(cat, q, mod).pass()) continue;

    bool duplicate = false;
    for (const auto& prev : out) {
      const auto inter = module_morphisms(cat, q, prev, mod);
      for (const auto& w2 : inter) {
        // invertible intertwiner present -> isomorphic structures
        bool invertible = true;
        for (const auto& [r, n] : m.mults()) {
          const Mat b = w2.has_block(r) ? w2.block(r) : Mat::Zero(n, n);
          if (matrix_rank(b, 1e-6) < n) invertible = false;
        }
        if (invertible) duplicate = true;
      }
      if (duplicate) break;
    }
    if (!duplicate) out.push_back(std::move(mod));
  }
  return out;
}

std::vector<Morphism> module_morphisms(const SkeletalCategory& cat, const QSystem& q,
                                       const ModuleStructure& ma, const ModuleStructure& mb) {
  if (ma.side != mb.side) throw InputError("module morphisms need matching sides");
  const FusionRules& rules = cat.rules();
  const std::vector<Morphism> basis = hom_basis(ma.m, mb.m);
  if (basis.empty()) return {};
  std::vector<Vec> cols;
  for (const auto& e : basis) {
    std::vector<Vec> parts;
    if (ma.side != ModuleSide::Right) {
      const Morphism gap = compose(e, ma.left) -
                           compose(mb.left, tensor(rules, Morphism::identity(q.q), e));
      parts.push_back(vectorize_morphism(gap));
    }
    if (ma.side != ModuleSide::Left) {
      const Morphism gap = compose(e, ma.right) -
                           compose(mb.right, tensor(rules, e, Morphism::identity(q.q)));
      parts.push_back(vectorize_morphism(gap));
    }
    long sz = 0;
    for (auto& p : parts) sz += p.size();
    Vec col(sz);
    long off = 0;
    for (auto& p : parts) {
      col.segment(off, p.size()) = p;
      off += p.size();
    }
    cols.push_back(std::move(col));
  }
  Mat sys(cols[0].size(), static_cast<long>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) sys.col(static_cast<long>(k)) = cols[k];
  Eigen::JacobiSVD<Mat> svd(sys, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  long rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * std::max(1.0, sv(0))) ++rank;
  std::vector<Morphism> out;
  for (long j = rank; j < static_cast<long>(cols.size()); ++j) {
    const Vec coeff = svd.matrixV().col(j);
    Morphism acc = basis[0] * coeff(0);
    for (long k = 1; k < static_cast<long>(basis.size()); ++k)
      acc = acc + basis[k] * coeff(k);
    out.push_back(std::move(acc));
  }
  return out;
}

Morphism random_module_endo(const SkeletalCategory& cat, const QSystem& q,
                            const ModuleStructure& mod, unsigned seed) {
  const auto space = module_morphisms(cat, q, mod, mod);
  if (space.empty()) throw DiagnosticError("empty endomorphism space");
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Morphism acc = space[0] * Cplx(g(rng), g(rng));
  for (std::size_t k = 1; k < space.size(); ++k) acc = acc + space[k] * Cplx(g(rng), g(rng));
  return acc;
}

}  // namespace fcat

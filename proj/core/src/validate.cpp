#include "fusioncat/validate.hpp"

#include <random>

#include "fusioncat/duality.hpp"

namespace fcat {

namespace {

Morphism random_endo(const ObjectExpr& x, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Morphism t(x, x);
  for (auto& [r, n] : x.mults()) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m(i, j) = Cplx(g(rng), g(rng));
    t.set_block(r, std::move(m));
  }
  return t;
}

ObjectExpr random_expr(const SkeletalCategory& cat, std::mt19937& rng) {
  std::uniform_int_distribution<LabelId> pick(0, static_cast<LabelId>(cat.n_labels() - 1));
  std::uniform_int_distribution<int> cnt(1, 2);
  std::map<LabelId, long> m;
  const int k = cnt(rng);
  for (int i = 0; i < k; ++i) m[pick(rng)] += cnt(rng);
  return ObjectExpr(std::move(m));
}

}  // namespace

double pentagon_residual(const SkeletalCategory& cat) {
  const FusionRules& rules = cat.rules();
  double res = 0;
  for (LabelId a = 0; a < rules.size(); ++a)
    for (LabelId b = 0; b < rules.size(); ++b)
      for (LabelId c = 0; c < rules.size(); ++c)
        for (LabelId d = 0; d < rules.size(); ++d) {
          const ObjectExpr ea = cat.simple(a), eb = cat.simple(b), ec = cat.simple(c),
                           ed = cat.simple(d);
          const ObjectExpr ab = tensor_expr(rules, ea, eb);
          const ObjectExpr bc = tensor_expr(rules, eb, ec);
          const ObjectExpr cd = tensor_expr(rules, ec, ed);
          Morphism p1 = compose(assoc(cat, ea, eb, cd), assoc(cat, ab, ec, ed));
          Morphism p2 = compose(
              tensor(rules, Morphism::identity(ea), assoc(cat, eb, ec, ed)),
              compose(assoc(cat, ea, bc, ed),
                      tensor(rules, assoc(cat, ea, eb, ec), Morphism::identity(ed))));
          res = std::max(res, distance(p1, p2));
        }
  return res;
}

double funitarity_residual(const SkeletalCategory& cat) {
  const FusionRules& rules = cat.rules();
  double res = 0;
  for (LabelId a = 0; a < rules.size(); ++a)
    for (LabelId b = 0; b < rules.size(); ++b)
      for (LabelId c = 0; c < rules.size(); ++c)
        for (LabelId d = 0; d < rules.size(); ++d) {
          const Mat f = cat.fsymbols().fmatrix(rules, a, b, c, d);
          if (f.size() == 0) continue;
          res = std::max(res, (f.adjoint() * f - Mat::Identity(f.rows(), f.cols())).norm());
        }
  return res;
}

double perron_residual(const SkeletalCategory& cat) {
  const FusionRules& rules = cat.rules();
  double res = 0;
  for (LabelId s = 0; s < rules.size(); ++s)
    for (LabelId t = 0; t < rules.size(); ++t) {
      double lhs = 0;
      for (LabelId r = 0; r < rules.size(); ++r)
        lhs += static_cast<double>(rules.mult(s, t, r)) * cat.dim(r);
      res = std::max(res, std::abs(lhs - cat.dim(s) * cat.dim(t)));
    }
  return res;
}

CheckReport validate_category(const SkeletalCategory& cat) {
  CheckReport rep;
  const double tol = cat.tol();
  const FusionRules& rules = cat.rules();

  try {
    rules.check();
    rep.add_bool("rules.invariants", "fusion-ring-axioms", true);
  } catch (const InputError& e) {
    rep.add_bool("rules.invariants", "fusion-ring-axioms", false, e.what());
  }

  rep.add("fsymbols.pentagon", "pentagon", pentagon_residual(cat), tol);
  rep.add("fsymbols.unitarity", "recoupling-unitarity", funitarity_residual(cat), tol);

  // stored unit-leg blocks, if any, must agree with the trivial gauge
  {
    double res = 0;
    for (const auto& [key, m] : cat.fsymbols().stored()) {
      if (key[0] == cat.unit() || key[1] == cat.unit() || key[2] == cat.unit())
        res = std::max(res, (m - Mat::Identity(m.rows(), m.cols())).norm());
    }
    rep.add("fsymbols.unit-legs", "trivial-unit-gauge", res, tol);
  }

  rep.add("dims.perron", "dimension-multiplicativity", perron_residual(cat), tol);
  {
    double res = 0;
    res = std::max(res, std::abs(cat.dim(cat.unit()) - 1.0));
    for (LabelId s = 0; s < rules.size(); ++s)
      res = std::max(res, std::abs(cat.dim(s) - cat.dim(rules.dual(s))));
    rep.add("dims.unit-and-dual", "dimension-normalization", res, tol);
  }

  {
    double ce = 0, norm = 0, piv = 0;
    for (LabelId s = 0; s < rules.size(); ++s) {
      DualityPair p = standard_pair_simple(cat, s);
      ce = std::max(ce, conjugate_equation_residual(cat, p));
      const Cplx r2 = compose(p.R.dagger(), p.R).unit_scalar_value(cat.unit());
      const Cplx q2 = compose(p.Rbar.dagger(), p.Rbar).unit_scalar_value(cat.unit());
      norm = std::max(norm, std::abs(r2 - cat.dim(s)));
      norm = std::max(norm, std::abs(q2 - cat.dim(s)));
      piv = std::max(piv, std::abs(std::abs(cat.pivotal(s)) - 1.0));
    }
    rep.add("duality.conjugate-equations", "conjugate-equations", ce, tol);
    rep.add("duality.cup-norms", "standard-normalization", norm, tol);
    rep.add("duality.pivotal-modulus", "pivotal-unitarity", piv, tol);
  }

  {
    std::mt19937 rng(20260809);
    double spher = 0, standard = 0;
    for (int rep_i = 0; rep_i < 16; ++rep_i) {
      const ObjectExpr x = random_expr(cat, rng);
      const Morphism t = random_endo(x, rng);
      const double scale = std::max(1.0, t.op_norm());
      spher = std::max(
          spher, std::abs(categorical_trace(cat, t) - categorical_trace_right(cat, t)) / scale);
      DualityPair p = standard_pair(cat, x);
      // Rbar*(T (x) i)Rbar vs R*(i (x) T)R
      const Cplx lhs = compose(p.Rbar.dagger(),
                               compose(tensor(rules, t, Morphism::identity(p.dual)), p.Rbar))
                           .unit_scalar_value(cat.unit());
      const Cplx rhs =
          compose(p.R.dagger(), compose(tensor(rules, Morphism::identity(p.dual), t), p.R))
              .unit_scalar_value(cat.unit());
      standard = std::max(standard, std::abs(lhs - rhs) / scale);
    }
    rep.add("duality.sphericality", "left-right-trace", spher, tol);
    rep.add("duality.standardness", "standard-solution-trace", standard, tol);
  }

  return rep;
}

}  // namespace fcat

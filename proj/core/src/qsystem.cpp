#include "fusioncat/qsystem.hpp"

#include <Eigen/SVD>

namespace fcat {

DualityPair QSystem::duality(const SkeletalCategory& cat) const {
  const Morphism wv = compose(w, v);
  DualityPair p;
  p.obj = q;
  p.dual = q;
  p.R = wv;
  p.Rbar = wv;
  return p;
}

QSystem trivial_qsystem(const SkeletalCategory& cat) {
  QSystem q;
  q.q = cat.unit_expr();
  q.v = Morphism::identity(q.q);
  q.w = Morphism::identity(q.q);
  q.dim_q = 1.0;
  return q;
}

QSystem group_algebra_qsystem(const SkeletalCategory& cat) {
  const FusionRules& rules = cat.rules();
  for (LabelId s = 0; s < cat.n_labels(); ++s)
    for (LabelId t = 0; t < cat.n_labels(); ++t) {
      long total = 0;
      for (LabelId r = 0; r < cat.n_labels(); ++r) total += rules.mult(s, t, r);
      if (total != 1)
        throw CapabilityError("group algebra Q-system needs a pointed category");
    }
  QSystem q;
  std::map<LabelId, long> all;
  for (LabelId s = 0; s < cat.n_labels(); ++s) all[s] = 1;
  q.q = ObjectExpr(std::move(all));
  q.dim_q = static_cast<double>(cat.n_labels());

  Morphism v(cat.unit_expr(), q.q);
  Mat vb = Mat::Zero(1, 1);
  vb(0, 0) = 1.0;
  v.set_block(cat.unit(), vb);
  q.v = std::move(v);

  PairIndexer qq(rules, q.q, q.q);
  Morphism w(q.q, qq.product());
  for (LabelId c = 0; c < cat.n_labels(); ++c) {
    Mat col = Mat::Zero(qq.product().mult(c), 1);
    for (LabelId a = 0; a < cat.n_labels(); ++a)
      for (LabelId b = 0; b < cat.n_labels(); ++b)
        if (rules.mult(a, b, c) == 1) col(qq.index(c, a, 0, b, 0, 0), 0) = 1.0;
    w.set_block(c, col);
  }
  q.w = std::move(w);
  return q;
}

QSystem canonical_qsystem(const SkeletalCategory& cat, LabelId x) {
  const double dx = cat.dim(x);
  const DualityPair px = standard_pair_simple(cat, x);
  QSystem q;
  q.q = tensor_expr(cat.rules(), px.dual, px.obj);
  q.dim_q = dx * dx;
  q.v = px.R * Cplx(1.0 / std::sqrt(dx));

  WordOp w(cat, BracketTree::node(BracketTree::leaf(px.dual), BracketTree::leaf(px.obj)));
  w.apply(1, 1, px.Rbar, {px.obj, px.dual});
  w.scale(std::sqrt(dx));
  q.w = w.finish(BracketTree::node(
      BracketTree::node(BracketTree::leaf(px.dual), BracketTree::leaf(px.obj)),
      BracketTree::node(BracketTree::leaf(px.dual), BracketTree::leaf(px.obj))));
  return q;
}

Morphism iterated_coproduct(const SkeletalCategory& cat, const QSystem& q, int n) {
  WordOp w(cat, std::vector<ObjectExpr>{q.q});
  for (int i = 0; i < n; ++i) w.apply(0, 1, q.w, {q.q, q.q});
  return w.morphism();
}

namespace {

// nullspace dimension of the linear map T -> T m_Q - m_Q (i (x) T) and its
// right-handed twin on Hom(Q, Q): the Q-bimodule endomorphisms of Q
long bimodule_endo_dim(const SkeletalCategory& cat, const QSystem& q) {
  std::vector<Morphism> basis;
  for (const auto& [r, n] : q.q.mults())
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Morphism e(q.q, q.q);
        Mat b = Mat::Zero(n, n);
        b(i, j) = 1.0;
        e.set_block(r, b);
        basis.push_back(std::move(e));
      }
  if (basis.empty()) return 0;

  const Morphism mq = q.product();
  const Morphism idq = Morphism::identity(q.q);
  std::vector<Vec> cols;
  for (const auto& e : basis) {
    const Morphism left = compose(e, mq) - compose(mq, tensor(cat.rules(), idq, e));
    const Morphism right = compose(e, mq) - compose(mq, tensor(cat.rules(), e, idq));
    const Vec v1 = vectorize_morphism(left);
    const Vec v2 = vectorize_morphism(right);
    Vec stacked(v1.size() + v2.size());
    stacked << v1, v2;
    cols.push_back(std::move(stacked));
  }
  Mat sys(cols[0].size(), static_cast<long>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) sys.col(static_cast<long>(k)) = cols[k];
  return static_cast<long>(cols.size()) - matrix_rank(sys);
}

}  // namespace

CheckReport verify_qsystem(const SkeletalCategory& cat, const QSystem& q,
                           QSystemFlags* flags) {
  CheckReport rep;
  const double tol = cat.tol();
  if (!(q.q.dual(cat.rules()) == q.q))
    throw InputError("Q-system object must be self-dual as an expression");

  rep.add("qsystem.v-isometry", "unit-isometry",
          distance(compose(q.v.dagger(), q.v), Morphism::identity(cat.unit_expr())), tol);

  {
    WordOp a(cat, std::vector<ObjectExpr>{q.q});
    a.apply(0, 1, q.w, {q.q, q.q});
    a.apply(0, 1, q.v.dagger(), {});
    WordOp b(cat, std::vector<ObjectExpr>{q.q});
    b.apply(0, 1, q.w, {q.q, q.q});
    b.apply(1, 2, q.v.dagger(), {});
    const Morphism id = Morphism::identity(q.q);
    const double res =
        std::max(distance(a.morphism(), id), distance(b.morphism(), id));
    rep.add("qsystem.unit-constraint", "unit-constraint", res, tol);
  }
  {
    WordOp a(cat, std::vector<ObjectExpr>{q.q});
    a.apply(0, 1, q.w, {q.q, q.q});
    a.apply(0, 1, q.w, {q.q, q.q});
    WordOp b(cat, std::vector<ObjectExpr>{q.q});
    b.apply(0, 1, q.w, {q.q, q.q});
    b.apply(1, 2, q.w, {q.q, q.q});
    rep.add("qsystem.associativity", "coproduct-associativity",
            distance(a.morphism(), b.morphism()), tol);
  }
  {
    WordOp a(cat, std::vector<ObjectExpr>{q.q, q.q});
    a.apply(1, 2, q.w, {q.q, q.q});
    a.apply(0, 2, q.w.dagger(), {q.q});
    const Morphism mid = compose(q.w, q.w.dagger());
    WordOp b(cat, std::vector<ObjectExpr>{q.q, q.q});
    b.apply(0, 1, q.w, {q.q, q.q});
    b.apply(1, 3, q.w.dagger(), {q.q});
    const double res = std::max(distance(a.morphism(), mid), distance(b.morphism(), mid));
    rep.add("qsystem.frobenius", "frobenius-condition", res, tol);
  }
  double standard_res;
  {
    standard_res = distance(compose(q.w.dagger(), q.w),
                            Morphism::identity(q.q) * Cplx(q.dim_q));
    rep.add("qsystem.standard", "coproduct-normalization", standard_res, tol);
    rep.add("qsystem.dimension", "dimension-consistency",
            std::abs(q.dim_q - cat.dim(q.q)), tol);
  }

  const long endo_dim = bimodule_endo_dim(cat, q);
  rep.add_bool("qsystem.simple", "bimodule-simplicity", endo_dim == 1,
               "dim End = " + std::to_string(endo_dim));
  const bool irr = q.q.mult(cat.unit()) == 1;
  rep.add_bool("qsystem.irreducible", "unit-multiplicity", irr);

  if (flags) {
    flags->standard = standard_res < tol;
    flags->simple = endo_dim == 1;
    flags->irreducible = irr;
  }
  return rep;
}

}  // namespace fcat

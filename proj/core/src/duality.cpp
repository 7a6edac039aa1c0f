#include "fusioncat/duality.hpp"

#include <cmath>

namespace fcat {

DualityPair standard_pair_simple(const SkeletalCategory& cat, LabelId s) {
  const FusionRules& rules = cat.rules();
  const LabelId sb = rules.dual(s);
  const double root = std::sqrt(cat.dim(s));
  DualityPair p;
  p.obj = ObjectExpr::simple(s);
  p.dual = ObjectExpr::simple(sb);

  PairIndexer cup(rules, p.dual, p.obj);
  Morphism r(cat.unit_expr(), cup.product());
  Mat rb = Mat::Zero(cup.product().mult(cat.unit()), 1);
  rb(cup.index(cat.unit(), sb, 0, s, 0, 0), 0) = root;
  r.set_block(cat.unit(), std::move(rb));
  p.R = std::move(r);

  PairIndexer cap(rules, p.obj, p.dual);
  Morphism q(cat.unit_expr(), cap.product());
  Mat qb = Mat::Zero(cap.product().mult(cat.unit()), 1);
  qb(cap.index(cat.unit(), s, 0, sb, 0, 0), 0) = root * cat.pivotal(s);
  q.set_block(cat.unit(), std::move(qb));
  p.Rbar = std::move(q);
  return p;
}

DualityPair standard_pair(const SkeletalCategory& cat, const ObjectExpr& x) {
  const FusionRules& rules = cat.rules();
  DualityPair p;
  p.obj = x;
  p.dual = x.dual(rules);

  PairIndexer cup(rules, p.dual, p.obj);
  PairIndexer cap(rules, p.obj, p.dual);
  Morphism r(cat.unit_expr(), cup.product());
  Morphism q(cat.unit_expr(), cap.product());
  const long ne_cup = cup.product().mult(cat.unit());
  const long ne_cap = cap.product().mult(cat.unit());
  Mat rb = Mat::Zero(ne_cup, 1);
  Mat qb = Mat::Zero(ne_cap, 1);
  for (const auto& [s, n] : x.mults()) {
    const LabelId sb = rules.dual(s);
    const double root = std::sqrt(cat.dim(s));
    for (long i = 0; i < n; ++i) {
      rb(cup.index(cat.unit(), sb, i, s, i, 0), 0) = root;
      qb(cap.index(cat.unit(), s, i, sb, i, 0), 0) = root * cat.pivotal(s);
    }
  }
  if (ne_cup > 0) r.set_block(cat.unit(), std::move(rb));
  if (ne_cap > 0) q.set_block(cat.unit(), std::move(qb));
  p.R = std::move(r);
  p.Rbar = std::move(q);
  return p;
}

DualityPair tensor_pair(const SkeletalCategory& cat, const DualityPair& a,
                        const DualityPair& b) {
  DualityPair p;
  p.obj = tensor_expr(cat.rules(), a.obj, b.obj);
  p.dual = tensor_expr(cat.rules(), b.dual, a.dual);

  {
    WordOp w(cat, std::vector<ObjectExpr>{});
    w.apply(0, 0, b.R, {b.dual, b.obj});
    w.apply(1, 1, a.R, {a.dual, a.obj});
    // word: (bdual, adual, aobj, bobj) -> ((bdual adual)(aobj bobj))
    BracketTree tgt = BracketTree::node(
        BracketTree::node(BracketTree::leaf(b.dual), BracketTree::leaf(a.dual)),
        BracketTree::node(BracketTree::leaf(a.obj), BracketTree::leaf(b.obj)));
    p.R = w.finish(tgt);
  }
  {
    WordOp w(cat, std::vector<ObjectExpr>{});
    w.apply(0, 0, a.Rbar, {a.obj, a.dual});
    w.apply(1, 1, b.Rbar, {b.obj, b.dual});
    BracketTree tgt = BracketTree::node(
        BracketTree::node(BracketTree::leaf(a.obj), BracketTree::leaf(b.obj)),
        BracketTree::node(BracketTree::leaf(b.dual), BracketTree::leaf(a.dual)));
    p.Rbar = w.finish(tgt);
  }
  return p;
}

DualityPair swapped_pair(const SkeletalCategory& cat, const DualityPair& p) {
  (void)cat;
  DualityPair q;
  q.obj = p.dual;
  q.dual = p.obj;
  q.R = p.Rbar;
  q.Rbar = p.R;
  return q;
}

StandardPair standard_solution(const SkeletalCategory& cat, LabelId s) {
  DualityPair p = standard_pair_simple(cat, s);
  return StandardPair{s, std::move(p.R), std::move(p.Rbar)};
}

double conjugate_equation_residual(const SkeletalCategory& cat, const DualityPair& p) {
  double res = 0;
  {
    // (i (x) Rbar*)(R (x) i) = i on dual
    WordOp w(cat, std::vector<ObjectExpr>{p.dual});
    w.apply(0, 0, p.R, {p.dual, p.obj});
    w.apply(1, 3, p.Rbar.dagger(), {});
    res = std::max(res, distance(w.morphism(), Morphism::identity(p.dual)));
  }
  {
    // (i (x) R*)(Rbar (x) i) = i on obj
    WordOp w(cat, std::vector<ObjectExpr>{p.obj});
    w.apply(0, 0, p.Rbar, {p.obj, p.dual});
    w.apply(1, 3, p.R.dagger(), {});
    res = std::max(res, distance(w.morphism(), Morphism::identity(p.obj)));
  }
  return res;
}

Cplx categorical_trace(const SkeletalCategory& cat, const Morphism& t) {
  if (!(t.src() == t.tgt())) throw ShapeError("categorical trace needs an endomorphism");
  if (t.src().empty()) return 0;
  DualityPair p = standard_pair(cat, t.src());
  Morphism mid = tensor(cat.rules(), Morphism::identity(p.dual), t);
  Morphism tr = compose(p.R.dagger(), compose(mid, p.R));
  return tr.unit_scalar_value(cat.unit());
}

Cplx categorical_trace_right(const SkeletalCategory& cat, const Morphism& t) {
  if (!(t.src() == t.tgt())) throw ShapeError("categorical trace needs an endomorphism");
  if (t.src().empty()) return 0;
  DualityPair p = standard_pair(cat, t.src());
  Morphism mid = tensor(cat.rules(), t, Morphism::identity(p.dual));
  Morphism tr = compose(p.Rbar.dagger(), compose(mid, p.Rbar));
  return tr.unit_scalar_value(cat.unit());
}

Morphism partial_trace_left(const SkeletalCategory& cat, const ObjectExpr& x,
                            const ObjectExpr& y, const ObjectExpr& z, const Morphism& t) {
  DualityPair p = standard_pair(cat, x);
  WordOp w(cat, std::vector<ObjectExpr>{y});
  w.apply(0, 0, p.R, {p.dual, x});
  w.apply(1, 3, t, {x, z});
  w.apply(0, 2, p.R.dagger(), {});
  return w.morphism();
}

Morphism partial_trace_right(const SkeletalCategory& cat, const ObjectExpr& x,
                             const ObjectExpr& y, const ObjectExpr& z, const Morphism& t) {
  DualityPair p = standard_pair(cat, x);
  WordOp w(cat, std::vector<ObjectExpr>{y});
  w.apply(1, 1, p.Rbar, {x, p.dual});
  w.apply(0, 2, t, {z, x});
  w.apply(1, 3, p.Rbar.dagger(), {});
  return w.morphism();
}

Morphism dual_morphism(const SkeletalCategory& cat, const Morphism& t, const DualityPair& src,
                       const DualityPair& tgt) {
  if (!(t.src() == src.obj) || !(t.tgt() == tgt.obj))
    throw ShapeError("dual_morphism: duality data does not match the morphism");
  // T^vee = (R_Y* (x) i)(i (x) T (x) i)(i (x) Rbar_X)
  WordOp w(cat, std::vector<ObjectExpr>{tgt.dual});
  w.apply(1, 1, src.Rbar, {src.obj, src.dual});
  w.apply(1, 2, t, {tgt.obj});
  w.apply(0, 2, tgt.R.dagger(), {});
  return w.morphism();
}

Morphism dual_morphism(const SkeletalCategory& cat, const Morphism& t) {
  return dual_morphism(cat, t, standard_pair(cat, t.src()), standard_pair(cat, t.tgt()));
}

ObjectExpr word_expr(const SkeletalCategory& cat, const std::vector<ObjectExpr>& word) {
  if (word.empty()) return cat.unit_expr();
  ObjectExpr e = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) e = tensor_expr(cat.rules(), e, word[i]);
  return e;
}

Morphism isotypic_projection(const SkeletalCategory& cat, const std::vector<ObjectExpr>& word,
                             LabelId r) {
  const ObjectExpr x = word_expr(cat, word);
  Morphism p(x, x);
  const long n = x.mult(r);
  if (n > 0) p.set_block(r, Mat::Identity(n, n));
  return p;
}

Morphism isotypic_scalar(const SkeletalCategory& cat, const ObjectExpr& x,
                         const std::vector<Cplx>& value_by_label) {
  (void)cat;
  Morphism m(x, x);
  for (const auto& [r, n] : x.mults()) {
    m.set_block(r, value_by_label.at(r) * Mat::Identity(n, n));
  }
  return m;
}

}  // namespace fcat

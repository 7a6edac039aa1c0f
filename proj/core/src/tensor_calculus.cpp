#include "fusioncat/tensor_calculus.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace fcat {

namespace {
using SlotKey = std::tuple<LabelId, long, LabelId, long, long>;
}

// ---------------------------------------------------------------------------
// PairIndexer

PairIndexer::PairIndexer(const FusionRules& rules, const ObjectExpr& a, const ObjectExpr& b) {
  slots_.resize(rules.size());
  std::map<LabelId, long> mult;
  for (const auto& [s, ns] : a.mults())
    for (long i = 0; i < ns; ++i)
      for (const auto& [t, nt] : b.mults())
        for (long j = 0; j < nt; ++j)
          for (LabelId r = 0; r < rules.size(); ++r) {
            const long nf = rules.mult(s, t, r);
            for (long mu = 0; mu < nf; ++mu) {
              slots_[r].push_back(PairSlot{s, i, t, j, mu});
              ++mult[r];
            }
          }
  product_ = ObjectExpr(std::move(mult));
}

const std::vector<PairSlot>& PairIndexer::slots(LabelId r) const { return slots_.at(r); }

long PairIndexer::index(LabelId r, LabelId s, long i, LabelId t, long j, long mu) const {
  const auto& v = slots_.at(r);
  const SlotKey key{s, i, t, j, mu};
  auto cmp = [](const PairSlot& p, const SlotKey& k) {
    return SlotKey{p.s, p.i, p.t, p.j, p.mu} < k;
  };
  auto it = std::lower_bound(v.begin(), v.end(), key, cmp);
  if (it == v.end() || SlotKey{it->s, it->i, it->t, it->j, it->mu} != key)
    throw ShapeError("pair slot not found");
  return static_cast<long>(it - v.begin());
}

ObjectExpr tensor_expr(const FusionRules& rules, const ObjectExpr& a, const ObjectExpr& b) {
  return PairIndexer(rules, a, b).product();
}

// ---------------------------------------------------------------------------
// tensor of morphisms

Morphism tensor(const FusionRules& rules, const Morphism& f, const Morphism& g) {
  PairIndexer src(rules, f.src(), g.src());
  PairIndexer tgt(rules, f.tgt(), g.tgt());
  Morphism out(src.product(), tgt.product());
  for (LabelId r = 0; r < rules.size(); ++r) {
    const auto& cols = src.slots(r);
    if (cols.empty() || tgt.slots(r).empty()) continue;
    Mat m = Mat::Zero(tgt.slots(r).size(), cols.size());
    bool nonzero = false;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const PairSlot& ps = cols[c];
      const Mat& fb = f.block(ps.s);
      const Mat& gb = g.block(ps.t);
      if (fb.size() == 0 || gb.size() == 0) continue;
      for (long i2 = 0; i2 < fb.rows(); ++i2)
        for (long j2 = 0; j2 < gb.rows(); ++j2) {
          const Cplx v = fb(i2, ps.i) * gb(j2, ps.j);
          if (v == Cplx(0)) continue;
          const long row = tgt.index(r, ps.s, i2, ps.t, j2, ps.mu);
          m(row, c) += v;
          nonzero = true;
        }
    }
    if (nonzero) out.set_block(r, std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// associator

Morphism assoc(const SkeletalCategory& cat, const ObjectExpr& a, const ObjectExpr& b,
               const ObjectExpr& c) {
  const FusionRules& rules = cat.rules();
  PairIndexer ab(rules, a, b);
  PairIndexer left(rules, ab.product(), c);
  PairIndexer bc(rules, b, c);
  PairIndexer right(rules, a, bc.product());

  Morphism out(left.product(), right.product());
  for (LabelId d = 0; d < rules.size(); ++d) {
    const auto& cols = left.slots(d);
    const auto& rows = right.slots(d);
    if (cols.empty() || rows.empty()) continue;
    Mat m = Mat::Zero(rows.size(), cols.size());
    std::map<std::array<LabelId, 3>, Mat> fcache;
    for (std::size_t col = 0; col < cols.size(); ++col) {
      // col: ((s,i,t,j,mu) at e, then (e, ., c0, k, nu))
      const PairSlot& outer = cols[col];
      const LabelId e = outer.s;
      const long m_idx = outer.i;
      const LabelId c0 = outer.t;
      const long k = outer.j;
      const long nu = outer.mu;
      const PairSlot& inner = ab.slots(e)[m_idx];
      const LabelId s = inner.s, t = inner.t;
      const long i = inner.i, j = inner.j, mu = inner.mu;

      auto fit = fcache.find({s, t, c0});
      if (fit == fcache.end())
        fit = fcache.emplace(std::array<LabelId, 3>{s, t, c0},
                             cat.fsymbols().fmatrix(rules, s, t, c0, d)).first;
      const Mat& F = fit->second;
      const auto lb = FSymbolTable::left_basis(rules, s, t, c0, d);
      const auto rb = FSymbolTable::right_basis(rules, s, t, c0, d);
      long lpos = -1;
      for (std::size_t p = 0; p < lb.size(); ++p)
        if (lb[p] == TreeVertex{e, mu, nu}) {
          lpos = static_cast<long>(p);
          break;
        }
      if (lpos < 0) throw ShapeError("left tree vertex not found in F basis");
      for (std::size_t p = 0; p < rb.size(); ++p) {
        const auto& [fmid, rho, sigma] = rb[p];
        const Cplx v = F(lpos, static_cast<long>(p));
        if (v == Cplx(0)) continue;
        const long fslot = bc.index(fmid, t, j, c0, k, rho);
        const long row = right.index(d, s, i, fmid, fslot, sigma);
        m(row, col) += v;
      }
    }
    out.set_block(d, std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// BracketTree

BracketTree BracketTree::leaf(ObjectExpr e) {
  BracketTree t;
  t.expr_ = std::move(e);
  return t;
}

BracketTree BracketTree::node(BracketTree l, BracketTree r) {
  BracketTree t;
  t.l_ = std::make_shared<BracketTree>(std::move(l));
  t.r_ = std::make_shared<BracketTree>(std::move(r));
  return t;
}

BracketTree BracketTree::comb(const SkeletalCategory& cat, const std::vector<ObjectExpr>& word) {
  if (word.empty()) return leaf(cat.unit_expr());
  BracketTree t = leaf(word[0]);
  for (std::size_t i = 1; i < word.size(); ++i) t = node(std::move(t), leaf(word[i]));
  return t;
}

bool BracketTree::is_leaf() const { return !l_; }
const BracketTree& BracketTree::left() const { return *l_; }
const BracketTree& BracketTree::right() const { return *r_; }

std::vector<ObjectExpr> BracketTree::leaves() const {
  if (is_leaf()) return {expr_};
  auto l = l_->leaves();
  auto r = r_->leaves();
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

ObjectExpr tree_expr(const FusionRules& rules, const BracketTree& t) {
  if (t.is_leaf()) return t.expr();
  return tensor_expr(rules, tree_expr(rules, t.left()), tree_expr(rules, t.right()));
}

namespace {

ObjectExpr comb_expr(const SkeletalCategory& cat, const std::vector<ObjectExpr>& word) {
  if (word.empty()) return cat.unit_expr();
  ObjectExpr e = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) e = tensor_expr(cat.rules(), e, word[i]);
  return e;
}

// pair(L, comb(rw)) -> comb([L] ++ rw)
Morphism append_comb(const SkeletalCategory& cat, const ObjectExpr& l,
                     const std::vector<ObjectExpr>& rw) {
  const FusionRules& rules = cat.rules();
  if (rw.empty()) return Morphism::identity(l);
  if (rw.size() == 1) return Morphism::identity(tensor_expr(rules, l, rw[0]));
  std::vector<ObjectExpr> front(rw.begin(), rw.end() - 1);
  const ObjectExpr cfront = comb_expr(cat, front);
  const ObjectExpr& back = rw.back();
  Morphism step1 = assoc(cat, l, cfront, back).dagger();
  Morphism step2 = tensor(rules, append_comb(cat, l, front), Morphism::identity(back));
  return compose(step2, step1);
}

}  // namespace

Morphism tree_to_comb(const SkeletalCategory& cat, const BracketTree& t) {
  if (t.is_leaf()) return Morphism::identity(t.expr());
  Morphism ul = tree_to_comb(cat, t.left());
  Morphism ur = tree_to_comb(cat, t.right());
  Morphism m0 = tensor(cat.rules(), ul, ur);
  Morphism ap = append_comb(cat, ul.tgt(), t.right().leaves());
  return compose(ap, m0);
}

Morphism rebracket(const SkeletalCategory& cat, const BracketTree& from, const BracketTree& to) {
  return compose(tree_to_comb(cat, to).dagger(), tree_to_comb(cat, from));
}

// ---------------------------------------------------------------------------
// WordOp

WordOp::WordOp(const SkeletalCategory& cat, std::vector<ObjectExpr> word)
    : cat_(&cat), word_(std::move(word)) {
  acc_ = Morphism::identity(comb_expr(cat, word_));
}

WordOp::WordOp(const SkeletalCategory& cat, const BracketTree& source_tree)
    : cat_(&cat), word_(source_tree.leaves()) {
  acc_ = tree_to_comb(cat, source_tree);
}

void WordOp::apply(std::size_t i, std::size_t j, const Morphism& f,
                   std::vector<ObjectExpr> replacement) {
  if (i > j || j > word_.size()) throw ShapeError("word range out of bounds");
  const SkeletalCategory& cat = *cat_;
  std::vector<ObjectExpr> prefix(word_.begin(), word_.begin() + i);
  std::vector<ObjectExpr> mid(word_.begin() + i, word_.begin() + j);
  std::vector<ObjectExpr> suffix(word_.begin() + j, word_.end());

  if (!(f.src() == comb_expr(cat, mid)))
    throw ShapeError("word apply: morphism source does not match the sub-word");
  if (!(f.tgt() == comb_expr(cat, replacement)))
    throw ShapeError("word apply: morphism target does not match the replacement");

  auto nest = [&](const std::vector<ObjectExpr>& m) {
    // tree ((P M) S) with empty parts skipped; empty middle is absorbed
    // strictly via a unit leaf
    BracketTree tm = m.empty() ? BracketTree::leaf(cat.unit_expr()) : BracketTree::comb(cat, m);
    if (!prefix.empty()) tm = BracketTree::node(BracketTree::comb(cat, prefix), std::move(tm));
    if (!suffix.empty()) tm = BracketTree::node(std::move(tm), BracketTree::comb(cat, suffix));
    return tm;
  };
  // The unit leaf standing in for an empty middle has strictly the same
  // basis as its absence, so rebracket targets line up either way.
  auto nest_mor = [&](const Morphism& g) {
    Morphism m = g;
    if (!prefix.empty())
      m = tensor(cat.rules(), Morphism::identity(comb_expr(cat, prefix)), m);
    if (!suffix.empty())
      m = tensor(cat.rules(), m, Morphism::identity(comb_expr(cat, suffix)));
    return m;
  };

  Morphism u1 = rebracket(cat, BracketTree::comb(cat, word_), nest(mid));
  Morphism mf = nest_mor(f);
  std::vector<ObjectExpr> nw = prefix;
  nw.insert(nw.end(), replacement.begin(), replacement.end());
  nw.insert(nw.end(), suffix.begin(), suffix.end());
  Morphism u2 = rebracket(cat, nest(replacement), BracketTree::comb(cat, nw));

  acc_ = compose(u2, compose(mf, compose(u1, acc_)));
  word_ = std::move(nw);
}

void WordOp::apply_endo(std::size_t i, std::size_t j, const Morphism& f) {
  std::vector<ObjectExpr> mid(word_.begin() + i, word_.begin() + j);
  apply(i, j, f, std::move(mid));
}

void WordOp::drop_units() {
  const ObjectExpr one = cat_->unit_expr();
  std::vector<ObjectExpr> nw;
  for (auto& w : word_)
    if (!(w == one)) nw.push_back(w);
  word_ = std::move(nw);
}

void WordOp::scale(Cplx c) { acc_ = acc_ * c; }

Morphism WordOp::finish(const BracketTree& target) const {
  return compose(rebracket(*cat_, BracketTree::comb(*cat_, word_), target), acc_);
}

// ---------------------------------------------------------------------------
// DirectSum

DirectSum direct_sum(std::vector<ObjectExpr> parts) {
  DirectSum ds;
  ds.parts = std::move(parts);
  ObjectExpr total;
  for (auto& p : ds.parts) total = total.plus(p);
  ds.total = total;
  return ds;
}

Morphism DirectSum::injection(std::size_t p) const {
  Morphism f(parts.at(p), total);
  std::map<LabelId, long> offset;
  for (std::size_t q = 0; q < p; ++q)
    for (auto& [r, n] : parts[q].mults()) offset[r] += n;
  for (auto& [r, n] : parts[p].mults()) {
    Mat m = Mat::Zero(total.mult(r), n);
    m.block(offset[r], 0, n, n) = Mat::Identity(n, n);
    f.set_block(r, std::move(m));
  }
  return f;
}

Morphism DirectSum::projection(std::size_t p) const { return injection(p).dagger(); }

}  // namespace fcat

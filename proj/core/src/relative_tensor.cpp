#include "fusioncat/relative_tensor.hpp"

#include <Eigen/Eigenvalues>

namespace fcat {

namespace {

// phase convention: each row's largest entry positive real
void fix_row_phases(Mat& m) {
  for (long i = 0; i < m.rows(); ++i) {
    long jmax = 0;
    double best = 0;
    for (long j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > best) {
        best = std::abs(m(i, j));
        jmax = j;
      }
    if (best > 0) m.row(i) *= std::conj(m(i, jmax) / best);
  }
}

bool is_regular_left(const SkeletalCategory& cat, const QSystem& q,
                     const ModuleStructure& n) {
  return n.m == q.q && distance(n.left, q.product()) < cat.tol();
}
bool is_regular_right(const SkeletalCategory& cat, const QSystem& q,
                      const ModuleStructure& m) {
  return m.m == q.q && distance(m.right, q.product()) < cat.tol();
}

}  // namespace

RelativeTensorData relative_tensor(const SkeletalCategory& cat, const QSystem& q,
                                   const ModuleStructure& mright,
                                   const ModuleStructure& nleft) {
  if (mright.side == ModuleSide::Left) throw InputError("left factor must be a right module");
  if (nleft.side == ModuleSide::Right) throw InputError("right factor must be a left module");
  const FusionRules& rules = cat.rules();

  RelativeTensorData rt;
  // p = d^{-1} (i (x) v* w* (x) i)(m^{r*} (x) m^{l*})
  WordOp w(cat, std::vector<ObjectExpr>{mright.m, nleft.m});
  w.apply(0, 1, mright.right.dagger(), {mright.m, q.q});
  w.apply(2, 3, nleft.left.dagger(), {q.q, nleft.m});
  w.apply(1, 3, compose(q.v.dagger(), q.w.dagger()), {});
  w.scale(1.0 / q.dim_q);
  rt.projection = w.morphism();
  rt.idem_residual = distance(compose(rt.projection, rt.projection), rt.projection);
  rt.selfadj_residual = distance(rt.projection.dagger(), rt.projection);

  if (is_regular_left(cat, q, nleft)) {
    // model M (x)_Q Q = M with P = m^r
    rt.product = mright.m;
    rt.structure = mright.right;
  } else if (is_regular_right(cat, q, mright)) {
    rt.product = nleft.m;
    rt.structure = nleft.left;
  } else {
    std::map<LabelId, long> ranks;
    std::map<LabelId, Mat> pblocks;
    for (const auto& [r, b] : rt.projection.blocks()) {
      Eigen::SelfAdjointEigenSolver<Mat> es(Mat(0.5 * (b + b.adjoint())));
      std::vector<long> keep;
      for (long i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
      if (keep.empty()) continue;
      Mat pb(keep.size(), b.cols());
      for (std::size_t k = 0; k < keep.size(); ++k)
        pb.row(k) = es.eigenvectors().col(keep[k]).adjoint();
      fix_row_phases(pb);
      ranks[r] = static_cast<long>(keep.size());
      pblocks[r] = std::sqrt(q.dim_q) * pb;
    }
    rt.product = ObjectExpr(std::move(ranks));
    Morphism p(rt.projection.src(), rt.product);
    for (auto& [r, b] : pblocks) p.set_block(r, std::move(b));
    rt.structure = std::move(p);
  }

  {
    // balance: P (m^r (x) i) = P (i (x) m^l) on M (x) Q (x) N
    WordOp a(cat, std::vector<ObjectExpr>{mright.m, q.q, nleft.m});
    a.apply(0, 2, mright.right, {mright.m});
    const Morphism left = compose(rt.structure, a.morphism());
    WordOp b(cat, std::vector<ObjectExpr>{mright.m, q.q, nleft.m});
    b.apply(1, 3, nleft.left, {nleft.m});
    const Morphism right = compose(rt.structure, b.morphism());
    rt.balance_residual = distance(left, right);
  }
  return rt;
}

ModuleStructure descend_bimodule(const SkeletalCategory& cat, const QSystem& q,
                                 const ModuleStructure& mbi, const ModuleStructure& nbi,
                                 const RelativeTensorData& rt) {
  const FusionRules& rules = cat.rules();
  ModuleStructure out;
  out.side = ModuleSide::Bi;
  out.m = rt.product;
  const Morphism pd = rt.structure.dagger() * Cplx(1.0 / q.dim_q);
  {
    // left action: P (m^l_M (x) i_N)(i_Q (x) P+)
    WordOp w(cat, std::vector<ObjectExpr>{q.q, rt.product});
    w.apply(1, 2, pd, {mbi.m, nbi.m});
    w.apply(0, 2, mbi.left, {mbi.m});
    out.left = compose(rt.structure, w.morphism());
  }
  {
    WordOp w(cat, std::vector<ObjectExpr>{rt.product, q.q});
    w.apply(0, 1, pd, {mbi.m, nbi.m});
    w.apply(1, 3, nbi.right, {nbi.m});
    out.right = compose(rt.structure, w.morphism());
  }
  return out;
}

CheckReport relative_associator_check(const SkeletalCategory& cat, const QSystem& q,
                                      const ModuleStructure& x, const ModuleStructure& y,
                                      const ModuleStructure& z) {
  CheckReport rep;
  const FusionRules& rules = cat.rules();
  RelativeTensorData xy = relative_tensor(cat, q, x, y);
  RelativeTensorData yz = relative_tensor(cat, q, y, z);
  const ModuleStructure xy_bi = descend_bimodule(cat, q, x, y, xy);
  const ModuleStructure yz_bi = descend_bimodule(cat, q, y, z, yz);
  RelativeTensorData xy_z = relative_tensor(cat, q, xy_bi, z);
  RelativeTensorData x_yz = relative_tensor(cat, q, x, yz_bi);

  // A = P_{XY,Z}(P_{X,Y} (x) i), B = P_{X,YZ}(i (x) P_{Y,Z})
  WordOp wa(cat, std::vector<ObjectExpr>{x.m, y.m, z.m});
  wa.apply(0, 2, xy.structure, {xy.product});
  const Morphism a = compose(xy_z.structure, wa.morphism());
  WordOp wb(cat, std::vector<ObjectExpr>{x.m, y.m, z.m});
  wb.apply(1, 3, yz.structure, {yz.product});
  const Morphism b = compose(x_yz.structure, wb.morphism());

  const Morphism phi = compose(b, a.dagger()) * Cplx(1.0 / (q.dim_q * q.dim_q));
  rep.add("relassoc.unitary", "relative-associator-unitarity",
          std::max(distance(compose(phi, phi.dagger()), Morphism::identity(phi.tgt())),
                   distance(compose(phi.dagger(), phi), Morphism::identity(phi.src()))),
          cat.tol());
  rep.add("relassoc.defining", "relative-associator-relation",
          distance(compose(phi, a), b), cat.tol());
  return rep;
}

}  // namespace fcat

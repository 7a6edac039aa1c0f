#include "fusioncat/representation.hpp"

#include <Eigen/SVD>

namespace fcat {

namespace {

Morphism unit_vector(const SkeletalCategory& cat, const ObjectExpr& z, long j) {
  Morphism xi(cat.unit_expr(), z);
  Mat col = Mat::Zero(z.mult(cat.unit()), 1);
  col(j, 0) = 1.0;
  xi.set_block(cat.unit(), col);
  return xi;
}

}  // namespace

FusionRepresentation rep_from_braiding(const SkeletalCategory& cat,
                                       const HalfBraidedObject& z) {
  FusionRepresentation rep;
  rep.dim = z.underlying.mult(cat.unit());
  for (LabelId x = 0; x < cat.n_labels(); ++x) {
    Mat m = Mat::Zero(rep.dim, rep.dim);
    const DualityPair px = standard_pair_simple(cat, x);
    const ObjectExpr ex = cat.simple(x);
    for (long j = 0; j < rep.dim; ++j) {
      WordOp w(cat, std::vector<ObjectExpr>{});
      w.apply(0, 0, px.Rbar, {ex, px.dual});
      w.apply(1, 1, unit_vector(cat, z.underlying, j), {z.underlying});
      w.apply(0, 2, z.c(x), {z.underlying, ex});
      w.apply(1, 3, px.Rbar.dagger(), {});
      const Mat& col = w.morphism().block(cat.unit());
      if (col.size() > 0) m.col(j) = col.col(0);
    }
    rep.pi.push_back(std::move(m));
  }
  return rep;
}

CheckReport verify_representation(const SkeletalCategory& cat,
                                  const FusionRepresentation& rep) {
  CheckReport out;
  const double tol = cat.tol();
  double star = 0, norm = 0, mult = 0;
  for (LabelId s = 0; s < cat.n_labels(); ++s) {
    star = std::max(star,
                    (rep.matrix(cat.dual(s)) - rep.matrix(s).adjoint()).norm());
    Eigen::JacobiSVD<Mat> svd(rep.matrix(s));
    const double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    norm = std::max(norm, top - cat.dim(s));
    for (LabelId t = 0; t < cat.n_labels(); ++t) {
      Mat rhs = Mat::Zero(rep.dim, rep.dim);
      for (LabelId r = 0; r < cat.n_labels(); ++r)
        rhs += static_cast<double>(cat.rules().mult(s, t, r)) * rep.matrix(r);
      mult = std::max(mult, (rep.matrix(s) * rep.matrix(t) - rhs).norm());
    }
  }
  out.add("rep.star", "representation-star", star, tol);
  out.add("rep.norm-bound", "representation-norm-bound", std::max(norm, 0.0), tol);
  out.add("rep.multiplicativity", "representation-multiplicativity", mult, tol);
  return out;
}

InvarianceReport invariance_diagnostics(const SkeletalCategory& cat,
                                        const FusionRepresentation& rep,
                                        const std::vector<LabelId>& f) {
  InvarianceReport out;
  const long n = rep.dim;
  if (n == 0) return out;

  Mat stack(static_cast<long>(f.size()) * n, n);
  for (std::size_t i = 0; i < f.size(); ++i)
    stack.middleRows(static_cast<long>(i) * n, n) =
        rep.matrix(f[i]) - cat.dim(f[i]) * Mat::Identity(n, n);

  Eigen::JacobiSVD<Mat> svd(stack, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cut = 1e-9 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  long rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  const long null_dim = n - rank;
  out.invariant_basis = svd.matrixV().rightCols(null_dim);

  Mat pix = Mat::Zero(n, n);
  out.dim_xf = 0;
  for (LabelId s : f) {
    pix += rep.matrix(s);
    out.dim_xf += cat.dim(s);
  }
  for (long j = 0; j < null_dim; ++j) {
    const Vec v = out.invariant_basis.col(j);
    double r = 0;
    for (LabelId s : f) r = std::max(r, (rep.matrix(s) * v - cat.dim(s) * v).norm());
    out.vector_residuals.push_back(r);
  }

  const Mat pperp =
      Mat::Identity(n, n) - out.invariant_basis * out.invariant_basis.adjoint();
  Eigen::JacobiSVD<Mat> svd2(Mat(pperp * pix * pperp));
  out.norm_on_complement = svd2.singularValues().size() ? svd2.singularValues()(0) : 0.0;
  out.gap = out.dim_xf - out.norm_on_complement;
  return out;
}

Multiplier vector_multiplier(const SkeletalCategory& cat, const FusionRepresentation& rep,
                             const Vec& xi) {
  Multiplier phi;
  for (LabelId s = 0; s < cat.n_labels(); ++s)
    phi.values[s] = xi.dot(rep.matrix(s) * xi) / cat.dim(s);
  return phi;
}

}  // namespace fcat

#include "fusioncat/gns.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <sstream>

#include "fusioncat/half_braiding.hpp"

namespace fcat {

namespace {

Morphism pseudo_inverse(const Morphism& m, double cut) {
  Morphism out(m.tgt(), m.src());
  for (const auto& [r, b] : m.blocks()) {
    Eigen::JacobiSVD<Mat> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
    for (long i = 0; i < sv.size(); ++i)
      if (sv(i) > cut) inv(i) = 1.0 / sv(i);
    out.set_block(r, svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint());
  }
  return out;
}

// phase convention: each row's largest-magnitude entry is positive real
void fix_row_phases(Mat& m) {
  for (long i = 0; i < m.rows(); ++i) {
    long jmax = 0;
    double best = 0;
    for (long j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > best) {
        best = std::abs(m(i, j));
        jmax = j;
      }
    if (best > 0) {
      const Cplx ph = m(i, jmax) / best;
      m.row(i) *= std::conj(ph);
    }
  }
}

}  // namespace

GnsCenterObject build_zphi(const SkeletalCategory& cat, const Multiplier& phi,
                           const std::vector<LabelId>& window) {
  CpVerdict verdict = cp_check(cat, phi, {window});
  if (!verdict.positive) {
    std::ostringstream os;
    os << "multiplier is not positive on the window: min eigenvalue "
       << verdict.min_eigenvalue;
    if (verdict.witness)
      os << " with witness on isotypic component '" << cat.name(verdict.witness->label) << "'";
    throw DiagnosticError(os.str());
  }

  GnsCenterObject g;
  g.phi = phi;
  g.window = window;
  std::sort(g.window.begin(), g.window.end());
  if (!std::count(g.window.begin(), g.window.end(), cat.unit()))
    throw InputError("the GNS window must contain the unit label");
  g.aphi = build_aphi(cat, phi, g.window);

  const HalfBraidedObject reg = regular_half_braiding(cat, g.window);
  DirectSum sum = direct_sum(g.aphi.summands);
  const std::map<LabelId, Mat> grand = g.aphi.grand();

  // delta_e gives the identity rescaling: keep Z_reg on the nose
  double ident_res = 0;
  for (const auto& [r, h] : grand)
    ident_res = std::max(ident_res, (h - Mat::Identity(h.rows(), h.cols())).norm());

  Morphism v(sum.total, ObjectExpr{});
  if (ident_res < cat.tol()) {
    v = Morphism::identity(sum.total);
  } else {
    std::map<LabelId, long> ranks;
    std::map<LabelId, Mat> vblocks;
    for (const auto& [r, h] : grand) {
      Eigen::SelfAdjointEigenSolver<Mat> es(Mat(0.5 * (h + h.adjoint())));
      const double cut = cat.tol() * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
      std::vector<long> keep;
      for (long i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > cut) keep.push_back(i);
      if (keep.empty()) continue;
      Mat vb(keep.size(), h.cols());
      for (std::size_t k = 0; k < keep.size(); ++k)
        vb.row(k) =
            std::sqrt(es.eigenvalues()(keep[k])) * es.eigenvectors().col(keep[k]).adjoint();
      fix_row_phases(vb);
      ranks[r] = static_cast<long>(keep.size());
      vblocks[r] = std::move(vb);
    }
    Morphism vq(sum.total, ObjectExpr(std::move(ranks)));
    for (auto& [r, b] : vblocks) vq.set_block(r, std::move(b));
    v = std::move(vq);
  }

  g.quotient = v;
  g.z.underlying = v.tgt();
  g.z.summand_labels.clear();
  g.z.summands.clear();

  const Morphism vp = pseudo_inverse(v, std::sqrt(cat.tol()));
  for (LabelId x = 0; x < cat.n_labels(); ++x) {
    const Morphism id_x = Morphism::identity(cat.simple(x));
    g.z.braiding.push_back(compose(tensor(cat.rules(), v, id_x),
                                   compose(reg.c(x), tensor(cat.rules(), id_x, vp))));
  }
  g.z.truncated_columns = reg.truncated_columns;

  const auto it = std::find(g.window.begin(), g.window.end(), cat.unit());
  g.xi = compose(v, sum.injection(static_cast<std::size_t>(it - g.window.begin())));
  g.rep = rep_from_braiding(cat, g.z);
  return g;
}

GnsCenterObject build_zphi(const SkeletalCategory& cat, const Multiplier& phi) {
  std::vector<LabelId> all;
  for (LabelId s = 0; s < cat.n_labels(); ++s) all.push_back(s);
  return build_zphi(cat, phi, all);
}

double zphi_roundtrip_residual(const SkeletalCategory& cat, const GnsCenterObject& g) {
  const Mat xib = g.xi.block(cat.unit());
  if (xib.size() == 0) return 1.0;
  const Vec xi = xib.col(0);
  double res = 0;
  for (LabelId s : g.window) {
    const Cplx got = xi.dot(g.rep.matrix(s) * xi) / cat.dim(s);
    res = std::max(res, std::abs(got - g.phi.at(s)));
  }
  return res;
}

bool zphi_cyclic(const SkeletalCategory& cat, const GnsCenterObject& g) {
  const Mat xib = g.xi.block(cat.unit());
  if (xib.size() == 0) return g.rep.dim == 0;
  const Vec xi = xib.col(0);
  Mat span(g.rep.dim, static_cast<long>(g.window.size()));
  for (std::size_t i = 0; i < g.window.size(); ++i)
    span.col(static_cast<long>(i)) = g.rep.matrix(g.window[i]) * xi;
  Eigen::JacobiSVD<Mat> svd(span);
  const auto& sv = svd.singularValues();
  long rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * std::max(1.0, sv(0))) ++rank;
  return rank == g.rep.dim;
}

}  // namespace fcat

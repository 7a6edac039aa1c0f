#include "fusioncat/cstar_decompose.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <random>

namespace fcat {

namespace {

std::vector<Mat> left_mult_matrices(const SkeletalCategory& cat) {
  const std::size_t n = cat.n_labels();
  std::vector<Mat> l(n, Mat::Zero(n, n));
  for (LabelId s = 0; s < n; ++s)
    for (LabelId t = 0; t < n; ++t)
      for (LabelId r = 0; r < n; ++r)
        l[s](r, t) = static_cast<double>(cat.rules().mult(s, t, r));
  return l;
}

Mat element(const std::vector<Mat>& l, const Vec& coeffs) {
  Mat a = Mat::Zero(l[0].rows(), l[0].cols());
  for (std::size_t r = 0; r < l.size(); ++r) a += coeffs(static_cast<long>(r)) * l[r];
  return a;
}

// coefficient star: (a*)_r = conj(a_rbar)
Vec coeff_star(const SkeletalCategory& cat, const Vec& a) {
  Vec out(a.size());
  for (long r = 0; r < a.size(); ++r) out(r) = std::conj(a(cat.dual(static_cast<LabelId>(r))));
  return out;
}

// eigenvalue clusters of a self-adjoint matrix, separated by a relative gap
std::vector<std::vector<long>> cluster_eigenvalues(const RVec& ev, double rel_gap,
                                                   bool* ambiguous) {
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  const double gap = rel_gap * scale;
  std::vector<std::vector<long>> clusters;
  std::vector<long> cur{0};
  for (long i = 1; i < ev.size(); ++i) {
    if (ev(i) - ev(i - 1) > gap) {
      clusters.push_back(cur);
      cur.clear();
    } else if (ev(i) - ev(i - 1) > gap * 1e-3) {
      *ambiguous = true;  // in the grey zone between "equal" and "separated"
    }
    cur.push_back(i);
  }
  clusters.push_back(cur);
  return clusters;
}

Vec solve_coeffs(const std::vector<Mat>& l, const Mat& target) {
  const long n = static_cast<long>(l.size());
  const long nn = target.rows() * target.cols();
  Mat m(nn, n);
  for (long r = 0; r < n; ++r) m.col(r) = Eigen::Map<const Vec>(l[r].data(), nn);
  const Vec y = Eigen::Map<const Vec>(target.data(), nn);
  return m.colPivHouseholderQr().solve(y);
}

}  // namespace

CStarDecomposition decompose_cstar_finite(const SkeletalCategory& cat) {
  const long n = static_cast<long>(cat.n_labels());
  const std::vector<Mat> l = left_mult_matrices(cat);

  // coefficient-space basis of the center: [sum_r a_r L_r, L_s] = 0 for all s
  Mat constraints(n * n * n, n);
  for (LabelId s = 0; s < cat.n_labels(); ++s)
    for (long r = 0; r < n; ++r) {
      const Mat comm = l[r] * l[s] - l[s] * l[r];
      constraints.block(static_cast<long>(s) * n * n, r, n * n, 1) =
          Eigen::Map<const Vec>(comm.data(), n * n);
    }
  Eigen::JacobiSVD<Mat> csvd(constraints, Eigen::ComputeThinV);
  const auto& csv = csvd.singularValues();
  long crank = 0;
  for (long i = 0; i < csv.size(); ++i)
    if (csv(i) > 1e-9 * std::max(1.0, csv(0))) ++crank;
  const Mat center_basis = csvd.matrixV().rightCols(n - crank);

  std::mt19937 rng(987654);
  std::normal_distribution<double> gauss;

  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec coeffs = Vec::Zero(n);
    for (long j = 0; j < center_basis.cols(); ++j)
      coeffs += Cplx(gauss(rng), gauss(rng)) * center_basis.col(j);
    coeffs = 0.5 * (coeffs + coeff_star(cat, coeffs));
    const Mat a = element(l, coeffs);

    Eigen::SelfAdjointEigenSolver<Mat> es(Mat(0.5 * (a + a.adjoint())));
    bool ambiguous = false;
    const auto clusters = cluster_eigenvalues(es.eigenvalues(), 1e-6, &ambiguous);
    if (ambiguous) continue;
    if (static_cast<long>(clusters.size()) != center_basis.cols()) continue;

    CStarDecomposition dec;
    bool ok = true;
    Mat partition = Mat::Zero(n, n);
    for (const auto& cl : clusters) {
      Mat p = Mat::Zero(n, n);
      for (long idx : cl) p += es.eigenvectors().col(idx) * es.eigenvectors().col(idx).adjoint();
      partition += p;
      for (LabelId s = 0; s < cat.n_labels(); ++s)
        dec.commute_residual = std::max(dec.commute_residual, (p * l[s] - l[s] * p).norm());

      const double root = std::sqrt(static_cast<double>(cl.size()));
      const long bdim = static_cast<long>(std::lround(root));
      if (std::abs(root - bdim) > 1e-6) {
        ok = false;
        break;
      }

      CStarBlock block;
      block.dim = bdim;
      block.central_coeffs = solve_coeffs(l, p);

      // a minimal projection: one eigenvalue cluster of a generic
      // self-adjoint element compressed to this block
      Mat q;
      for (int tries = 0; tries < 8 && q.size() == 0; ++tries) {
        Vec bc(n);
        for (long r = 0; r < n; ++r) bc(r) = Cplx(gauss(rng), gauss(rng));
        bc = 0.5 * (bc + coeff_star(cat, bc));
        const Mat b = p * element(l, bc) * p;
        Eigen::SelfAdjointEigenSolver<Mat> bes(Mat(0.5 * (b + b.adjoint())));
        bool amb2 = false;
        const auto bcl = cluster_eigenvalues(bes.eigenvalues(), 1e-7, &amb2);
        if (amb2) continue;
        for (const auto& c2 : bcl) {
          // skip the kernel cluster coming from the complement of the block
          const double mean =
              std::abs(bes.eigenvalues()(c2.front())) + std::abs(bes.eigenvalues()(c2.back()));
          if (mean < 1e-7) continue;
          if (static_cast<long>(c2.size()) != bdim) continue;
          Mat qq = Mat::Zero(n, n);
          for (long idx : c2)
            qq += bes.eigenvectors().col(idx) * bes.eigenvectors().col(idx).adjoint();
          q = std::move(qq);
          break;
        }
      }
      if (q.size() == 0) {
        ok = false;
        break;
      }

      Vec w(n);
      for (long r = 0; r < n; ++r) w(r) = Cplx(gauss(rng), gauss(rng));
      const Vec u = q * w;
      Mat span(n, n);
      for (long s = 0; s < n; ++s) span.col(s) = l[s] * u;
      Eigen::JacobiSVD<Mat> ssvd(span, Eigen::ComputeThinU);
      const auto& ssv = ssvd.singularValues();
      long rank = 0;
      for (long i = 0; i < ssv.size(); ++i)
        if (ssv(i) > 1e-9 * std::max(1.0, ssv(0))) ++rank;
      if (rank != bdim) {
        ok = false;
        break;
      }
      const Mat basis = ssvd.matrixU().leftCols(bdim);
      for (long s = 0; s < n; ++s) block.pi.push_back(basis.adjoint() * l[s] * basis);

      block.trivial = block.dim == 1;
      if (block.trivial)
        for (LabelId s = 0; s < cat.n_labels(); ++s)
          if (std::abs(block.pi[s](0, 0) - cat.dim(s)) > 1e-6) block.trivial = false;
      Vec e0 = Vec::Zero(bdim);
      e0(0) = 1.0;
      FusionRepresentation frep;
      frep.dim = bdim;
      frep.pi = block.pi;
      block.phi = vector_multiplier(cat, frep, e0);
      dec.blocks.push_back(std::move(block));
    }
    if (!ok) continue;

    dec.partition_residual = (partition - Mat::Identity(n, n)).norm();
    long trivial_count = 0;
    for (const auto& b : dec.blocks)
      if (b.trivial) {
        dec.kazhdan_coeffs = b.central_coeffs;
        ++trivial_count;
      }
    if (trivial_count != 1)
      throw DiagnosticError("trivial character did not appear exactly once");
    return dec;
  }
  throw DiagnosticError(
      "eigenvalue clustering stayed ambiguous: numerically non-semisimple data");
}

double kazhdan_projection_residual(const SkeletalCategory& cat,
                                   const CStarDecomposition& dec, const ObjectExpr& x) {
  const std::vector<Mat> l = left_mult_matrices(cat);
  const Mat p = element(l, dec.kazhdan_coeffs);
  Mat lx = Mat::Zero(p.rows(), p.cols());
  double dx = 0;
  for (const auto& [s, m] : x.mults()) {
    lx += static_cast<double>(m) * l[s];
    dx += static_cast<double>(m) * cat.dim(s);
  }
  Eigen::JacobiSVD<Mat> svd(Mat(lx * p - dx * p));
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace fcat

#include "fusioncat/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <random>
#include <unordered_map>

namespace fcat {

namespace {

constexpr std::size_t kDenseThreshold = 512;

bool is_self_dual(const IrrBackend& backend, const RingObject& x) {
  for (auto& [s, n] : x) {
    auto it = x.find(backend.dual(s));
    if (it == x.end() || it->second != n) return false;
  }
  return true;
}

RingObject ring_product(const IrrBackend& backend, const RingObject& a, const RingObject& b) {
  RingObject out;
  for (auto& [s, n] : a)
    for (auto& [t, m] : b)
      for (auto& [r, k] : backend.fuse(s, t)) out[r] += n * m * k;
  return out;
}

RingObject ring_dual(const IrrBackend& backend, const RingObject& a) {
  RingObject out;
  for (auto& [s, n] : a) out[backend.dual(s)] += n;
  return out;
}

long bandwidth(const Eigen::SparseMatrix<double>& a) {
  long b = 0;
  for (int k = 0; k < a.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, k); it; ++it)
      b = std::max(b, std::labs(it.row() - it.col()));
  return b;
}

double tridiagonal_top(const Eigen::SparseMatrix<double>& a) {
  const long n = a.rows();
  RVec diag = RVec::Zero(n), sub = RVec::Zero(std::max<long>(n - 1, 0));
  for (int k = 0; k < a.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, k); it; ++it) {
      if (it.row() == it.col()) diag(it.row()) = it.value();
      if (it.row() == it.col() + 1) sub(it.col()) = it.value();
    }
  Eigen::SelfAdjointEigenSolver<RMat> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double lanczos_top(const Eigen::SparseMatrix<double>& a) {
  const long n = a.rows();
  const long mmax = std::min<long>(n, 900);
  std::mt19937 rng(7);
  std::normal_distribution<double> g;
  RVec v(n);
  for (long i = 0; i < n; ++i) v(i) = g(rng);
  v.normalize();

  RMat basis(n, mmax);
  RVec alpha(mmax), beta(mmax);
  basis.col(0) = v;
  double last = -1e300;
  long m = 0;
  for (long j = 0; j < mmax; ++j) {
    RVec w = a * basis.col(j);
    alpha(j) = basis.col(j).dot(w);
    w -= alpha(j) * basis.col(j);
    if (j > 0) w -= beta(j - 1) * basis.col(j - 1);
    // full reorthogonalization keeps the extreme Ritz value trustworthy
    w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
    const double nb = w.norm();
    m = j + 1;
    if (j + 1 < mmax) {
      if (nb < 1e-13) break;  // invariant subspace reached: Ritz values exact
      beta(j) = nb;
      basis.col(j + 1) = w / nb;
    }
    if ((j + 1) % 25 == 0 || j + 1 == mmax) {
      Eigen::SelfAdjointEigenSolver<RMat> es;
      es.computeFromTridiagonal(alpha.head(m), beta.head(std::max<long>(m - 1, 0)),
                                Eigen::EigenvaluesOnly);
      const double top = es.eigenvalues().maxCoeff();
      if (std::abs(top - last) < 1e-13 * std::max(1.0, std::abs(top))) {
        last = top;
        break;
      }
      last = top;
    }
  }
  Eigen::SelfAdjointEigenSolver<RMat> es;
  es.computeFromTridiagonal(alpha.head(m), beta.head(std::max<long>(m - 1, 0)),
                            Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double power_top(const Eigen::SparseMatrix<double>& a, double shift) {
  const long n = a.rows();
  std::mt19937 rng(11);
  std::normal_distribution<double> g;
  RVec v(n);
  for (long i = 0; i < n; ++i) v(i) = g(rng);
  v.normalize();
  double lam = 0, last = -1e300;
  for (int it = 0; it < 4000; ++it) {
    RVec w = a * v + shift * v;
    const double nw = w.norm();
    if (nw == 0) return -shift;
    v = w / nw;
    lam = v.dot(a * v);
    if (it % 10 == 0) {
      if (std::abs(lam - last) < 1e-12 * std::max(1.0, std::abs(lam))) break;
      last = lam;
    }
  }
  return lam;
}

}  // namespace

double symmetric_top_eigenvalue(const Eigen::SparseMatrix<double>& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 0;
  if (n <= kDenseThreshold) {
    Eigen::SelfAdjointEigenSolver<RMat> es(RMat(a), Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
  }
  if (bandwidth(a) <= 1) return tridiagonal_top(a);
  if (n <= 60000) return lanczos_top(a);
  // shift by an upper row-sum bound so the top eigenvalue dominates
  double rowsum = 0;
  for (int k = 0; k < a.outerSize(); ++k) {
    double s = 0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, k); it; ++it) s += std::abs(it.value());
    rowsum = std::max(rowsum, s);
  }
  return power_top(a, rowsum);
}

FusionMatrix fusion_matrix(const IrrBackend& backend, const RingObject& x, long level) {
  FusionMatrix fm;
  fm.x = x;
  fm.level = level;
  fm.labels = backend.truncation(level);
  const std::size_t n = fm.labels.size();
  std::unordered_map<std::string, long> index;
  index.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(fm.labels[i], static_cast<long>(i));

  std::vector<Eigen::Triplet<double>> trips;
  for (std::size_t t = 0; t < n; ++t)
    for (auto& [xs, nx] : x)
      for (auto& [r, m] : backend.fuse(xs, fm.labels[t])) {
        auto it = index.find(r);
        if (it != index.end())
          trips.emplace_back(it->second, static_cast<long>(t), static_cast<double>(nx * m));
      }
  fm.gamma.resize(n, n);
  fm.gamma.setFromTriplets(trips.begin(), trips.end());
  return fm;
}

NormReport fusion_matrix_norm(const IrrBackend& backend, const RingObject& x,
                              const std::vector<long>& schedule, double report_tol) {
  if (schedule.empty()) throw InputError("empty truncation schedule");
  NormReport rep;
  rep.x = x;
  rep.dim_x = backend.object_dim(x);
  rep.report_tol = report_tol;
  const bool selfdual = is_self_dual(backend, x);

  double prev = -1e300;
  for (long level : schedule) {
    NormBound nb;
    nb.level = level;
    bool done = false;

    if (auto radial = backend.radial_profile(x, level); radial) {
      Eigen::SelfAdjointEigenSolver<RMat> es(*radial, Eigen::EigenvaluesOnly);
      nb.bound = es.eigenvalues().maxCoeff();
      nb.n_labels = backend.truncation_size(level);
      nb.materialized = false;
      done = true;
    }
    if (!done) {
      if (selfdual) {
        FusionMatrix fm = fusion_matrix(backend, x, level);
        nb.n_labels = fm.labels.size();
        nb.bound = symmetric_top_eigenvalue(fm.gamma);
      } else {
        // sqrt of the top eigenvalue of the truncated Gamma_{Xbar (x) X}
        FusionMatrix fm =
            fusion_matrix(backend, ring_product(backend, ring_dual(backend, x), x), level);
        nb.n_labels = fm.labels.size();
        nb.bound = std::sqrt(std::max(0.0, symmetric_top_eigenvalue(fm.gamma)));
      }
    }

    if (nb.bound < prev - 1e-8)
      throw DiagnosticError("norm bounds not monotone along nested truncations");
    if (nb.bound > rep.dim_x + 1e-7)
      throw DiagnosticError("norm bound exceeds d(X): inconsistent backend data");
    prev = std::max(prev, nb.bound);
    rep.bounds.push_back(nb);
  }
  if (rep.bounds.size() >= 2) {
    const double a = rep.bounds[rep.bounds.size() - 2].bound;
    const double b = rep.bounds.back().bound;
    rep.converged = std::abs(a - b) < report_tol;
  }
  return rep;
}

AmenabilityReport amenability_report(const IrrBackend& backend, const RingObject& x,
                                     std::vector<long> schedule, double tol) {
  if (backend.finite() && schedule.empty()) schedule = {1L << 30};
  AmenabilityReport rep;
  rep.norms = fusion_matrix_norm(backend, x,
                                 schedule.empty() ? std::vector<long>{8} : schedule);
  rep.dim_x = rep.norms.dim_x;
  rep.best_bound = rep.norms.best();
  rep.gap = rep.dim_x - rep.best_bound;
  rep.definitive =
      backend.finite() &&
      rep.norms.bounds.back().n_labels == backend.truncation_size(1L << 30);
  if (rep.gap < tol)
    rep.verdict = "amenable-consistent";
  else
    rep.verdict = "gap found: d(X) - bound = " + std::to_string(rep.gap) +
                  (rep.definitive ? "" : " (semi-decision at the reported window)");
  return rep;
}

}  // namespace fcat

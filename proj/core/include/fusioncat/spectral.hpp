#pragma once

#include <Eigen/SparseCore>

#include "fusioncat/backends.hpp"

namespace fcat {

// Truncated fusion matrix Gamma_X over the labels of one truncation window:
// gamma(s, t) = dim C(U_s, X (x) U_t), integer entries.
struct FusionMatrix {
  RingObject x;
  long level = 0;
  std::vector<std::string> labels;
  Eigen::SparseMatrix<double> gamma;
};

FusionMatrix fusion_matrix(const IrrBackend& backend, const RingObject& x, long level);

struct NormBound {
  long level = 0;
  std::size_t n_labels = 0;
  double bound = 0;
  bool materialized = true;  // false: exact radial collapse of the ball
};

struct NormReport {
  RingObject x;
  double dim_x = 0;
  std::vector<NormBound> bounds;
  bool converged = false;  // successive bounds differ by < report_tol
  double report_tol = 0;
  double best() const { return bounds.empty() ? 0.0 : bounds.back().bound; }
};

// Lower bounds |P Gamma_X P| along a truncation schedule.  Bounds are
// checked monotone nondecreasing and <= d(X) + slack; violations throw
// DiagnosticError.  For non-self-dual X the bound at each level is
// sqrt(lambda_max(P Gamma_{Xbar (x) X} P)).
NormReport fusion_matrix_norm(const IrrBackend& backend, const RingObject& x,
                              const std::vector<long>& schedule, double report_tol = 1e-6);

struct AmenabilityReport {
  NormReport norms;
  double dim_x = 0;
  double best_bound = 0;
  double gap = 0;        // d(X) - best bound
  bool definitive = false;  // finite backend truncated at full size
  std::string verdict;      // "amenable-consistent" or "gap found: ..."
};

AmenabilityReport amenability_report(const IrrBackend& backend, const RingObject& x,
                                     std::vector<long> schedule, double tol = kDefaultTol);

// top eigenvalue of a symmetric sparse matrix (dense below the size
// threshold, tridiagonal/Lanczos/power iteration above)
double symmetric_top_eigenvalue(const Eigen::SparseMatrix<double>& a);

}  // namespace fcat

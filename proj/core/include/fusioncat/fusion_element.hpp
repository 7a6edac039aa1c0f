#pragma once

#include <map>

#include "fusioncat/backends.hpp"

namespace fcat {

// Element of the fusion *-algebra C[Irr] over a backend.
class FusionElement {
 public:
  FusionElement() = default;
  FusionElement(std::shared_ptr<const IrrBackend> backend, std::map<std::string, Cplx> coeffs);
  static FusionElement basis(std::shared_ptr<const IrrBackend> backend, const std::string& s);

  const std::map<std::string, Cplx>& coeffs() const { return coeffs_; }
  Cplx coeff(const std::string& s) const;
  const std::shared_ptr<const IrrBackend>& backend() const { return backend_; }

  FusionElement operator+(const FusionElement& o) const;
  FusionElement operator*(Cplx c) const;
  // product through the structure constants N_{st}^r
  FusionElement operator*(const FusionElement& o) const;
  // conjugate-linear anti-multiplicative involution [U] -> [Ubar]
  FusionElement star() const;

  bool same_backend(const FusionElement& o) const { return backend_ == o.backend_; }

 private:
  void prune();
  std::shared_ptr<const IrrBackend> backend_;
  std::map<std::string, Cplx> coeffs_;
};

// Perron-Frobenius dimensions recomputed from the structure constants of a
// finite backend; for infinite backends, the first `level` oracle values.
// `residual` (optional out) reports max |sum_r N_{st}^r d_r - d_s d_t| over
// the window.
std::map<std::string, double> ring_dimensions(const IrrBackend& backend, long level,
                                              double* residual = nullptr);

}  // namespace fcat

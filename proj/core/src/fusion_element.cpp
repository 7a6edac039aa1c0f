#include "fusioncat/fusion_element.hpp"

#include <Eigen/Eigenvalues>

namespace fcat {

FusionElement::FusionElement(std::shared_ptr<const IrrBackend> backend,
                             std::map<std::string, Cplx> coeffs)
    : backend_(std::move(backend)), coeffs_(std::move(coeffs)) {
  prune();
}

FusionElement FusionElement::basis(std::shared_ptr<const IrrBackend> backend,
                                   const std::string& s) {
  return FusionElement(std::move(backend), {{s, Cplx(1.0)}});
}

Cplx FusionElement::coeff(const std::string& s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? Cplx(0) : it->second;
}

void FusionElement::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (it->second == Cplx(0)) ? coeffs_.erase(it) : std::next(it);
}

FusionElement FusionElement::operator+(const FusionElement& o) const {
  if (!same_backend(o)) throw InputError("fusion elements live over different backends");
  std::map<std::string, Cplx> c = coeffs_;
  for (auto& [s, v] : o.coeffs_) c[s] += v;
  return FusionElement(backend_, std::move(c));
}

FusionElement FusionElement::operator*(Cplx c) const {
  std::map<std::string, Cplx> out = coeffs_;
  for (auto& [s, v] : out) v *= c;
  return FusionElement(backend_, std::move(out));
}

FusionElement FusionElement::operator*(const FusionElement& o) const {
  if (!same_backend(o)) throw InputError("fusion elements live over different backends");
  std::map<std::string, Cplx> c;
  for (auto& [s, a] : coeffs_)
    for (auto& [t, b] : o.coeffs_)
      for (auto& [r, m] : backend_->fuse(s, t)) c[r] += a * b * static_cast<double>(m);
  return FusionElement(backend_, std::move(c));
}

FusionElement FusionElement::star() const {
  std::map<std::string, Cplx> c;
  for (auto& [s, a] : coeffs_) c[backend_->dual(s)] += std::conj(a);
  return FusionElement(backend_, std::move(c));
}

std::map<std::string, double> ring_dimensions(const IrrBackend& backend, long level,
                                              double* residual) {
  const std::vector<std::string> labels = backend.truncation(level);
  const std::size_t n = labels.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[labels[i]] = i;

  std::map<std::string, double> dims;
  if (backend.finite()) {
    // Perron route: spectral radius of each left-multiplication matrix
    for (std::size_t si = 0; si < n; ++si) {
      RMat l = RMat::Zero(n, n);
      for (std::size_t t = 0; t < n; ++t)
        for (auto& [r, m] : backend.fuse(labels[si], labels[t]))
          l(index.at(r), t) = static_cast<double>(m);
      Eigen::EigenSolver<RMat> es(l);
      double rad = 0;
      for (long i = 0; i < es.eigenvalues().size(); ++i)
        rad = std::max(rad, std::abs(es.eigenvalues()(i)));
      dims[labels[si]] = rad;
    }
  } else {
    for (auto& s : labels) dims[s] = backend.dim(s);
  }

  if (residual) {
    double res = 0;
    for (auto& s : labels)
      for (auto& t : labels) {
        double lhs = 0;
        bool in_window = true;
        for (auto& [r, m] : backend.fuse(s, t)) {
          auto it = dims.find(r);
          if (it == dims.end()) {
            in_window = false;
            break;
          }
          lhs += static_cast<double>(m) * it->second;
        }
        if (in_window)
          res = std::max(res, std::abs(lhs - dims.at(s) * dims.at(t)));
      }
    *residual = res;
  }
  return dims;
}

}  // namespace fcat

#pragma once

#include "fusioncat/half_braiding.hpp"
#include "fusioncat/multiplier.hpp"

namespace fcat {

// *-representation of the fusion algebra on a finite-dimensional space,
// stored as one matrix per simple label.
struct FusionRepresentation {
  long dim = 0;
  std::vector<Mat> pi;  // indexed by label id

  const Mat& matrix(LabelId s) const { return pi.at(s); }
};

// pi_Z([X]) xi = (i_Z (x) Rbar_X*)(c_X (x) i)(i_X (x) xi (x) i) Rbar_X on
// Mor(1, Z), in the slot basis of the unit-isotypic part of Z.
FusionRepresentation rep_from_braiding(const SkeletalCategory& cat,
                                       const HalfBraidedObject& z);

// star property, norm bounds |pi([U_s])| <= d_s, multiplicativity against
// the fusion rules
CheckReport verify_representation(const SkeletalCategory& cat,
                                  const FusionRepresentation& rep);

struct InvarianceReport {
  Mat invariant_basis;                    // columns span the joint eigenspace
  std::vector<double> vector_residuals;   // max_s |pi_s v - d_s v| per column
  double dim_xf = 0;                      // d(X_F)
  double norm_on_complement = 0;          // |pi([X_F]) restricted to the complement|
  double gap = 0;                         // d(X_F) - that norm
};

// Invariant vectors pi([U_s]) xi = d_s xi for s in F, with the spectral gap
// of pi([X_F]) on the orthogonal complement.
InvarianceReport invariance_diagnostics(const SkeletalCategory& cat,
                                        const FusionRepresentation& rep,
                                        const std::vector<LabelId>& f);

// vector multiplier s -> d_s^{-1} (pi([U_s]) xi, xi)
Multiplier vector_multiplier(const SkeletalCategory& cat, const FusionRepresentation& rep,
                             const Vec& xi);

}  // namespace fcat

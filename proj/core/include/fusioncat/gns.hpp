#pragma once

#include "fusioncat/multiplier.hpp"
#include "fusioncat/representation.hpp"

namespace fcat {

// GNS-type center object built from a positive definite multiplier: the
// rescaled sum Z_phi = A^phi-(+)_s U_s (x) Ubar_s with its induced braiding
// and canonical cyclic vector.
struct GnsCenterObject {
  Multiplier phi;
  std::vector<LabelId> window;
  AphiBlocks aphi;
  HalfBraidedObject z;
  Morphism quotient;  // v : (+)_s D_s -> Z_phi with v* v = grand A^phi
  Morphism xi;        // 1 -> Z_phi, image of the unit summand
  FusionRepresentation rep;
};

// Fails with DiagnosticError carrying the eigen-witness when phi is not
// positive on the window.
GnsCenterObject build_zphi(const SkeletalCategory& cat, const Multiplier& phi,
                           const std::vector<LabelId>& window);
GnsCenterObject build_zphi(const SkeletalCategory& cat, const Multiplier& phi);

// residual of phi(s) = d_s^{-1} (pi_phi([U_s]) xi_phi, xi_phi) over the window
double zphi_roundtrip_residual(const SkeletalCategory& cat, const GnsCenterObject& g);

// dimension of span{ pi([U_s]) xi } vs the whole GNS space
bool zphi_cyclic(const SkeletalCategory& cat, const GnsCenterObject& g);

}  // namespace fcat

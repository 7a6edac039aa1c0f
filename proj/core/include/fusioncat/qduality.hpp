#pragma once

#include "fusioncat/relative_tensor.hpp"

namespace fcat {

// Duality data for a Q-module or Q-bimodule M: the conjugate module
// structure on Mbar, the morphisms S, Sbar, and the rescaled solutions
// R^Q = d(Q)^{-1} P_{Mbar,M} S, Rbar^Q = d(Q)^{-1} P_{M,Mbar} Sbar.
struct QDualityData {
  ModuleStructure mod;      // the input module
  ModuleStructure mbar;     // conjugate structure on the dual expression
  DualityPair pair;         // standard solution of M in the base category
  Morphism sbar;            // Q -> M (x) Mbar
  Morphism s;               // Q -> Mbar (x) M   (bimodules only)
  Morphism rq, rbarq;       // through the structure maps (bimodules only)
  RelativeTensorData pmb;   // P_{M,Mbar}
  RelativeTensorData pbm;   // P_{Mbar,M}  (bimodules only)
};

QDualityData qmodule_duality(const SkeletalCategory& cat, const QSystem& q,
                             const ModuleStructure& mod);

// Lemma-level identities: the conjugate-action characterization on Mbar,
// module-morphism property of Sbar, duality relations, descent of Sbar*,
// and for bimodules the conjugate equations of (R^Q, Rbar^Q).
CheckReport verify_qduality(const SkeletalCategory& cat, const QSystem& q,
                            const QDualityData& d);

struct QDimensionReport {
  double dim_m = 0;    // d(M) in the base category
  double dim_q_m = 0;  // d^Q(M) from the rescaled solutions
  double ratio_residual = 0;   // |d^Q(M) d(Q) - d(M)|
  double standard_residual = 0;  // left/right norms of R^Q agree
  double trace_residual = 0;   // Tr^Q = d(Q)^{-1} Tr on random bimodule endos
};

QDimensionReport qmod_dimension(const SkeletalCategory& cat, const QSystem& q,
                                const QDualityData& d, int n_random = 20);

}  // namespace fcat

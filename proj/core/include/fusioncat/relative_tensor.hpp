#pragma once

#include "fusioncat/qmodule.hpp"

namespace fcat {

// Coequalizer M (x)_Q N realized by the projection
// p = d(Q)^{-1} (i (x) v* w* (x) i)(m^{r*} (x) m^{l*}) with structure
// morphism P, normalized so P P* = d(Q) i.
struct RelativeTensorData {
  ObjectExpr product;
  Morphism structure;   // P : M (x) N -> M (x)_Q N
  Morphism projection;  // p in End(M (x) N)
  double idem_residual = 0;
  double selfadj_residual = 0;
  double balance_residual = 0;  // P (m^r (x) i) = P (i (x) m^l)
};

RelativeTensorData relative_tensor(const SkeletalCategory& cat, const QSystem& q,
                                   const ModuleStructure& mright,
                                   const ModuleStructure& nleft);

// bimodule structure descended to M (x)_Q N from outer actions of bimodules
ModuleStructure descend_bimodule(const SkeletalCategory& cat, const QSystem& q,
                                 const ModuleStructure& mbi, const ModuleStructure& nbi,
                                 const RelativeTensorData& rt);

// unitarity of the relative associator Phi^Q on a triple of bimodules and
// the defining relation Phi P(P (x) i) = P(i (x) P)
CheckReport relative_associator_check(const SkeletalCategory& cat, const QSystem& q,
                                      const ModuleStructure& x, const ModuleStructure& y,
                                      const ModuleStructure& z);

}  // namespace fcat

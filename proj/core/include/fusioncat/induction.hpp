#pragma once

#include "fusioncat/half_braiding.hpp"
#include "fusioncat/relative_tensor.hpp"

namespace fcat {

// Q-bimodule structure induced on X (x) Q by a half-braiding on X:
// m^r = i (x) m_Q and m^l = (i (x) m_Q)(c_Q (x) i).
struct InducedBimodule {
  ModuleStructure bimodule;  // object = flatten(X (x) Q)
  ObjectExpr x;              // underlying half-braided object
  QSystem q;
};

InducedBimodule schauenburg_induce(const SkeletalCategory& cat, const QSystem& q,
                                   const HalfBraidedObject& z);

// sigma_Y = (i (x) v (x) i)(i (x) m^r_Y)(c_Y (x) i) : Y (x) X (x) Q -> X (x) Q (x) Y
Morphism induced_sigma(const SkeletalCategory& cat, const QSystem& q,
                       const HalfBraidedObject& z, const ModuleStructure& y);

// bimodule axioms on X (x) Q, multiplicativity of sigma over pairs of free
// bimodules, and descent of sigma through the structure maps
CheckReport verify_induction(const SkeletalCategory& cat, const QSystem& q,
                             const HalfBraidedObject& z,
                             const std::vector<ObjectExpr>& middles);

// T^S = (i (x) v* w* (x) i)(c_Q (x) i (x) i)(i (x) S (x) i (x) i) w^(3)
Morphism ts_morphism(const SkeletalCategory& cat, const QSystem& q,
                     const HalfBraidedObject& z, const Morphism& s);

struct TsCheck {
  long image_dim = 0;     // rank of S -> T^S
  long solution_dim = 0;  // brute-force solve of the bimodule-morphism equation
  long hom_dim_qx = 0;    // dim Mor(Q, X)
  double char_residual = 0;  // T^S satisfies the characterizing equation
  bool match = false;
};

// the key correctness oracle for the induction: the image of S -> T^S must
// exhaust the brute-force solution space of the characterizing equation
TsCheck bimodule_morphisms_ts(const SkeletalCategory& cat, const QSystem& q,
                              const HalfBraidedObject& z);

struct TransferReport {
  Morphism xi_tilde;          // d(Q)^{-1} T^{xi v*} : Q -> X (x) Q
  double norm_deviation = 0;  // | |xi~| - 1 | proxy: |xi~ - xi (x) i|
  double r1 = 0;              // |xi~ - xi (x) i_Q|
  std::map<LabelId, double> r2;      // per test label
  std::map<LabelId, double> source;  // |c_Y (i (x) xi) - xi (x) i| per label
  double source_q = 0;               // the same residual at Y = Q
  bool bounds_hold = false;  // r1, r2 within the proof constants
};

TransferReport transfer_almost_invariant(const SkeletalCategory& cat, const QSystem& q,
                                         const HalfBraidedObject& z, const Morphism& xi,
                                         const std::vector<LabelId>& test_labels);

}  // namespace fcat

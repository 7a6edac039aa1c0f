#pragma once

#include "fusioncat/duality.hpp"
#include "fusioncat/report.hpp"

namespace fcat {

// Frobenius algebra object (Q, v, w): v an isometry 1 -> Q, w a scalar
// multiple of an isometry Q -> Q (x) Q, with unit, associativity and
// Frobenius constraints.  Standard means w* w = d(Q) i.
struct QSystem {
  ObjectExpr q;
  Morphism v;  // 1 -> Q
  Morphism w;  // Q -> Q (x) Q
  double dim_q = 0;

  Morphism product() const { return w.dagger(); }  // m_Q = w*
  // (wv, wv) solves the conjugate equations; the standard pair of Q
  DualityPair duality(const SkeletalCategory& cat) const;
};

// trivial Q-system on the unit object
QSystem trivial_qsystem(const SkeletalCategory& cat);

// group algebra of a pointed category: Q = (+)_g U_g with the untwisted
// convolution coproduct
QSystem group_algebra_qsystem(const SkeletalCategory& cat);

// canonical Q-system on Xbar (x) X for a simple X:
// v = d(X)^{-1/2} R_X, w = d(X)^{1/2} (i (x) Rbar_X (x) i)
QSystem canonical_qsystem(const SkeletalCategory& cat, LabelId x);

struct QSystemFlags {
  bool standard = false;
  bool simple = false;       // dim End_{Q-bimod}(Q) = 1
  bool irreducible = false;  // dim Hom(1, Q) = 1
};

// axioms, standardness, simplicity, irreducibility with residuals
CheckReport verify_qsystem(const SkeletalCategory& cat, const QSystem& q,
                           QSystemFlags* flags = nullptr);

// iterated coproduct w^(n) = (w (x) i...) w^(n-1) : Q -> Q^(x)(n+1),
// left-comb target word
Morphism iterated_coproduct(const SkeletalCategory& cat, const QSystem& q, int n);

}  // namespace fcat

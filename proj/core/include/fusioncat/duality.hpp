#pragma once

#include "fusioncat/tensor_calculus.hpp"

namespace fcat {

// Solution of the conjugate equations for `obj` against `dual`:
//   R : 1 -> dual (x) obj,   Rbar : 1 -> obj (x) dual,
// normalized so that |R|^2 = |Rbar|^2 = d(obj) (standard).
struct DualityPair {
  ObjectExpr obj, dual;
  Morphism R, Rbar;
};

// Cup/cap pair for one simple: R_s is the canonical basis vector of
// Hom(1, sbar (x) s) scaled to norm d_s^{1/2}; the phase of Rbar_s is the
// pivotal coefficient kappa_s.
DualityPair standard_pair_simple(const SkeletalCategory& cat, LabelId s);

// Additive standard solution for a direct sum of simples.
DualityPair standard_pair(const SkeletalCategory& cat, const ObjectExpr& x);

// Standard solution for a tensor product from solutions of the factors:
// R = (i (x) R_a (x) i) R_b, Rbar = (i (x) Rbar_b (x) i) Rbar_a.
DualityPair tensor_pair(const SkeletalCategory& cat, const DualityPair& a,
                        const DualityPair& b);

// Swap obj <-> dual; the standard pair of the dual object.
DualityPair swapped_pair(const SkeletalCategory& cat, const DualityPair& p);

// Spec-facing alias for the simple case.
struct StandardPair {
  LabelId s;
  Morphism R, Rbar;
};
StandardPair standard_solution(const SkeletalCategory& cat, LabelId s);

// max of the two conjugate-equation residuals
double conjugate_equation_residual(const SkeletalCategory& cat, const DualityPair& p);

// Tr_X(T) = R*(i (x) T)R for an endomorphism T of X (additive standard pair).
Cplx categorical_trace(const SkeletalCategory& cat, const Morphism& t);
// Rbar*(T (x) i)Rbar; agrees with categorical_trace for spherical data.
Cplx categorical_trace_right(const SkeletalCategory& cat, const Morphism& t);

// (Tr_X (x) i)(T) for T : X (x) Y -> X (x) Z in the pair basis.
Morphism partial_trace_left(const SkeletalCategory& cat, const ObjectExpr& x,
                            const ObjectExpr& y, const ObjectExpr& z, const Morphism& t);
// (i (x) Tr_X)(T) for T : Y (x) X -> Z (x) X.
Morphism partial_trace_right(const SkeletalCategory& cat, const ObjectExpr& x,
                             const ObjectExpr& y, const ObjectExpr& z, const Morphism& t);

// T^vee : dual(Y) -> dual(X) for T : X -> Y, characterized by
// (T (x) i) Rbar_X = (i (x) T^vee) Rbar_Y.
Morphism dual_morphism(const SkeletalCategory& cat, const Morphism& t, const DualityPair& src,
                       const DualityPair& tgt);
// convenience: additive standard pairs of source and target
Morphism dual_morphism(const SkeletalCategory& cat, const Morphism& t);

// flattened object of a tensor word in the left-comb basis
ObjectExpr word_expr(const SkeletalCategory& cat, const std::vector<ObjectExpr>& word);

// projection onto the isotypic component of label r in a tensor word
Morphism isotypic_projection(const SkeletalCategory& cat, const std::vector<ObjectExpr>& word,
                             LabelId r);

// diagonal action of a scalar function on isotypic components
Morphism isotypic_scalar(const SkeletalCategory& cat, const ObjectExpr& x,
                         const std::vector<Cplx>& value_by_label);

}  // namespace fcat

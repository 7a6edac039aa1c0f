#pragma once

#include <map>

#include "fusioncat/duality.hpp"
#include "fusioncat/report.hpp"

namespace fcat {

// Object with a unitary half-braiding, truncated to a finite direct sum.
// `braiding[x]` is c_x : U_x (x) Z -> Z (x) U_x in the pair bases; values on
// simples determine the braiding everywhere.
struct HalfBraidedObject {
  ObjectExpr underlying;
  std::vector<Morphism> braiding;  // indexed by simple label id

  // present when built as an indexed sum (Z_reg and its rescalings)
  std::vector<LabelId> summand_labels;
  std::vector<ObjectExpr> summands;

  // columns (x, s) whose image leaves the truncation window; empty means the
  // braiding data is complete
  std::map<LabelId, std::vector<LabelId>> truncated_columns;
  bool complete() const { return truncated_columns.empty(); }

  const Morphism& c(LabelId x) const { return braiding.at(x); }
};

// trivial half-braiding on the unit object
HalfBraidedObject trivial_half_braided(const SkeletalCategory& cat);

// braiding at an arbitrary expression, assembled by naturality from simples
Morphism braiding_at(const SkeletalCategory& cat, const HalfBraidedObject& z,
                     const ObjectExpr& x);

// Z_reg truncated to the summands U_s (x) Ubar_s, s in `window`; the braiding
// blocks come from the defining isometry formula.
HalfBraidedObject regular_half_braiding(const SkeletalCategory& cat,
                                        const std::vector<LabelId>& window);
HalfBraidedObject regular_half_braiding(const SkeletalCategory& cat);  // all labels

// One block c_{x,ts} : U_x (x) D_s -> D_t (x) U_x from the defining formula.
// `isometry_rotation` replaces the canonical isometry family u_alpha by
// u_beta U(beta,alpha) for a unitary U; the block must not change.
Morphism regular_braiding_block(const SkeletalCategory& cat, LabelId x, LabelId t, LabelId s,
                                const Mat* isometry_rotation = nullptr);
// the same block through the unit-isotypic-projection expression; the
// primary cross-check oracle
Morphism regular_braiding_block_alt(const SkeletalCategory& cat, LabelId x, LabelId t,
                                    LabelId s);

// unitarity and multiplicativity residuals over all simple (pairs of) labels
CheckReport verify_half_braiding(const SkeletalCategory& cat, const HalfBraidedObject& z);

}  // namespace fcat

#pragma once

#include "fusioncat/representation.hpp"

namespace fcat {

// One Wedderburn block of the finite-dimensional fusion *-algebra.
struct CStarBlock {
  long dim = 0;                 // matrix size of the irreducible block
  std::vector<Mat> pi;          // irreducible representation, per label
  Multiplier phi;               // vector multiplier of the first basis vector
  bool trivial = false;         // the character [X] -> d(X)
  Vec central_coeffs;           // minimal central projection in the [U_r] basis
};

struct CStarDecomposition {
  std::vector<CStarBlock> blocks;
  Vec kazhdan_coeffs;           // central support of the trivial block
  double commute_residual = 0;  // central projections vs generators
  double partition_residual = 0;  // sum of projections vs identity
};

// Full decomposition of C[Irr] acting on itself; the regular representation
// is a *-representation in the slot basis because N_{st}^r = N_{sbar r}^t.
// Throws DiagnosticError when eigenvalue clustering is numerically ambiguous.
CStarDecomposition decompose_cstar_finite(const SkeletalCategory& cat);

// |[X] p - d(X) p| in the regular representation for the Kazhdan projection
double kazhdan_projection_residual(const SkeletalCategory& cat,
                                   const CStarDecomposition& dec, const ObjectExpr& x);

}  // namespace fcat

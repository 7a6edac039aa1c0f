#pragma once

#include "fusioncat/category.hpp"
#include "fusioncat/report.hpp"

namespace fcat {

// Full data-soundness suite: fusion-rule invariants, pentagon residual,
// F-unitarity, Perron dimension residual, conjugate equations, sphericality.
// Overall pass iff all residuals < cat.tol().
CheckReport validate_category(const SkeletalCategory& cat);

// individual residuals, exposed for tests and mutation checks
double pentagon_residual(const SkeletalCategory& cat);
double funitarity_residual(const SkeletalCategory& cat);
double perron_residual(const SkeletalCategory& cat);

}  // namespace fcat

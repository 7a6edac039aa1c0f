#pragma once

#include <map>
#include <vector>

#include "fusioncat/backends.hpp"
#include "fusioncat/duality.hpp"
#include "fusioncat/fusion_element.hpp"
#include "fusioncat/report.hpp"

namespace fcat {

// Complex-valued function on a finite window of Irr.  phi(e) = 1 is expected
// for normalized multipliers but not enforced.
struct Multiplier {
  std::map<LabelId, Cplx> values;

  Cplx at(LabelId s) const;
  bool defined(LabelId s) const { return values.count(s) != 0; }

  static Multiplier delta_e(const SkeletalCategory& cat);
  static Multiplier constant_one(const SkeletalCategory& cat);
};

// string-keyed variant for backend-level (ring-only) computations
using RingMultiplier = std::map<std::string, Cplx>;

RingMultiplier to_ring_multiplier(const SkeletalCategory& cat, const Multiplier& phi);
Multiplier from_ring_multiplier(const SkeletalCategory& cat, const RingMultiplier& phi);

// The family A^phi_{st} : U_t (x) Ubar_t -> U_s (x) Ubar_s over an index set.
struct AphiBlocks {
  std::vector<LabelId> index_set;
  std::vector<ObjectExpr> summands;  // D_s = flatten(s (x) sbar), aligned with index_set
  std::map<std::pair<LabelId, LabelId>, Morphism> blocks;

  const Morphism& block(LabelId s, LabelId t) const;
  // grand endomorphism of (+)_k D_{s_k}, assembled blockwise per label
  std::map<LabelId, Mat> grand() const;
};

AphiBlocks build_aphi(const SkeletalCategory& cat, const Multiplier& phi,
                      const std::vector<LabelId>& index_set);

struct CpWitness {
  LabelId label = 0;             // isotypic component carrying the witness
  Vec vector;                    // coefficients over the slots of that component
  double eigenvalue = 0;
};

struct CpVerdict {
  bool positive = false;
  std::vector<LabelId> window;   // largest index set checked
  double min_eigenvalue = 0;
  double herm_residual = 0;
  std::optional<CpWitness> witness;
  bool semi_decision = false;    // true when Irr extends beyond the window
};

// Positivity of the grand matrices (A^phi_{s_i s_j}) along a schedule of
// index sets.  Checking over subsets is enough: repeating a label only adds
// identical block rows and columns, which cannot change positivity.
// Throws InputError when the grand matrix is not self-adjoint within tol
// (phi(sbar) != conj(phi(s))).
CpVerdict cp_check(const SkeletalCategory& cat, const Multiplier& phi,
                   const std::vector<std::vector<LabelId>>& schedule);
// default schedule: every label of the category at once
CpVerdict cp_check(const SkeletalCategory& cat, const Multiplier& phi);

// omega([U_s]) = d_s phi(s), extended linearly.
Cplx fusion_state_omega(const IrrBackend& backend, const RingMultiplier& phi,
                        const FusionElement& a);

struct GramReport {
  std::vector<std::string> labels;
  Mat gram;                 // G_{ts} = omega([U_t]* [U_s]) = sum_r N_{tbar s}^r d_r phi(r)
  double herm_residual = 0;
  double min_eigenvalue = 0;
};

GramReport fusion_state_gram(const IrrBackend& backend, const RingMultiplier& phi,
                             const std::vector<std::string>& window);

}  // namespace fcat

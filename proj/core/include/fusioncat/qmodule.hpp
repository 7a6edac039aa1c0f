#pragma once

#include "fusioncat/qsystem.hpp"

namespace fcat {

enum class ModuleSide { Left, Right, Bi };

// Module object over a Q-system with its action morphism(s):
// left action  Q (x) M -> M,  right action  M (x) Q -> M.
struct ModuleStructure {
  ModuleSide side = ModuleSide::Left;
  ObjectExpr m;
  Morphism left;   // valid for Left and Bi
  Morphism right;  // valid for Right and Bi
};

// the regular (bi)module structure on Q itself: both actions are w*
ModuleStructure regular_module(const SkeletalCategory& cat, const QSystem& q,
                               ModuleSide side = ModuleSide::Bi);

// free bimodule Q (x) X (x) Q on a middle object
ModuleStructure free_bimodule(const SkeletalCategory& cat, const QSystem& q,
                              const ObjectExpr& middle);

// unit, associativity, *-compatibility, the derived action identities
// m m* = d(Q) i and m* m = (i (x) m)(w (x) i), and for bimodules the
// commutation of the two actions
CheckReport verify_module(const SkeletalCategory& cat, const QSystem& q,
                          const ModuleStructure& mod);

// All module structures on `m`, up to isomorphism, each *-renormalized.
// The unit constraint pins an affine slice, associativity is solved on it by
// damped Newton iteration from many random seeds, then A = m m* rescaling
// enforces *-compatibility.
std::vector<ModuleStructure> solve_modules(const SkeletalCategory& cat, const QSystem& q,
                                           const ObjectExpr& m, ModuleSide side);

// basis of the space of module intertwiners M -> N (same side)
std::vector<Morphism> module_morphisms(const SkeletalCategory& cat, const QSystem& q,
                                       const ModuleStructure& m, const ModuleStructure& n);

// random endomorphism of a (bi)module, for trace tests
Morphism random_module_endo(const SkeletalCategory& cat, const QSystem& q,
                            const ModuleStructure& mod, unsigned seed);

}  // namespace fcat

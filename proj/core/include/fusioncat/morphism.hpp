#pragma once

#include <map>

#include "fusioncat/object_expr.hpp"
#include "fusioncat/types.hpp"

namespace fcat {

// Block-structured linear map between direct sums of simples.  Block r maps
// the multiplicity space of r in the source to the one in the target; absent
// blocks are zero.  All identifications of tensor words with such sums are
// made in the left-associated fusion-tree basis, so storing only source and
// target expressions is unambiguous.
class Morphism {
 public:
  Morphism() = default;
  Morphism(ObjectExpr src, ObjectExpr tgt);

  static Morphism identity(const ObjectExpr& x);
  static Morphism zero(const ObjectExpr& src, const ObjectExpr& tgt) { return {src, tgt}; }
  // 1x1 scalar morphism on the unit object
  static Morphism unit_scalar(LabelId unit, Cplx value);

  const ObjectExpr& src() const { return src_; }
  const ObjectExpr& tgt() const { return tgt_; }

  const Mat& block(LabelId r) const;  // zero-sized reference if absent
  Mat& mutable_block(LabelId r);      // creates a zero block of the right shape
  bool has_block(LabelId r) const { return blocks_.count(r) != 0; }
  const std::map<LabelId, Mat>& blocks() const { return blocks_; }

  void set_block(LabelId r, Mat m);

  Morphism dagger() const;
  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism operator*(Cplx c) const;

  // operator norm: max over blocks of the spectral norm
  double op_norm() const;
  double frob_norm() const;

  // scalar content of an endomorphism of the unit object
  Cplx unit_scalar_value(LabelId unit) const;

  bool shape_equals(const Morphism& o) const { return src_ == o.src_ && tgt_ == o.tgt_; }

 private:
  ObjectExpr src_, tgt_;
  std::map<LabelId, Mat> blocks_;
};

// g after f fails unless f.tgt == g.src; the error names the offending block.
Morphism compose(const Morphism& g, const Morphism& f);

double distance(const Morphism& a, const Morphism& b);

// all blocks (zero-filled when absent) flattened column-major in label order
Vec vectorize_morphism(const Morphism& m);
// inverse of vectorize_morphism for given source and target
Morphism morphism_from_vector(const ObjectExpr& src, const ObjectExpr& tgt, const Vec& v);

long matrix_rank(const Mat& m, double rel_tol = 1e-9);

long hom_dim(const ObjectExpr& a, const ObjectExpr& b);
// elementary matrix-unit basis of Hom(a, b)
std::vector<Morphism> hom_basis(const ObjectExpr& a, const ObjectExpr& b);

}  // namespace fcat

#pragma once

#include <memory>
#include <vector>

#include "fusioncat/category.hpp"
#include "fusioncat/morphism.hpp"

namespace fcat {

// One slot of the r-multiplicity space of A (x) B: copy i of s in A paired
// with copy j of t in B through the mu-th fusion vertex s (x) t -> r.
struct PairSlot {
  LabelId s;
  long i;
  LabelId t;
  long j;
  long mu;
};

// Canonical orthonormal basis of every multiplicity space of A (x) B,
// enumerated lexicographically in (s, i, t, j, mu).
class PairIndexer {
 public:
  PairIndexer(const FusionRules& rules, const ObjectExpr& a, const ObjectExpr& b);

  const ObjectExpr& product() const { return product_; }
  const std::vector<PairSlot>& slots(LabelId r) const;
  long index(LabelId r, LabelId s, long i, LabelId t, long j, long mu) const;

 private:
  ObjectExpr product_;
  std::vector<std::vector<PairSlot>> slots_;  // by label id
};

ObjectExpr tensor_expr(const FusionRules& rules, const ObjectExpr& a, const ObjectExpr& b);

// Tensor product of morphisms in the pair basis of source and target.
Morphism tensor(const FusionRules& rules, const Morphism& f, const Morphism& g);

// Unitary (A (x) B) (x) C -> A (x) (B (x) C) assembled from F matrices,
// diagonal over the simple constituents of A, B, C.
Morphism assoc(const SkeletalCategory& cat, const ObjectExpr& a, const ObjectExpr& b,
               const ObjectExpr& c);

// Bracketing tree over atomic object expressions.
class BracketTree {
 public:
  static BracketTree leaf(ObjectExpr e);
  static BracketTree node(BracketTree l, BracketTree r);
  // left comb ((w0 w1) w2) ... ; the empty word is the unit leaf
  static BracketTree comb(const SkeletalCategory& cat, const std::vector<ObjectExpr>& word);

  bool is_leaf() const;
  const BracketTree& left() const;
  const BracketTree& right() const;
  const ObjectExpr& expr() const { return expr_; }  // leaf payload
  std::vector<ObjectExpr> leaves() const;

 private:
  BracketTree() = default;
  ObjectExpr expr_;
  std::shared_ptr<const BracketTree> l_, r_;
};

// Flattened object of the whole tree.
ObjectExpr tree_expr(const FusionRules& rules, const BracketTree& t);

// Unitary from the tree basis to the left-comb basis over the same leaves.
Morphism tree_to_comb(const SkeletalCategory& cat, const BracketTree& t);

// Unitary between two bracketings of the same leaf word.
Morphism rebracket(const SkeletalCategory& cat, const BracketTree& from, const BracketTree& to);

// Running morphism on a flat word of atomic expressions, always kept in the
// left-comb basis.  apply() acts on the sub-range [i, j) with a morphism
// whose source is the left comb over word[i..j) and whose target is the left
// comb over `replacement`.  An empty range inserts (f.src must be the unit).
class WordOp {
 public:
  WordOp(const SkeletalCategory& cat, std::vector<ObjectExpr> word);
  WordOp(const SkeletalCategory& cat, const BracketTree& source_tree);

  void apply(std::size_t i, std::size_t j, const Morphism& f,
             std::vector<ObjectExpr> replacement);
  // endomorphism of the sub-word; atoms are kept
  void apply_endo(std::size_t i, std::size_t j, const Morphism& f);
  void drop_units();
  void scale(Cplx c);
  // compose with the unitary to a chosen final bracketing of the current word
  Morphism finish(const BracketTree& target) const;
  const Morphism& morphism() const { return acc_; }
  const std::vector<ObjectExpr>& word() const { return word_; }

 private:
  const SkeletalCategory* cat_;
  std::vector<ObjectExpr> word_;
  Morphism acc_;
};

// Direct sum bookkeeping: slots of each part occupy consecutive positions in
// the total expression, part-major.
struct DirectSum {
  ObjectExpr total;
  std::vector<ObjectExpr> parts;

  Morphism injection(std::size_t p) const;
  Morphism projection(std::size_t p) const;
};
DirectSum direct_sum(std::vector<ObjectExpr> parts);

}  // namespace fcat

#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fusioncat/fusion_rules.hpp"
#include "fusioncat/types.hpp"

namespace fcat {

// One fusion-tree vertex choice: intermediate charge plus the two vertex
// multiplicity indices.  For the left tree of (a(x)b)(x)c -> d the triple is
// (e, mu, nu) with mu < N_{ab}^e and nu < N_{ec}^d; for the right tree it is
// (f, rho, sigma) with rho < N_{bc}^f and sigma < N_{af}^d.
using TreeVertex = std::tuple<LabelId, long, long>;

// Recoupling table.  The stored matrix F = F^{abc}_d expands left-tree basis
// vectors in the right-tree basis:
//   L_(e,mu,nu) = sum_(f,rho,sigma) F[(e,mu,nu), (f,rho,sigma)] R_(f,rho,sigma).
// Matrices with a unit leg are never stored; they are the identity by the
// gauge convention recorded in `convention`.
class FSymbolTable {
 public:
  FSymbolTable() = default;
  explicit FSymbolTable(std::string convention) : convention_(std::move(convention)) {}

  const std::string& convention() const { return convention_; }
  void set_convention(std::string c) { convention_ = std::move(c); }

  static std::vector<TreeVertex> left_basis(const FusionRules& rules, LabelId a, LabelId b,
                                            LabelId c, LabelId d);
  static std::vector<TreeVertex> right_basis(const FusionRules& rules, LabelId a, LabelId b,
                                             LabelId c, LabelId d);

  void set(const FusionRules& rules, LabelId a, LabelId b, LabelId c, LabelId d, Mat f);
  // Throws InputError if a required non-unit-leg matrix is missing.
  Mat fmatrix(const FusionRules& rules, LabelId a, LabelId b, LabelId c, LabelId d) const;

  bool has(LabelId a, LabelId b, LabelId c, LabelId d) const;
  const std::map<std::array<LabelId, 4>, Mat>& stored() const { return mats_; }
  std::map<std::array<LabelId, 4>, Mat>& mutable_stored() { return mats_; }

 private:
  std::string convention_ = "unitary-left-tree";
  std::map<std::array<LabelId, 4>, Mat> mats_;
};

}  // namespace fcat

#pragma once

#include <optional>
#include <vector>

#include "fusioncat/fsymbols.hpp"
#include "fusioncat/fusion_rules.hpp"
#include "fusioncat/object_expr.hpp"
#include "fusioncat/types.hpp"

namespace fcat {

// Skeletal presentation of a unitary fusion category: fusion rules, recoupling
// table, pivotal phases kappa_s and quantum dimensions.  The single source of
// truth for all morphism computation.
class SkeletalCategory {
 public:
  SkeletalCategory() = default;
  // dims omitted -> Perron-Frobenius dimensions are computed from the rules.
  SkeletalCategory(FusionRules rules, FSymbolTable fsymbols, std::vector<Cplx> pivotal,
                   std::optional<std::vector<double>> dims = std::nullopt,
                   double tol = kDefaultTol);

  const FusionRules& rules() const { return rules_; }
  const FSymbolTable& fsymbols() const { return fsymbols_; }
  FSymbolTable& mutable_fsymbols() { return fsymbols_; }

  LabelId unit() const { return rules_.unit(); }
  LabelId dual(LabelId s) const { return rules_.dual(s); }
  LabelId id(const std::string& name) const { return rules_.id(name); }
  const std::string& name(LabelId s) const { return rules_.name(s); }
  std::size_t n_labels() const { return rules_.size(); }

  double dim(LabelId s) const { return dims_.at(s); }
  const std::vector<double>& dims() const { return dims_; }
  double dim(const ObjectExpr& x) const { return expr_dim(x, dims_); }
  Cplx pivotal(LabelId s) const { return pivotal_.at(s); }

  double tol() const { return tol_; }
  void set_tol(double t);

  ObjectExpr unit_expr() const { return ObjectExpr::simple(rules_.unit()); }
  ObjectExpr simple(LabelId s) const { return ObjectExpr::simple(s); }

 private:
  FusionRules rules_;
  FSymbolTable fsymbols_;
  std::vector<Cplx> pivotal_;
  std::vector<double> dims_;
  double tol_ = kDefaultTol;
};

// Perron-Frobenius dimension of every label: spectral radius of the left
// multiplication matrix.  Throws DiagnosticError if the fusion graph of the
// sum of all simples is reducible.
std::vector<double> perron_dimensions(const FusionRules& rules);

}  // namespace fcat

#pragma once

#include <map>
#include <string>

#include "fusioncat/fusion_rules.hpp"
#include "fusioncat/types.hpp"

namespace fcat {

// Formal finite direct sum of simples.  The empty expression is the zero
// object; every operation on it returns empty blocks.
class ObjectExpr {
 public:
  ObjectExpr() = default;
  explicit ObjectExpr(std::map<LabelId, long> mult);
  ObjectExpr(std::initializer_list<std::pair<const LabelId, long>> mult)
      : ObjectExpr(std::map<LabelId, long>(mult)) {}
  static ObjectExpr simple(LabelId s) { return ObjectExpr({{s, 1}}); }
  static ObjectExpr zero() { return ObjectExpr(); }

  long mult(LabelId s) const;
  const std::map<LabelId, long>& mults() const { return mult_; }
  bool empty() const { return mult_.empty(); }
  long total() const;  // number of simple summands with multiplicity

  ObjectExpr dual(const FusionRules& rules) const;
  ObjectExpr plus(const ObjectExpr& other) const;

  bool operator==(const ObjectExpr& o) const { return mult_ == o.mult_; }
  bool operator!=(const ObjectExpr& o) const { return mult_ != o.mult_; }

  std::string str(const FusionRules& rules) const;

 private:
  std::map<LabelId, long> mult_;  // only strictly positive entries
};

// d(X) = sum_s n_s d_s for a dimension vector indexed by label id.
double expr_dim(const ObjectExpr& x, const std::vector<double>& dims);

}  // namespace fcat

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fusioncat/types.hpp"

namespace fcat {

// Fusion rules of a based ring: ordered label set, unit, dual involution and
// multiplicities N_{st}^r.  Everything downstream (basis enumeration, block
// shapes) is keyed to the declared label order.
class FusionRules {
 public:
  FusionRules() = default;
  FusionRules(std::vector<std::string> labels, const std::string& unit,
              std::map<std::string, std::string> dual,
              std::map<std::tuple<std::string, std::string, std::string>, long> mult);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name(LabelId s) const { return labels_.at(s); }
  LabelId id(const std::string& name) const;
  bool has(const std::string& name) const;

  LabelId unit() const { return unit_; }
  LabelId dual(LabelId s) const { return dual_.at(s); }
  long mult(LabelId s, LabelId t, LabelId r) const;

  // dim Hom(U_r, U_s (x) U_t) spelled by role.
  long fusion_mult(LabelId s, LabelId t, LabelId r) const { return mult(s, t, r); }

  // Structural invariants: unit laws, dual involution, N_{st}^e = delta_{t,sbar},
  // Frobenius symmetry.  Throws InputError naming the offending key.
  void check() const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, LabelId> index_;
  LabelId unit_ = 0;
  std::vector<LabelId> dual_;
  // dense cube, row-major (s,t,r); label counts stay small for full-data use
  std::vector<long> mult_;
};

}  // namespace fcat

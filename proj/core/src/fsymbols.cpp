#include "fusioncat/fsymbols.hpp"

#include <sstream>

namespace fcat {

std::vector<TreeVertex> FSymbolTable::left_basis(const FusionRules& rules, LabelId a, LabelId b,
                                                 LabelId c, LabelId d) {
  std::vector<TreeVertex> out;
  for (LabelId e = 0; e < rules.size(); ++e) {
    const long m1 = rules.mult(a, b, e);
    const long m2 = rules.mult(e, c, d);
    for (long mu = 0; mu < m1; ++mu)
      for (long nu = 0; nu < m2; ++nu) out.emplace_back(e, mu, nu);
  }
  return out;
}

std::vector<TreeVertex> FSymbolTable::right_basis(const FusionRules& rules, LabelId a, LabelId b,
                                                  LabelId c, LabelId d) {
  std::vector<TreeVertex> out;
  for (LabelId f = 0; f < rules.size(); ++f) {
    const long m1 = rules.mult(b, c, f);
    const long m2 = rules.mult(a, f, d);
    for (long rho = 0; rho < m1; ++rho)
      for (long sigma = 0; sigma < m2; ++sigma) out.emplace_back(f, rho, sigma);
  }
  return out;
}

void FSymbolTable::set(const FusionRules& rules, LabelId a, LabelId b, LabelId c, LabelId d,
                       Mat f) {
  const auto lb = left_basis(rules, a, b, c, d);
  const auto rb = right_basis(rules, a, b, c, d);
  if (static_cast<long>(lb.size()) != f.rows() || static_cast<long>(rb.size()) != f.cols()) {
    std::ostringstream os;
    os << "F block (" << rules.name(a) << "," << rules.name(b) << "," << rules.name(c) << ";"
       << rules.name(d) << ") has shape " << f.rows() << "x" << f.cols() << ", expected "
       << lb.size() << "x" << rb.size();
    throw InputError(os.str());
  }
  if (f.size() == 0) return;
  mats_[{a, b, c, d}] = std::move(f);
}

bool FSymbolTable::has(LabelId a, LabelId b, LabelId c, LabelId d) const {
  return mats_.count({a, b, c, d}) != 0;
}

Mat FSymbolTable::fmatrix(const FusionRules& rules, LabelId a, LabelId b, LabelId c,
                          LabelId d) const {
  const auto lb = left_basis(rules, a, b, c, d);
  if (lb.empty()) return Mat(0, 0);
  const LabelId e = rules.unit();
  if (a == e || b == e || c == e) {
    // trivial on unit legs; both bases enumerate the same free vertex index
    return Mat::Identity(lb.size(), lb.size());
  }
  auto it = mats_.find({a, b, c, d});
  if (it == mats_.end()) {
    std::ostringstream os;
    os << "missing F block (" << rules.name(a) << "," << rules.name(b) << "," << rules.name(c)
       << ";" << rules.name(d) << ")";
    throw InputError(os.str());
  }
  return it->second;
}

}  // namespace fcat

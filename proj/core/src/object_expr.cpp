#include "fusioncat/object_expr.hpp"

#include <sstream>

namespace fcat {

ObjectExpr::ObjectExpr(std::map<LabelId, long> mult) {
  for (auto& [s, n] : mult) {
    if (n < 0) throw InputError("negative multiplicity in object expression");
    if (n > 0) mult_.emplace(s, n);
  }
}

long ObjectExpr::mult(LabelId s) const {
  auto it = mult_.find(s);
  return it == mult_.end() ? 0 : it->second;
}

long ObjectExpr::total() const {
  long t = 0;
  for (auto& [s, n] : mult_) t += n;
  return t;
}

ObjectExpr ObjectExpr::dual(const FusionRules& rules) const {
  std::map<LabelId, long> m;
  for (auto& [s, n] : mult_) m[rules.dual(s)] = n;
  return ObjectExpr(std::move(m));
}

ObjectExpr ObjectExpr::plus(const ObjectExpr& other) const {
  std::map<LabelId, long> m = mult_;
  for (auto& [s, n] : other.mult_) m[s] += n;
  return ObjectExpr(std::move(m));
}

std::string ObjectExpr::str(const FusionRules& rules) const {
  if (mult_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [s, n] : mult_) {
    if (!first) os << " + ";
    first = false;
    if (n != 1) os << n << "*";
    os << rules.name(s);
  }
  return os.str();
}

double expr_dim(const ObjectExpr& x, const std::vector<double>& dims) {
  double d = 0;
  for (auto& [s, n] : x.mults()) d += static_cast<double>(n) * dims.at(s);
  return d;
}

}  // namespace fcat

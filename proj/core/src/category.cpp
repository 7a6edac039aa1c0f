#include "fusioncat/category.hpp"

#include <Eigen/Eigenvalues>

namespace fcat {

std::vector<double> perron_dimensions(const FusionRules& rules) {
  const std::size_t n = rules.size();
  // reachability under left multiplication by the sum of all simples
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (LabelId s = 0; s < n; ++s)
    for (LabelId t = 0; t < n; ++t)
      for (LabelId r = 0; r < n; ++r)
        if (rules.mult(s, t, r) > 0) adj[t][r] = true;
  std::vector<bool> seen(n, false);
  std::vector<LabelId> stack{rules.unit()};
  seen[rules.unit()] = true;
  while (!stack.empty()) {
    LabelId t = stack.back();
    stack.pop_back();
    for (LabelId r = 0; r < n; ++r)
      if (adj[t][r] && !seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
  }
  for (LabelId r = 0; r < n; ++r)
    if (!seen[r])
      throw DiagnosticError("reducible fusion graph: label '" + rules.name(r) +
                            "' unreachable from the unit");

  std::vector<double> dims(n);
  for (LabelId s = 0; s < n; ++s) {
    RMat L(n, n);
    for (LabelId r = 0; r < n; ++r)
      for (LabelId t = 0; t < n; ++t) L(r, t) = static_cast<double>(rules.mult(s, t, r));
    Eigen::EigenSolver<RMat> es(L);
    double rad = 0;
    for (long i = 0; i < es.eigenvalues().size(); ++i)
      rad = std::max(rad, std::abs(es.eigenvalues()(i)));
    dims[s] = rad;
  }
  return dims;
}

SkeletalCategory::SkeletalCategory(FusionRules rules, FSymbolTable fsymbols,
                                   std::vector<Cplx> pivotal,
                                   std::optional<std::vector<double>> dims, double tol)
    : rules_(std::move(rules)),
      fsymbols_(std::move(fsymbols)),
      pivotal_(std::move(pivotal)),
      tol_(tol) {
  if (tol_ <= 0) throw InputError("tolerance must be positive");
  if (pivotal_.size() != rules_.size())
    throw InputError("pivotal data must cover every label");
  dims_ = dims ? std::move(*dims) : perron_dimensions(rules_);
  if (dims_.size() != rules_.size()) throw InputError("dimension data must cover every label");
  for (double d : dims_)
    if (!(d > 0)) throw InputError("dimensions must be strictly positive");
}

void SkeletalCategory::set_tol(double t) {
  if (t <= 0) throw InputError("tolerance must be positive");
  tol_ = t;
}

}  // namespace fcat

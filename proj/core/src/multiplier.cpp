#include "fusioncat/multiplier.hpp"

#include <Eigen/Eigenvalues>

namespace fcat {

Cplx Multiplier::at(LabelId s) const {
  auto it = values.find(s);
  if (it == values.end())
    throw InputError("multiplier window does not cover label id " + std::to_string(s));
  return it->second;
}

Multiplier Multiplier::delta_e(const SkeletalCategory& cat) {
  Multiplier phi;
  for (LabelId s = 0; s < cat.n_labels(); ++s) phi.values[s] = (s == cat.unit()) ? 1.0 : 0.0;
  return phi;
}

Multiplier Multiplier::constant_one(const SkeletalCategory& cat) {
  Multiplier phi;
  for (LabelId s = 0; s < cat.n_labels(); ++s) phi.values[s] = 1.0;
  return phi;
}

RingMultiplier to_ring_multiplier(const SkeletalCategory& cat, const Multiplier& phi) {
  RingMultiplier out;
  for (auto& [s, v] : phi.values) out[cat.name(s)] = v;
  return out;
}

Multiplier from_ring_multiplier(const SkeletalCategory& cat, const RingMultiplier& phi) {
  Multiplier out;
  for (auto& [s, v] : phi) out.values[cat.id(s)] = v;
  return out;
}

const Morphism& AphiBlocks::block(LabelId s, LabelId t) const {
  auto it = blocks.find({s, t});
  if (it == blocks.end()) throw ShapeError("A-phi block outside the index set");
  return it->second;
}

std::map<LabelId, Mat> AphiBlocks::grand() const {
  DirectSum sum = direct_sum(summands);
  std::map<LabelId, Mat> out;
  for (const auto& [r, n] : sum.total.mults()) out[r] = Mat::Zero(n, n);
  for (std::size_t i = 0; i < index_set.size(); ++i)
    for (std::size_t j = 0; j < index_set.size(); ++j) {
      const Morphism lifted =
          compose(sum.injection(i), compose(block(index_set[i], index_set[j]), sum.projection(j)));
      for (const auto& [r, m] : lifted.blocks()) out[r] += m;
    }
  return out;
}

AphiBlocks build_aphi(const SkeletalCategory& cat, const Multiplier& phi,
                      const std::vector<LabelId>& index_set) {
  if (cat.fsymbols().stored().empty() && cat.n_labels() > 1)
    throw CapabilityError("A-phi blocks need full recoupling data");
  AphiBlocks out;
  out.index_set = index_set;
  std::vector<Cplx> table(cat.n_labels());
  for (LabelId r = 0; r < cat.n_labels(); ++r) {
    if (!phi.defined(r))
      throw InputError("multiplier window does not cover label '" + cat.name(r) + "'");
    table[r] = phi.at(r);
  }

  for (LabelId s : index_set)
    out.summands.push_back(
        tensor_expr(cat.rules(), cat.simple(s), cat.simple(cat.dual(s))));

  for (LabelId s : index_set) {
    const DualityPair ps = standard_pair_simple(cat, s);
    for (LabelId t : index_set) {
      const DualityPair pt = standard_pair_simple(cat, t);
      const ObjectExpr sbar = cat.simple(cat.dual(s));
      const ObjectExpr tobj = cat.simple(t);
      // (i (x) i (x) Rbar_t*)(i (x) M^phi (x) i)(Rbar_s (x) i (x) i), scaled
      WordOp w(cat, BracketTree::node(BracketTree::leaf(tobj),
                                      BracketTree::leaf(cat.simple(cat.dual(t)))));
      w.apply(0, 0, ps.Rbar, {cat.simple(s), sbar});
      w.apply_endo(1, 3, isotypic_scalar(cat, word_expr(cat, {sbar, tobj}), table));
      w.apply(2, 4, pt.Rbar.dagger(), {});
      w.scale(std::sqrt(cat.dim(s) * cat.dim(t)));
      Morphism m = w.finish(BracketTree::node(BracketTree::leaf(cat.simple(s)),
                                              BracketTree::leaf(sbar)));
      out.blocks.emplace(std::make_pair(s, t), std::move(m));
    }
  }
  return out;
}

namespace {

struct GrandEig {
  double herm_residual = 0;
  double min_eig = 0;
  std::optional<CpWitness> witness;
};

GrandEig grand_min_eigenvalue(const std::map<LabelId, Mat>& grand) {
  GrandEig out;
  out.min_eig = 0;
  bool first = true;
  double scale = 1.0;
  for (auto& [r, g] : grand) {
    if (g.size() == 0) continue;
    scale = std::max(scale, g.norm());
    out.herm_residual = std::max(out.herm_residual, (g - g.adjoint()).norm());
    Eigen::SelfAdjointEigenSolver<Mat> es(Mat(0.5 * (g + g.adjoint())));
    const double lo = es.eigenvalues().minCoeff();
    if (first || lo < out.min_eig) {
      first = false;
      out.min_eig = lo;
      long idx = 0;
      es.eigenvalues().minCoeff(&idx);
      out.witness = CpWitness{r, es.eigenvectors().col(idx), lo};
    }
  }
  out.herm_residual /= scale;
  return out;
}

}  // namespace

CpVerdict cp_check(const SkeletalCategory& cat, const Multiplier& phi,
                   const std::vector<std::vector<LabelId>>& schedule) {
  if (schedule.empty()) throw InputError("cp_check: empty schedule of index sets");
  CpVerdict v;
  v.positive = true;
  for (const auto& window : schedule) {
    AphiBlocks a = build_aphi(cat, phi, window);
    const std::map<LabelId, Mat> grand = a.grand();
    GrandEig ge = grand_min_eigenvalue(grand);
    if (ge.herm_residual > cat.tol())
      throw InputError("malformed multiplier: grand matrix not self-adjoint "
                       "(phi(sbar) != conj(phi(s)))");
    if (window.size() >= v.window.size()) {
      v.window = window;
      v.min_eigenvalue = ge.min_eig;
      v.herm_residual = ge.herm_residual;
    }
    double scale = 1.0;
    for (auto& [r, g] : grand) scale = std::max(scale, g.norm());
    if (ge.min_eig < -cat.tol() * scale) {
      v.positive = false;
      v.min_eigenvalue = ge.min_eig;
      v.witness = ge.witness;
      v.window = window;
      break;
    }
  }
  v.semi_decision = v.positive && v.window.size() < cat.n_labels();
  return v;
}

CpVerdict cp_check(const SkeletalCategory& cat, const Multiplier& phi) {
  std::vector<LabelId> all;
  for (LabelId s = 0; s < cat.n_labels(); ++s) all.push_back(s);
  return cp_check(cat, phi, {all});
}

Cplx fusion_state_omega(const IrrBackend& backend, const RingMultiplier& phi,
                        const FusionElement& a) {
  Cplx out = 0;
  for (auto& [s, c] : a.coeffs()) {
    auto it = phi.find(s);
    if (it == phi.end())
      throw InputError("multiplier window does not cover label '" + s + "'");
    out += c * backend.dim(s) * it->second;
  }
  return out;
}

GramReport fusion_state_gram(const IrrBackend& backend, const RingMultiplier& phi,
                             const std::vector<std::string>& window) {
  GramReport rep;
  rep.labels = window;
  const std::size_t n = window.size();
  rep.gram = Mat::Zero(n, n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s) {
      Cplx g = 0;
      for (auto& [r, m] : backend.fuse(backend.dual(window[t]), window[s])) {
        auto it = phi.find(r);
        if (it == phi.end())
          throw InputError("multiplier window does not cover label '" + r + "'");
        g += static_cast<double>(m) * backend.dim(r) * it->second;
      }
      rep.gram(t, s) = g;
    }
  rep.herm_residual = (rep.gram - rep.gram.adjoint()).norm() / std::max(1.0, rep.gram.norm());
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat(0.5 * (rep.gram + rep.gram.adjoint())));
  rep.min_eigenvalue = n == 0 ? 0.0 : es.eigenvalues().minCoeff();
  return rep;
}

}  // namespace fcat

#include "fusioncat/fusion_rules.hpp"

#include <sstream>

namespace fcat {

FusionRules::FusionRules(
    std::vector<std::string> labels, const std::string& unit,
    std::map<std::string, std::string> dual,
    std::map<std::tuple<std::string, std::string, std::string>, long> mult)
    : labels_(std::move(labels)) {
  for (LabelId i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw InputError("duplicate label '" + labels_[i] + "'");
  }
  if (!index_.count(unit)) throw InputError("unit label '" + unit + "' not in label set");
  unit_ = index_.at(unit);

  dual_.resize(labels_.size());
  for (LabelId i = 0; i < labels_.size(); ++i) {
    auto it = dual.find(labels_[i]);
    if (it == dual.end()) throw InputError("missing dual for label '" + labels_[i] + "'");
    if (!index_.count(it->second))
      throw InputError("dual of '" + labels_[i] + "' is unknown label '" + it->second + "'");
    dual_[i] = index_.at(it->second);
  }

  const std::size_t n = labels_.size();
  mult_.assign(n * n * n, 0);
  for (const auto& [key, v] : mult) {
    const auto& [s, t, r] = key;
    if (!index_.count(s) || !index_.count(t) || !index_.count(r)) {
      std::ostringstream os;
      os << "fusion entry (" << s << "," << t << "," << r << ") uses unknown label";
      throw InputError(os.str());
    }
    if (v < 0) throw InputError("negative fusion multiplicity at (" + s + "," + t + "," + r + ")");
    mult_[(index_.at(s) * n + index_.at(t)) * n + index_.at(r)] = v;
  }
}

LabelId FusionRules::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown label '" + name + "'");
  return it->second;
}

bool FusionRules::has(const std::string& name) const { return index_.count(name) != 0; }

long FusionRules::mult(LabelId s, LabelId t, LabelId r) const {
  const std::size_t n = labels_.size();
  return mult_[(static_cast<std::size_t>(s) * n + t) * n + r];
}

void FusionRules::check() const {
  const LabelId e = unit_;
  const std::size_t n = labels_.size();
  auto fail = [&](const std::string& what, LabelId s, LabelId t, LabelId r) {
    std::ostringstream os;
    os << what << " violated at (" << name(s) << "," << name(t) << "," << name(r) << ")";
    throw InputError(os.str());
  };

  if (dual_[e] != e) throw InputError("dual(unit) != unit");
  for (LabelId s = 0; s < n; ++s)
    if (dual_[dual_[s]] != s) throw InputError("dual involution broken at '" + name(s) + "'");

  for (LabelId t = 0; t < n; ++t)
    for (LabelId r = 0; r < n; ++r) {
      if (mult(e, t, r) != (t == r ? 1 : 0)) fail("left unit law", e, t, r);
      if (mult(t, e, r) != (t == r ? 1 : 0)) fail("right unit law", t, e, r);
    }

  for (LabelId s = 0; s < n; ++s)
    for (LabelId t = 0; t < n; ++t) {
      if (mult(s, t, e) != (t == dual_[s] ? 1 : 0)) fail("uniqueness of duals", s, t, e);
      for (LabelId r = 0; r < n; ++r) {
        if (mult(s, t, r) != mult(dual_[s], r, t)) fail("Frobenius symmetry (sbar r | t)", s, t, r);
        if (mult(s, t, r) != mult(r, dual_[t], s)) fail("Frobenius symmetry (r tbar | s)", s, t, r);
      }
    }
}

}  // namespace fcat

#include "fusioncat/catalog.hpp"

#include <cmath>
#include <sstream>

namespace fcat {

namespace {

SkeletalCategory make_vec_zn(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::map<std::string, std::string> dual;
  std::map<std::tuple<std::string, std::string, std::string>, long> mult;
  for (int i = 0; i < n; ++i) {
    dual[labels[i]] = labels[(n - i) % n];
    for (int j = 0; j < n; ++j) mult[{labels[i], labels[j], labels[(i + j) % n]}] = 1;
  }
  FusionRules rules(labels, "0", dual, mult);

  FSymbolTable fs("unitary-left-tree");
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c) {
        const LabelId d = static_cast<LabelId>((a + b + c) % n);
        fs.set(rules, a, b, c, d, Mat::Constant(1, 1, Cplx(1.0)));
      }
  std::vector<Cplx> pivotal(n, Cplx(1.0));
  std::vector<double> dims(n, 1.0);
  return SkeletalCategory(std::move(rules), std::move(fs), std::move(pivotal), dims);
}

SkeletalCategory make_fibonacci() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  FusionRules rules({"1", "tau"}, "1", {{"1", "1"}, {"tau", "tau"}},
                    {{{"1", "1", "1"}, 1},
                     {{"1", "tau", "tau"}, 1},
                     {{"tau", "1", "tau"}, 1},
                     {{"tau", "tau", "1"}, 1},
                     {{"tau", "tau", "tau"}, 1}});
  FSymbolTable fs("unitary-left-tree");
  const LabelId t = 1;
  fs.set(rules, t, t, t, 0, Mat::Constant(1, 1, Cplx(1.0)));
  Mat f(2, 2);
  f << 1.0 / phi, 1.0 / std::sqrt(phi), 1.0 / std::sqrt(phi), -1.0 / phi;
  fs.set(rules, t, t, t, t, f.cast<Cplx>());
  return SkeletalCategory(std::move(rules), std::move(fs), {Cplx(1.0), Cplx(1.0)},
                          std::vector<double>{1.0, phi});
}

SkeletalCategory make_ising() {
  const double r2 = std::sqrt(2.0);
  FusionRules rules({"1", "sigma", "psi"}, "1",
                    {{"1", "1"}, {"sigma", "sigma"}, {"psi", "psi"}},
                    {{{"1", "1", "1"}, 1},
                     {{"1", "sigma", "sigma"}, 1},
                     {{"1", "psi", "psi"}, 1},
                     {{"sigma", "1", "sigma"}, 1},
                     {{"psi", "1", "psi"}, 1},
                     {{"sigma", "sigma", "1"}, 1},
                     {{"sigma", "sigma", "psi"}, 1},
                     {{"sigma", "psi", "sigma"}, 1},
                     {{"psi", "sigma", "sigma"}, 1},
                     {{"psi", "psi", "1"}, 1}});
  FSymbolTable fs("unitary-left-tree");
  const LabelId s = 1, p = 2;
  // nontrivial recouplings of the sigma-psi system
  Mat h(2, 2);
  h << 1.0 / r2, 1.0 / r2, 1.0 / r2, -1.0 / r2;
  fs.set(rules, s, s, s, s, h.cast<Cplx>());
  fs.set(rules, s, p, s, p, Mat::Constant(1, 1, Cplx(-1.0)));
  fs.set(rules, p, s, p, s, Mat::Constant(1, 1, Cplx(-1.0)));
  // remaining admissible non-unit triples are +1
  fs.set(rules, s, s, p, 0, Mat::Constant(1, 1, Cplx(1.0)));
  fs.set(rules, s, s, p, p, Mat::Constant(1, 1, Cplx(1.0)));
  fs.set(rules, s, p, s, 0, Mat::Constant(1, 1, Cplx(1.0)));
  fs.set(rules, s, p, p, s, Mat::Constant(1, 1, Cplx(1.0)));
  fs.set(rules, p, s, s, 0, Mat::Constant(1, 1, Cplx(1.0)));
  fs.set(rules, p, s, s, p, Mat::Constant(1, 1, Cplx(1.0)));
  fs.set(rules, p, p, s, s, Mat::Constant(1, 1, Cplx(1.0)));
  fs.set(rules, p, p, p, p, Mat::Constant(1, 1, Cplx(1.0)));
  return SkeletalCategory(std::move(rules), std::move(fs),
                          {Cplx(1.0), Cplx(1.0), Cplx(1.0)},
                          std::vector<double>{1.0, r2, 1.0});
}

std::shared_ptr<IrrBackend> finite_backend_of(const std::string& name,
                                              const SkeletalCategory& cat) {
  return make_finite_backend(name, cat.rules(), cat.dims());
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 12; ++n) names.push_back("VecZ" + std::to_string(n));
  names.push_back("Fibonacci");
  names.push_back("Ising");
  names.push_back("TL");          // TL:<delta> also accepted, default delta = 3
  for (int k = 1; k <= 10; ++k) names.push_back("SU2k" + std::to_string(k));
  for (int k = 1; k <= 3; ++k) names.push_back("FreeGroup" + std::to_string(k));
  names.push_back("ZxZ");
  return names;
}

CatalogEntry catalog_get(const std::string& name) {
  CatalogEntry e;
  e.name = name;

  if (name.rfind("VecZ", 0) == 0) {
    const int n = std::atoi(name.c_str() + 4);
    if (n >= 2 && n <= 12) {
      e.full_data = true;
      e.category = make_vec_zn(n);
      e.backend = finite_backend_of(name, *e.category);
      e.notes = "pointed category of Z/" + std::to_string(n) + "; all dims 1, trivial F";
      return e;
    }
  }
  if (name == "Fibonacci") {
    e.full_data = true;
    e.category = make_fibonacci();
    e.backend = finite_backend_of(name, *e.category);
    e.notes = "tau (x) tau = 1 + tau; d_tau = (1+sqrt 5)/2; F from the pentagon solver";
    return e;
  }
  if (name == "Ising") {
    e.full_data = true;
    e.category = make_ising();
    e.backend = finite_backend_of(name, *e.category);
    e.notes = "labels 1, sigma, psi; d_sigma = sqrt 2; F from the pentagon solver";
    return e;
  }
  if (name == "TL" || name.rfind("TL:", 0) == 0) {
    const double delta = (name == "TL") ? 3.0 : std::atof(name.c_str() + 3);
    e.backend = make_tl_backend(delta);
    e.notes = "chain fusion ring; truncations are path graphs, top eigenvalue 2cos(pi/(n+1))";
    return e;
  }
  if (name.rfind("SU2k", 0) == 0) {
    const int k = std::atoi(name.c_str() + 4);
    if (k >= 1 && k <= 10) {
      e.backend = make_su2k_backend(k);
      e.notes = "SU(2) level-" + std::to_string(k) + " fusion ring (ring data only)";
      return e;
    }
  }
  if (name.rfind("FreeGroup", 0) == 0) {
    const int k = std::atoi(name.c_str() + 9);
    if (k >= 1 && k <= 3) {
      e.backend = make_free_group_backend(k);
      e.notes = "free group ring; generator-sum norm tends to 2 sqrt(2k-1)";
      return e;
    }
  }
  if (name == "ZxZ") {
    e.backend = make_zxz_backend();
    e.notes = "Z^2 group ring; generator-sum norm tends to 4";
    return e;
  }

  std::ostringstream os;
  os << "unknown catalog entry '" << name << "'; available:";
  for (const auto& n : catalog_names()) os << " " << n;
  throw InputError(os.str());
}

SkeletalCategory catalog_category(const std::string& name) {
  CatalogEntry e = catalog_get(name);
  if (!e.category)
    throw CapabilityError("catalog entry '" + name + "' carries fusion-ring data only");
  return std::move(*e.category);
}

}  // namespace fcat

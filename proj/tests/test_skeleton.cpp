#include <random>

#include "doctest.h"
#include "fusioncat/catalog.hpp"
#include "fusioncat/duality.hpp"
#include "fusioncat/validate.hpp"

using namespace fcat;

namespace {

Morphism random_morphism(const ObjectExpr& src, const ObjectExpr& tgt, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Morphism t(src, tgt);
  for (auto& [r, n] : tgt.mults()) {
    const long m = src.mult(r);
    if (m == 0) continue;
    Mat b(n, m);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < m; ++j) b(i, j) = Cplx(g(rng), g(rng));
    t.set_block(r, std::move(b));
  }
  return t;
}

}  // namespace

TEST_CASE("fusion rules invariants hold for catalog entries") {
  for (const char* name : {"VecZ2", "VecZ5", "Fibonacci", "Ising"}) {
    SkeletalCategory cat = catalog_category(name);
    CHECK_NOTHROW(cat.rules().check());
  }
}

TEST_CASE("VecZ2 with trivial F validates with zero residuals") {
  SkeletalCategory cat = catalog_category("VecZ2");
  CheckReport rep = validate_category(cat);
  INFO(rep.text());
  CHECK(rep.pass());
  CHECK(rep.max_residual() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("Fibonacci pentagon residual is tiny") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  CHECK(pentagon_residual(cat) < 1e-9);
  CHECK(funitarity_residual(cat) < 1e-12);
}

TEST_CASE("Ising pentagon residual is tiny") {
  SkeletalCategory cat = catalog_category("Ising");
  CHECK(pentagon_residual(cat) < 1e-9);
  CHECK(funitarity_residual(cat) < 1e-12);
}

TEST_CASE("perturbing one F entry breaks the pentagon identity") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  const LabelId t = cat.id("tau");
  Mat f = cat.fsymbols().fmatrix(cat.rules(), t, t, t, t);
  f(0, 0) += 1e-3;
  cat.mutable_fsymbols().set(cat.rules(), t, t, t, t, f);
  CHECK(pentagon_residual(cat) > 1e-4);
}

TEST_CASE("composition identities") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  std::mt19937 rng(5);
  const ObjectExpr x({{0, 2}, {1, 1}});
  const Morphism id = Morphism::identity(x);
  const Morphism f = random_morphism(x, x, rng);
  CHECK(distance(compose(id, f), f) < 1e-14);
  CHECK(distance(compose(f, id), f) < 1e-14);
  CHECK(distance(f.dagger().dagger(), f) == 0.0);

  // associativity of composition
  const Morphism g = random_morphism(x, x, rng);
  const Morphism h = random_morphism(x, x, rng);
  CHECK(distance(compose(compose(f, g), h), compose(f, compose(g, h))) < 1e-12);

  // composing mismatched shapes names the offending block
  const ObjectExpr y({{0, 1}});
  CHECK_THROWS_AS((void)compose(random_morphism(y, y, rng), f), ShapeError);
}

TEST_CASE("dagger is monoidal") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  std::mt19937 rng(7);
  const ObjectExpr x({{0, 1}, {1, 2}});
  const ObjectExpr y({{1, 1}});
  const Morphism f = random_morphism(x, y, rng);
  const Morphism g = random_morphism(y, x, rng);
  CHECK(distance(tensor(cat.rules(), f, g).dagger(),
                 tensor(cat.rules(), f.dagger(), g.dagger())) < 1e-12);
}

TEST_CASE("tensoring with the unit is strict") {
  SkeletalCategory cat = catalog_category("Ising");
  std::mt19937 rng(11);
  const ObjectExpr x({{1, 2}, {2, 1}});
  const Morphism f = random_morphism(x, x, rng);
  const Morphism lhs = tensor(cat.rules(), f, Morphism::identity(cat.unit_expr()));
  const Morphism rhs = tensor(cat.rules(), Morphism::identity(cat.unit_expr()), f);
  CHECK(distance(lhs, f) == 0.0);
  CHECK(distance(rhs, f) == 0.0);
}

TEST_CASE("associator naturality: bracketing change commutes with tensor morphisms") {
  SkeletalCategory cat = catalog_category("Ising");
  std::mt19937 rng(13);
  const ObjectExpr a({{1, 1}}), b({{1, 1}, {2, 1}}), c({{1, 1}});
  const Morphism f = random_morphism(a, a, rng);
  const Morphism g = random_morphism(b, b, rng);
  const Morphism h = random_morphism(c, c, rng);
  const Morphism al = assoc(cat, a, b, c);
  const Morphism lhs = compose(al, tensor(cat.rules(), tensor(cat.rules(), f, g), h));
  const Morphism rhs = compose(tensor(cat.rules(), f, tensor(cat.rules(), g, h)), al);
  CHECK(distance(lhs, rhs) < 1e-9);
}

TEST_CASE("standard pairs: conjugate equations, norms, unit object") {
  for (const char* name : {"VecZ3", "Fibonacci", "Ising"}) {
    SkeletalCategory cat = catalog_category(name);
    for (LabelId s = 0; s < cat.n_labels(); ++s) {
      DualityPair p = standard_pair_simple(cat, s);
      CHECK(conjugate_equation_residual(cat, p) < 1e-9);
      CHECK(std::abs(compose(p.R.dagger(), p.R).unit_scalar_value(cat.unit()) - cat.dim(s)) <
            1e-9);
    }
    // unit object: R = Rbar = scalar 1
    DualityPair pe = standard_pair_simple(cat, cat.unit());
    CHECK(std::abs(pe.R.unit_scalar_value(cat.unit()) - Cplx(1.0)) < 1e-12);
    CHECK(std::abs(pe.Rbar.unit_scalar_value(cat.unit()) - Cplx(1.0)) < 1e-12);
  }
}

TEST_CASE("Fibonacci cup norm matches the Perron root of x^2 = x + 1") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;  // positive root, by hand
  DualityPair p = standard_pair_simple(cat, cat.id("tau"));
  const Cplx norm2 = compose(p.R.dagger(), p.R).unit_scalar_value(cat.unit());
  CHECK(std::abs(norm2 - phi) < 1e-9);
}

TEST_CASE("traces: identity, sphericality, multiplicativity") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  std::mt19937 rng(17);

  // Tr(id_s) = d_s
  for (LabelId s = 0; s < cat.n_labels(); ++s) {
    const Cplx tr = categorical_trace(cat, Morphism::identity(cat.simple(s)));
    CHECK(std::abs(tr - cat.dim(s)) < 1e-9);
  }

  // left = right on random endomorphisms
  const ObjectExpr x({{0, 2}, {1, 2}});
  for (int i = 0; i < 20; ++i) {
    const Morphism t = random_morphism(x, x, rng);
    CHECK(std::abs(categorical_trace(cat, t) - categorical_trace_right(cat, t)) < 1e-9);
  }

  // Tr over End(tau (x) tau) of the projection onto the unit summand is 1
  const ObjectExpr tau = cat.simple(cat.id("tau"));
  const Morphism pe = isotypic_projection(cat, {tau, tau}, cat.unit());
  CHECK(std::abs(categorical_trace(cat, pe) - Cplx(1.0)) < 1e-9);

  // (Tr_X (x) i)(S (x) T) = Tr(S) T
  const ObjectExpr y({{1, 1}});
  const Morphism s = random_morphism(x, x, rng);
  const Morphism t = random_morphism(y, y, rng);
  const Morphism lhs = partial_trace_left(cat, x, y, y, tensor(cat.rules(), s, t));
  const Morphism rhs = t * categorical_trace(cat, s);
  CHECK(distance(lhs, rhs) < 1e-12);
}

TEST_CASE("isotypic projections resolve the identity") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  const ObjectExpr tau = cat.simple(cat.id("tau"));
  const std::vector<ObjectExpr> word{tau, tau};
  const Morphism p0 = isotypic_projection(cat, word, cat.unit());
  const Morphism p1 = isotypic_projection(cat, word, cat.id("tau"));
  // ranks match the fusion multiplicities
  CHECK(p0.block(cat.unit()).rows() == 1);
  CHECK(p1.block(cat.id("tau")).rows() == 1);
  CHECK(distance(p0 + p1, Morphism::identity(word_expr(cat, word))) == 0.0);
  CHECK(distance(compose(p0, p0), p0) == 0.0);
  CHECK(distance(p0.dagger(), p0) == 0.0);
}

TEST_CASE("dual morphism: defining identity, involution, anti-multiplicativity") {
  SkeletalCategory cat = catalog_category("Ising");
  std::mt19937 rng(23);
  const ObjectExpr x({{1, 1}, {2, 1}});
  const ObjectExpr y({{1, 2}});
  const Morphism t = random_morphism(x, y, rng);
  const DualityPair px = standard_pair(cat, x);
  const DualityPair py = standard_pair(cat, y);
  const Morphism tv = dual_morphism(cat, t, px, py);

  // (T (x) i) Rbar_X = (i (x) T^vee) Rbar_Y
  const Morphism lhs = compose(tensor(cat.rules(), t, Morphism::identity(px.dual)), px.Rbar);
  const Morphism rhs = compose(tensor(cat.rules(), Morphism::identity(py.obj), tv), py.Rbar);
  CHECK(distance(lhs, rhs) < 1e-9);

  // identity and scalars on a simple
  const ObjectExpr sig = cat.simple(cat.id("sigma"));
  CHECK(distance(dual_morphism(cat, Morphism::identity(sig)), Morphism::identity(sig)) < 1e-12);

  // double dual with the swapped pairs is the identity operation
  const Morphism tvv = dual_morphism(cat, tv, swapped_pair(cat, py), swapped_pair(cat, px));
  CHECK(distance(tvv, t) < 1e-9);

  // anti-multiplicativity (ST)^vee = T^vee S^vee on random endomorphisms
  const Morphism s2 = random_morphism(y, y, rng);
  const Morphism t2 = random_morphism(y, y, rng);
  const Morphism lhs2 = dual_morphism(cat, compose(s2, t2), py, py);
  const Morphism rhs2 =
      compose(dual_morphism(cat, t2, py, py), dual_morphism(cat, s2, py, py));
  CHECK(distance(lhs2, rhs2) < 1e-9);
}

TEST_CASE("full validation suite passes on the full-data catalog") {
  for (const char* name : {"VecZ2", "VecZ3", "Fibonacci", "Ising"}) {
    SkeletalCategory cat = catalog_category(name);
    CheckReport rep = validate_category(cat);
    INFO(name, "\n", rep.text());
    CHECK(rep.pass());
  }
}

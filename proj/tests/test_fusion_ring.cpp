#include <cmath>

#include "doctest.h"
#include "fusioncat/catalog.hpp"
#include "fusioncat/fusion_element.hpp"
#include "fusioncat/spectral.hpp"

using namespace fcat;

TEST_CASE("fusion algebra: products, star, group case") {
  auto z2 = catalog_get("VecZ2").backend;
  const FusionElement g = FusionElement::basis(z2, "1");
  const FusionElement e = FusionElement::basis(z2, "0");

  // [g][g] = [e]
  const FusionElement gg = g * g;
  CHECK(gg.coeff("0") == Cplx(1.0));
  CHECK(gg.coeff("1") == Cplx(0.0));

  // star([g] + i[e]) = [g] - i[e]
  const FusionElement a = g + e * Cplx(0, 1);
  const FusionElement as = a.star();
  CHECK(as.coeff("1") == Cplx(1.0));
  CHECK(as.coeff("0") == Cplx(0, -1));

  auto fib = catalog_get("Fibonacci").backend;
  const FusionElement tau = FusionElement::basis(fib, "tau");
  const FusionElement tt = tau * tau;
  CHECK(tt.coeff("1") == Cplx(1.0));
  CHECK(tt.coeff("tau") == Cplx(1.0));

  CHECK_THROWS_AS((void)(g * tau), InputError);

  // associativity on integer structure constants is exact
  const FusionElement lhs = (tau * tau) * tau;
  const FusionElement rhs = tau * (tau * tau);
  for (auto& [s, v] : lhs.coeffs()) CHECK(v == rhs.coeff(s));
}

TEST_CASE("dimensions via the Perron route") {
  double res = 0;
  auto fib = catalog_get("Fibonacci").backend;
  auto dims = ring_dimensions(*fib, 100, &res);
  CHECK(std::abs(dims.at("tau") - (1.0 + std::sqrt(5.0)) / 2.0) < 1e-9);
  CHECK(res < 1e-9);

  auto ising = catalog_get("Ising").backend;
  dims = ring_dimensions(*ising, 100, &res);
  CHECK(std::abs(dims.at("sigma") - std::sqrt(2.0)) < 1e-9);
  CHECK(res < 1e-9);

  auto zn = catalog_get("VecZ5").backend;
  dims = ring_dimensions(*zn, 100, &res);
  for (auto& [s, d] : dims) CHECK(d == doctest::Approx(1.0));

  // infinite backend: oracle values with multiplicativity residual
  auto tl = make_tl_backend(3.0);
  dims = ring_dimensions(*tl, 30, &res);
  CHECK(dims.at("0") == 1.0);
  CHECK(dims.at("1") == 3.0);
  CHECK(dims.at("2") == 8.0);
  CHECK(res < 1e-9);
}

TEST_CASE("fusion matrices: transpose duality and regular-representation match") {
  auto ising = catalog_get("Ising").backend;
  const RingObject sigma{{"sigma", 1}};
  FusionMatrix fm = fusion_matrix(*ising, sigma, 100);
  FusionMatrix fmd = fusion_matrix(*ising, {{ising->dual("sigma"), 1}}, 100);
  CHECK(RMat(fm.gamma) == RMat(fmd.gamma).transpose());

  // matrix of left multiplication by [X] has (r,t) entry dim C(U_r, X (x) U_t)
  auto fib = catalog_get("Fibonacci").backend;
  FusionMatrix ft = fusion_matrix(*fib, {{"tau", 1}}, 100);
  const FusionElement tau = FusionElement::basis(fib, "tau");
  for (std::size_t t = 0; t < ft.labels.size(); ++t) {
    const FusionElement prod = tau * FusionElement::basis(fib, ft.labels[t]);
    for (std::size_t r = 0; r < ft.labels.size(); ++r)
      CHECK(Cplx(RMat(ft.gamma)(r, t)) == prod.coeff(ft.labels[r]));
  }
}

TEST_CASE("finite ring norms hit d(X) exactly") {
  auto fib = catalog_get("Fibonacci").backend;
  NormReport rep = fusion_matrix_norm(*fib, {{"tau", 1}}, {100});
  CHECK(std::abs(rep.best() - fib->dim("tau")) < 1e-9);

  AmenabilityReport am = amenability_report(*fib, {{"tau", 1}}, {});
  CHECK(am.verdict == "amenable-consistent");
  CHECK(am.definitive);
  CHECK(am.gap < 1e-9);
}

TEST_CASE("TL truncations follow the path-graph oracle 2cos(pi/(n+1))") {
  auto tl = make_tl_backend(3.0);
  const RingObject x{{"1", 1}};
  const std::vector<long> schedule{50, 200, 800, 2000};
  NormReport rep = fusion_matrix_norm(*tl, x, schedule, 1e-3);
  REQUIRE(rep.bounds.size() == 4);
  double prev = 0;
  for (const auto& b : rep.bounds) {
    const double oracle = 2.0 * std::cos(M_PI / (b.n_labels + 1));
    CHECK(std::abs(b.bound - oracle) < 1e-8);
    CHECK(b.bound >= prev - 1e-12);
    CHECK(b.bound <= tl->object_dim(x) + 1e-9);
    prev = b.bound;
  }
  CHECK(rep.converged);

  AmenabilityReport am = amenability_report(*tl, x, {2000});
  CHECK(am.gap == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(!am.definitive);
}

TEST_CASE("free group: literal power iteration agrees with the radial collapse") {
  auto f2 = catalog_get("FreeGroup2").backend;
  RingObject gens;
  for (const char* g : {"a", "A", "b", "B"}) gens[g] = 1;

  // materialized ball vs exact radial profile at small radius
  for (long r : {4L, 7L}) {
    FusionMatrix fm = fusion_matrix(*f2, gens, r);
    const double lit = symmetric_top_eigenvalue(fm.gamma);
    auto tri = f2->radial_profile(gens, r);
    REQUIRE(tri.has_value());
    Eigen::SelfAdjointEigenSolver<RMat> es(*tri, Eigen::EigenvaluesOnly);
    CHECK(std::abs(lit - es.eigenvalues().maxCoeff()) < 1e-8);
  }

  // Kesten-type limit 2 sqrt(2k-1) reached through large radial windows
  NormReport rep = fusion_matrix_norm(*f2, gens, {4, 8, 12, 40, 600}, 1e-4);
  const double kesten = 2.0 * std::sqrt(3.0);
  CHECK(rep.bounds.back().bound <= kesten + 1e-9);
  CHECK(std::abs(rep.bounds.back().bound - kesten) < 1e-2);
  CHECK(!rep.bounds.back().materialized);

  AmenabilityReport am = amenability_report(*f2, gens, {4, 8, 12, 600});
  CHECK(am.gap == doctest::Approx(4.0 - kesten).epsilon(1e-2));
}

TEST_CASE("ZxZ generator sum: gap closes along growing balls") {
  auto zz = catalog_get("ZxZ").backend;
  RingObject gens{{"1,0", 1}, {"-1,0", 1}, {"0,1", 1}, {"0,-1", 1}};
  NormReport rep = fusion_matrix_norm(*zz, gens, {5, 15, 40});
  // separable oracle: ball top = 4 cos(pi/(2r+2))
  for (const auto& b : rep.bounds) {
    const double oracle = 4.0 * std::cos(M_PI / (2.0 * b.level + 2.0));
    CHECK(std::abs(b.bound - oracle) < 1e-6);
  }
  CHECK(4.0 - rep.best() < 0.02);

  // exhaustion bookkeeping
  CHECK(zz->truncation_size(2) == 25);
  CHECK(zz->truncation(1).size() == 9);
}

TEST_CASE("empty truncation schedule is rejected") {
  auto tl = make_tl_backend(3.0);
  CHECK_THROWS_AS((void)fusion_matrix_norm(*tl, {{"1", 1}}, {}), InputError);
}

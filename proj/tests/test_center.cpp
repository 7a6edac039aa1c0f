#include <random>

#include "doctest.h"
#include "fusioncat/catalog.hpp"
#include "fusioncat/cstar_decompose.hpp"
#include "fusioncat/gns.hpp"

using namespace fcat;

TEST_CASE("matrix-unit identity: c_{s,te} = delta_st d_s^{-1/2} (i (x) R_s)") {
  for (const char* name : {"VecZ3", "Fibonacci", "Ising"}) {
    SkeletalCategory cat = catalog_category(name);
    for (LabelId s = 0; s < cat.n_labels(); ++s)
      for (LabelId t = 0; t < cat.n_labels(); ++t) {
        const Morphism got = regular_braiding_block(cat, s, t, cat.unit());
        if (t != s) {
          CHECK(got.op_norm() < 1e-12);
          continue;
        }
        const DualityPair ps = standard_pair_simple(cat, s);
        WordOp w(cat, std::vector<ObjectExpr>{cat.simple(s)});
        w.apply(1, 1, ps.R, {ps.dual, ps.obj});
        w.scale(1.0 / std::sqrt(cat.dim(s)));
        const Morphism want = w.finish(BracketTree::node(
            BracketTree::node(BracketTree::leaf(cat.simple(s)), BracketTree::leaf(ps.dual)),
            BracketTree::leaf(cat.simple(s))));
        CHECK(distance(got, want) < 1e-12);
      }
  }
}

TEST_CASE("two independent formulas produce the same braiding blocks") {
  for (const char* name : {"VecZ3", "Fibonacci", "Ising"}) {
    SkeletalCategory cat = catalog_category(name);
    double res = 0;
    for (LabelId x = 0; x < cat.n_labels(); ++x)
      for (LabelId s = 0; s < cat.n_labels(); ++s)
        for (LabelId t = 0; t < cat.n_labels(); ++t) {
          const Morphism a = regular_braiding_block(cat, x, t, s);
          const Morphism b = regular_braiding_block_alt(cat, x, t, s);
          res = std::max(res, distance(a, b));
        }
    INFO(name);
    CHECK(res < 1e-9);
  }
}

TEST_CASE("braiding blocks do not depend on the choice of isometries") {
  SkeletalCategory cat = catalog_category("Ising");
  std::mt19937 rng(41);
  std::normal_distribution<double> g;
  const LabelId sig = cat.id("sigma");
  for (LabelId t = 0; t < cat.n_labels(); ++t)
    for (LabelId s = 0; s < cat.n_labels(); ++s) {
      const long m = cat.rules().mult(sig, s, t);
      if (m == 0) continue;
      Mat a(m, m);
      for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) a(i, j) = Cplx(g(rng), g(rng));
      const Mat u = Eigen::HouseholderQR<Mat>(a).householderQ() * Mat::Identity(m, m);
      CHECK(distance(regular_braiding_block(cat, sig, t, s),
                     regular_braiding_block(cat, sig, t, s, &u)) < 1e-9);
    }
}

TEST_CASE("regular half-braiding verifies on full-data catalog entries") {
  for (const char* name : {"VecZ2", "VecZ4", "Fibonacci", "Ising"}) {
    SkeletalCategory cat = catalog_category(name);
    HalfBraidedObject z = regular_half_braiding(cat);
    CHECK(z.complete());
    CheckReport rep = verify_half_braiding(cat, z);
    INFO(name, "\n", rep.text());
    CHECK(rep.pass());
  }
}

TEST_CASE("trivial braiding and a perturbed braiding") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  HalfBraidedObject triv = trivial_half_braided(cat);
  CheckReport rep = verify_half_braiding(cat, triv);
  CHECK(rep.pass());
  CHECK(rep.max_residual() == 0.0);

  HalfBraidedObject z = regular_half_braiding(cat);
  Morphism& c = z.braiding[cat.id("tau")];
  c = c * Cplx(-1.0);  // flipped phase: still unitary, no longer multiplicative
  CheckReport bad = verify_half_braiding(cat, z);
  bool mult_failed = false;
  for (auto& item : bad.items)
    if (item.id == "halfbraid.multiplicativity") mult_failed = item.residual > 0.1;
  CHECK(mult_failed);
}

TEST_CASE("truncated window flags boundary columns") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  HalfBraidedObject z = regular_half_braiding(cat, {cat.unit()});
  CHECK(!z.complete());  // tau (x) 1 leaves the window
  CheckReport rep = verify_half_braiding(cat, z);
  CHECK(rep.pass());  // isometry holds on the surviving columns
}

TEST_CASE("representation of Z_reg is the left regular representation") {
  for (const char* name : {"VecZ3", "Fibonacci", "Ising"}) {
    SkeletalCategory cat = catalog_category(name);
    HalfBraidedObject z = regular_half_braiding(cat);
    FusionRepresentation rep = rep_from_braiding(cat, z);
    REQUIRE(rep.dim == static_cast<long>(cat.n_labels()));
    CHECK(verify_representation(cat, rep).pass());

    // xi_s = d_s^{-1/2} Rbar_s sits at slot s with phase kappa_s (= 1 here);
    // the matrices must equal the fusion left-multiplication matrices
    for (LabelId s = 0; s < cat.n_labels(); ++s) {
      Mat want = Mat::Zero(rep.dim, rep.dim);
      for (LabelId t = 0; t < cat.n_labels(); ++t)
        for (LabelId r = 0; r < cat.n_labels(); ++r)
          want(r, t) = static_cast<double>(cat.rules().mult(s, t, r));
      CHECK((rep.matrix(s) - want).norm() < 1e-9);
    }
  }
}

TEST_CASE("trivial object gives the dimension character") {
  SkeletalCategory cat = catalog_category("Ising");
  FusionRepresentation rep = rep_from_braiding(cat, trivial_half_braided(cat));
  REQUIRE(rep.dim == 1);
  for (LabelId s = 0; s < cat.n_labels(); ++s)
    CHECK(std::abs(rep.matrix(s)(0, 0) - cat.dim(s)) < 1e-12);
}

TEST_CASE("almost-invariance identity: 2 d_s - 2 Re (pi xi, xi) is a trace norm") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  HalfBraidedObject z = regular_half_braiding(cat);
  FusionRepresentation rep = rep_from_braiding(cat, z);
  std::mt19937 rng(43);
  std::normal_distribution<double> g;

  Vec xi(rep.dim);
  for (long i = 0; i < rep.dim; ++i) xi(i) = Cplx(g(rng), g(rng));
  xi.normalize();

  Morphism xim(cat.unit_expr(), z.underlying);
  Mat col = Mat::Zero(rep.dim, 1);
  col.col(0) = xi;
  xim.set_block(cat.unit(), col);

  for (LabelId s = 0; s < cat.n_labels(); ++s) {
    // delta = c_s (i (x) xi) - xi (x) i as a morphism U_s -> Z (x) U_s
    const Morphism lift = compose(
        z.c(s), tensor(cat.rules(), Morphism::identity(cat.simple(s)), xim));
    const Morphism right = tensor(cat.rules(), xim, Morphism::identity(cat.simple(s)));
    const Morphism delta = lift - right;
    const Cplx tr = categorical_trace(cat, compose(delta.dagger(), delta));
    const double want = 2.0 * cat.dim(s) - 2.0 * std::real(xi.dot(rep.matrix(s) * xi));
    CHECK(std::abs(tr - want) < 1e-9);
  }
}

TEST_CASE("invariance diagnostics on Z_reg and an appended trivial block") {
  SkeletalCategory cat = catalog_category("Fibonacci");
  FusionRepresentation rep = rep_from_braiding(cat, regular_half_braiding(cat));
  // The finite regular representation splits into the two ring characters,
  // so the Perron vector is invariant and the complement carries the other
  // character; the gap over F = {tau} is d_tau - |(1 - sqrt 5)/2| ~ 1.0.
  std::vector<LabelId> f{1};
  InvarianceReport inv = invariance_diagnostics(cat, rep, f);
  CHECK(inv.invariant_basis.cols() == 1);
  CHECK(inv.vector_residuals[0] < 1e-9);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double other = std::abs((1.0 - std::sqrt(5.0)) / 2.0);
  CHECK(std::abs(inv.norm_on_complement - other) < 1e-6);
  CHECK(std::abs(inv.gap - (phi - other)) < 1e-6);
  CHECK(std::abs(inv.gap - 1.0) < 1e-6);

  // appending one more trivial block grows the invariant space
  FusionRepresentation aug;
  aug.dim = rep.dim + 1;
  for (LabelId s = 0; s < cat.n_labels(); ++s) {
    Mat m = Mat::Zero(aug.dim, aug.dim);
    m.topLeftCorner(rep.dim, rep.dim) = rep.matrix(s);
    m(rep.dim, rep.dim) = cat.dim(s);
    aug.pi.push_back(std::move(m));
  }
  InvarianceReport inv2 = invariance_diagnostics(cat, aug, f);
  CHECK(inv2.invariant_basis.cols() == 2);
  CHECK(inv2.vector_residuals[0] < 1e-9);
}

TEST_CASE("finite character algebra decompositions") {
  // VecZ2: two characters [g] -> +-1
  {
    SkeletalCategory cat = catalog_category("VecZ2");
    CStarDecomposition dec = decompose_cstar_finite(cat);
    REQUIRE(dec.blocks.size() == 2);
    std::vector<double> vals;
    for (auto& b : dec.blocks) {
      CHECK(b.dim == 1);
      vals.push_back(std::real(b.pi[1](0, 0)));
    }
    std::sort(vals.begin(), vals.end());
    CHECK(std::abs(vals[0] + 1.0) < 1e-9);
    CHECK(std::abs(vals[1] - 1.0) < 1e-9);
  }
  // Fibonacci: [tau] -> (1 +- sqrt 5)/2
  {
    SkeletalCategory cat = catalog_category("Fibonacci");
    CStarDecomposition dec = decompose_cstar_finite(cat);
    REQUIRE(dec.blocks.size() == 2);
    std::vector<double> vals;
    for (auto& b : dec.blocks) {
      CHECK(b.dim == 1);
      vals.push_back(std::real(b.pi[1](0, 0)));
    }
    std::sort(vals.begin(), vals.end());
    CHECK(std::abs(vals[0] - (1.0 - std::sqrt(5.0)) / 2.0) < 1e-9);
    CHECK(std::abs(vals[1] - (1.0 + std::sqrt(5.0)) / 2.0) < 1e-9);
    CHECK(dec.commute_residual < 1e-9);
    CHECK(dec.partition_residual < 1e-9);

    // Kazhdan projection: [X] p = d(X) p
    for (LabelId s = 0; s < cat.n_labels(); ++s)
      CHECK(kazhdan_projection_residual(cat, dec, cat.simple(s)) < 1e-9);
  }
  // Ising: three one-dimensional blocks
  {
    SkeletalCategory cat = catalog_category("Ising");
    CStarDecomposition dec = decompose_cstar_finite(cat);
    REQUIRE(dec.blocks.size() == 3);
    for (auto& b : dec.blocks) CHECK(b.dim == 1);
    int trivial = 0;
    for (auto& b : dec.blocks) trivial += b.trivial ? 1 : 0;
    CHECK(trivial == 1);
  }
}

TEST_CASE("every decomposition multiplier passes the cp test") {
  for (const char* name : {"VecZ2", "VecZ3", "Fibonacci", "Ising"}) {
    SkeletalCategory cat = catalog_category(name);
    CStarDecomposition dec = decompose_cstar_finite(cat);
    for (auto& b : dec.blocks) {
      CpVerdict v = cp_check(cat, b.phi);
      INFO(name);
      CHECK(v.positive);
    }
  }
}

TEST_CASE("GNS objects from positive definite functions") {
  SkeletalCategory cat = catalog_category("Fibonacci");

  // delta_e reproduces Z_reg on the nose
  {
    GnsCenterObject g = build_zphi(cat, Multiplier::delta_e(cat));
    HalfBraidedObject reg = regular_half_braiding(cat);
    CHECK(g.z.underlying == reg.underlying);
    for (LabelId x = 0; x < cat.n_labels(); ++x)
      CHECK(distance(g.z.c(x), reg.c(x)) < 1e-12);
    CHECK(zphi_roundtrip_residual(cat, g) < 1e-9);
    CHECK(zphi_cyclic(cat, g));
    CHECK(verify_half_braiding(cat, g.z).pass());
  }

  // the constant function gives the one-dimensional trivial representation
  {
    GnsCenterObject g = build_zphi(cat, Multiplier::constant_one(cat));
    CHECK(g.rep.dim == 1);
    for (LabelId s = 0; s < cat.n_labels(); ++s)
      CHECK(std::abs(g.rep.matrix(s)(0, 0) - cat.dim(s)) < 1e-9);
    CHECK(zphi_roundtrip_residual(cat, g) < 1e-9);
  }

  // second character: one-dimensional with pi(tau) = (1 - sqrt 5)/2
  {
    Multiplier phi;
    phi.values[0] = 1.0;
    phi.values[1] = (std::sqrt(5.0) - 3.0) / 2.0;
    GnsCenterObject g = build_zphi(cat, phi);
    CHECK(g.rep.dim == 1);
    CHECK(std::abs(g.rep.matrix(1)(0, 0) - (1.0 - std::sqrt(5.0)) / 2.0) < 1e-9);
    CHECK(zphi_roundtrip_residual(cat, g) < 1e-9);
    CHECK(zphi_cyclic(cat, g));
  }

  // refusal carries the eigen-witness
  {
    SkeletalCategory z2 = catalog_category("VecZ2");
    Multiplier bad;
    bad.values[0] = 1.0;
    bad.values[1] = -2.0;
    CHECK_THROWS_AS((void)build_zphi(z2, bad), DiagnosticError);
  }
}

TEST_CASE("cp multipliers from vector states have PSD Gram matrices") {
  SkeletalCategory cat = catalog_category("Ising");
  auto backend = catalog_get("Ising").backend;
  HalfBraidedObject z = regular_half_braiding(cat);
  FusionRepresentation rep = rep_from_braiding(cat, z);
  std::mt19937 rng(47);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    Vec xi(rep.dim);
    for (long i = 0; i < rep.dim; ++i) xi(i) = Cplx(g(rng), g(rng));
    xi.normalize();
    Multiplier phi = vector_multiplier(cat, rep, xi);
    CpVerdict v = cp_check(cat, phi);
    CHECK(v.positive);
    GramReport gram = fusion_state_gram(*backend, to_ring_multiplier(cat, phi),
                                        {"1", "sigma", "psi"});
    CHECK(gram.min_eigenvalue > -10 * cat.tol());
  }
}

// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/gaussianity.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rydsim/hamiltonian.hpp"

using namespace rydsim;

TEST_CASE("free many-body spectra of one mode") {
  auto flat = free_many_body_spectrum({0.0});
  REQUIRE(flat.size() == 2);
  CHECK(flat[0] == doctest::Approx(0.5).epsilon(1e-15));

  auto frozen = free_many_body_spectrum({50.0});
  CHECK(frozen[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(frozen[1] < 1e-20);

  auto thirds = free_many_body_spectrum({std::log(2.0)});
  CHECK(thirds[0] == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(thirds[1] == doctest::Approx(1.0 / 3).epsilon(1e-14));
}

TEST_CASE("free spectra are normalized for any mode count") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int m : {1, 3, 7}) {
    std::vector<double> eps;
    for (int l = 0; l < m; ++l) eps.push_back(u(rng));
    auto p = free_many_body_spectrum(eps);
    REQUIRE(p.size() == (std::size_t{1} << m));
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      CHECK(p[k] >= p[k + 1]);  // descending
      total += p[k];
    }
    total += p.back();
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(free_many_body_spectrum(std::vector<double>(17, 0.0)), std::invalid_argument);
}

TEST_CASE("two-level spectra are exactly free") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int trial = 0; trial < 25; ++trial) {
    double p = u(rng);
    DfResult r = interaction_distance(std::vector<double>{p, 1.0 - p});
    CHECK(r.value < 1e-6);
  }
}

TEST_CASE("the flat four-level spectrum is free") {
  DfResult r = interaction_distance(std::vector<double>{0.25, 0.25, 0.25, 0.25});
  CHECK(r.value < 1e-6);
}

TEST_CASE("flat three-level spectrum sits a sixth away from the free set") {
  std::vector<double> p{1.0 / 3, 1.0 / 3, 1.0 / 3};
  double oracle = oracles::df_grid_minimum(p, 2, -10.0, 10.0, 0.01, 4);
  DfResult opt = interaction_distance(p);
  CHECK(std::abs(opt.value - oracle) < 1e-3);
  CHECK(oracle == doctest::Approx(1.0 / 6).epsilon(2e-3));
}

TEST_CASE("optimizer matches the exhaustive grid oracle on small spectra") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    const int levels = 3 + int(trial % 4);
    std::vector<double> p(levels);
    double total = 0.0;
    for (double& x : p) total += (x = u(rng));
    for (double& x : p) x /= total;
    std::sort(p.begin(), p.end(), std::greater<>());

    const int m = 2;
    double oracle = oracles::df_grid_minimum(p, m, -12.0, 12.0, 0.05, 6);
    DfOptions opts;
    opts.modes = m;
    DfResult opt = interaction_distance(p, opts);
    CHECK(opt.value <= oracle + 1e-3);
    CHECK(opt.value >= oracle - 1e-3);
  }
}

TEST_CASE("appending zero-probability levels never changes the distance") {
  std::vector<double> p{0.62, 0.25, 0.13};
  DfResult base = interaction_distance(p);
  p.insert(p.end(), 10, 0.0);
  DfResult padded = interaction_distance(p);
  CHECK(base.value == doctest::Approx(padded.value).epsilon(1e-12));
}

TEST_CASE("distances stay in [0,1] and flag the conjectured bound") {
  // an intentionally starved single-mode fit of the flat three-level
  // spectrum exceeds the conjectured bound and must carry the warning
  DfOptions opts;
  opts.modes = 1;
  DfResult r = interaction_distance(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}, opts);
  CHECK(r.value >= 0.0);
  CHECK(r.value <= 1.0);
  CHECK(r.value > kDfConjecturedMax + 0.005);
  CHECK(r.conjecture_warning);

  DfResult fine = interaction_distance(std::vector<double>{0.5, 0.5});
  CHECK(!fine.conjecture_warning);
  CHECK_THROWS_AS(interaction_distance(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("library objective agrees with the independent oracle objective") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_real_distribution<double> e(-8.0, 8.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> p(5);
    double total = 0.0;
    for (double& x : p) total += (x = u(rng));
    for (double& x : p) x /= total;
    std::sort(p.begin(), p.end(), std::greater<>());
    std::vector<double> eps{e(rng), e(rng), e(rng)};
    CHECK(df_objective(p, eps) == doctest::Approx(oracles::df_objective(p, eps)).epsilon(1e-12));
  }
}

// ---------------------------------------------------------------------------
// Wick decomposition

namespace {

StateVector full_state(const Basis& b, const std::vector<std::pair<Config, Complex>>& amps) {
  StateVector psi{b.tag(), Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(b.dim()))};
  for (auto [c, a] : amps) psi.amps[*b.index_of(c)] = a;
  psi.normalize();
  return psi;
}

}  // namespace

TEST_CASE("GHZ state satisfies Wick term by term") {
  Basis b = Basis::full(3);
  StateVector ghz = full_state(b, {{0b000, 1.0}, {0b111, 1.0}});
  auto terms = wick_terms(ghz, b, WickTriple{1, 2, 3});
  for (const auto& t : terms) CHECK(std::abs(t) < 1e-12);
  CHECK(wick_violation(ghz, b, {1, 2, 3}) < 1e-10);
}

TEST_CASE("W state violates Wick by two ninths") {
  Basis b = Basis::full(3);
  StateVector w = full_state(b, {{0b001, 1.0}, {0b010, 1.0}, {0b100, 1.0}});
  auto terms = wick_terms(w, b, WickTriple{1, 2, 3});
  CHECK(std::abs(terms[0]) < 1e-12);                                  // blockade-style term
  CHECK(std::real(terms[1]) == doctest::Approx(1.0 / 9).epsilon(1e-12));
  CHECK(std::abs(terms[2]) < 1e-12);
  CHECK(std::real(terms[3]) == doctest::Approx(-1.0 / 9).epsilon(1e-12));
  CHECK(wick_violation(w, b, {1, 2, 3}) == doctest::Approx(2.0 / 9).epsilon(1e-10));
}

TEST_CASE("first Wick term vanishes on every constrained configuration") {
  Basis b = Basis::blockade(6, Boundary::PBC);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    StateVector psi{b.tag(), Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(b.dim()))};
    psi.amps[static_cast<Eigen::Index>(i)] = 1.0;
    auto terms = wick_terms(psi, b, WickTriple{1, 2, 3});
    CHECK(std::abs(terms[0]) == 0.0);
  }
  // and on arbitrary constrained superpositions
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss;
  StateVector psi{b.tag(), Eigen::VectorXcd(static_cast<Eigen::Index>(b.dim()))};
  for (Eigen::Index i = 0; i < psi.amps.size(); ++i) psi.amps[i] = Complex(gauss(rng), gauss(rng));
  psi.normalize();
  CHECK(std::abs(wick_terms(psi, b, WickTriple{1, 2, 3})[0]) < 1e-14);
}

TEST_CASE("product configurations have exactly zero violation") {
  Basis b = Basis::blockade(8, Boundary::PBC);
  for (Config c : {Config{0b00000000}, Config{0b00010010}, Config{0b01010101}}) {
    StateVector psi{b.tag(), Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(b.dim()))};
    psi.amps[*b.index_of(c)] = 1.0;
    CHECK(wick_violation(psi, b, WickTriple{3, 4, 5}) < 1e-10);
  }
}

TEST_CASE("state path and three-site RDM path agree") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 5; ++trial) {
    Basis b = trial % 2 == 0 ? Basis::full(6) : Basis::blockade(7, Boundary::PBC);
    StateVector psi{b.tag(), Eigen::VectorXcd(static_cast<Eigen::Index>(b.dim()))};
    for (Eigen::Index i = 0; i < psi.amps.size(); ++i)
      psi.amps[i] = Complex(gauss(rng), gauss(rng));
    psi.normalize();
    WickTriple t{2, 3, 4};
    auto rho = three_site_rdm(psi, b, t.s1, t.s2, t.s3);
    CHECK(std::abs(wick_violation(psi, b, t) - wick_violation_rdm(rho)) < 1e-10);
  }
}

TEST_CASE("triples must be consecutive and in range") {
  Basis b = Basis::blockade(6, Boundary::PBC);
  StateVector psi = z3_state(6, b);
  CHECK_THROWS_AS(wick_violation(psi, b, WickTriple{1, 3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(wick_violation(psi, b, WickTriple{5, 6, 7}), std::invalid_argument);
}

TEST_CASE("default triples follow the boundary") {
  CHECK(default_wick_triple(Basis::blockade(18, Boundary::PBC)).s1 == 1);
  WickTriple obc = default_wick_triple(Basis::blockade(15, Boundary::OBC));
  CHECK(obc.s1 == 7);
  CHECK(obc.s2 == 8);
  CHECK(obc.s3 == 9);
}

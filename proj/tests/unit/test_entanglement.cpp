// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/entanglement.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "rydsim/hamiltonian.hpp"

using namespace rydsim;

TEST_CASE("Z2 and Z3 have flat two- and three-level spectra") {
  Basis b = Basis::blockade(18, Boundary::PBC);

  EntanglementData e2 = reduced_density_matrix(z2_state(18, b), b, 9);
  REQUIRE(e2.eigenvalues.size() >= 2);
  CHECK(e2.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e2.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e2.entropy == doctest::Approx(std::log(2.0)).epsilon(1e-10));

  EntanglementData e3 = reduced_density_matrix(z3_state(18, b), b, 9);
  for (int k = 0; k < 3; ++k)
    CHECK(e3.eigenvalues[static_cast<std::size_t>(k)] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(e3.entropy == doctest::Approx(std::log(3.0)).epsilon(1e-10));
}

TEST_CASE("a basis product state carries no entanglement") {
  Basis b = Basis::blockade(12, Boundary::PBC);
  StateVector psi{b.tag(), Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(b.dim()))};
  psi.amps[*b.index_of(0b010010010010)] = 1.0;  // any legal pattern
  EntanglementData e = reduced_density_matrix(psi, b, 6);
  CHECK(e.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.entropy == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("spectra are normalized and entropies bounded") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> gauss;
  Basis b = Basis::blockade(10, Boundary::PBC);
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(b.dim()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps[i] = Complex(gauss(rng), gauss(rng));
  amps.normalize();
  StateVector psi{b.tag(), amps};
  for (int cut : {1, 3, 5, 9}) {
    EntanglementData e = reduced_density_matrix(psi, b, cut);
    double total = 0.0;
    for (double p : e.eigenvalues) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0 + 1e-12);
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(e.entropy >= 0.0);
    CHECK(e.entropy <= std::log(double(e.eigenvalues.size())) + 1e-12);
  }
}

TEST_CASE("a product of two unentangled halves has zero entropy") {
  // build psi = (left superposition) x (right superposition) on the open
  // chain, with patterns that keep every combination blockade-legal
  Basis b = Basis::blockade(6, Boundary::OBC);
  Basis left = Basis::blockade(3, Boundary::OBC);
  Basis right = Basis::blockade(3, Boundary::OBC);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(b.dim()));
  // left factors end at site 3 unoccupied; right factors start at site 4 unoccupied
  std::vector<std::pair<Config, Complex>> lamp{{0b000, 0.6}, {0b001, 0.8}};
  std::vector<std::pair<Config, Complex>> ramp{{0b000, Complex(0.0, 0.6)}, {0b100, 0.8}};
  for (auto [l, la] : lamp)
    for (auto [r, ra] : ramp) psi[*b.index_of(l | (r << 3))] = la * ra;
  StateVector sv{b.tag(), psi};
  EntanglementData e = reduced_density_matrix(sv, b, 3);
  CHECK(e.entropy == doctest::Approx(0.0).epsilon(1e-12));
  (void)left;
  (void)right;
}

TEST_CASE("entropy helper handles degenerate inputs") {
  CHECK(entropy({1.0}) == 0.0);
  CHECK(entropy({0.5, 0.5}) == doctest::Approx(std::log(2.0)));
  CHECK(entropy({1.0 / 3, 1.0 / 3, 1.0 / 3}) == doctest::Approx(std::log(3.0)));
  CHECK(entropy({1.0, 0.0, 0.0}) == 0.0);  // 0 ln 0 = 0
}

TEST_CASE("sector states must be embedded before cutting") {
  Basis b = Basis::blockade(6, Boundary::PBC);
  MomentumSector sec = MomentumSector::build(b);
  StateVector z3 = to_sector(z3_state(6, b), sec, b);
  CHECK_THROWS_AS(reduced_density_matrix(z3, b, 3), std::invalid_argument);
  CHECK_THROWS_AS(reduced_density_matrix(z3_state(6, b), b, 0), std::invalid_argument);
  CHECK_THROWS_AS(reduced_density_matrix(z3_state(6, b), b, 6), std::invalid_argument);
}

TEST_CASE("full-space states reshape directly") {
  Basis b = Basis::full(4);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
  amps[0b0000] = std::sqrt(0.5);
  amps[0b1111] = std::sqrt(0.5);  // GHZ-like across the cut
  StateVector psi{b.tag(), amps};
  EntanglementData e = reduced_density_matrix(psi, b, 2);
  CHECK(e.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.entropy == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

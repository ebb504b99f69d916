// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace rydsim {

namespace {

int wrap_site(int i, int n) {
  int m = (i - 1) % n;
  if (m < 0) m += n;
  return m + 1;
}

Config site_bit(int site) { return Config{1} << (site - 1); }

double impurity_energy(Config s, const std::vector<Impurity>& imps, int n) {
  double e = 0.0;
  for (const auto& imp : imps) {
    if (imp.site < 1 || imp.site > n)
      throw std::invalid_argument("impurity site out of range");
    if (bit(s, imp.site)) e += imp.strength;
  }
  return e;
}

// Mask of projector sites for a flip at `site` given relative neighbor
// offsets; out-of-range sites on open chains act as vacuum.
Config projector_mask(int site, int n, Boundary bc, std::initializer_list<int> offsets) {
  Config m = 0;
  for (int d : offsets) {
    int j = site + d;
    if (bc == Boundary::PBC) {
      m |= site_bit(wrap_site(j, n));
    } else if (j >= 1 && j <= n) {
      m |= site_bit(j);
    }
  }
  return m;
}

ConfigRule uv_rule(const ModelSpec& spec, int n) {
  const Boundary bc = spec.boundary;
  const double u = spec.u, v = spec.v, omega = spec.omega;
  const auto imps = spec.impurities;

  std::vector<Config> flip_proj(n + 1);
  for (int i = 1; i <= n; ++i) flip_proj[i] = projector_mask(i, n, bc, {-1, +1});

  std::vector<std::pair<Config, Config>> vpairs;  // (bit_i, bit_{i+2})
  if (bc == Boundary::PBC) {
    for (int i = 1; i <= n; ++i) vpairs.emplace_back(site_bit(i), site_bit(wrap_site(i + 2, n)));
  } else {
    for (int i = 1; i + 2 <= n; ++i) vpairs.emplace_back(site_bit(i), site_bit(i + 2));
  }

  ConfigRule rule;
  rule.diagonal = [=](Config s) {
    double e = u * std::popcount(s);
    for (const auto& [bi, bj] : vpairs)
      if ((s & bi) && (s & bj)) e += v;
    if (!imps.empty()) e += impurity_energy(s, imps, n);
    return e;
  };
  rule.offdiagonal = [=](Config s, const std::function<void(Config, double)>& emit) {
    for (int i = 1; i <= n; ++i) {
      Config t = s ^ site_bit(i);
      if (((s | t) & flip_proj[i]) == 0) emit(t, -omega);
    }
  };
  return rule;
}

ConfigRule effective_rule(const ModelSpec& spec, int n) {
  const Boundary bc = spec.boundary;
  const double au = std::abs(spec.u), omega = spec.omega;

  std::vector<Config> flip_proj(n + 1);
  for (int i = 1; i <= n; ++i) flip_proj[i] = projector_mask(i, n, bc, {-2, -1, +1, +2});

  ConfigRule rule;
  rule.diagonal = [=](Config s) { return -au * std::popcount(s); };
  rule.offdiagonal = [=](Config s, const std::function<void(Config, double)>& emit) {
    for (int i = 1; i <= n; ++i) {
      Config t = s ^ site_bit(i);
      if (((s | t) & flip_proj[i]) == 0) emit(t, -omega);
    }
  };
  return rule;
}

void check_basis_match(const ModelSpec& spec, const Basis& basis) {
  if (!basis.constrained())
    throw std::invalid_argument("constrained-model builder needs a blockade basis");
  if (basis.boundary() != spec.boundary)
    throw std::invalid_argument("model boundary does not match the basis boundary");
}

}  // namespace

SparseOperator build_uv_hamiltonian(const ModelSpec& spec, const Basis& basis) {
  if (spec.variant != ModelVariant::UV_PXP)
    throw std::invalid_argument("spec variant is not uv_pxp");
  check_basis_match(spec, basis);
  return assemble_operator(uv_rule(spec, basis.n()), basis);
}

SparseOperator build_uv_hamiltonian(const ModelSpec& spec, const MomentumSector& sector) {
  if (spec.variant != ModelVariant::UV_PXP)
    throw std::invalid_argument("spec variant is not uv_pxp");
  if (spec.boundary != Boundary::PBC)
    throw std::invalid_argument("sector builds require periodic boundaries");
  if (!spec.impurities.empty())
    throw std::invalid_argument("impurities break translation symmetry; use the full basis");
  return assemble_operator(uv_rule(spec, sector.n()), sector);
}

SparseOperator build_effective_hamiltonian(const ModelSpec& spec, const Basis& basis) {
  if (spec.variant != ModelVariant::PPXPP_EFF)
    throw std::invalid_argument("spec variant is not ppxpp_eff");
  check_basis_match(spec, basis);
  return assemble_operator(effective_rule(spec, basis.n()), basis);
}

SparseOperator build_effective_hamiltonian(const ModelSpec& spec, const MomentumSector& sector) {
  if (spec.variant != ModelVariant::PPXPP_EFF)
    throw std::invalid_argument("spec variant is not ppxpp_eff");
  if (spec.boundary != Boundary::PBC)
    throw std::invalid_argument("sector builds require periodic boundaries");
  if (!spec.impurities.empty())
    throw std::invalid_argument("impurities break translation symmetry; use the full basis");
  return assemble_operator(effective_rule(spec, sector.n()), sector);
}

SparseOperator build_longrange_hamiltonian(const ModelSpec& spec, int n) {
  if (spec.variant != ModelVariant::LONGRANGE)
    throw std::invalid_argument("spec variant is not longrange");
  if (n < 1 || n > 14)
    throw std::invalid_argument("long-range model acts on the full 2^N space; N <= 14 required");
  if (!spec.offsets.empty() && static_cast<int>(spec.offsets.size()) != n)
    throw std::invalid_argument("offsets must be empty or have one entry per site");

  // pair couplings V / d^6 with open-chain distances
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      double xi = i + (spec.offsets.empty() ? 0.0 : spec.offsets[i - 1]);
      double xj = j + (spec.offsets.empty() ? 0.0 : spec.offsets[j - 1]);
      double d = std::abs(xi - xj);
      w[(i - 1) * n + (j - 1)] = spec.v / std::pow(d, 6);
    }
  }
  const double u = spec.u, homega = spec.omega / 2.0;
  const auto imps = spec.impurities;

  ConfigRule rule;
  rule.diagonal = [=](Config s) {
    double e = -u * std::popcount(s);
    for (int i = 1; i <= n; ++i) {
      if (!bit(s, i)) continue;
      for (int j = i + 1; j <= n; ++j)
        if (bit(s, j)) e += w[(i - 1) * n + (j - 1)];
    }
    if (!imps.empty()) e += impurity_energy(s, imps, n);
    return e;
  };
  rule.offdiagonal = [=](Config s, const std::function<void(Config, double)>& emit) {
    for (int i = 1; i <= n; ++i) emit(s ^ site_bit(i), -homega);
  };

  Basis full = Basis::full(n);
  return assemble_operator(rule, full);
}

namespace {

StateVector pattern_superposition(const Basis& basis, const std::vector<Config>& patterns) {
  StateVector psi;
  psi.tag = basis.tag();
  psi.amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
  const double w = 1.0 / std::sqrt(double(patterns.size()));
  for (Config p : patterns) {
    auto idx = basis.index_of(p);
    if (!idx) throw std::logic_error("density-wave pattern missing from basis");
    psi.amps[static_cast<Eigen::Index>(*idx)] = w;
  }
  return psi;
}

}  // namespace

StateVector z2_state(int n, const Basis& basis) {
  if (n % 2 != 0) throw std::invalid_argument("Z2 state needs even N");
  if (basis.n() != n) throw std::invalid_argument("basis size mismatch");
  Config p1 = 0;
  for (int i = 1; i <= n; i += 2) p1 |= site_bit(i);
  return pattern_superposition(basis, {p1, static_cast<Config>(p1 << 1)});
}

StateVector z3_state(int n, const Basis& basis) {
  if (n % 3 != 0) throw std::invalid_argument("Z3 state needs N divisible by 3");
  if (basis.n() != n) throw std::invalid_argument("basis size mismatch");
  Config p1 = 0;
  for (int i = 1; i <= n; i += 3) p1 |= site_bit(i);
  return pattern_superposition(
      basis, {p1, static_cast<Config>(p1 << 1), static_cast<Config>(p1 << 2)});
}

StateVector to_sector(const StateVector& full, const MomentumSector& sector, const Basis& basis) {
  if (full.tag != basis.tag()) throw std::invalid_argument("state/basis tag mismatch");
  return StateVector{sector.tag(), project_to_sector(full.amps, sector, basis)};
}

StateVector to_full(const StateVector& sector_state, const MomentumSector& sector,
                    const Basis& basis) {
  if (sector_state.tag != sector.tag()) throw std::invalid_argument("state/sector tag mismatch");
  return StateVector{basis.tag(), embed_sector_vector(sector_state.amps, sector, basis)};
}

namespace {

void check_site(int site, const Basis& basis) {
  if (site < 1 || site > basis.n())
    throw std::invalid_argument("site " + std::to_string(site) + " out of range for N=" +
                                std::to_string(basis.n()));
}

}  // namespace

SparseOperator density_op(int site, const Basis& basis) {
  check_site(site, basis);
  ConfigRule rule;
  rule.diagonal = [site](Config s) { return bit(s, site) ? 1.0 : 0.0; };
  return assemble_operator(rule, basis);
}

SparseOperator nn_pair_op(int site, const Basis& basis) {
  check_site(site, basis);
  const int n = basis.n();
  int partner;
  if (basis.boundary() == Boundary::PBC) {
    partner = wrap_site(site + 2, n);
  } else {
    if (site + 2 > n) throw std::invalid_argument("next-nearest pair exceeds the open chain");
    partner = site + 2;
  }
  ConfigRule rule;
  rule.diagonal = [site, partner](Config s) {
    return (bit(s, site) && bit(s, partner)) ? 1.0 : 0.0;
  };
  return assemble_operator(rule, basis);
}

SparseOperator nn_total_op(const Basis& basis) {
  const int n = basis.n();
  const Boundary bc = basis.boundary();
  ConfigRule rule;
  rule.diagonal = [n, bc](Config s) {
    double e = 0.0;
    if (bc == Boundary::PBC) {
      for (int i = 1; i <= n; ++i)
        if (bit(s, i) && bit(s, wrap_site(i + 2, n))) e += 1.0;
    } else {
      for (int i = 1; i + 2 <= n; ++i)
        if (bit(s, i) && bit(s, i + 2)) e += 1.0;
    }
    return e;
  };
  return assemble_operator(rule, basis);
}

SparseOperator zz_correlator_op(int site, const Basis& basis) {
  check_site(site, basis);
  const int n = basis.n();
  int partner;
  if (basis.boundary() == Boundary::PBC) {
    partner = wrap_site(site + 1, n);
  } else {
    if (site + 1 > n) throw std::invalid_argument("nearest pair exceeds the open chain");
    partner = site + 1;
  }
  ConfigRule rule;
  rule.diagonal = [site, partner](Config s) {
    double zi = bit(s, site) ? 1.0 : -1.0;
    double zj = bit(s, partner) ? 1.0 : -1.0;
    return zi * zj;
  };
  return assemble_operator(rule, basis);
}

SparseOperator pauli_string_op(const std::string& ops, const std::vector<int>& sites,
                               const Basis& basis) {
  if (ops.size() != sites.size())
    throw std::invalid_argument("operator string and site list differ in length");
  for (int s : sites) check_site(s, basis);

  ConfigRule rule;
  // split into the diagonal (Z, n, P) and flip (X) parts
  Config flip_mask = 0;
  std::vector<std::pair<int, char>> diag;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    switch (ops[k]) {
      case 'X': flip_mask |= site_bit(sites[k]); break;
      case 'Z':
      case 'n':
      case 'P': diag.emplace_back(sites[k], ops[k]); break;
      default:
        throw std::invalid_argument("unsupported factor '" + std::string(1, ops[k]) +
                                    "' (use X, Z, n, P)");
    }
  }
  auto weight = [diag](Config s) {
    double w = 1.0;
    for (const auto& [site, c] : diag) {
      bool b = bit(s, site);
      if (c == 'Z') w *= b ? 1.0 : -1.0;
      else if (c == 'n') w *= b ? 1.0 : 0.0;
      else w *= b ? 0.0 : 1.0;
    }
    return w;
  };
  if (flip_mask == 0) {
    rule.diagonal = weight;
  } else {
    rule.offdiagonal = [flip_mask, weight](Config s,
                                           const std::function<void(Config, double)>& emit) {
      double w = weight(s);  // diagonal factors act on the source configuration
      if (w != 0.0) emit(s ^ flip_mask, w);
    };
  }
  return assemble_operator(rule, basis);
}

std::optional<std::pair<Config, double>> apply_factors(Config s,
                                                       const std::vector<OpFactor>& ops) {
  double coeff = 1.0;
  Config t = s;
  for (const auto& f : ops) {
    const bool b = bit(t, f.site);
    switch (f.op) {
      case SiteOp::N:
        if (!b) return std::nullopt;
        break;
      case SiteOp::P:
        if (b) return std::nullopt;
        break;
      case SiteOp::Plus:
        if (b) return std::nullopt;
        t |= site_bit(f.site);
        break;
      case SiteOp::Minus:
        if (!b) return std::nullopt;
        t &= ~site_bit(f.site);
        break;
      case SiteOp::Z:
        coeff *= b ? 1.0 : -1.0;
        break;
      case SiteOp::X:
        t ^= site_bit(f.site);
        break;
    }
  }
  return std::make_pair(t, coeff);
}

Complex expectation_factors(const Eigen::VectorXcd& amps, const Basis& basis,
                            const std::vector<OpFactor>& ops) {
  if (static_cast<std::size_t>(amps.size()) != basis.dim())
    throw std::invalid_argument("state/basis dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t a = 0; a < basis.dim(); ++a) {
    const Complex amp = amps[static_cast<Eigen::Index>(a)];
    if (amp == 0.0) continue;
    auto res = apply_factors(basis.state(a), ops);
    if (!res) continue;
    auto idx = basis.index_of(res->first);
    if (!idx) continue;  // image violates the constraint: zero amplitude
    acc += std::conj(amps[static_cast<Eigen::Index>(*idx)]) * res->second * amp;
  }
  return acc;
}

}  // namespace rydsim

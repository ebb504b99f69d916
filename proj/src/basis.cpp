// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace rydsim {

std::string to_string(Boundary b) { return b == Boundary::PBC ? "pbc" : "obc"; }

Boundary boundary_from_string(const std::string& s) {
  if (s == "pbc" || s == "PBC") return Boundary::PBC;
  if (s == "obc" || s == "OBC") return Boundary::OBC;
  throw std::invalid_argument("unknown boundary '" + s + "' (expected pbc or obc)");
}

std::string to_string(const BasisTag& tag) {
  std::string space = tag.space == Space::Constrained ? "constrained"
                      : tag.space == Space::Full      ? "full"
                                                      : "k0-sector";
  return space + " N=" + std::to_string(tag.n) + " " + to_string(tag.boundary) +
         " dim=" + std::to_string(tag.dim);
}

bool blockade_ok(Config s, int n, Boundary boundary) {
  if (s & (s >> 1)) return false;  // adjacent pair inside the chain
  if (boundary == Boundary::PBC && n > 1) {
    if ((s & 1u) && bit(s, n)) return false;
  }
  return true;
}

namespace {

// Depth-first assignment from the most significant site down, so states come
// out already sorted ascending. `prev` is the bit just above `site`.
void enumerate_rec(int site, int n, Boundary boundary, Config acc, bool prev,
                   bool top_bit, std::vector<Config>& out) {
  if (site == 0) {
    if (boundary == Boundary::PBC && n > 1 && top_bit && (acc & 1u)) return;
    out.push_back(acc);
    return;
  }
  enumerate_rec(site - 1, n, boundary, acc, false, top_bit, out);
  if (!prev) {
    Config with = acc | (Config{1} << (site - 1));
    bool top = (site == n) ? true : top_bit;
    enumerate_rec(site - 1, n, boundary, with, true, top, out);
  }
}

}  // namespace

Basis Basis::blockade(int n, Boundary boundary) {
  if (n < 1 || n > 32)
    throw std::invalid_argument("basis size out of range: N=" + std::to_string(n) +
                                " (supported 1..32)");
  Basis b;
  b.n_ = n;
  b.boundary_ = boundary;
  b.constrained_ = true;
  b.states_.reserve(64);
  enumerate_rec(n, n, boundary, 0u, false, false, b.states_);
  b.dim_ = b.states_.size();
  return b;
}

Basis Basis::full(int n) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("full space too large: N=" + std::to_string(n) +
                                " (supported 1..20)");
  Basis b;
  b.n_ = n;
  b.boundary_ = Boundary::OBC;
  b.constrained_ = false;
  b.dim_ = std::size_t{1} << n;
  return b;
}

BasisTag Basis::tag() const {
  return BasisTag{n_, boundary_, constrained_ ? Space::Constrained : Space::Full, dim_};
}

Config Basis::state(std::size_t i) const {
  if (i >= dim_) throw std::out_of_range("basis index out of range");
  return constrained_ ? states_[i] : static_cast<Config>(i);
}

std::optional<std::size_t> Basis::index_of(Config s) const {
  if (!constrained_) {
    if (s >= dim_) return std::nullopt;
    return static_cast<std::size_t>(s);
  }
  auto it = std::lower_bound(states_.begin(), states_.end(), s);
  if (it == states_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

const std::vector<Config>& Basis::states() const {
  if (!constrained_)
    throw std::logic_error("full space does not materialize its state list");
  return states_;
}

std::string format_config(Config s, int n) {
  std::string out(n, '0');
  for (int i = 1; i <= n; ++i)
    if (bit(s, i)) out[i - 1] = '1';
  return out;  // site 1 printed first
}

}  // namespace rydsim

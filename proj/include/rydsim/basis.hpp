// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rydsim {

using Config = std::uint32_t;  // site i (1-based) lives at bit i-1

enum class Boundary { PBC, OBC };

enum class Space { Constrained, Full, SectorK0 };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

/// Identity of the vector space an operator or state lives on. Two objects
/// are compatible iff their tags compare equal.
struct BasisTag {
  int n = 0;
  Boundary boundary = Boundary::PBC;
  Space space = Space::Constrained;
  std::size_t dim = 0;

  friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

std::string to_string(const BasisTag& tag);

inline bool bit(Config s, int site) { return (s >> (site - 1)) & 1u; }

/// True when no two adjacent sites are both excited (wraparound for PBC).
bool blockade_ok(Config s, int n, Boundary boundary);

/// Ordered set of basis configurations: either the Rydberg-blockade
/// constrained set or the full 2^N product space. States are sorted
/// ascending as integers; lookup is the exact inverse of the list.
class Basis {
 public:
  /// All blockade-satisfying N-site configurations. 1 <= n <= 32.
  static Basis blockade(int n, Boundary boundary);
  /// The unconstrained 2^N space (used by the long-range model). n <= 20.
  static Basis full(int n);

  int n() const { return n_; }
  Boundary boundary() const { return boundary_; }
  bool constrained() const { return constrained_; }
  std::size_t dim() const { return dim_; }
  BasisTag tag() const;

  Config state(std::size_t i) const;
  std::optional<std::size_t> index_of(Config s) const;
  const std::vector<Config>& states() const;  // throws for the full space

 private:
  Basis() = default;
  int n_ = 0;
  Boundary boundary_ = Boundary::OBC;
  bool constrained_ = true;
  std::size_t dim_ = 0;
  std::vector<Config> states_;  // empty when !constrained_ (implicit identity)
};

std::string format_config(Config s, int n);

}  // namespace rydsim

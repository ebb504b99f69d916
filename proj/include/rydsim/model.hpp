// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rydsim/basis.hpp"

namespace rydsim {

enum class ModelVariant { UV_PXP, PPXPP_EFF, LONGRANGE };

std::string to_string(ModelVariant v);
ModelVariant variant_from_string(const std::string& s);

struct Impurity {
  int site = 4;          // 1-based; site 4 is the default perturbation site
  double strength = 0.0;
};

/// Parameters of one Hamiltonian. `n` is optional metadata used by file-based
/// workflows; builders take the basis (and hence N) explicitly.
struct ModelSpec {
  ModelVariant variant = ModelVariant::UV_PXP;
  double omega = 1.0;
  double u = 0.0;
  double v = 0.0;
  Boundary boundary = Boundary::PBC;
  std::vector<Impurity> impurities;
  std::vector<double> offsets;  // per-site positional offsets (longrange only)
  std::uint64_t seed = 0;
  int n = 0;  // 0 = unspecified

  bool translation_invariant() const { return impurities.empty() && offsets.empty(); }

  std::string to_json_string(int indent = 2) const;
  static ModelSpec from_json_string(const std::string& text);
  static ModelSpec load(const std::string& path);
  void save(const std::string& path) const;
};

}  // namespace rydsim

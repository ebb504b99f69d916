// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/model.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace rydsim {

using nlohmann::json;

std::string to_string(ModelVariant v) {
  switch (v) {
    case ModelVariant::UV_PXP: return "uv_pxp";
    case ModelVariant::PPXPP_EFF: return "ppxpp_eff";
    case ModelVariant::LONGRANGE: return "longrange";
  }
  return "?";
}

ModelVariant variant_from_string(const std::string& s) {
  if (s == "uv_pxp") return ModelVariant::UV_PXP;
  if (s == "ppxpp_eff") return ModelVariant::PPXPP_EFF;
  if (s == "longrange") return ModelVariant::LONGRANGE;
  throw std::invalid_argument("unknown model variant '" + s + "'");
}

namespace {

json to_json(const ModelSpec& m) {
  json j;
  j["variant"] = to_string(m.variant);
  j["omega"] = m.omega;
  j["u"] = m.u;
  j["v"] = m.v;
  j["boundary"] = to_string(m.boundary);
  j["impurities"] = json::array();
  for (const auto& imp : m.impurities)
    j["impurities"].push_back({{"site", imp.site}, {"strength", imp.strength}});
  j["offsets"] = m.offsets;
  j["seed"] = m.seed;
  if (m.n > 0) j["n"] = m.n;
  return j;
}

ModelSpec from_json(const json& j) {
  ModelSpec m;
  m.variant = variant_from_string(j.at("variant").get<std::string>());
  if (j.contains("omega")) m.omega = j.at("omega").get<double>();
  if (j.contains("u")) m.u = j.at("u").get<double>();
  if (j.contains("v")) m.v = j.at("v").get<double>();
  if (j.contains("boundary"))
    m.boundary = boundary_from_string(j.at("boundary").get<std::string>());
  if (j.contains("impurities"))
    for (const auto& e : j.at("impurities"))
      m.impurities.push_back({e.at("site").get<int>(), e.at("strength").get<double>()});
  if (j.contains("offsets")) m.offsets = j.at("offsets").get<std::vector<double>>();
  if (j.contains("seed")) m.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("n")) m.n = j.at("n").get<int>();
  return m;
}

}  // namespace

std::string ModelSpec::to_json_string(int indent) const { return to_json(*this).dump(indent); }

ModelSpec ModelSpec::from_json_string(const std::string& text) {
  return from_json(json::parse(text));
}

ModelSpec ModelSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  json j;
  in >> j;
  return from_json(j);
}

void ModelSpec::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out << to_json_string() << "\n";
}

}  // namespace rydsim

// Copyright 2026 The wmg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "wmg/boolean_gated.hpp"
#include "wmg/cover.hpp"
#include "wmg/metric.hpp"
#include "wmg/recognition.hpp"
#include "wmg/zero_extension.hpp"

namespace wmg {

/// Verdict table over every recognized family, with witnesses for the "no"
/// entries and the derived parameters.
struct ClassReport {
  // family name -> verdict; key set is fixed and documented in the README
  std::map<std::string, Verdict> families;
  bool thick = false;
  std::optional<int> cube_dimension;  // only for swm-graphs
  bool two_connected = false;
};

inline ClassReport build_class_report(const Graph& g, const DistMatrix& d) {
  ClassReport r;
  r.families["weakly-modular"] = check_weakly_modular(g, d);
  for (Family f : {Family::Modular, Family::Meshed, Family::PseudoModular, Family::Bridged,
                   Family::WeaklyBridged, Family::LocallyWeaklyModular, Family::Thick,
                   Family::Thin})
    r.families[family_name(f)] = check_metric_family(g, d, f);
  r.families["pre-median"] = check_pre_median(g, d);
  r.families["prime-pre-median"] = check_prime_pre_median(g, d);
  r.families["swm"] = check_swm(g, d);
  r.families["dual-polar"] = check_dual_polar(g, d);
  r.families["clique-helly"] = check_clique_helly(g);
  r.families["dismantlable"] =
      check_dismantlable(g) ? Verdict::ok() : Verdict::no("not-dismantlable", {});
  r.families["helly"] = check_helly(g);
  r.thick = r.families["thick"].yes;
  r.two_connected = is_biconnected(g);
  if (r.families["swm"].yes) r.cube_dimension = SwmGraph(g).cube_dimension();
  return r;
}

// ---------------------------------------------------------------------------
// JSON serialization (nlohmann keeps object keys sorted, so output is
// byte-stable for fixed inputs)
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["verdict"] = v.yes ? "yes" : "no";
  if (!v.yes) {
    j["witness"] = v.witness;
    j["witness-kind"] = v.witness_kind;
  }
  return j;
}

inline nlohmann::json to_json(const ClassReport& r) {
  nlohmann::json fams;
  for (const auto& [name, verdict] : r.families) fams[name] = to_json(verdict);
  nlohmann::json j;
  j["families"] = fams;
  j["derived"]["thick"] = r.thick;
  j["derived"]["two-connected"] = r.two_connected;
  j["derived"]["cube-dimension"] =
      r.cube_dimension ? nlohmann::json(*r.cube_dimension) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const HyperbolicityReport& r) {
  nlohmann::json j;
  j["weakly-modular"] = r.weakly_modular;
  j["delta"] = r.delta2 / 2.0;
  j["delta-doubled"] = r.delta2;
  j["delta-witness"] = r.delta_witness;
  j["mu"] = r.mu;
  if (r.mu_witness) j["mu-witness"] = {r.mu_witness->v1, r.mu_witness->v2, r.mu_witness->v3};
  j["kappa"] = r.kappa;
  j["kappa-capped"] = r.kappa_capped;
  j["nu-thin"] = r.nu;
  j["nu-witness"] = r.nu_witness;
  auto bound = [](std::optional<bool> b) {
    return b ? nlohmann::json(*b ? "holds" : "fails") : nlohmann::json("not-evaluated");
  };
  j["bounds"]["mu<=4delta"] = bound(r.mu_le_4delta);
  j["bounds"]["kappa<=delta"] = bound(r.kappa_le_delta);
  j["bounds"]["nu<=2kappa+mu"] = bound(r.nu_le_2kappa_plus_mu);
  j["bounds"]["delta<=32kappa+20mu"] = bound(r.delta_le_32kappa_plus_20mu);
  return j;
}

inline nlohmann::json to_json(const BarycentricGraph& b) {
  nlohmann::json j;
  j["sets"] = b.sets;
  j["origin"] = b.origin;
  nlohmann::json orient = nlohmann::json::array();
  for (auto [from, to] : b.orientation) orient.push_back({from, to});
  j["orientation"] = orient;
  return j;
}

inline nlohmann::json to_json(const CoverBall& c) {
  nlohmann::json j;
  j["base"] = c.base;
  j["radius"] = c.radius;
  j["projection"] = c.projection;
  return j;
}

inline nlohmann::json to_json(const NormalPath& p) {
  nlohmann::json j;
  j["vertices"] = p.vertices;
  j["hulls"] = p.hulls;
  return j;
}

inline nlohmann::json to_json(const BfsOrder& o) {
  nlohmann::json j;
  j["base"] = o.base;
  j["order"] = o.order;
  j["parent"] = o.parent;
  return j;
}

inline nlohmann::json to_json(const DiscFilling& f) {
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : f.moves) {
    nlohmann::json mj;
    if (m.is_face) {
      mj["at"] = m.at;
      mj["face"] = m.face;
      mj["replace"] = m.replace_path;
      mj["with"] = m.with_path;
    } else {
      mj["cancel"] = m.at;
    }
    moves.push_back(mj);
  }
  nlohmann::json j;
  j["area"] = f.area;
  j["moves"] = moves;
  return j;
}

inline nlohmann::json to_json(const ZeroExtSolution& s) {
  nlohmann::json j;
  j["assignment"] = s.assignment;
  j["cost"] = s.cost.str();
  if (s.bound) {
    j["bound"] = s.bound->str();
    // ratio = cost / bound, exact
    if (s.bound->num != 0) {
      Rat ratio(s.cost.num * s.bound->den, s.cost.den * s.bound->num);
      j["ratio"] = ratio.str();
    } else {
      j["ratio"] = s.cost.num == 0 ? "1" : "inf";
    }
  }
  return j;
}

/// Instance JSON: {"n": ..., "b": [[facility, vertex, weight]...],
/// "c": [[i, j, weight]...]}; weights are integers or "p/q" strings.
inline ZeroExtInstance zero_ext_instance_from_json(const nlohmann::json& j) {
  ZeroExtInstance inst;
  try {
    inst.n = j.at("n").get<int>();
    auto weight = [](const nlohmann::json& w) -> Rat {
      if (w.is_number_integer()) return Rat(w.get<long long>());
      if (w.is_string()) return parse_rational(w.get<std::string>());
      throw ParseError("weights must be integers or \"p/q\" strings");
    };
    if (j.contains("b"))
      for (const auto& row : j.at("b")) {
        if (!row.is_array() || row.size() != 3) throw ParseError("b rows are [facility, vertex, weight]");
        inst.b.emplace_back(row[0].get<int>(), row[1].get<int>(), weight(row[2]));
      }
    if (j.contains("c"))
      for (const auto& row : j.at("c")) {
        if (!row.is_array() || row.size() != 3) throw ParseError("c rows are [i, j, weight]");
        inst.c.emplace_back(row[0].get<int>(), row[1].get<int>(), weight(row[2]));
      }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad 0-extension instance: ") + e.what());
  }
  return inst;
}

}  // namespace wmg

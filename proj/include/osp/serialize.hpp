#pragma once

#include <string>

#include "json.hpp"

#include "osp/atypical.hpp"
#include "osp/growth.hpp"
#include "osp/resolution.hpp"
#include "osp/rootsys.hpp"
#include "osp/szops.hpp"
#include "osp/weight.hpp"

// JSON views of the toolkit's results. Weights are written as literals
// ("l0|l1,...,lm") that parse_weight reads back; arbitrary-precision
// integers are written as decimal strings, machine integers as numbers.

namespace osp {

using Json = nlohmann::ordered_json;

inline Json to_json(const Root& r) {
  return Json{{"label", r.label}, {"vector", r.vec.str()}, {"parity", to_string(r.parity)}, {"isotropic", r.isotropic}};
}

inline Json to_json(const RootSystemData& rs) {
  Json j;
  j["k"] = rs.k;
  j["m"] = rs.m;
  j["s"] = rs.s.str();
  auto roots = [](const std::vector<Root>& rr) {
    Json a = Json::array();
    for (const auto& r : rr) a.push_back(to_json(r));
    return a;
  };
  j["simple_roots"] = roots(rs.simple_roots);
  j["positive_even"] = roots(rs.pos_even);
  j["positive_odd"] = roots(rs.pos_odd);
  j["rho"] = rs.rho.str();
  j["rho0"] = rs.rho0.str();
  j["rho1"] = rs.rho1.str();
  return j;
}

inline Json to_json(const AtypicalityInfo& info) {
  Json j;
  j["degree"] = info.degree;
  j["root"] = info.root ? Json(info.root->label()) : Json(nullptr);
  Json s = Json::array();
  for (const auto& v : info.sset) s.push_back(v.str());
  j["sset"] = s;
  return j;
}

inline Json to_json(const ResolutionTerm& t) {
  return Json{{"d", t.d},
              {"summands", t.summands},
              {"count", t.count},
              {"proxy_lower", t.proxy_lower.str()},
              {"proxy_upper", t.proxy_upper.str()}};
}

inline Json to_json(const GrowthReport& r) {
  auto degrees = [](const std::map<int, int>& by_class) {
    Json d = Json::object();
    for (const auto& [res, deg] : by_class) d[std::to_string(res)] = deg;
    return d;
  };
  Json j;
  j["k"] = r.k;
  j["weight"] = r.weight.str();
  j["atypicality"] = r.atypicality;
  j["depth"] = r.depth;
  j["mode"] = to_string(r.mode);
  j["degrees_by_residue"] = degrees(r.degrees_by_residue);
  j["count_degrees_by_residue"] = degrees(r.count_degrees_by_residue);
  j["rate_of_growth"] = r.rate_of_growth;
  j["complexity"] = r.complexity;
  j["z_complexity"] = r.z_complexity;
  j["dim_associated_variety"] = r.geometry.associated_variety;
  j["dim_support_variety"] = r.geometry.support_variety;
  j["dim_detecting_support"] = r.geometry.detecting_support;
  j["identities"] = Json{{"complexity_equals_assoc_plus_support", r.complexity_identity_holds},
                         {"z_complexity_equals_detecting_support", r.z_identity_holds}};
  j["last_term"] = r.terms.empty() ? Json(nullptr) : to_json(r.terms.back());
  return j;
}

}  // namespace osp

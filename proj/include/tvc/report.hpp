#pragma once

// JSON rendering of solver results and bound reports.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tvc/bounds.hpp"
#include "tvc/solve.hpp"
#include "tvc/verify.hpp"

namespace tvc {

inline constexpr int report_schema = 1;

inline nlohmann::json edges_json(const std::vector<Edge>& edges) {
    auto out = nlohmann::json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

inline nlohmann::json to_json(const BoundReport& b) {
    return {{"phi", {{"value", b.phi_bound.value}, {"exact", b.phi_bound.exact}, {"even_ears", b.phi}}},
            {"garg", {{"value", b.garg.value}, {"components", b.garg.components}, {"W", b.garg.W}}},
            {"new", {{"value", b.fresh.value}, {"k", b.fresh.k}, {"ears", b.fresh.ears}}},
            {"combined", b.combined}};
}

inline nlohmann::json to_json(const EarCounts& c) {
    return {{"a", c.a}, {"b", c.b}, {"c", c.c}, {"d", c.d}, {"e", c.e}, {"even", c.even}};
}

inline nlohmann::json to_json(const SolveReport& r) {
    nlohmann::json j;
    j["schema"] = report_schema;
    j["n"] = r.input.vertex_count();
    j["m"] = r.input.edge_count();
    auto dels = nlohmann::json::array();
    for (const auto& d : r.reduction.log)
        dels.push_back({{"edge", {d.edge.u, d.edge.v}},
                        {"witness", {{"a", d.witness.a}, {"b", d.witness.b}, {"c", d.witness.c}, {"d", d.witness.d}, {"e", d.witness.e}}}});
    j["reduction"] = {{"deleted", dels}, {"m", r.reduction.graph.edge_count()}};
    j["decomposition"] = {{"source", r.run.e1_source}, {"even_reference", r.run.phi_ref}, {"even_reference_exact", r.run.phi_exact},
                          {"text", to_text(r.run.ed)}};
    j["output"] = {{"size", r.output.size()}, {"edges", edges_json(r.output)}};
    j["counts"] = to_json(r.counts);
    j["star"] = to_string(r.star);
    j["bounds"] = to_json(r.bounds);
    j["ratio_bound"] = to_string(r.ratio_bound);
    j["ratio_bound_within_10_7"] = r.ratio_bound <= Rational(10, 7);
    auto steps = nlohmann::json::array();
    for (const auto& [ear, label] : r.new_bound_cert.steps) steps.push_back({{"ear", ear}, {"case", label}});
    j["new_bound_certificate"] = {{"ok", r.new_bound_cert.ok}, {"failure", r.new_bound_cert.failure}, {"steps", steps}};
    auto log = nlohmann::json::array();
    for (const auto& rec : r.run.log) log.push_back(to_string(rec));
    j["rewrites"] = log;
    return j;
}

inline nlohmann::json to_json(const VerifyResult& v) {
    return {{"schema", report_schema}, {"ok", v.ok}, {"violation", v.violation}, {"two_edge_connected", v.two_edge_connected}};
}

inline nlohmann::json to_json(const RatioSampleReport& r) {
    auto cons = nlohmann::json::array();
    for (size_t i = 0; i < r.dual.constraints.size(); ++i)
        cons.push_back({{"name", r.dual.constraints[i].first}, {"value", to_string(r.dual.constraints[i].second)},
                        {"rhs", to_string(r.dual.rhs[i])}});
    return {{"schema", report_schema},
            {"dual", {{"x", to_string(r.dual.x)}, {"y", to_string(r.dual.y)}, {"z", to_string(r.dual.z)}, {"feasible", r.dual.feasible},
                      {"tight", r.dual.tight}, {"constraints", cons}}},
            {"attainment", to_string(r.attainment)},
            {"samples", r.samples},
            {"max_seen", to_string(r.max_seen)},
            {"above_10_7", r.above},
            {"at_10_7", r.at_max}};
}

}  // namespace tvc

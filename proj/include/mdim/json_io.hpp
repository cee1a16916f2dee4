#pragma once

#include <json.hpp>

#include "mdim/frac_dim.hpp"
#include "mdim/integer_dim.hpp"
#include "mdim/pair_system.hpp"

namespace mdim {

using json = nlohmann::ordered_json;

// {"k": "p/q", "value": "p/q", "kappa": int, "certificate": ["p/q", ...]}
inline json to_json(const DimensionResult& r) {
    json j;
    j["k"] = r.k.to_string();
    j["value"] = r.value.to_string();
    j["kappa"] = r.kappa;
    json cert = json::array();
    for (const auto& v : r.certificate.values) cert.push_back(v.to_string());
    j["certificate"] = std::move(cert);
    return j;
}

// {"k": int, "value": int, "witness": [vertex ids]}
inline json to_json(const IntegerDimResult& r) {
    json j;
    j["k"] = r.k;
    j["value"] = r.value;
    j["witness"] = to_vertex_list(r.witness);
    return j;
}

} // namespace mdim

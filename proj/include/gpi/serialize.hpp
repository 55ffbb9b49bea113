#pragma once

#include <json.hpp>

#include "gpi/generic.hpp"
#include "gpi/tideal.hpp"

namespace gpi {

using json = nlohmann::json;

inline json to_json(const Mat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const Multidegree& d) {
    json o = json::object();
    for (auto& [v, k] : d.degrees) o[v.to_string()] = k;
    return o;
}

inline json to_json(const SpanReport& r) {
    json o;
    o["multidegree"] = to_json(r.multidegree);
    o["word_count"] = r.word_count;
    o["identity_dim"] = r.identity_dim;
    o["consequence_dim"] = r.consequence_dim;
    o["equal"] = r.equal;
    o["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
    return o;
}

} // namespace gpi

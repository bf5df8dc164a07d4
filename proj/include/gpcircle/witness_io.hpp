#pragma once

/**
 * @file witness_io.hpp
 * @brief JSON and CSV serialization of witnesses.
 *
 * All numbers are emitted as exact rational strings ("n" or "n/d"),
 * never as floating point.  The witness schema is shared by the search,
 * the families and the verifier:
 *
 *   {"h": "...", "a": "...", "r": "...", "points": [["x","y"], ...x4]}
 *
 * Search results carry an extra "triple" object, family results an
 * extra "source" object.  The verifier accepts a single witness object
 * or an array of them; coordinates may be arbitrary rationals.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpcircle/circle.hpp"
#include "gpcircle/search.hpp"

namespace gpc {

using Json = nlohmann::ordered_json;

struct WitnessParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Json witness_to_json(const GPWitness& w) {
    Json j;
    j["h"] = to_string(w.circle.h);
    j["a"] = to_string(w.circle.a);
    j["r"] = to_string(w.ratio);
    Json pts = Json::array();
    for (const auto& p : w.points) pts.push_back(Json::array({to_string(p.x), to_string(p.y)}));
    j["points"] = std::move(pts);
    return j;
}

inline Json witness_to_json(const CanonicalWitness& w) { return witness_to_json(w.as_witness()); }

inline Json search_hit_to_json(const SearchHit& hit) {
    Json j = witness_to_json(hit.witness);
    j["triple"] = Json{{"u2", to_string(hit.triple.u2)},
                       {"u3", to_string(hit.triple.u3)},
                       {"r", to_string(hit.triple.r)}};
    return j;
}

inline GPWitness witness_from_json(const Json& j) {
    auto field = [&](const char* name) -> const Json& {
        if (!j.is_object() || !j.contains(name))
            throw WitnessParseError(std::string("witness: missing field '") + name + "'");
        return j.at(name);
    };
    auto rational = [](const Json& v, const char* what) {
        if (!v.is_string()) throw WitnessParseError(std::string(what) + ": expected a rational string");
        try {
            return parse_rat(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw WitnessParseError(std::string(what) + ": " + e.what());
        }
    };
    GPWitness w;
    w.circle.h = rational(field("h"), "h");
    w.circle.a = rational(field("a"), "a");
    w.ratio = rational(field("r"), "r");
    const Json& pts = field("points");
    if (!pts.is_array() || pts.size() != 4)
        throw WitnessParseError("points: expected an array of exactly 4 points");
    for (std::size_t i = 0; i < 4; ++i) {
        const Json& p = pts[i];
        if (!p.is_array() || p.size() != 2)
            throw WitnessParseError("points: each point must be a [x, y] pair");
        w.points[i].x = rational(p[0], "point x");
        w.points[i].y = rational(p[1], "point y");
    }
    return w;
}

/// Parse a verifier input: one witness object or an array of them.
inline std::vector<GPWitness> witnesses_from_json_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw WitnessParseError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<GPWitness> out;
    if (j.is_array()) {
        for (const auto& item : j) out.push_back(witness_from_json(item));
    } else {
        out.push_back(witness_from_json(j));
    }
    return out;
}

inline std::string csv_header() { return "u2,u3,r,h,a,x1,y1,x2,y2,x3,y3,x4,y4"; }

inline std::string csv_row(const GPWitness& w, const std::string& u2, const std::string& u3) {
    std::string row = u2 + "," + u3 + "," + to_string(w.ratio) + "," + to_string(w.circle.h) + "," +
                      to_string(w.circle.a);
    for (const auto& p : w.points) row += "," + to_string(p.x) + "," + to_string(p.y);
    return row;
}

inline std::string csv_row(const SearchHit& hit) {
    return csv_row(hit.witness.as_witness(), to_string(hit.triple.u2), to_string(hit.triple.u3));
}

}  // namespace gpc

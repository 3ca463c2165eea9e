#pragma once

#include <string>

#include <json.hpp>

#include "polyforge/bounce.hpp"
#include "polyforge/forest.hpp"
#include "polyforge/lattice.hpp"
#include "polyforge/marked_series.hpp"
#include "polyforge/series.hpp"

namespace polyforge {

// Wire formats.  Polyomino: {"cells": [[i,j], ...]} with normalized cells in
// (i, then j) order.  Cuts are lowercase e/s strings, trees balanced-paren
// strings, bilateral words u/d strings.

inline nlohmann::json polyomino_to_json(const Polyomino& p) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell& c : p.cells()) cells.push_back({c.i, c.j});
    return nlohmann::json{{"cells", cells}};
}

inline Polyomino polyomino_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        fail(errc::bad_input, "polyomino json: expected {\"cells\": [[i,j],...]}");
    std::vector<std::pair<int, int>> raw;
    for (const auto& c : j["cells"]) {
        if (!c.is_array() || c.size() != 2) fail(errc::bad_input, "polyomino json: bad cell");
        raw.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return normalize(raw);
}

inline nlohmann::json triplet_to_json(const Triplet& t) {
    nlohmann::json fe = nlohmann::json::array(), fs = nlohmann::json::array();
    for (const auto& tree : t.fe) fe.push_back(tree_to_paren(tree));
    for (const auto& tree : t.fs) fs.push_back(tree_to_paren(tree));
    return nlohmann::json{{"fe", fe}, {"fs", fs}, {"cut", t.cut.word}};
}

inline Triplet triplet_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("fe") || !j.contains("fs") || !j.contains("cut"))
        fail(errc::bad_input, "triplet json: expected {\"fe\": [...], \"fs\": [...], \"cut\": \"...\"}");
    Triplet t;
    for (const auto& s : j["fe"]) t.fe.push_back(tree_from_paren(s.get<std::string>()));
    for (const auto& s : j["fs"]) t.fs.push_back(tree_from_paren(s.get<std::string>()));
    t.cut = make_cut(j["cut"].get<std::string>());
    return t;
}

inline nlohmann::json skeleton_to_json(const Skeleton& sk) {
    nlohmann::json crossings = nlohmann::json::array();
    for (const auto& [cell, h] : sk.crossings) crossings.push_back({cell.i, cell.j, h});
    return nlohmann::json{{"crossings", crossings}, {"M", sk.M}, {"flat", sk.flat}, {"k", sk.k}};
}

inline nlohmann::json series_to_json(const Series& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(s.coeff(n).num().to_string());
    return nlohmann::json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline nlohmann::json marked_series_to_json(const MarkedSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [key, v] : s.coeff(n).terms()) {
            if (!v.is_integer())
                fail(errc::bad_input, "marked series coefficient is not integral (internal fault)");
            terms.push_back({{"x", key.first}, {"y", key.second}, {"c", v.num().to_string()}});
        }
        out.push_back({{"z_degree", n}, {"terms", terms}});
    }
    return out;
}

} // namespace polyforge

#pragma once

#include <json.hpp>

#include <fstream>
#include <string>

#include "chevalgebra/corealg.hpp"
#include "chevalgebra/decomp.hpp"

namespace chevalgebra {

// Deterministic JSON: insertion-ordered objects, rationals as {num, den}
// pairs with decimal strings once they leave the integer range.
using Json = nlohmann::ordered_json;

inline Json json_int(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

inline Json json_rat(const Rat& q) {
    Json j;
    j["num"] = json_int(q.get_num());
    j["den"] = json_int(q.get_den());
    return j;
}

inline Json json_latvec(const LatVec& v) {
    Json j = Json::array();
    for (int64_t x : v) j.push_back(x);
    return j;
}

inline Json json_elem(const AlgElem& e) {
    Json j = Json::array();
    for (const auto& [i, c] : e.terms) {
        Json t;
        t["k"] = i;
        t["num"] = json_int(c.get_num());
        t["den"] = json_int(c.get_den());
        j.push_back(t);
    }
    return j;
}

inline Json json_matrix(const RatMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(json_rat(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Json json_fusion_report(const FusionReport& rep) {
    Json j;
    j["decomposition"] = rep.decomposition;
    j["law"] = rep.law;
    j["mode"] = rep.mode;
    j["seed"] = rep.seed;
    j["ok"] = rep.ok;
    j["total_pairs"] = rep.total_pairs;
    Json cells = Json::array();
    for (const auto& c : rep.cells) {
        Json e;
        e["pair"] = Json::array({c.x, c.y});
        e["allowed"] = c.allowed;
        e["observed"] = c.observed;
        e["pairs_checked"] = c.pairs;
        e["ok"] = c.ok;
        if (!c.ok) e["witness"] = c.witness;
        cells.push_back(e);
    }
    j["cells"] = cells;
    return j;
}

// Every CLI run echoes its configuration so outputs are reproducible
// byte-for-byte given the same invocation.
inline Json make_manifest(const std::string& command, const Json& params) {
    Json m;
    m["tool"] = "chevalgebra";
    m["version"] = "1.0.0";
    m["command"] = command;
    m["parameters"] = params;
    return m;
}

inline void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << j.dump(2) << "\n";
}

}  // namespace chevalgebra

#pragma once

#include "eisk3/classification.hpp"
#include "eisk3/eisenstein.hpp"
#include "eisk3/lattice.hpp"
#include "eisk3/overlattice.hpp"
#include "eisk3/period.hpp"
#include "eisk3/surfaces.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>

#include <string>

namespace eisk3 {

using json = nlohmann::json;

// Rationals travel as "p/q" strings; integers as numbers when they fit in
// int64, decimal strings otherwise.

inline json to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline json to_json(const Rat& v) {
    if (is_integral(v)) return to_json(numerator(v));
    return numerator(v).str() + "/" + denominator(v).str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw domain_error("json: expected an integer");
}

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    EISK3_REQUIRE(j.is_string(), "json: expected an integer or a \"p/q\" string");
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// ---- lattices --------------------------------------------------------------

inline json to_json(const IMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline IMat imat_from_json(const json& j) {
    EISK3_REQUIRE(j.is_array() && !j.empty(), "json: expected a nonempty matrix");
    std::size_t rows = j.size(), cols = j[0].size();
    IMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        EISK3_REQUIRE(j[i].is_array() && j[i].size() == cols, "json: ragged matrix");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = int_from_json(j[i][k]);
    }
    return m;
}

inline json to_json(const IntegerLattice& l) {
    json j;
    if (!l.label().empty()) j["label"] = l.label();
    j["gram"] = to_json(l.gram());
    return j;
}

inline IntegerLattice lattice_from_json(const json& j) {
    EISK3_REQUIRE(j.contains("gram"), "json lattice: missing \"gram\"");
    std::string label = j.value("label", std::string{});
    return IntegerLattice(imat_from_json(j["gram"]), label);
}

// ---- Eisenstein structures and Hermitian forms -----------------------------

inline json to_json(const EisensteinStructure& s) {
    json j;
    j["lattice"] = to_json(s.lattice);
    j["rho"] = to_json(s.rho);
    return j;
}

inline EisensteinStructure structure_from_json(const json& j) {
    EISK3_REQUIRE(j.contains("lattice") && j.contains("rho"),
                  "json structure: need \"lattice\" and \"rho\"");
    return EisensteinStructure(lattice_from_json(j["lattice"]), imat_from_json(j["rho"]));
}

inline json to_json(const HermitianLattice& h) {
    json rows = json::array();
    for (std::size_t i = 0; i < h.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < h.rank(); ++j)
            row.push_back(json::array({to_json(h(i, j).a), to_json(h(i, j).b)}));
        rows.push_back(row);
    }
    return rows;
}

inline HermitianLattice hermitian_from_json(const json& j) {
    EISK3_REQUIRE(j.is_array() && !j.empty(), "json hermitian: expected a matrix of [a,b] pairs");
    std::size_t n = j.size();
    std::vector<std::vector<EisensteinInt>> h(n, std::vector<EisensteinInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        EISK3_REQUIRE(j[i].is_array() && j[i].size() == n, "json hermitian: ragged matrix");
        for (std::size_t k = 0; k < n; ++k) {
            EISK3_REQUIRE(j[i][k].is_array() && j[i][k].size() == 2,
                          "json hermitian: entries are [a,b] pairs");
            h[i][k] = EisensteinInt(int_from_json(j[i][k][0]), int_from_json(j[i][k][1]));
        }
    }
    return HermitianLattice(std::move(h));
}

// ---- glue specs ------------------------------------------------------------

inline json to_json(const GlueSpec& spec) {
    json j;
    j["base"] = to_json(spec.base);
    json glue = json::array();
    for (const auto& f : spec.glue) {
        json row = json::array();
        for (const auto& x : f) row.push_back(to_json(x));
        glue.push_back(row);
    }
    j["glue"] = glue;
    return j;
}

inline GlueSpec glue_spec_from_json(const json& j) {
    EISK3_REQUIRE(j.contains("base") && j.contains("glue"),
                  "json glue spec: need \"base\" and \"glue\"");
    IntegerLattice base = lattice_from_json(j["base"]);
    std::vector<QVec> glue;
    for (const auto& row : j["glue"]) {
        QVec f;
        for (const auto& x : row) f.push_back(rat_from_json(x));
        glue.push_back(std::move(f));
    }
    return {std::move(base), std::move(glue)};
}

// ---- branch configurations -------------------------------------------------

inline json to_json(const branch::BranchConfig& cfg) {
    json j;
    j["surface"] = cfg.surface.name();
    json comps = json::array();
    for (const auto& c : cfg.components) {
        json cc;
        cc["id"] = c.id;
        cc["class"] = json::array({c.cls.a, c.cls.b});
        cc["part"] = c.part == branch::Part::B1 ? "B1" : "B2";
        comps.push_back(cc);
    }
    j["components"] = comps;
    json germs = json::array();
    for (const auto& g : cfg.germs) {
        json gg;
        gg["kind"] = branch::germ_name(g.kind);
        gg["on"] = g.on;
        germs.push_back(gg);
    }
    j["germs"] = germs;
    return j;
}

inline branch::BranchConfig config_from_json(const json& j) {
    branch::BranchConfig cfg;
    std::string surf = j.value("surface", std::string{});
    if (surf == "P2") {
        cfg.surface = branch::SurfaceModel::P2();
    } else {
        EISK3_REQUIRE(surf.size() >= 2 && surf[0] == 'F',
                      "json config: surface must be \"Fn\" or \"P2\"");
        cfg.surface = branch::SurfaceModel::Fn(std::stoll(surf.substr(1)));
    }
    for (const auto& cc : j.value("components", json::array())) {
        branch::ComponentSpec c;
        c.id = cc.at("id").get<std::string>();
        EISK3_REQUIRE(cc.contains("class") && cc["class"].size() == 2,
                      "json config: component needs \"class\": [a,b]");
        c.cls = {cc["class"][0].get<long long>(), cc["class"][1].get<long long>()};
        std::string part = cc.value("part", "B1");
        EISK3_REQUIRE(part == "B1" || part == "B2", "json config: part must be B1 or B2");
        c.part = part == "B1" ? branch::Part::B1 : branch::Part::B2;
        cfg.components.push_back(std::move(c));
    }
    for (const auto& gg : j.value("germs", json::array())) {
        branch::GermPlacement g;
        auto kind = branch::germ_from_name(gg.at("kind").get<std::string>());
        EISK3_REQUIRE(kind.has_value(), "json config: unknown germ kind");
        g.kind = *kind;
        for (const auto& id : gg.value("on", json::array())) g.on.push_back(id.get<std::string>());
        cfg.germs.push_back(std::move(g));
    }
    return cfg;
}

// ---- dual graphs -----------------------------------------------------------

inline json to_json(const branch::DualGraph& g) {
    json j;
    json verts = json::array();
    for (const auto& v : g.vertices) {
        json vv;
        vv["id"] = v.id;
        vv["name"] = v.name;
        vv["class"] = branch::vertex_class_name(v.cls);
        if (v.cls != branch::VertexClass::strict_transform) vv["self_int"] = to_json(v.self_int);
        vv["coeff"] = to_json(v.coeff);
        verts.push_back(vv);
    }
    j["vertices"] = verts;
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    json classes;
    classes["white"] = g.count(branch::VertexClass::white);
    classes["black"] = g.count(branch::VertexClass::black);
    classes["star"] = g.count(branch::VertexClass::star);
    classes["double"] = g.count(branch::VertexClass::double_circle);
    j["classes"] = classes;
    return j;
}

/// DOT output; vertex shape encodes the class (circle / filled circle / star /
/// doublecircle, strict transforms as boxes).
inline std::string to_dot(const branch::DualGraph& g, const std::string& name = "dualgraph") {
    std::string out = "graph " + name + " {\n";
    for (const auto& v : g.vertices) {
        std::string attrs;
        switch (v.cls) {
            case branch::VertexClass::white: attrs = "shape=circle"; break;
            case branch::VertexClass::black: attrs = "shape=circle style=filled fillcolor=black fontcolor=white"; break;
            case branch::VertexClass::star: attrs = "shape=star"; break;
            case branch::VertexClass::double_circle: attrs = "shape=doublecircle"; break;
            case branch::VertexClass::strict_transform: attrs = "shape=box"; break;
        }
        std::string label = v.name;
        if (v.cls != branch::VertexClass::strict_transform)
            label += " (" + v.self_int.str() + ")";
        out += "  v" + std::to_string(v.id) + " [" + attrs + " label=\"" + label + "\"];\n";
    }
    for (auto [a, b] : g.edges)
        out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace eisk3

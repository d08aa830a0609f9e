#include "bnloci/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bnloci {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key, const char* where) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("curve file: missing \"") + key + "\" in " + where);
    }
    return *it;
}

}  // namespace

NodalCurve curve_from_json(const json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("curve file: top level must be an object");
    }
    const json& jvertices = require_field(j, "vertices", "top-level object");
    const json& jedges = require_field(j, "edges", "top-level object");
    if (!jvertices.is_array() || !jedges.is_array()) {
        throw std::invalid_argument("curve file: \"vertices\" and \"edges\" must be arrays");
    }

    std::vector<VertexInfo> vertices;
    vertices.reserve(jvertices.size());
    for (const json& jv : jvertices) {
        if (!jv.is_object()) {
            throw std::invalid_argument("curve file: each vertex must be an object");
        }
        const json& jlabel = require_field(jv, "label", "a vertex");
        const json& jgenus = require_field(jv, "genus", "a vertex");
        if (!jlabel.is_string()) {
            throw std::invalid_argument("curve file: vertex label must be a string");
        }
        if (!jgenus.is_number_integer()) {
            throw std::invalid_argument("curve file: vertex genus must be an integer");
        }
        vertices.push_back({jlabel.get<std::string>(), jgenus.get<int>()});
    }

    // Resolve edge labels against the vertex order just read.
    auto index_of = [&](const std::string& label) -> int {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i].label == label) return static_cast<int>(i);
        }
        throw std::invalid_argument("curve file: edge references unknown label \"" + label + "\"");
    };

    std::vector<std::pair<int, int>> edges;
    edges.reserve(jedges.size());
    for (const json& je : jedges) {
        if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string()) {
            throw std::invalid_argument(
                "curve file: each edge must be a two-element array of vertex labels");
        }
        edges.emplace_back(index_of(je[0].get<std::string>()),
                           index_of(je[1].get<std::string>()));
    }
    return NodalCurve(std::move(vertices), edges);
}

json curve_to_json(const NodalCurve& curve) {
    json jvertices = json::array();
    for (const VertexInfo& v : curve.vertices()) {
        jvertices.push_back({{"label", v.label}, {"genus", v.genus}});
    }
    json jedges = json::array();
    for (int u = 0; u < curve.component_count(); ++u) {
        for (int v = u + 1; v < curve.component_count(); ++v) {
            for (int m = 0; m < curve.multiplicity(u, v); ++m) {
                jedges.push_back({curve.vertex(u).label, curve.vertex(v).label});
            }
        }
    }
    return {{"vertices", std::move(jvertices)}, {"edges", std::move(jedges)}};
}

NodalCurve load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open curve file: " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("curve file " + path + ": " + e.what());
    }
    return curve_from_json(j);
}

json decomposition_to_json(const NodalCurve& curve, const Multidegree& d,
                           const Decomposition& decomposition) {
    json out;
    out["curve"] = curve_to_json(curve);
    out["multidegree"] = d.values();
    out["semistable"] = !decomposition.full_jacobian;
    out["stable"] = !decomposition.full_jacobian && is_stable(curve, d);
    if (decomposition.full_jacobian) {
        out["components"] = nullptr;
        return out;
    }
    json jcomponents = json::array();
    for (const ComponentLabel& label : decomposition.components) {
        json jc;
        json jz = json::array();
        for (int v : label.subcurve.members()) jz.push_back(curve.vertex(v).label);
        jc["Z"] = std::move(jz);
        jc["e_Z"] = label.restricted.values();
        if (label.global_e) {
            jc["global_e"] = label.global_e->values();
        } else {
            jc["global_e"] = nullptr;
        }
        jc["twisted_abel"] = label.twisted_abel();
        jc["dimension"] = component_dimension(curve, label);
        jcomponents.push_back(std::move(jc));
    }
    out["components"] = std::move(jcomponents);
    return out;
}

std::vector<long long> parse_int_list(const std::string& text, int expected_size) {
    std::vector<long long> values;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        // Trim surrounding whitespace.
        const std::size_t first = piece.find_first_not_of(" \t");
        const std::size_t last = piece.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw std::invalid_argument("integer list: empty entry in \"" + text + "\"");
        }
        piece = piece.substr(first, last - first + 1);
        std::size_t consumed = 0;
        long long value = 0;
        try {
            value = std::stoll(piece, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("integer list: cannot parse \"" + piece + "\"");
        }
        if (consumed != piece.size()) {
            throw std::invalid_argument("integer list: trailing characters in \"" + piece + "\"");
        }
        values.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (expected_size >= 0 && static_cast<int>(values.size()) != expected_size) {
        throw std::invalid_argument("integer list: expected " + std::to_string(expected_size) +
                                    " entries, got " + std::to_string(values.size()));
    }
    return values;
}

std::string format_int_list(const std::vector<long long>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ',';
        out << values[i];
    }
    return out.str();
}

std::string format_subcurve(const NodalCurve& curve, const Subcurve& z) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : z.members()) {
        if (!first) out << ',';
        out << curve.vertex(v).label;
        first = false;
    }
    out << '}';
    return out.str();
}

}  // namespace bnloci

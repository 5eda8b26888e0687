#pragma once

// JSON reading and writing for polynomials, cone instances and lattices.
// Rationals are strings "p/q" (or "p"); integers are also accepted as numbers.

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kempf/cone.hpp"
#include "kempf/model.hpp"

namespace kempf {

using Json = nlohmann::ordered_json;

namespace io {

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    throw Error(ErrorCode::parse_error, "expected a rational string, got " + j.dump());
}

inline Json to_json(Rational q) {
    q.canonicalize();
    return q.get_str();
}

inline Polynomial poly_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::parse_error, "polynomial must be an array of coefficients");
    if (j.size() > static_cast<std::size_t>(max_input_degree + 1))
        throw Error(ErrorCode::parse_error, "polynomial degree exceeds " + std::to_string(max_input_degree));
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return Polynomial(std::move(c));
}

inline Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

inline Json to_json(const RationalFunction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

template <class T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::parse_error, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(ErrorCode::parse_error, std::string("field '") + key + "' has the wrong type");
    }
}

inline Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::parse_error, e.what());
    }
}

inline Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

// ---------------------------------------------------------------------------

inline ConeInstance<Rational> cone_from_json(const Json& j) {
    ConeInstance<Rational> inst;
    if (!j.is_object() || !j.contains("b") || !j.contains("v") || !j["b"].is_array() || !j["v"].is_array())
        throw Error(ErrorCode::parse_error, "cone instance needs arrays 'b' and 'v'");
    for (const auto& x : j["b"]) inst.b.push_back(rational_from_json(x));
    for (const auto& x : j["v"]) inst.v.push_back(rational_from_json(x));
    return inst;
}

inline Json to_json(const ConeInstance<Rational>& inst) {
    Json b = Json::array(), v = Json::array();
    for (const auto& x : inst.b) b.push_back(to_json(x));
    for (const auto& x : inst.v) v.push_back(to_json(x));
    return Json{{"b", b}, {"v", v}};
}

// ---------------------------------------------------------------------------

struct Instance {
    StabilityParams params;
    SubobjectLattice lattice;
};

inline ObjectData object_from_json(const Json& j) {
    ObjectData d;
    d.rank = get_field<int>(j, "rank");
    if (!j.contains("poly")) throw Error(ErrorCode::parse_error, "missing field 'poly'");
    d.hilbert = poly_from_json(j["poly"]);
    d.eps = j.contains("eps") ? get_field<int>(j, "eps") : 0;
    return d;
}

inline Json to_json(const ObjectData& d) {
    return Json{{"rank", d.rank}, {"poly", to_json(d.hilbert)}, {"eps", d.eps}};
}

inline std::vector<std::array<int, 3>> triples_from_json(const Json& j, const char* key) {
    std::vector<std::array<int, 3>> out;
    if (!j.contains(key)) return out;
    for (const auto& t : j[key]) {
        if (!t.is_array() || t.size() != 3) throw Error(ErrorCode::parse_error, std::string("'") + key + "' entries are [a, b, c]");
        out.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return out;
}

inline Instance instance_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorCode::parse_error, "instance must be a JSON object");
    Instance inst;
    try {
        inst.params.mode = parse_stability_mode(get_field<std::string>(j, "mode"));
        inst.params.dim_x = get_field<int>(j, "dimX");
        if (j.contains("delta")) inst.params.delta = poly_from_json(j["delta"]);
        if (j.contains("g")) inst.params.g = rational_from_json(j["g"]);
        ObjectData ambient = object_from_json(get_field<Json>(j, "ambient"));
        std::vector<LatticeNode> nodes;
        for (const auto& n : get_field<Json>(j, "nodes")) nodes.push_back({get_field<int>(n, "id"), object_from_json(n)});
        std::vector<std::pair<int, int>> order;
        for (const auto& e : get_field<Json>(j, "order")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::parse_error, "'order' entries are [child, parent]");
            order.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        inst.lattice = SubobjectLattice(std::move(ambient), std::move(nodes), std::move(order), triples_from_json(j, "meet"),
                                        triples_from_json(j, "join"));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, e.what());
    }
    return inst;
}

inline Json to_json(const Instance& inst) {
    const auto& lat = inst.lattice;
    Json j;
    j["mode"] = to_string(inst.params.mode);
    j["dimX"] = inst.params.dim_x;
    j["delta"] = to_json(inst.params.delta);
    j["g"] = to_json(inst.params.g);
    j["ambient"] = to_json(lat.ambient());
    Json nodes = Json::array();
    for (const auto& n : lat.nodes()) {
        Json e{{"id", n.id}};
        const Json data = to_json(n.data);
        for (const auto& [k, v] : data.items()) e[k] = v;
        nodes.push_back(e);
    }
    j["nodes"] = nodes;
    Json order = Json::array();
    for (const auto& [c, p] : lat.order_pairs()) order.push_back(Json::array({c, p}));
    j["order"] = order;
    auto triples = [](const std::vector<std::array<int, 3>>& t) {
        Json out = Json::array();
        for (const auto& [a, b, c] : t) out.push_back(Json::array({a, b, c}));
        return out;
    };
    j["meet"] = triples(lat.meets());
    j["join"] = triples(lat.joins());
    return j;
}

} // namespace io
} // namespace kempf

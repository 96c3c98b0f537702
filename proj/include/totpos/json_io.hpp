#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "totpos/error.hpp"
#include "totpos/laurent.hpp"
#include "totpos/matrix.hpp"
#include "totpos/network.hpp"
#include "totpos/positivity.hpp"
#include "totpos/scalar.hpp"

namespace totpos::json {

using Json = nlohmann::ordered_json;

inline Json to_json(const Scalar& s) { return s.str(); }

inline Json to_json(const MinorSpec& s) { return Json{{"rows", s.rows}, {"cols", s.cols}, {"label", to_string(s)}}; }

inline Json to_json(const Matrix& x) {
    Json rows = Json::array();
    for (std::size_t i = 1; i <= x.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 1; j <= x.size(); ++j) row.push_back(x(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"n", x.size()}, {"rows", std::move(rows)}};
}

inline Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(Json{{"exp", it->first}, {"coeff", it->second.str()}});
    return Json{{"vars", p.vars()}, {"terms", std::move(terms)}};
}

inline Json to_json(const PlanarNetwork& net) {
    Json vs = Json::array(), es = Json::array();
    for (const auto& v : net.vertices()) vs.push_back(Json{{"x", v.x}, {"level", v.level}});
    for (const auto& e : net.edges()) es.push_back(Json{{"from", e.from}, {"to", e.to}, {"weight", e.weight.str()}});
    return Json{{"n", net.n()}, {"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

inline Json to_json(const CheckReport& r) {
    Json ws = Json::array();
    for (const auto& w : r.witnesses) ws.push_back(Json{{"minor", to_string(w.minor)}, {"value", w.value.str()}});
    return Json{{"verdict", r.verdict}, {"minors_checked", r.minors_checked}, {"witnesses", std::move(ws)}};
}

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + ": missing field '" + key + "'");
    return *it;
}

inline long integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
    return j.get<long>();
}

}  // namespace detail

/// Accepts "p/q" strings or JSON integers.
inline Scalar scalar_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw ParseError(path + ": expected a rational string like \"p/q\"");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline Matrix matrix_from_json(const Json& j) {
    const long n = detail::integer(detail::field(j, "n", ""), "/n");
    if (n < 1) throw ParseError("/n: must be positive");
    const Json& rows = detail::field(j, "rows", "");
    if (!rows.is_array() || static_cast<long>(rows.size()) != n) throw ParseError("/rows: expected " + std::to_string(n) + " rows");
    Matrix x(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const std::string rp = "/rows/" + std::to_string(i);
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<long>(row.size()) != n) throw ParseError(rp + ": expected " + std::to_string(n) + " entries");
        for (long k = 0; k < n; ++k)
            x(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(k + 1)) =
                scalar_from_json(row[static_cast<std::size_t>(k)], rp + "/" + std::to_string(k));
    }
    return x;
}

inline PlanarNetwork network_from_json(const Json& j) {
    const long n = detail::integer(detail::field(j, "n", ""), "/n");
    const Json& vs = detail::field(j, "vertices", "");
    const Json& es = detail::field(j, "edges", "");
    if (!vs.is_array()) throw ParseError("/vertices: expected an array");
    if (!es.is_array()) throw ParseError("/edges: expected an array");
    std::vector<Vertex> vertices;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        const std::string p = "/vertices/" + std::to_string(k);
        vertices.push_back({static_cast<int>(detail::integer(detail::field(vs[k], "x", p), p + "/x")),
                            static_cast<int>(detail::integer(detail::field(vs[k], "level", p), p + "/level"))});
    }
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < es.size(); ++k) {
        const std::string p = "/edges/" + std::to_string(k);
        const long from = detail::integer(detail::field(es[k], "from", p), p + "/from");
        const long to = detail::integer(detail::field(es[k], "to", p), p + "/to");
        if (from < 0 || to < 0) throw ParseError(p + ": negative vertex index");
        const Scalar w = es[k].contains("weight") ? scalar_from_json(es[k]["weight"], p + "/weight") : Scalar(1);
        edges.push_back({static_cast<std::size_t>(from), static_cast<std::size_t>(to), w});
    }
    try {
        return PlanarNetwork(static_cast<int>(n), std::move(vertices), std::move(edges));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("/: invalid network: ") + e.what());
    }
}

inline LaurentPoly laurent_from_json(const Json& j) {
    const Json& vars = detail::field(j, "vars", "");
    const Json& terms = detail::field(j, "terms", "");
    if (!vars.is_array() || !terms.is_array()) throw ParseError("/vars and /terms must be arrays");
    std::vector<std::string> names;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (!vars[k].is_string()) throw ParseError("/vars/" + std::to_string(k) + ": expected a string");
        names.push_back(vars[k].get<std::string>());
    }
    std::vector<std::pair<Exponent, Scalar>> ts;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string p = "/terms/" + std::to_string(k);
        const Json& e = detail::field(terms[k], "exp", p);
        if (!e.is_array() || e.size() != names.size()) throw ParseError(p + "/exp: expected " + std::to_string(names.size()) + " exponents");
        Exponent exp;
        for (std::size_t v = 0; v < e.size(); ++v) exp.push_back(static_cast<int>(detail::integer(e[v], p + "/exp/" + std::to_string(v))));
        ts.emplace_back(std::move(exp), scalar_from_json(detail::field(terms[k], "coeff", p), p + "/coeff"));
    }
    return LaurentPoly::from_terms(std::move(names), ts);
}

/// Reads a file ("-" for stdin) and parses it as JSON; syntax errors carry the byte offset.
inline Json read_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError(path + ": cannot open file");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": JSON syntax error at byte " + std::to_string(e.byte));
    }
}

inline Matrix read_matrix(const std::string& path) {
    const Json j = read_file(path);
    try {
        return matrix_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + e.what());
    }
}

inline PlanarNetwork read_network(const std::string& path) {
    const Json j = read_file(path);
    try {
        return network_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + e.what());
    }
}

}  // namespace totpos::json

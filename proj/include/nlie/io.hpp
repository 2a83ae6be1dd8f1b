#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "nlie/algebra.hpp"
#include "nlie/assoc.hpp"
#include "nlie/deform.hpp"
#include "nlie/error.hpp"
#include "nlie/linalg.hpp"
#include "nlie/representation.hpp"
#include "nlie/scalar.hpp"
#include "nlie/tuples.hpp"

// JSON interchange. Every document is an object with a "kind" tag; all
// scalars travel as strings in the exact text grammar (see scalar.hpp), all
// basis indices are 1-based, bracket/product keys are sorted. Structural
// problems throw ShapeMismatch/IndexOutOfRange; malformed scalar or document
// text throws ParseError carrying the offending position.
namespace nlie::io {

using nlohmann::json;

inline json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        if (auto cut = msg.find("] "); cut != std::string::npos) msg.erase(0, cut + 2);
        throw ParseError(msg, e.byte > 0 ? e.byte - 1 : 0);
    }
}

namespace detail {

inline const json& member(const json& j, const char* key) {
    if (!j.is_object()) throw ShapeMismatch("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ShapeMismatch(std::string("missing key \"") + key + "\"");
    return *it;
}

inline std::string member_string(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_string())
        throw ShapeMismatch(std::string("key \"") + key + "\" must be a string");
    return v.get<std::string>();
}

inline int member_int(const json& j, const char* key, std::int64_t lo, std::int64_t hi) {
    const json& v = member(j, key);
    if (!v.is_number_integer())
        throw ShapeMismatch(std::string("key \"") + key + "\" must be an integer");
    std::int64_t x = v.get<std::int64_t>();
    if (x < lo || x > hi)
        throw ShapeMismatch(std::string("key \"") + key + "\" out of range");
    return static_cast<int>(x);
}

inline const json& member_array(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_array())
        throw ShapeMismatch(std::string("key \"") + key + "\" must be an array");
    return v;
}

// 1-based index tuple -> 0-based Tuple, bounds-checked and order-checked.
inline Tuple index_tuple(const json& arr, int len, int dim, bool strict) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != len)
        throw ShapeMismatch("\"on\" must be an array of " + std::to_string(len) +
                            " indices");
    Tuple t;
    std::int64_t prev = 0;
    for (const json& e : arr) {
        if (!e.is_number_integer())
            throw ShapeMismatch("\"on\" entries must be integers");
        std::int64_t x = e.get<std::int64_t>();
        if (x < 1 || x > dim)
            throw IndexOutOfRange("index " + std::to_string(x) + " outside 1.." +
                                  std::to_string(dim));
        if (strict ? x <= prev : x < prev)
            throw ShapeMismatch(strict ? "\"on\" must be strictly increasing"
                                       : "\"on\" must be sorted");
        prev = x;
        t.push_back(static_cast<int>(x) - 1);
    }
    return t;
}

inline json indices_to_json(const Tuple& t) {
    json arr = json::array();
    for (int i : t) arr.push_back(i + 1);
    return arr;
}

inline json sparse_to_json(const Vector& v) {
    json obj = json::object();
    for (int i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) obj[std::to_string(i + 1)] = format_scalar(v[i]);
    return obj;
}

inline Vector sparse_from_json(const json& obj, int dim, Field f) {
    if (!obj.is_object()) throw ShapeMismatch("\"value\" must be an object");
    Vector v(dim, f);
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const std::string& key = it.key();
        if (key.empty() || key.size() > 9 ||
            key.find_first_not_of("0123456789") != std::string::npos)
            throw ShapeMismatch("bad index \"" + key + "\" in sparse value");
        int idx = std::stoi(key);
        if (idx < 1 || idx > dim)
            throw IndexOutOfRange("index " + key + " outside 1.." + std::to_string(dim));
        if (!it.value().is_string())
            throw ShapeMismatch("scalar entries must be strings");
        v[idx - 1] = parse_scalar(it.value().get<std::string>(), f);
    }
    return v;
}

inline json rows_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix rows_from_json(const json& arr, int rows, int cols, Field f) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != rows)
        throw ShapeMismatch("\"matrix\" must have " + std::to_string(rows) + " rows");
    Matrix m(rows, cols, f);
    for (int r = 0; r < rows; ++r) {
        const json& row = arr[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ShapeMismatch("matrix row " + std::to_string(r + 1) + " must have " +
                                std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            const json& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_string()) throw ShapeMismatch("matrix entries must be strings");
            m.at(r, c) = parse_scalar(cell.get<std::string>(), f);
        }
    }
    return m;
}

inline json bracket_table_to_json(const NLieAlgebra& g) {
    json arr = json::array();
    for (const auto& [key, value] : g.constants()) {
        json entry = json::object();
        entry["on"] = indices_to_json(key);
        entry["value"] = sparse_to_json(value);
        arr.push_back(std::move(entry));
    }
    return arr;
}

inline void bracket_table_from_json(const json& arr, NLieAlgebra& g) {
    if (!arr.is_array()) throw ShapeMismatch("\"brackets\" must be an array");
    for (const json& entry : arr) {
        Tuple on = index_tuple(member(entry, "on"), g.arity(), g.dim(), true);
        g.set_bracket(std::move(on),
                      sparse_from_json(member(entry, "value"), g.dim(), g.field()));
    }
}

} // namespace detail

inline std::string kind_of(const json& j) { return detail::member_string(j, "kind"); }

inline void require_kind(const json& j, const char* expected) {
    std::string k = kind_of(j);
    if (k != expected)
        throw ShapeMismatch("expected kind \"" + std::string(expected) + "\", got \"" +
                            k + "\"");
}

// "field" is written by every emitter but optional on input; absent means Q.
inline Field field_of(const json& j) {
    if (j.is_object() && j.contains("field"))
        return field_from_name(detail::member_string(j, "field"));
    return Field::Q;
}

// ---- n-Lie algebra ----

inline json algebra_to_json(const NLieAlgebra& g) {
    json j = json::object();
    j["kind"] = "n-lie";
    j["arity"] = g.arity();
    j["dim"] = g.dim();
    j["field"] = field_name(g.field());
    j["brackets"] = detail::bracket_table_to_json(g);
    return j;
}

inline NLieAlgebra algebra_from_json(const json& j) {
    require_kind(j, "n-lie");
    int arity = detail::member_int(j, "arity", 2, 64);
    int dim = detail::member_int(j, "dim", 0, 4096);
    NLieAlgebra g(arity, dim, field_of(j));
    if (j.contains("brackets"))
        detail::bracket_table_from_json(j["brackets"], g);
    return g;
}

// ---- square linear map (column action) ----

inline json map_to_json(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("linear-map must be square");
    json j = json::object();
    j["kind"] = "linear-map";
    j["dim"] = m.rows();
    j["field"] = field_name(m.field());
    j["matrix"] = detail::rows_to_json(m);
    return j;
}

inline Matrix map_from_json(const json& j) {
    require_kind(j, "linear-map");
    int dim = detail::member_int(j, "dim", 0, 4096);
    return detail::rows_from_json(detail::member_array(j, "matrix"), dim, dim,
                                  field_of(j));
}

// ---- rectangular map V -> g ----

inline json rect_map_to_json(const Matrix& m) {
    json j = json::object();
    j["kind"] = "rect-map";
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["field"] = field_name(m.field());
    j["matrix"] = detail::rows_to_json(m);
    return j;
}

inline Matrix rect_map_from_json(const json& j) {
    require_kind(j, "rect-map");
    int rows = detail::member_int(j, "rows", 0, 4096);
    int cols = detail::member_int(j, "cols", 0, 4096);
    return detail::rows_from_json(detail::member_array(j, "matrix"), rows, cols,
                                  field_of(j));
}

// Accepts either map kind; oop-style consumers don't care how a square
// matrix was labelled.
inline Matrix any_map_from_json(const json& j) {
    return kind_of(j) == "rect-map" ? rect_map_from_json(j) : map_from_json(j);
}

// ---- linear functional ----

inline json functional_to_json(const Vector& f) {
    json j = json::object();
    j["kind"] = "functional";
    j["dim"] = f.dim();
    j["field"] = field_name(f.field());
    json vals = json::array();
    for (int i = 0; i < f.dim(); ++i) vals.push_back(format_scalar(f[i]));
    j["values"] = std::move(vals);
    return j;
}

inline Vector functional_from_json(const json& j) {
    require_kind(j, "functional");
    int dim = detail::member_int(j, "dim", 0, 4096);
    Field f = field_of(j);
    const json& vals = detail::member_array(j, "values");
    if (static_cast<int>(vals.size()) != dim)
        throw ShapeMismatch("\"values\" must have " + std::to_string(dim) + " entries");
    Vector v(dim, f);
    for (int i = 0; i < dim; ++i) {
        const json& cell = vals[static_cast<std::size_t>(i)];
        if (!cell.is_string()) throw ShapeMismatch("\"values\" entries must be strings");
        v[i] = parse_scalar(cell.get<std::string>(), f);
    }
    return v;
}

// ---- representation (serialized relative to its algebra) ----

inline json representation_to_json(const Representation& rep) {
    json j = json::object();
    j["kind"] = "representation";
    j["vdim"] = rep.vdim();
    json rho = json::array();
    for (const auto& [key, mat] : rep.entries()) {
        json entry = json::object();
        entry["on"] = detail::indices_to_json(key);
        entry["matrix"] = detail::rows_to_json(mat);
        rho.push_back(std::move(entry));
    }
    j["rho"] = std::move(rho);
    return j;
}

inline Representation representation_from_json(const json& j, const NLieAlgebra& g) {
    require_kind(j, "representation");
    int vdim = detail::member_int(j, "vdim", 0, 4096);
    Representation rep(g, vdim);
    const json& rho = detail::member_array(j, "rho");
    for (const json& entry : rho) {
        Tuple on = detail::index_tuple(detail::member(entry, "on"), g.arity() - 1,
                                       g.dim(), true);
        rep.set_rho(std::move(on),
                    detail::rows_from_json(detail::member(entry, "matrix"), vdim, vdim,
                                           g.field()));
    }
    return rep;
}

// ---- commutative associative algebra ----

inline json assoc_to_json(const CommAssocAlgebra& a) {
    json j = json::object();
    j["kind"] = "comm-assoc";
    j["dim"] = a.dim();
    j["field"] = field_name(a.field());
    json products = json::array();
    for (const auto& [key, value] : a.products()) {
        json entry = json::object();
        entry["on"] = json::array({key.first + 1, key.second + 1});
        entry["value"] = detail::sparse_to_json(value);
        products.push_back(std::move(entry));
    }
    j["products"] = std::move(products);
    return j;
}

inline CommAssocAlgebra assoc_from_json(const json& j) {
    require_kind(j, "comm-assoc");
    int dim = detail::member_int(j, "dim", 0, 4096);
    CommAssocAlgebra a(dim, field_of(j));
    if (j.contains("products")) {
        const json& products = j["products"];
        if (!products.is_array()) throw ShapeMismatch("\"products\" must be an array");
        for (const json& entry : products) {
            Tuple on = detail::index_tuple(detail::member(entry, "on"), 2, dim, false);
            a.set_product(on[0], on[1],
                          detail::sparse_from_json(detail::member(entry, "value"), dim,
                                                   a.field()));
        }
    }
    return a;
}

// ---- deformation family ----

inline json family_to_json(const DeformationFamily& fam) {
    json j = json::object();
    j["kind"] = "deformation-family";
    j["algebra"] = algebra_to_json(fam.base);
    json omegas = json::array();
    for (const BracketCandidate& om : fam.omegas)
        omegas.push_back(detail::bracket_table_to_json(om));
    j["omegas"] = std::move(omegas);
    return j;
}

inline DeformationFamily family_from_json(const json& j) {
    require_kind(j, "deformation-family");
    DeformationFamily fam{algebra_from_json(detail::member(j, "algebra")), {}};
    const json& omegas = detail::member_array(j, "omegas");
    for (const json& table : omegas) {
        BracketCandidate om(fam.base.arity(), fam.base.dim(), fam.base.field());
        detail::bracket_table_from_json(table, om);
        fam.omegas.push_back(std::move(om));
    }
    return fam;
}

} // namespace nlie::io

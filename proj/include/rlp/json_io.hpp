// JSON interchange for polytopes and catalog rows.
//
// The polytope format is {dim, lattice_basis, vertices}: the basis is an
// n-by-n integer row matrix, vertices are ambient coordinates with every
// number exact — plain JSON integers where possible, "p/q" strings otherwise.
// No floating point is ever emitted or accepted.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rlp/catalog.hpp"
#include "rlp/polytope.hpp"

namespace rlp {

using nlohmann::json;

namespace detail {

inline json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(static_cast<long long>(x.get_si()));
    return json(x.get_str());
}

inline json rat_to_json(const Rat& x) {
    if (x.get_den() == 1) return int_to_json(Int(x.get_num()));
    return json(x.get_num().get_str() + "/" + x.get_den().get_str());
}

inline Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw FormatError("not an integer: " + j.dump());
        }
    }
    throw FormatError("expected an integer, got " + j.dump());
}

inline Rat json_to_rat(const json& j) {
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        try {
            Rat r(j.get<std::string>());
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw FormatError("not a rational: " + j.dump());
        }
    }
    throw FormatError("expected an exact number, got " + j.dump());
}

}  // namespace detail

inline json polytope_to_json(const LatticePolytope& p) {
    json out;
    out["dim"] = p.dim();
    json basis = json::array();
    for (std::size_t i = 0; i < p.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p.dim(); ++j)
            row.push_back(detail::int_to_json(p.lattice().basis()(i, j)));
        basis.push_back(row);
    }
    out["lattice_basis"] = basis;
    json verts = json::array();
    for (const RatVec& v : p.vertices()) {
        json row = json::array();
        for (const Rat& x : v) row.push_back(detail::rat_to_json(x));
        verts.push_back(row);
    }
    out["vertices"] = verts;
    return out;
}

inline LatticePolytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("lattice_basis") ||
        !j.contains("vertices"))
        throw FormatError("polytope JSON needs dim, lattice_basis and vertices");
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
        throw FormatError("dim must be a nonnegative integer");
    const std::size_t n = j["dim"].get<std::size_t>();
    const json& jb = j["lattice_basis"];
    if (!jb.is_array() || jb.size() != n) throw FormatError("lattice_basis must have dim rows");
    IntMat basis(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!jb[i].is_array() || jb[i].size() != n)
            throw FormatError("lattice_basis rows must have dim entries");
        for (std::size_t k = 0; k < n; ++k) basis(i, k) = detail::json_to_int(jb[i][k]);
    }
    const json& jv = j["vertices"];
    if (!jv.is_array() || jv.empty()) throw FormatError("vertices must be a nonempty array");
    std::vector<RatVec> pts;
    pts.reserve(jv.size());
    for (const json& row : jv) {
        if (!row.is_array() || row.size() != n)
            throw FormatError("vertices must be length-dim coordinate rows");
        RatVec v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = detail::json_to_rat(row[k]);
        pts.push_back(v);
    }
    return hull(pts, Lattice(basis));
}

// One catalog row, mirroring the table columns.
inline json entry_to_json(const CatalogEntry& e) {
    json out;
    out["name"] = e.name();
    out["type"] = to_string(e.components);
    out["isom_order"] = detail::int_to_json(e.isom_order);
    out["lattice"] = e.lattice_label;
    json s0 = json::array();
    for (const Int& x : e.s0) s0.push_back(detail::int_to_json(x));
    out["s0"] = s0;
    out["card"] = detail::int_to_json(e.card);
    out["edges"] = detail::int_to_json(e.edge_points);
    out["facet"] = e.facet_family;
    out["vee_dual"] = e.vee_dual;
    out["star_dual"] = e.star_dual;
    return out;
}

}  // namespace rlp

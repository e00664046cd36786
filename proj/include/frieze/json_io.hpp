#pragma once

// JSON encoding of dissections, matrices and transform records. Polynomial
// entries travel as canonical strings (parseable back with
// LaurentPoly::parse), so files stay diffable and exact.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frieze/diagonal_form.hpp"
#include "frieze/dissection.hpp"
#include "frieze/errors.hpp"
#include "frieze/laurent.hpp"
#include "frieze/matrix.hpp"
#include "frieze/snf.hpp"

namespace frieze {

using nlohmann::json;

inline json dissection_to_json(const Dissection& d) {
    json j;
    j["n"] = d.n;
    json diags = json::array();
    for (const auto& [a, b] : d.diagonals) diags.push_back({a, b});
    j["diagonals"] = std::move(diags);
    j["pieces"] = d.pieces;
    j["type"] = d.type_multiset();
    return j;
}

/// Accepts {"n": 7, "diagonals": [[2,7],[3,6],[4,6]]}; extra keys ignored.
inline Dissection dissection_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw DomainError("dissection_from_json: expected an object with integer \"n\"");
    std::vector<std::pair<int, int>> diagonals;
    if (j.contains("diagonals")) {
        if (!j["diagonals"].is_array()) throw DomainError("dissection_from_json: \"diagonals\" must be an array");
        for (const auto& pr : j["diagonals"]) {
            if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() || !pr[1].is_number_integer())
                throw DomainError("dissection_from_json: each diagonal must be a pair of integers");
            diagonals.emplace_back(pr[0].get<int>(), pr[1].get<int>());
        }
    }
    return build_dissection(j["n"].get<int>(), diagonals);
}

inline json matrix_to_json(const PolyMatrix& m, const VarNames& names) {
    json rows = json::array();
    for (int i = 1; i <= m.size(); ++i) {
        json row = json::array();
        for (int k = 1; k <= m.size(); ++k) row.push_back(m.at(i, k).str(names));
        rows.push_back(std::move(row));
    }
    return json{{"size", m.size()}, {"entries", std::move(rows)}};
}

inline json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 1; i <= m.size(); ++i) {
        json row = json::array();
        for (int k = 1; k <= m.size(); ++k) row.push_back(m.at(i, k).get_str());
        rows.push_back(std::move(row));
    }
    return json{{"size", m.size()}, {"entries", std::move(rows)}};
}

inline json oplog_to_json(const OpLog& ops, const VarNames& names) {
    json out = json::array();
    for (const auto& op : ops) {
        json o;
        switch (op.kind) {
            case ElementaryOp::Kind::add_multiple:
                o["op"] = "add_multiple";
                o["target"] = op.target;
                o["source"] = op.source;
                o["coeff"] = op.coeff.str(names);
                break;
            case ElementaryOp::Kind::scale:
                o["op"] = "scale";
                o["target"] = op.target;
                o["coeff"] = op.coeff.str(names);
                break;
            case ElementaryOp::Kind::permute:
                o["op"] = "permute";
                o["perm"] = op.perm;
                break;
        }
        out.push_back(std::move(o));
    }
    return out;
}

inline json diagonal_form_to_json(const DiagonalForm& f, const VarNames& names, bool include_transforms = true) {
    json j;
    json diag = json::array();
    for (const auto& e : f.d.diagonal()) diag.push_back(e.str(names));
    j["diagonal"] = std::move(diag);
    j["det_p"] = f.det_p.str(names);
    j["det_q"] = f.det_q.str(names);
    if (include_transforms) {
        j["p"] = matrix_to_json(f.p, names);
        j["q"] = matrix_to_json(f.q, names);
        j["row_ops"] = oplog_to_json(f.row_ops, names);
        j["col_ops"] = oplog_to_json(f.col_ops, names);
    } else {
        j["row_op_count"] = f.row_ops.size();
        j["col_op_count"] = f.col_ops.size();
    }
    return j;
}

} // namespace frieze

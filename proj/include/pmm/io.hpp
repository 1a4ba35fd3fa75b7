#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "counterexamples.hpp"
#include "detrep.hpp"

namespace pmm {

using Json = nlohmann::ordered_json;

inline Json to_json(const MinorVector& a) {
    Json j;
    j["n"] = a.n;
    j["field"] = a.field.name();
    Json m = Json::object();
    for (std::size_t s = 0; s < a.values.size(); ++s) m[std::to_string(s)] = a.values[s].to_string();
    j["minors"] = m;
    return j;
}

inline Json to_json(const ScalarMatrix& A) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < A.cols(); ++k) row.push_back(A(i, k).to_string());
        rows.push_back(row);
    }
    return rows;
}

inline Json to_json(const DetRep& r) {
    Json j;
    j["n"] = r.A.rows();
    j["field"] = r.field.name();
    j["hermitian"] = r.hermitian;
    j["entries"] = to_json(r.A);
    return j;
}

inline Json to_json(const Certificate& c) {
    Json j;
    j["kind"] = kind_name(c.kind);
    j["condition"] = c.condition;
    if (!c.gamma.empty()) j["gamma"] = c.gamma;
    if (!c.lambda.empty()) j["lambda"] = c.lambda;
    if (c.value) j["value"] = c.value->to_string();
    if (c.scalar) j["scalar"] = c.scalar->to_string();
    if (!c.witnesses.empty()) {
        Json w = Json::array();
        for (const auto& p : c.witnesses) w.push_back(p.to_string());
        j["witnesses"] = w;
    }
    if (!c.evidence.empty()) {
        Json e = Json::array();
        for (const auto& p : c.evidence) e.push_back(p.to_string());
        j["factors"] = e;
    }
    if (!c.children.empty()) {
        Json ch = Json::array();
        for (const auto& x : c.children) ch.push_back(to_json(x));
        j["children"] = ch;
    }
    return j;
}

inline Json to_json(const ConditionReport& r) {
    Json j;
    j["passed"] = r.all_passed();
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["condition"] = row.name;
        x["passed"] = row.passed;
        if (row.value) x["value"] = row.value->to_string();
        if (!row.detail.empty()) x["detail"] = row.detail;
        rows.push_back(x);
    }
    j["conditions"] = rows;
    return j;
}

inline Json to_json(const FamilyReport& r) {
    Json j;
    j["n"] = r.n;
    j["variables"] = 2 * r.n + 1;
    j["f"] = r.f.to_string();
    Json cyc = Json::array();
    for (const auto& p : r.delta12_factors) cyc.push_back(p.to_string());
    j["delta12_factors"] = cyc;
    j["delta12_is_cycle"] = r.delta12_matches_cycle;
    j["member"] = !r.refuted;
    j["certificate"] = to_json(r.certificate);
    Json specs = Json::array();
    for (const auto& s : r.specializations) {
        Json x;
        x["m"] = s.m;
        Json pts = Json::array();
        for (const auto& t : s.points) pts.push_back(t.to_string());
        x["points"] = pts;
        x["verified"] = s.verified;
        x["ok"] = s.ok;
        specs.push_back(x);
    }
    j["specializations"] = specs;
    j["ok"] = r.all_ok();
    return j;
}

namespace detail {

inline FieldValue json_scalar(const Json& v, const FieldId& id) {
    if (v.is_string()) return parse_field_value(v.get<std::string>(), id);
    if (v.is_number_integer()) return FieldValue(id, v.get<long long>());
    throw ParseError("literal", 0, "expected a string or integer field literal");
}

}  // namespace detail

// {"n": .., "field": .., "minors": {"<mask>": "<literal>", ...}}; absent masks are 0, except a_{} = 1
inline MinorVector minors_from_json(const Json& j, const FieldId& id) {
    if (!j.is_object() || !j.contains("minors") || !j["minors"].is_object())
        throw ParseError("minors", 0, "expected an object with a \"minors\" member");
    const Json& m = j["minors"];
    int n = -1;
    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) throw ParseError("minors", 0, "\"n\" must be an integer");
        n = j["n"].get<int>();
    } else {
        std::uint64_t maxmask = 0;
        for (const auto& [k, v] : m.items()) maxmask = std::max<std::uint64_t>(maxmask, std::stoull(k));
        n = 0;
        while ((std::uint64_t{1} << n) <= maxmask) ++n;
    }
    if (n < 0 || n > 20) throw ParseError("minors", 0, "n out of range");
    MinorVector a(n, id);
    for (const auto& [k, v] : m.items()) {
        std::size_t used = 0;
        unsigned long long mask = 0;
        try {
            mask = std::stoull(k, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != k.size() || k.empty()) throw ParseError("minors", 0, "key \"" + k + "\" is not a subset bitmask");
        if (mask >= a.values.size()) throw ParseError("minors", 0, "key \"" + k + "\" exceeds 2^n - 1");
        a.values[mask] = detail::json_scalar(v, id);
    }
    return a;
}

inline ScalarMatrix matrix_from_json(const Json& j, const FieldId& id) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix", 0, "expected a non-empty array of rows");
    std::size_t n = j.size();
    ScalarMatrix A = zero_matrix(id, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) throw ParseError("matrix", 0, "row " + std::to_string(i + 1) + " must have " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) A(i, k) = detail::json_scalar(j[i][k], id);
    }
    return A;
}

}  // namespace pmm

#pragma once

/**
 * @file io.hpp
 * @brief JSON and CSV emission plus the on-disk minimal-genus cache.
 *
 * Rationals are always emitted as separate integer numerator/denominator
 * fields; no decimal rendering appears in machine formats. Cached records
 * are re-validated on load (witness re-checked, engine version compared)
 * and dropped silently when they fail.
 */

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symgenus/bounds.hpp"
#include "symgenus/errors.hpp"
#include "symgenus/genvec.hpp"
#include "symgenus/metacyclic.hpp"
#include "symgenus/rational.hpp"
#include "symgenus/signature.hpp"
#include "symgenus/version.hpp"

namespace symgenus {

using Json = nlohmann::json;

inline long long to_int64(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x < lo || x > hi) throw Error("to_int64: " + x.str() + " out of range");
    return static_cast<long long>(x);
}

inline Json to_json(const MetacyclicParams& p) {
    return Json{{"m", p.m}, {"n", p.n}, {"k", p.k}, {"t", p.t}};
}

inline MetacyclicParams params_from_json(const Json& j) {
    MetacyclicParams p{j.at("m").get<long long>(), j.at("n").get<long long>(),
                       j.at("k").get<long long>(), j.at("t").get<long long>()};
    p.validate();
    return p;
}

inline Json to_json(const Signature& sig) {
    return Json{{"h", sig.h}, {"periods", sig.periods}};
}

inline Signature signature_from_json(const Json& j) {
    return Signature(j.at("h").get<long long>(), j.at("periods").get<std::vector<long long>>());
}

inline Json to_json(const Rational& r) {
    return Json{{"num", to_int64(r.numerator())}, {"den", to_int64(r.denominator())}};
}

inline Json to_json(const AbelianInvariants& inv) {
    std::vector<long long> torsion;
    torsion.reserve(inv.torsion.size());
    for (const Int& d : inv.torsion) torsion.push_back(to_int64(d));
    return Json{{"free_rank", inv.free_rank}, {"torsion", torsion}};
}

inline Json to_json(const GeneratingVector& vec) {
    Json pairs = Json::array();
    for (const Element& x : vec.hyperbolic) pairs.push_back(Json::array({x.i, x.j}));
    Json elliptic = Json::array();
    for (const Element& x : vec.elliptic) elliptic.push_back(Json::array({x.i, x.j}));
    return Json{{"hyperbolic", pairs}, {"elliptic", elliptic}};
}

inline GeneratingVector vector_from_json(const Json& j) {
    GeneratingVector vec;
    for (const Json& e : j.at("hyperbolic"))
        vec.hyperbolic.push_back({e.at(0).get<long long>(), e.at(1).get<long long>()});
    for (const Json& e : j.at("elliptic"))
        vec.elliptic.push_back({e.at(0).get<long long>(), e.at(1).get<long long>()});
    return vec;
}

inline Json to_json(const MinGenusRecord& rec) {
    return Json{{"params", to_json(rec.params)},
                {"min_genus", rec.min_genus},
                {"signature", to_json(rec.witness_signature)},
                {"vector", to_json(rec.witness_vector)},
                {"search_cap", rec.search_cap}};
}

inline MinGenusRecord record_from_json(const Json& j) {
    MinGenusRecord rec;
    rec.params = params_from_json(j.at("params"));
    rec.min_genus = j.at("min_genus").get<long long>();
    rec.witness_signature = signature_from_json(j.at("signature"));
    rec.witness_vector = vector_from_json(j.at("vector"));
    rec.search_cap = j.at("search_cap").get<long long>();
    return rec;
}

inline Json to_json(const ScanRow& row) {
    Json j{{"m", row.params.m},
           {"n", row.params.n},
           {"k", row.params.k},
           {"t", row.params.t},
           {"order", row.order}};
    j["min_genus"] = row.min_genus ? Json(*row.min_genus) : Json(nullptr);
    j["ratio_num"] = row.ratio ? Json(to_int64(row.ratio->numerator())) : Json(nullptr);
    j["ratio_den"] = row.ratio ? Json(to_int64(row.ratio->denominator())) : Json(nullptr);
    Json tags = Json::array();
    for (GroupClass c : row.tags) tags.push_back(class_tag_name(c));
    j["class_tags"] = tags;
    j["exception_label"] = row.exception_label ? Json(*row.exception_label) : Json("");
    return j;
}

inline Json to_json(const ScanReport& report) {
    Json rows = Json::array();
    for (const ScanRow& row : report.rows) rows.push_back(to_json(row));
    return Json{{"class_tag", class_tag_name(report.class_tag)},
                {"coefficient", to_json(report.coefficient)},
                {"order_min", report.order_min},
                {"order_max", report.order_max},
                {"genus_cap", report.genus_cap},
                {"rows", rows},
                {"violations", report.violations},
                {"matched_exceptions", report.matched_exceptions},
                {"verified", report.verified()}};
}

inline std::string scan_report_csv(const ScanReport& report) {
    std::ostringstream os;
    os << "m,n,k,t,order,min_genus,ratio_num,ratio_den,class_tags,exception_label\n";
    for (const ScanRow& row : report.rows) {
        os << row.params.m << ',' << row.params.n << ',' << row.params.k << ',' << row.params.t
           << ',' << row.order << ',';
        if (row.min_genus) os << *row.min_genus;
        os << ',';
        if (row.ratio) os << row.ratio->numerator();
        os << ',';
        if (row.ratio) os << row.ratio->denominator();
        os << ',';
        bool first = true;
        for (GroupClass c : row.tags) {
            if (!first) os << '|';
            os << class_tag_name(c);
            first = false;
        }
        os << ',';
        if (row.exception_label) os << *row.exception_label;
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Disk cache. Layout: {"entries": [{"params": ..., "engine_version": ...,
// "record": ...}]}. A hit requires the engine version to match and the
// witness to re-validate.

inline bool validate_record(const MinGenusRecord& rec) {
    try {
        Group g(rec.params);
        if (genus_of_action(rec.witness_signature, Int(g.order())) != rec.min_genus) return false;
        return is_surface_kernel_vector(g, rec.witness_signature, rec.witness_vector);
    } catch (const Error&) {
        return false;
    }
}

inline std::vector<MinGenusRecord> load_min_genus_cache(const std::string& path) {
    std::vector<MinGenusRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        return out;
    for (const Json& entry : j["entries"]) {
        try {
            if (entry.at("engine_version").get<std::string>() != kEngineVersion) continue;
            MinGenusRecord rec = record_from_json(entry.at("record"));
            if (rec.params == params_from_json(entry.at("params")) && validate_record(rec))
                out.push_back(std::move(rec));
        } catch (...) {
            continue;  // corrupted entry: recompute instead of trusting it
        }
    }
    return out;
}

inline void save_min_genus_cache(const std::string& path,
                                 const std::vector<MinGenusRecord>& records) {
    Json entries = Json::array();
    for (const MinGenusRecord& rec : records)
        entries.push_back(Json{{"params", to_json(rec.params)},
                               {"engine_version", kEngineVersion},
                               {"record", to_json(rec)}});
    std::ofstream out(path);
    if (!out) throw Error("save_min_genus_cache: cannot write " + path);
    out << Json{{"entries", entries}}.dump(1) << "\n";
}

}  // namespace symgenus

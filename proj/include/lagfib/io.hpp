#pragma once

// Machine-readable formats: Chern-number records, census CSV/JSON and the
// JSON documents printed by the command-line tool. Every JSON document
// carries "schema_version".

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lagfib/char_classes.hpp"
#include "lagfib/error.hpp"
#include "lagfib/fibration_formulas.hpp"
#include "lagfib/fourfold_enumerator.hpp"
#include "lagfib/graded_ring.hpp"
#include "lagfib/rational.hpp"

namespace lagfib {

inline constexpr int kSchemaVersion = 1;

// "c2.c2.c4" -> {2, 2, 4}
inline ChernPartition parse_chern_key(const std::string& key) {
    ChernPartition partition;
    std::size_t start = 0;
    while (start <= key.size()) {
        const auto dot = std::min(key.find('.', start), key.size());
        const std::string factor = key.substr(start, dot - start);
        if (factor.size() < 2 || factor[0] != 'c')
            throw ParseError("bad Chern monomial key '" + key + "'");
        const Integer index = detail::parse_integer(factor.substr(1), key);
        if (index < 1 || index > 1000) throw ParseError("bad Chern class index in '" + key + "'");
        partition.push_back(static_cast<unsigned>(index));
        start = dot + 1;
    }
    return partition;
}

inline std::string chern_key(const ChernPartition& partition) {
    std::string key;
    for (unsigned part : partition) key += (key.empty() ? "c" : ".c") + std::to_string(part);
    return key;
}

inline ChernNumbers chern_numbers_from_json(const nlohmann::json& j) {
    try {
        const unsigned dim = j.at("complex_dimension").get<unsigned>();
        std::vector<std::pair<ChernPartition, Integer>> values;
        for (const auto& [key, value] : j.at("chern_numbers").items()) {
            if (!value.is_number_integer()) throw ParseError("Chern number '" + key + "' is not an integer");
            values.emplace_back(parse_chern_key(key), Integer(value.get<std::int64_t>()));
        }
        return make_chern_numbers(j.value("name", std::string{}), dim, values);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed manifold record: ") + e.what());
    }
}

inline ChernNumbers load_chern_numbers(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open manifold record '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
    return chern_numbers_from_json(j);
}

inline nlohmann::json to_json(const ChernNumbers& chern) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [partition, v] : chern.values) values[chern_key(partition)] = static_cast<std::int64_t>(v);
    return {{"name", chern.name}, {"complex_dimension", chern.complex_dimension}, {"chern_numbers", values}};
}

inline nlohmann::json series_to_json(const CharacteristicSeries& series, const GradedElement& shown) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : shown.terms())
        terms.push_back({{"monomial", m.to_dotted(shown.ring())}, {"weight", m.weight()}, {"coefficient", to_string(c)}});
    return {{"schema_version", kSchemaVersion},
            {"genus", to_string(series.source)},
            {"upto", series.max_weight()},
            {"series", shown.to_string()},
            {"terms", terms}};
}

inline nlohmann::json to_json(const DegreeResult& r) {
    return {{"schema_version", kSchemaVersion},
            {"deg_delta", to_string(r.deg_delta)},
            {"b_theta", to_string(r.b_theta)},
            {"c2YL", to_string(r.intermediate_c2YL)}};
}

inline nlohmann::json to_json(const PolarizationType& pol, const std::vector<DegenerationModel>& models) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& m : models) {
        nlohmann::json d_prime = nlohmann::json::array();
        for (const auto& x : m.d_prime) d_prime.push_back(to_string(x));
        list.push_back({{"k", to_string(m.k)}, {"d_prime", d_prime}});
    }
    nlohmann::json d = nlohmann::json::array();
    for (const auto& x : pol.entries()) d.push_back(to_string(x));
    return {{"schema_version", kSchemaVersion}, {"polarization", d}, {"models", list}};
}

inline const char* census_csv_header() { return "b2,b3,b4,c4,c2sq,rw,d,deg_delta"; }

// deg_delta is left empty when rw / d is not a perfect square.
inline std::string census_to_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << census_csv_header() << '\n';
    for (const auto& r : rows) {
        const auto& inv = r.invariants;
        out << inv.betti.b2 << ',' << inv.betti.b3 << ',' << inv.b4 << ',' << inv.c4 << ',' << inv.c2_squared << ','
            << inv.rw << ',' << r.d << ',';
        if (r.deg_delta) out << *r.deg_delta;
        out << '\n';
    }
    return out.str();
}

inline nlohmann::json census_to_json(const std::vector<CensusRow>& rows, bool require_integer_degree) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : rows) {
        const auto& inv = r.invariants;
        list.push_back({{"b2", inv.betti.b2},
                        {"b3", inv.betti.b3},
                        {"b4", inv.b4},
                        {"c4", inv.c4},
                        {"c2sq", inv.c2_squared},
                        {"rw", inv.rw},
                        {"sqrt_ahat", to_string(inv.sqrt_ahat)},
                        {"d", r.d},
                        {"deg_delta_squared", r.deg_delta_squared},
                        {"deg_delta", r.deg_delta ? nlohmann::json(*r.deg_delta) : nlohmann::json(nullptr)}});
    }
    nlohmann::json doc = {{"schema_version", kSchemaVersion},
                          {"require_integer_degree", require_integer_degree},
                          {"rows", list}};
    if (!rows.empty()) {
        const auto b = bounds_summary(rows);
        doc["summary"] = {{"max_d", b.max_d}, {"max_deg_delta", b.max_deg}, {"max_rw", b.max_rw}};
    }
    return doc;
}

// Rebuilds rows from census_to_json output, recomputing the derived
// invariants and rejecting documents that disagree with them.
inline std::vector<CensusRow> census_from_json(const nlohmann::json& doc) {
    try {
        if (doc.at("schema_version").get<int>() != kSchemaVersion) throw ParseError("unsupported census schema version");
        std::vector<CensusRow> rows;
        for (const auto& j : doc.at("rows")) {
            CensusRow row;
            row.invariants = invariants_from_betti({j.at("b2").get<std::int64_t>(), j.at("b3").get<std::int64_t>()});
            row.d = j.at("d").get<std::int64_t>();
            row.deg_delta_squared = j.at("deg_delta_squared").get<std::int64_t>();
            if (!j.at("deg_delta").is_null()) row.deg_delta = j.at("deg_delta").get<std::int64_t>();
            const auto& inv = row.invariants;
            const bool consistent = j.at("b4") == inv.b4 && j.at("c4") == inv.c4 && j.at("c2sq") == inv.c2_squared &&
                                    j.at("rw") == inv.rw && j.at("sqrt_ahat") == to_string(inv.sqrt_ahat) &&
                                    row.d * row.deg_delta_squared == inv.rw &&
                                    (!row.deg_delta || *row.deg_delta * *row.deg_delta == row.deg_delta_squared);
            if (!consistent) throw ParseError("census row inconsistent with its Betti numbers");
            rows.push_back(std::move(row));
        }
        return rows;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed census document: ") + e.what());
    }
}

} // namespace lagfib

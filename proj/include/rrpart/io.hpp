#pragma once

// JSON and CSV encodings. Big-integer counts are written as decimal strings
// so that no value is ever rounded by a JSON reader.

#include <ostream>
#include <string>

#include <json.hpp>

#include "rrpart/bijections.hpp"
#include "rrpart/partition.hpp"
#include "rrpart/qseries.hpp"
#include "rrpart/recurrences.hpp"

namespace rrpart {

using json = nlohmann::json;

inline void to_json(json& j, const Partition& p) { j = json(std::vector<Part>(p.begin(), p.end())); }

inline void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<Part>>()); }

inline void to_json(json& j, const FamilySpec& f) {
    j = json{{"kind", std::string(to_string(f.kind))}, {"i", f.i}, {"min_part", f.min_part}};
}

inline void from_json(const json& j, FamilySpec& f) {
    f = FamilySpec::make(parse_family_kind(j.at("kind").get<std::string>()), j.at("i").get<int>(),
                         j.at("min_part").get<Part>());
}

inline void to_json(json& j, const Violation& v) {
    j = json{{"i", v.i},
             {"m", v.m},
             {"n", v.n},
             {"expected", to_decimal(v.expected)},
             {"actual", to_decimal(v.actual)},
             {"equation", v.equation}};
}

inline void to_json(json& j, const VerificationReport& r) {
    j = json{{"system", r.system}, {"family", r.family}, {"max_n", r.max_n}, {"violations", r.violations}};
}

inline json series_to_json(const TruncatedSeries& s) {
    json arr = json::array();
    for (const Count& c : s.coefficients()) arr.push_back(to_decimal(c));
    return arr;
}

inline TruncatedSeries series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("series must be a non-empty JSON array");
    std::vector<Count> coeffs;
    for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
    const std::size_t degree = coeffs.size() - 1;
    return TruncatedSeries(degree, std::move(coeffs));
}

inline void to_json(json& j, const TraceRow& t) {
    j = json{{"bijection", t.bijection},
             {"direction", t.direction == Direction::Forward ? "forward" : "inverse"},
             {"input", t.input}};
    if (t.case_no) j["case"] = *t.case_no;
    j["output"] = t.output ? json(*t.output) : json(nullptr);
    j["domain_ok"] = t.domain_ok;
    j["codomain_ok"] = t.codomain_ok;
    j["round_trip_ok"] = t.round_trip_ok;
    if (!t.error.empty()) j["error"] = t.error;
}

/// Rows "i,m,n,count" for 0 <= m <= n <= max_n, i = 1 then 2.
inline void write_table_csv(std::ostream& os, const CountTable& t, int max_n) {
    os << "i,m,n,count\n";
    for (int i : {1, 2})
        for (int n = 0; n <= max_n; ++n)
            for (int m = 0; m <= n; ++m) os << i << ',' << m << ',' << n << ',' << t.value(i, m, n) << '\n';
}

}  // namespace rrpart

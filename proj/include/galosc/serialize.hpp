#pragma once

#include "galosc/multispinor.hpp"
#include "galosc/spectrum.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace galosc {

inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline Json rational_json(const Rational& q) {
    return Json{{"num", boost::multiprecision::numerator(q).convert_to<long long>()},
                {"den", boost::multiprecision::denominator(q).convert_to<long long>()}};
}

inline Json meta_json(int two_s, const Rational& lambda, double mass, double omega, int n_max) {
    Json m;
    m["two_s"] = two_s;
    m["lambda"] = rational_json(lambda);
    m["M"] = mass;
    m["omega"] = omega;
    m["n_max"] = n_max;
    m["tool_version"] = kToolVersion;
    return m;
}

// ---- level tables ----------------------------------------------------------

inline std::string level_table_csv(const LevelTable& t) {
    std::string out = "n,l,two_j,two_s,energy_num,energy_den,multiplicity\n";
    for (const auto& r : t.rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.ell) + ',' + std::to_string(r.two_j) +
               ',' + std::to_string(r.two_s) + ',' +
               boost::multiprecision::numerator(r.energy_over_omega).str() + ',' +
               boost::multiprecision::denominator(r.energy_over_omega).str() + ',' +
               std::to_string(r.multiplicity) + '\n';
    }
    return out;
}

inline Json level_table_json(const LevelTable& t, double mass, double omega) {
    Json j;
    j["meta"] = meta_json(t.two_s, 1, mass, omega, t.n_max);
    j["meta"]["e_max"] = rational_json(t.e_max);
    j["meta"]["l_max"] = t.ell_max;
    j["rows"] = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        row["n"] = r.n;
        row["l"] = r.ell;
        row["two_j"] = r.two_j;
        row["two_s"] = r.two_s;
        row["energy"] = rational_json(r.energy_over_omega);
        row["multiplicity"] = r.multiplicity;
        j["rows"].push_back(row);
    }
    j["aggregate"] = Json::array();
    for (const auto& [e, m] : t.aggregate) {
        Json a;
        a["energy"] = rational_json(e);
        a["multiplicity"] = m;
        j["aggregate"].push_back(a);
    }
    return j;
}

inline std::string level_table_text(const LevelTable& t) {
    char buf[160];
    std::string out;
    std::snprintf(buf, sizeof buf, "%4s %4s %6s %6s %12s %5s\n", "n", "l", "two_j", "two_s",
                  "E/omega", "mult");
    out += buf;
    for (const auto& r : t.rows) {
        std::snprintf(buf, sizeof buf, "%4d %4d %6d %6d %12.6f %5d\n", r.n, r.ell, r.two_j,
                      r.two_s, to_double(r.energy_over_omega), r.multiplicity);
        out += buf;
    }
    return out;
}

// ---- reduction reports -----------------------------------------------------

inline Json reduction_report_json(const ReductionReport& rep) {
    Json j;
    j["meta"] = meta_json(rep.two_s, rep.lambda, rep.mass, rep.omega, rep.n_max);
    j["meta"]["nonminimal"] = rep.nonminimal;
    j["field_component_count"] = rep.field_component_count;
    j["hermiticity_defect"] = rep.hermiticity_defect;
    j["max_deviation"] = rep.max_deviation;
    j["lowest_eigenvalue"] = rep.lowest_eigenvalue;
    j["matched"] = rep.matched;
    j["tolerance"] = rep.tolerance;
    j["rows"] = Json::array();
    for (const auto& s : rep.sectors) {
        Json row;
        row["N"] = s.N;
        row["n"] = s.n;
        row["l"] = s.ell;
        row["two_j"] = s.two_j;
        row["energy"] = s.energy;
        row["closed_form"] = rational_json(s.closed_form);
        row["deviation"] = s.deviation;
        row["degeneracy"] = s.degeneracy;
        j["rows"].push_back(row);
    }
    return j;
}

// ---- verification checks ---------------------------------------------------

struct CheckResult {
    std::string name;
    bool passed = false;
    double defect = 0.0;
    double threshold = 0.0;
    std::string detail;
};

inline Json checks_json(const std::vector<CheckResult>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["status"] = c.passed ? "pass" : "fail";
        j["defect"] = c.defect;
        j["threshold"] = c.threshold;
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace galosc

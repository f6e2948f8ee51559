// Copyright 2026 The seqbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV output, plus the trade-off curve grids.
//
// Curve CSV columns: input_value,value_2[,value_3],lambda_1[,lambda_2].
// Numbers are written with 9 decimal places.

#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqbell/bell.hpp"
#include "seqbell/certify.hpp"
#include "seqbell/closedform.hpp"
#include "seqbell/oracle.hpp"

namespace seqbell {

inline constexpr int kCsvDecimals = 9;

inline std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", kCsvDecimals, v);
    return buf;
}

struct CurveRow {
    double input_value;
    double value_2;
    std::optional<double> value_3;
    double lambda_1;
    std::optional<double> lambda_2;
};

/// Bob₁ against the best Bob₂ (and Bob₃) value, sweeping the earlier Bobs'
/// sharpness uniformly over [0, 1]. Three observers give grid² rows.
inline std::vector<CurveRow> tradeoff_curve(FunctionalKind kind, std::size_t grid, std::size_t observers = 2) {
    if (grid < 2) throw DomainError("tradeoff_curve: grid needs at least 2 points");
    if (observers != 2 && observers != 3) throw DomainError("tradeoff_curve: observers must be 2 or 3");
    const double top = optimum(kind);
    std::vector<CurveRow> rows;
    const double step = 1.0 / static_cast<double>(grid - 1);
    for (std::size_t i = 0; i < grid; ++i) {
        const double l1 = i * step;
        const double pair[] = {l1, 1.0};
        if (observers == 2) {
            rows.push_back({l1 * top, sequential_value(kind, 2, pair), std::nullopt, l1, std::nullopt});
            continue;
        }
        for (std::size_t j = 0; j < grid; ++j) {
            const double l2 = j * step;
            const double chain[] = {l1, l2, 1.0};
            rows.push_back({l1 * top, sequential_value(kind, 2, chain), sequential_value(kind, 3, chain), l1, l2});
        }
    }
    return rows;
}

inline void write_curve_csv(std::ostream &out, const std::vector<CurveRow> &rows) {
    const bool three = !rows.empty() && rows.front().value_3.has_value();
    out << (three ? "input_value,value_2,value_3,lambda_1,lambda_2\n" : "input_value,value_2,lambda_1\n");
    for (const auto &r : rows) {
        out << fixed9(r.input_value) << ',' << fixed9(r.value_2);
        if (three) out << ',' << fixed9(*r.value_3);
        out << ',' << fixed9(r.lambda_1);
        if (three) out << ',' << fixed9(*r.lambda_2);
        out << '\n';
    }
}

/// Parses what write_curve_csv emits.
inline std::vector<CurveRow> read_curve_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) throw ContractViolation("read_curve_csv: missing header");
    const bool three = line.find("value_3") != std::string::npos;
    std::vector<CurveRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> v;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
        if (v.size() != (three ? 5u : 3u)) throw ContractViolation("read_curve_csv: wrong column count");
        if (three) {
            rows.push_back({v[0], v[1], v[2], v[3], v[4]});
        } else {
            rows.push_back({v[0], v[1], std::nullopt, v[2], std::nullopt});
        }
    }
    return rows;
}

inline nlohmann::json to_json(const CurveRow &r) {
    nlohmann::json j{{"input_value", r.input_value}, {"value_2", r.value_2}, {"lambda_1", r.lambda_1}};
    if (r.value_3) j["value_3"] = *r.value_3;
    if (r.lambda_2) j["lambda_2"] = *r.lambda_2;
    return j;
}

inline nlohmann::json to_json(const SequentialTranscript &t) {
    return {{"values", t.values}, {"lambdas", t.lambdas}};
}

inline nlohmann::json to_json(const CertificationResult &r) {
    nlohmann::json est = nlohmann::json::array();
    for (const auto &e : r.lambda_estimates) est.push_back({{"index", e.index}, {"value", e.value}});
    nlohmann::json ivs = nlohmann::json::array();
    for (const auto &i : r.lambda_intervals) {
        ivs.push_back({{"index", i.index}, {"lower", i.range.lower}, {"upper", i.range.upper}});
    }
    return {{"lambda_estimates", est}, {"lambda_intervals", ivs}, {"consistent", r.consistent}, {"residual", r.residual}};
}

inline nlohmann::json to_json(const OracleReport &r) {
    nlohmann::json res = nlohmann::json::array();
    for (const auto &x : r.residuals) {
        res.push_back({{"name", x.name}, {"value", x.value}, {"bound", x.bound}, {"at_most", x.at_most}, {"ok", x.ok()}});
    }
    return {{"target", r.target},       {"achieved", r.achieved},   {"reference", r.reference},
            {"gap", r.gap},             {"tolerance", r.tolerance}, {"residuals", res},
            {"iterations", r.iterations}, {"seed", r.seed},         {"converged", r.converged},
            {"flagged", r.flagged},     {"notes", r.notes},         {"passed", r.passed()}};
}

inline void write_transcript_csv(std::ostream &out, const SequentialTranscript &t) {
    out << "observer,lambda,value\n";
    for (std::size_t k = 0; k < t.values.size(); ++k) {
        out << k + 1 << ',' << fixed9(t.lambdas[k]) << ',' << fixed9(t.values[k]) << '\n';
    }
}

inline void write_certification_csv(std::ostream &out, const CertificationResult &r) {
    out << "index,estimate,lower,upper,consistent,residual\n";
    for (const auto &e : r.lambda_estimates) {
        const auto iv = r.interval(e.index);
        out << e.index << ',' << fixed9(e.value) << ',' << (iv ? fixed9(iv->lower) : "") << ','
            << (iv ? fixed9(iv->upper) : "") << ',' << (r.consistent ? "true" : "false") << ',' << fixed9(r.residual)
            << '\n';
    }
}

}  // namespace seqbell

/*
   Copyright 2026 The qlin Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Golden corpus of minimal q-polynomials: rows of (field, q, f, expected m, expected L).

#ifndef QLIN_GOLDENS_HPP
#define QLIN_GOLDENS_HPP

#include <chrono>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "minimal.hpp"
#include "parse.hpp"

namespace qlin {

struct GoldenRow {
    std::string name;
    uint32_t p = 2;
    unsigned k = 1;
    uint64_t q = 2;
    std::string f;
    unsigned m = 0;
    std::optional<std::string> L;  ///< absent when only m is recorded
    bool slow = false;
};

struct GoldenOutcome {
    GoldenRow row;
    bool pass = false;
    unsigned m = 0;
    std::string L;
    std::string detail;
    double seconds = 0;
};

inline std::vector<GoldenRow> load_goldens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open golden corpus " + path);
    const json j = json::parse(in);
    std::vector<GoldenRow> rows;
    for (const auto& r : j.at("rows")) {
        GoldenRow g;
        g.name = r.at("name").get<std::string>();
        g.p = r.at("p").get<uint32_t>();
        g.k = r.at("k").get<unsigned>();
        g.q = r.at("q").get<uint64_t>();
        g.f = r.at("f").get<std::string>();
        g.m = r.at("m").get<unsigned>();
        if (r.contains("L") && !r.at("L").is_null()) g.L = r.at("L").get<std::string>();
        g.slow = r.value("slow", false);
        rows.push_back(std::move(g));
    }
    return rows;
}

/// Computes the minimal q-polynomial of a row and compares m and L exactly.
inline GoldenOutcome run_golden(const GoldenRow& row) {
    GoldenOutcome out{row, false, 0, "", "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    const RatFuncField k(GF::make(row.p, row.k));
    const auto res = minimal_qpoly(parse_poly(row.f, k), row.q);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.m = res.m;
    out.L = to_string(res.L);
    if (res.m != row.m) {
        out.detail = "m = " + std::to_string(res.m) + ", expected " + std::to_string(row.m);
        return out;
    }
    if (row.L) {
        const RatPoly expected = parse_poly(*row.L, k);
        if (!(res.L.to_poly() == expected)) {
            out.detail = "L differs from expected " + *row.L;
            return out;
        }
    }
    out.pass = true;
    out.detail = "exact match";
    return out;
}

}  // namespace qlin

#endif

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

// JSON forms of the library's values (nlohmann::json, ordered keys for stable output).

#ifndef QLIN_JSON_HPP
#define QLIN_JSON_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "codes.hpp"
#include "minimal.hpp"
#include "parse.hpp"
#include "qpoly.hpp"
#include "specialize.hpp"

namespace qlin {

using json = nlohmann::ordered_json;

inline constexpr const char* json_schema = "qlin/1";

inline json to_json(const FieldElement& e) {
    return {{"p", e.field().characteristic()}, {"k", e.field().degree()}, {"coords", e.coords()}};
}

inline FieldElement field_element_from_json(const json& j) {
    const GF f = GF::make(j.at("p").get<uint32_t>(), j.at("k").get<unsigned>());
    const auto c = j.at("coords").get<std::vector<uint32_t>>();
    return FieldElement::from_coords(f, c);
}

/// t-polynomial as its coefficient list (constant term first, base-field elements as strings).
inline json to_json(const TRing& r, const TPoly& a) {
    json out = json::array();
    for (auto c : a.c) out.push_back(r.base().is_prime_field() ? json(c) : json(r.coeff_string(c)));
    return out;
}

inline json to_json(const RatFuncField& k, const RatFunc& a) {
    return {{"num", to_json(k.ring(), a.num)}, {"den", to_json(k.ring(), a.den)}, {"text", k.to_string(a)}};
}

/// {"q":2,"terms":[[12,"1"],[11,"t^24 + t"],...]}, highest q-exponent first.
template <class K>
json to_json(const QPoly<K>& l) {
    json terms = json::array();
    for (auto it = l.terms().rbegin(); it != l.terms().rend(); ++it)
        terms.push_back(json::array({it->first, l.field().to_string(it->second)}));
    return {{"q", l.q()}, {"terms", terms}};
}

template <class K>
json to_json(const Poly<K>& f) {
    return to_string(f);
}

inline json blocks_json(const std::vector<Block>& blocks) {
    json out = json::array();
    for (const auto& b : blocks) out.push_back(b);
    return out;
}

inline std::vector<Block> blocks_from_json(const json& j) {
    if (!j.is_array()) throw precondition_error("blocks file must hold a JSON list of integer lists");
    std::vector<Block> out;
    for (const auto& b : j) {
        if (!b.is_array()) throw precondition_error("blocks file must hold a JSON list of integer lists");
        Block blk;
        for (const auto& x : b) {
            if (!x.is_number_integer() || x.get<long long>() < 1)
                throw precondition_error("block entries must be positive integers");
            blk.push_back(x.get<unsigned>());
        }
        out.push_back(std::move(blk));
    }
    return out;
}

inline json to_json(const SteinerReport& r) {
    json j = {{"pass", r.pass},
              {"subsets", r.subsets},
              {"exactly_once", r.exactly_once},
              {"uncovered", r.uncovered},
              {"overcovered", r.overcovered}};
    if (r.first_violation) j["first_violation"] = {{"subset", *r.first_violation}, {"count", r.first_violation_count}};
    return j;
}

inline json to_json(const CodeParams& p) {
    json w = json::object();
    for (const auto& [k, v] : p.weights) w[std::to_string(k)] = v;
    return {{"n", p.n}, {"k", p.k}, {"d", p.d ? json(*p.d) : json("none")}, {"weights", w}};
}

inline json generator_json(const LinearCode& c) {
    json bits = json::array(), hex = json::array();
    const bool binary = c.generator.field().characteristic() == 2;
    for (std::size_t i = 0; i < c.k; ++i) {
        std::string s;
        for (std::size_t j = 0; j < c.n; ++j) s += std::to_string(static_cast<unsigned>(c.generator(i, j).v));
        bits.push_back(s);
        if (binary) {
            // bit j of the integer = coordinate j
            std::string h;
            for (std::size_t nib = (c.n + 3) / 4; nib-- > 0;) {
                unsigned v = 0;
                for (unsigned b = 0; b < 4; ++b) {
                    const std::size_t j = nib * 4 + b;
                    if (j < c.n && c.generator(i, j).v) v |= 1u << b;
                }
                h += "0123456789abcdef"[v];
            }
            hex.push_back(h);
        }
    }
    json j = {{"rows", bits}};
    if (binary) j["hex"] = hex;
    return j;
}

inline json to_json(const Census& c) {
    json levels = json::array();
    for (const auto& l : c.levels) {
        json m = json::object();
        for (const auto& [reps, n] : l.multiplicity) m[std::to_string(reps)] = n;
        levels.push_back({{"j", l.j},
                          {"subsets", l.subsets},
                          {"distinct", l.distinct},
                          {"contains_zero", l.contains_zero},
                          {"multiplicity", m}});
    }
    return {{"levels", levels},
            {"intersections", c.intersections},
            {"pairwise_disjoint", c.pairwise_disjoint()},
            {"union_size", c.union_size}};
}

inline json to_json(const ToddReport& t) {
    json j = {{"pass", t.pass},
              {"pairs_meeting_in_four", t.pairs_meeting_in_four},
              {"pairs_skipped", t.pairs_skipped},
              {"failures", t.failures}};
    if (t.first_failure) j["first_failure"] = {t.first_failure->first, t.first_failure->second};
    return j;
}

inline json to_json(const Attempt& a) {
    json j = {{"a", a.point.to_string()}, {"field", a.point.field().name()}, {"accepted", a.accepted}, {"reason", a.reason}};
    if (!a.cycle.empty()) j["degrees"] = a.cycle;
    if (a.span_dim) j["span_dim"] = *a.span_dim;
    if (a.kernel_dim) j["kernel_dim"] = *a.kernel_dim;
    if (a.min_distance) j["d"] = *a.min_distance;
    return j;
}

inline json to_json(const CyclicReport& r) {
    json j = {{"status", r.status}, {"n", r.n}, {"splitting_degree", r.splitting_degree}, {"root_space_dim", r.root_space_dim}};
    if (r.associate) j["associate"] = to_string(*r.associate);
    if (r.frobenius_minpoly) j["frobenius_minpoly"] = to_string(*r.frobenius_minpoly);
    j["cyclic"] = r.cyclic;
    j["matches"] = r.matches;
    return j;
}

}  // namespace qlin

#endif

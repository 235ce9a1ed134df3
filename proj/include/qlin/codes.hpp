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

/**
 * @file codes.hpp
 * @brief Root spaces of specialized polynomials, their kernel codes, and the designs and sum structure
 * carried by the roots.
 *
 * The kernel code of a root sequence beta_1..beta_m is { c in F_q^m : sum c_i beta_i = 0 }. Codeword
 * supports are 0-based in memory; report helpers convert to 1-based point labels where noted.
 */

#ifndef QLIN_CODES_HPP
#define QLIN_CODES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "factor.hpp"
#include "funcfield.hpp"
#include "matrix.hpp"
#include "minimal.hpp"
#include "parse.hpp"
#include "specialize.hpp"

namespace qlin {

inline uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct RootSpace {
    GFPoly f_spec;
    GF splitting_field;
    std::vector<Elem> roots;
    Matrix<GF> coord_matrix;  ///< roots x coordinates, over F_q
    std::size_t span_dim = 0;
    CycleType cycle;
};

/// Roots of f(x, a) in their splitting field together with their F_q-coordinates (q prime).
inline RootSpace root_space(const RatPoly& f, const FieldElement& a, unsigned guard_bits = 128, uint64_t seed = 0) {
    const GF& base = f.field().base();
    if (!base.is_prime_field()) throw precondition_error("root spaces need a prime constant field");
    const CycleType ct = cycle_type(f, a, seed);
    const unsigned degree = a.field().degree() * cycle_lcm(ct);
    const uint32_t p = base.characteristic();
    if ((p == 2 && degree > guard_bits) || (p != 2 && degree > std::min(guard_bits, 32u)))
        throw guard_exceeded("splitting field too large: degree " + std::to_string(degree) + " over F_" +
                             std::to_string(p));
    const GF big = GF::make(p, degree);
    const GFPoly g = specialize_poly(f, a);
    std::vector<Elem> rs = roots(g, big, seed);
    if (rs.size() != static_cast<std::size_t>(f.degree())) throw error("splitting field does not contain all roots");
    const GF fp = GF::make(p, 1);
    Matrix<GF> m(fp, rs.size(), degree);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const auto c = big.coords(rs[i]);
        for (unsigned j = 0; j < degree; ++j) m(i, j) = Elem{c[j]};
    }
    const std::size_t rank = m.rank();
    return RootSpace{g, big, std::move(rs), std::move(m), rank, ct};
}

struct LinearCode {
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix<GF> generator;  ///< k x n, reduced echelon form
};

inline LinearCode kernel_code(const RootSpace& rs) {
    Matrix<GF> g = left_kernel(rs.coord_matrix);
    return LinearCode{rs.roots.size(), g.rows(), std::move(g)};
}

struct CodeParams {
    std::size_t n = 0, k = 0;
    std::optional<std::size_t> d;  ///< none for the zero code
    std::map<std::size_t, uint64_t> weights;
};

inline constexpr uint64_t codeword_enumeration_limit = 1ULL << 26;

namespace detail {

inline std::vector<uint64_t> binary_rows(const LinearCode& c) {
    std::vector<uint64_t> rows(c.k, 0);
    for (std::size_t i = 0; i < c.k; ++i)
        for (std::size_t j = 0; j < c.n; ++j)
            if (c.generator(i, j).v) rows[i] |= 1ULL << j;
    return rows;
}

inline void check_enumerable(const LinearCode& c) {
    const uint64_t q = c.generator.field().size();
    long double total = 1;
    for (std::size_t i = 0; i < c.k; ++i) total *= static_cast<long double>(q);
    if (total > static_cast<long double>(codeword_enumeration_limit))
        throw guard_exceeded("q^k = " + std::to_string(q) + "^" + std::to_string(c.k) +
                             " codewords exceeds the enumeration bound 2^26");
}

/// Calls visit(word) for every codeword, word as a vector of residues (generic q).
template <class Visit>
void for_each_codeword(const LinearCode& c, Visit&& visit) {
    const GF& f = c.generator.field();
    const uint32_t q = f.characteristic();
    std::vector<uint32_t> word(c.n, 0), digit(c.k, 0);
    visit(word);
    while (true) {
        std::size_t j = 0;
        for (; j < c.k; ++j) {
            for (std::size_t i = 0; i < c.n; ++i) word[i] = (word[i] + static_cast<uint32_t>(c.generator(j, i).v)) % q;
            if (++digit[j] < q) break;
            digit[j] = 0;
        }
        if (j == c.k) return;
        visit(word);
    }
}

}  // namespace detail

/// Exact minimum distance and weight distribution by enumerating every codeword.
inline CodeParams code_params(const LinearCode& c) {
    detail::check_enumerable(c);
    CodeParams out{c.n, c.k, std::nullopt, {}};
    if (c.generator.field().characteristic() == 2 && c.n <= 64) {
        const auto rows = detail::binary_rows(c);
        uint64_t word = 0;
        ++out.weights[0];
        for (uint64_t i = 1; i < (1ULL << c.k); ++i) {
            word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
            ++out.weights[static_cast<std::size_t>(std::popcount(word))];
        }
    } else {
        detail::for_each_codeword(c, [&](const std::vector<uint32_t>& w) {
            ++out.weights[static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](uint32_t x) { return x != 0; }))];
        });
    }
    for (const auto& [w, cnt] : out.weights)
        if (w > 0) {
            out.d = w;
            break;
        }
    return out;
}

using Block = std::vector<unsigned>;

/// Supports (0-based, sorted) of all codewords of weight w, in lexicographic order.
inline std::vector<Block> supports_of_weight(const LinearCode& c, std::size_t w) {
    detail::check_enumerable(c);
    std::vector<Block> out;
    auto push = [&](auto&& is_nonzero) {
        Block b;
        for (unsigned i = 0; i < c.n; ++i)
            if (is_nonzero(i)) b.push_back(i);
        out.push_back(std::move(b));
    };
    if (c.generator.field().characteristic() == 2 && c.n <= 64) {
        const auto rows = detail::binary_rows(c);
        uint64_t word = 0;
        for (uint64_t i = 1; i < (1ULL << c.k); ++i) {
            word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
            if (static_cast<std::size_t>(std::popcount(word)) == w) push([&](unsigned j) { return (word >> j) & 1; });
        }
    } else {
        std::unordered_set<std::string> seen;
        detail::for_each_codeword(c, [&](const std::vector<uint32_t>& word) {
            if (static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](uint32_t x) { return x; })) != w)
                return;
            std::string key;
            for (auto x : word) key += x ? '1' : '0';
            if (seen.insert(key).second) push([&](unsigned j) { return word[j] != 0; });
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Supports of the weight-8 words of a binary code of length 24.
inline std::vector<Block> octads(const LinearCode& c) {
    if (c.n != 24 || c.generator.field().characteristic() != 2 || !c.generator.field().is_prime_field())
        throw precondition_error("octads need a binary code of length 24");
    return supports_of_weight(c, 8);
}

inline std::vector<Block> to_one_based(std::vector<Block> blocks) {
    for (auto& b : blocks)
        for (auto& x : b) ++x;
    return blocks;
}

struct SteinerReport {
    bool pass = false;
    uint64_t subsets = 0;      ///< number of t-subsets of the point set
    uint64_t exactly_once = 0;
    uint64_t uncovered = 0;
    uint64_t overcovered = 0;
    std::optional<Block> first_violation;  ///< 1-based, lexicographically first t-subset with count != 1
    unsigned first_violation_count = 0;
};

/// Checks that every t-subset of {1..v} lies in exactly one block (blocks 1-based, size k).
inline SteinerReport verify_steiner(const std::vector<Block>& blocks, unsigned t, unsigned k, unsigned v) {
    if (t == 0 || t > k || k > v) throw precondition_error("need 0 < t <= k <= v");
    const uint64_t total = binomial(v, t);
    if (total > 100'000'000ULL) throw guard_exceeded("too many t-subsets to count");
    std::vector<std::vector<uint64_t>> binom(v + 1, std::vector<uint64_t>(t + 1, 0));
    for (unsigned i = 0; i <= v; ++i)
        for (unsigned j = 0; j <= t; ++j) binom[i][j] = binomial(i, j);
    std::vector<uint32_t> count(total, 0);
    for (const auto& b : blocks) {
        if (b.size() != k) throw precondition_error("block of size " + std::to_string(b.size()) + ", expected " + std::to_string(k));
        Block s = b;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 1 || s[i] > v) throw precondition_error("block point outside 1.." + std::to_string(v));
            if (i && s[i] == s[i - 1]) throw precondition_error("block with a repeated point");
        }
        // all t-subsets of the block, ranked in the colexicographic number system
        std::vector<unsigned> idx(t);
        for (unsigned i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            uint64_t rank = 0;
            for (unsigned i = 0; i < t; ++i) rank += binom[s[idx[i]] - 1][i + 1];
            ++count[rank];
            int i = static_cast<int>(t) - 1;
            while (i >= 0 && idx[i] == k - t + static_cast<unsigned>(i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (unsigned j = static_cast<unsigned>(i) + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    SteinerReport rep;
    rep.subsets = total;
    // lexicographic walk over t-subsets to locate the first violation deterministically
    std::vector<unsigned> sub(t);
    for (unsigned i = 0; i < t; ++i) sub[i] = i;
    while (true) {
        uint64_t rank = 0;
        for (unsigned i = 0; i < t; ++i) rank += binom[sub[i]][i + 1];
        const uint32_t c = count[rank];
        if (c == 1) {
            ++rep.exactly_once;
        } else {
            ++(c == 0 ? rep.uncovered : rep.overcovered);
            if (!rep.first_violation) {
                Block bl;
                for (auto x : sub) bl.push_back(x + 1);
                rep.first_violation = bl;
                rep.first_violation_count = c;
            }
        }
        int i = static_cast<int>(t) - 1;
        while (i >= 0 && sub[i] == v - t + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++sub[i];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < t; ++j) sub[j] = sub[j - 1] + 1;
    }
    rep.pass = rep.exactly_once == total;
    return rep;
}

struct CensusLevel {
    unsigned j = 0;
    uint64_t subsets = 0;
    std::size_t distinct = 0;
    bool contains_zero = false;
    std::map<uint64_t, std::size_t> multiplicity;  ///< representations -> number of values
};

struct Census {
    std::vector<CensusLevel> levels;  ///< j = 1..j_max
    /// intersections[a][b] = |S_a & S_b| with S_0 = {0}
    std::vector<std::vector<std::size_t>> intersections;
    std::size_t union_size = 0;  ///< |{0} u S_1 u ... u S_jmax|

    bool pairwise_disjoint() const {
        for (std::size_t a = 0; a < intersections.size(); ++a)
            for (std::size_t b = a + 1; b < intersections.size(); ++b)
                if (intersections[a][b]) return false;
        return true;
    }
};

inline constexpr uint64_t census_subset_limit = 10'000'000ULL;

namespace detail {

/// Calls visit(sum, indices) for every j-subset of the roots.
template <class Visit>
void for_each_subset_sum(const RootSpace& rs, unsigned j, Visit&& visit) {
    const GF& e = rs.splitting_field;
    const unsigned m = static_cast<unsigned>(rs.roots.size());
    if (j > m) return;
    if (binomial(m, j) > census_subset_limit) throw guard_exceeded("more than 10^7 subsets of size " + std::to_string(j));
    std::vector<unsigned> idx(j);
    std::vector<Elem> prefix(j + 1, e.zero());  // prefix[i] = sum of the first i chosen roots
    for (unsigned i = 0; i < j; ++i) {
        idx[i] = i;
        prefix[i + 1] = e.add(prefix[i], rs.roots[i]);
    }
    while (true) {
        visit(prefix[j], idx);
        int i = static_cast<int>(j) - 1;
        while (i >= 0 && idx[i] == m - j + static_cast<unsigned>(i)) --i;
        if (i < 0) return;
        ++idx[i];
        prefix[i + 1] = e.add(prefix[i], rs.roots[idx[i]]);
        for (unsigned k = static_cast<unsigned>(i) + 1; k < j; ++k) {
            idx[k] = idx[k - 1] + 1;
            prefix[k + 1] = e.add(prefix[k], rs.roots[idx[k]]);
        }
    }
}

}  // namespace detail

/// Sets S_j of sums of j distinct roots for j = 1..j_max, with multiplicities and overlaps.
inline Census sum_census(const RootSpace& rs, unsigned j_max) {
    std::vector<std::unordered_map<Elem, uint64_t, ElemHash>> sets(j_max + 1);
    sets[0][rs.splitting_field.zero()] = 1;
    Census out;
    for (unsigned j = 1; j <= j_max; ++j) {
        auto& s = sets[j];
        uint64_t n = 0;
        detail::for_each_subset_sum(rs, j, [&](const Elem& v, const std::vector<unsigned>&) {
            ++s[v];
            ++n;
        });
        CensusLevel lvl{j, n, s.size(), s.count(rs.splitting_field.zero()) > 0, {}};
        for (const auto& [v, c] : s) ++lvl.multiplicity[c];
        out.levels.push_back(std::move(lvl));
    }
    out.intersections.assign(j_max + 1, std::vector<std::size_t>(j_max + 1, 0));
    std::unordered_set<Elem, ElemHash> all;
    for (unsigned a = 0; a <= j_max; ++a) {
        for (const auto& [v, c] : sets[a]) all.insert(v);
        for (unsigned b = 0; b <= j_max; ++b) {
            const auto& small = sets[a].size() <= sets[b].size() ? sets[a] : sets[b];
            const auto& large = sets[a].size() <= sets[b].size() ? sets[b] : sets[a];
            std::size_t n = 0;
            for (const auto& [v, c] : small) n += large.count(v);
            out.intersections[a][b] = n;
        }
    }
    out.union_size = all.size();
    return out;
}

/// Whether some j-subset of the roots sums to zero.
inline bool subset_sums_to_zero(const RootSpace& rs, unsigned j) {
    bool hit = false;
    detail::for_each_subset_sum(rs, j, [&](const Elem& v, const std::vector<unsigned>&) { hit = hit || v.v == 0; });
    return hit;
}

struct SextetReport {
    std::size_t values = 0;      ///< distinct 4-sums
    std::size_t exactly_six = 0;  ///< values attained by exactly six 4-subsets
    std::size_t partitions = 0;   ///< values whose 4-subsets are pairwise disjoint
    bool pass = false;
};

/// Each 4-sum should come from six pairwise disjoint 4-subsets (a partition of the 24 roots).
inline SextetReport sextet_check(const RootSpace& rs) {
    std::unordered_map<Elem, std::vector<uint32_t>, ElemHash> groups;
    detail::for_each_subset_sum(rs, 4, [&](const Elem& v, const std::vector<unsigned>& idx) {
        uint32_t mask = 0;
        for (auto i : idx) mask |= 1u << i;
        groups[v].push_back(mask);
    });
    SextetReport rep;
    rep.values = groups.size();
    for (const auto& [v, masks] : groups) {
        if (masks.size() == 6) ++rep.exactly_six;
        uint32_t acc = 0;
        bool disjoint = true;
        for (auto m : masks) {
            disjoint = disjoint && (acc & m) == 0;
            acc |= m;
        }
        if (disjoint && std::popcount(acc) == static_cast<int>(rs.roots.size())) ++rep.partitions;
    }
    rep.pass = rs.roots.size() <= 32 && rep.exactly_six == rep.values && rep.partitions == rep.values;
    return rep;
}

struct ToddReport {
    bool pass = false;
    uint64_t pairs_meeting_in_four = 0;
    uint64_t pairs_skipped = 0;
    uint64_t failures = 0;
    std::optional<std::pair<Block, Block>> first_failure;
};

/// For octads D, D' with |D & D'| = 4, checks that D ^ D' is again an octad.
inline ToddReport todd_check(const std::vector<Block>& blocks) {
    std::vector<uint64_t> masks;
    for (const auto& b : blocks) {
        uint64_t m = 0;
        for (auto x : b) {
            if (x >= 64) throw precondition_error("todd check supports point labels below 64");
            m |= 1ULL << x;
        }
        masks.push_back(m);
    }
    const std::unordered_set<uint64_t> set(masks.begin(), masks.end());
    ToddReport rep;
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            if (std::popcount(masks[i] & masks[j]) != 4) {
                ++rep.pairs_skipped;
                continue;
            }
            ++rep.pairs_meeting_in_four;
            if (!set.count(masks[i] ^ masks[j])) {
                ++rep.failures;
                if (!rep.first_failure) rep.first_failure = {blocks[i], blocks[j]};
            }
        }
    rep.pass = rep.failures == 0;
    return rep;
}

// ---- specialization search ---------------------------------------------------------------------------

/// Points of F_{p^e} for e = 1..s, each field in lexicographic order, skipping elements of smaller fields.
inline std::vector<FieldElement> specialization_points(uint32_t p, unsigned s) {
    std::vector<FieldElement> out;
    for (unsigned e = 1; e <= s; ++e) {
        const GF f = GF::make(p, e);
        for (const Elem& a : f.elements())
            if (f.element_degree(a) == e || e == 1) out.push_back({f, a});
    }
    return out;
}

struct Attempt {
    FieldElement point;
    bool accepted = false;
    std::string reason;
    CycleType cycle;
    std::optional<std::size_t> span_dim, kernel_dim, min_distance;
};

struct PipelineResult {
    std::vector<Attempt> attempts;
    std::optional<RootSpace> space;
    std::optional<LinearCode> code;
    std::optional<CodeParams> params;
    const Attempt* accepted() const {
        for (const auto& a : attempts)
            if (a.accepted) return &a;
        return nullptr;
    }
};

/**
 * Tries the points in order and accepts the first whose kernel code has dimension want_k (and minimum
 * distance want_d, when given). Every rejection is recorded with its reason.
 */
inline PipelineResult code_pipeline(const RatPoly& f, const std::vector<FieldElement>& points, std::size_t want_k,
                                    std::optional<std::size_t> want_d, unsigned guard_bits = 128, uint64_t seed = 0) {
    PipelineResult res;
    for (const auto& a : points) {
        Attempt at{a, false, "", {}, {}, {}, {}};
        try {
            RootSpace rs = root_space(f, a, guard_bits, seed);
            at.cycle = rs.cycle;
            at.span_dim = rs.span_dim;
            LinearCode code = kernel_code(rs);
            at.kernel_dim = code.k;
            if (code.k != want_k) {
                at.reason = "kernel dimension " + std::to_string(code.k) + ", need " + std::to_string(want_k);
                res.attempts.push_back(std::move(at));
                continue;
            }
            CodeParams params = code_params(code);
            at.min_distance = params.d;
            if (want_d && params.d != want_d) {
                at.reason = "minimum distance " + (params.d ? std::to_string(*params.d) : std::string("none")) +
                            ", need " + std::to_string(*want_d);
                res.attempts.push_back(std::move(at));
                continue;
            }
            at.accepted = true;
            at.reason = "accepted";
            res.attempts.push_back(std::move(at));
            res.space = std::move(rs);
            res.code = std::move(code);
            res.params = std::move(params);
            return res;
        } catch (const ramified_error& e) {
            at.reason = e.what();
        } catch (const pole_error& e) {
            at.reason = std::string("pole: ") + e.what();
        } catch (const guard_exceeded& e) {
            at.reason = e.what();
        }
        res.attempts.push_back(std::move(at));
    }
    return res;
}

struct GolayReport {
    PipelineResult pipeline;
    std::vector<Block> octads;  ///< 0-based
    SteinerReport steiner;
    Census census;
    std::vector<std::pair<unsigned, bool>> zero_sums;  ///< (j, some j-subset sums to 0), j = 1..7
    SextetReport sextets;
    ToddReport todd;
};

inline RatPoly golay_polynomial() { return parse_poly("x^24 + x + t", RatFuncField::over(2, 1)); }

/// The x^24 + x + t construction end to end. Throws if no searched point is accepted.
inline GolayReport golay_pipeline(unsigned s = 3, unsigned guard_bits = 128, uint64_t seed = 0,
                                  std::optional<std::vector<FieldElement>> points = std::nullopt) {
    GolayReport rep;
    const auto pts = points ? *points : specialization_points(2, s);
    rep.pipeline = code_pipeline(golay_polynomial(), pts, 12, 8, guard_bits, seed);
    if (!rep.pipeline.code) {
        std::string msg = "no admissible specialization among " + std::to_string(rep.pipeline.attempts.size()) + " points:";
        for (const auto& a : rep.pipeline.attempts) msg += " [" + a.point.to_string() + ": " + a.reason + "]";
        throw error(msg);
    }
    const RootSpace& rs = *rep.pipeline.space;
    rep.octads = octads(*rep.pipeline.code);
    rep.steiner = verify_steiner(to_one_based(rep.octads), 5, 8, 24);
    rep.census = sum_census(rs, 4);
    for (unsigned j = 1; j <= 7; ++j) rep.zero_sums.emplace_back(j, subset_sums_to_zero(rs, j));
    rep.sextets = sextet_check(rs);
    rep.todd = todd_check(rep.octads);
    return rep;
}

}  // namespace qlin

#endif

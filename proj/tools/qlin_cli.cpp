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

// qlin command-line front end.
//
// Exit codes: 0 success, 1 verification failed, 2 usage / parse / precondition error, 3 guard exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qlin/goldens.hpp"
#include "qlin/json.hpp"
#include "qlin/qlin.hpp"

#ifndef QLIN_DEFAULT_CORPUS
#define QLIN_DEFAULT_CORPUS "data/goldens.json"
#endif

namespace {

using namespace qlin;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kGuard = 3 };

struct Common {
    uint64_t q = 0;
    uint32_t p = 0;
    unsigned k = 0;
    std::string poly;
    std::string at;
    unsigned ext = 0;
    std::string format = "json";
    uint64_t seed = 0;
    bool include_slow = false;
    unsigned guard_bits = 128;
    int t_guard = default_t_degree_guard;
};

uint32_t smallest_prime_factor(uint64_t q) {
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return static_cast<uint32_t>(d);
    return static_cast<uint32_t>(q);
}

/// Resolves the constant field F_{p^k} and q from whichever of --p, --k, --q were given.
void resolve_field(Common& c, uint64_t default_q = 2) {
    if (c.p == 0) {
        if (c.q == 0) c.q = default_q;
        if (c.q < 2) throw precondition_error("q must be a prime power");
        c.p = smallest_prime_factor(c.q);
    }
    if (c.k == 0) {
        unsigned r = 0;
        uint64_t x = c.q ? c.q : c.p;
        while (x > 1 && x % c.p == 0) {
            x /= c.p;
            ++r;
        }
        if (x != 1) throw precondition_error("q = " + std::to_string(c.q) + " is not a power of p = " + std::to_string(c.p));
        c.k = r;
    }
    if (c.q == 0) {
        c.q = 1;
        for (unsigned i = 0; i < c.k; ++i) c.q *= c.p;
    }
}

FieldElement parse_point(const std::string& text, uint32_t p) {
    std::vector<uint32_t> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = -1;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || v < 0) throw parse_error("bad coordinate '" + item + "' in --at", 0);
        coords.push_back(static_cast<uint32_t>(v));
    }
    if (coords.empty()) throw parse_error("empty --at coordinate list", 0);
    return FieldElement::from_coords(GF::make(p, static_cast<unsigned>(coords.size())), coords);
}

void emit(const Common& c, const json& j, const std::string& text) {
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json head(const std::string& command) { return {{"schema", json_schema}, {"command", command}}; }

// ---- subcommands ------------------------------------------------------------------------------------

int cmd_minlin(Common c) {
    resolve_field(c);
    const RatFuncField k(GF::make(c.p, c.k), c.t_guard);
    const RatPoly f = parse_poly(c.poly, k);
    const auto res = minimal_qpoly(f, c.q);
    const bool divides = qp_divides(f, res.L);
    json j = head("minlin");
    j["field"] = k.name();
    j["q"] = c.q;
    j["poly"] = to_string(f);
    j["m"] = res.m;
    j["L"] = to_json(res.L);
    j["L_text"] = to_string(res.L);
    json cert = json::array();
    for (const auto& x : res.certificate) cert.push_back(k.to_string(x));
    j["certificate"] = cert;
    j["divides"] = divides;
    emit(c, j, "m = " + std::to_string(res.m) + "\nL = " + to_string(res.L) + "\n");
    return divides ? kOk : kFailed;
}

int cmd_factor(Common c) {
    if (c.p == 0) resolve_field(c);
    if (c.k == 0) c.k = 1;
    const GF f = GF::make(c.p, c.k);
    const GFPoly g = parse_poly(c.poly, f);
    const auto fs = factor(g, c.seed);
    json list = json::array();
    std::string text;
    for (const auto& x : fs) {
        list.push_back({{"factor", to_string(x.poly)}, {"degree", x.poly.degree()}, {"multiplicity", x.multiplicity}});
        text += "(" + to_string(x.poly) + ")" + (x.multiplicity > 1 ? "^" + std::to_string(x.multiplicity) : "") + "\n";
    }
    json j = head("factor");
    j["field"] = f.name();
    j["poly"] = to_string(g);
    j["factors"] = list;
    emit(c, j, text);
    return kOk;
}

std::vector<FieldElement> points_for(const Common& c, const GF& base) {
    if (!c.at.empty()) return {parse_point(c.at, base.characteristic())};
    const GF f = GF::make(base.characteristic(), base.degree() * (c.ext ? c.ext : 1));
    std::vector<FieldElement> out;
    for (const Elem& a : f.elements()) out.push_back({f, a});
    return out;
}

int cmd_cycletype(Common c) {
    if (c.p == 0 && c.q == 0) c.p = 2;
    resolve_field(c);
    const RatFuncField k(GF::make(c.p, c.k), c.t_guard);
    const RatPoly f = parse_poly(c.poly, k);
    for (const auto& a : points_for(c, k.base())) {
        json j = {{"schema", json_schema}, {"a", a.to_string()}, {"field", a.field().name()}};
        std::string text = a.field().name() + " " + a.to_string() + ": ";
        try {
            const CycleType ct = cycle_type(f, a, c.seed);
            j["degrees"] = ct;
            text += cycle_notation(ct);
        } catch (const ramified_error& e) {
            j["error"] = e.what();
            text += e.what();
        } catch (const pole_error& e) {
            j["error"] = std::string("pole: ") + e.what();
            text += j["error"].get<std::string>();
        }
        if (c.format == "json")
            std::cout << j.dump() << "\n";
        else
            std::cout << text << "\n";
    }
    return kOk;
}

/// Reads a q-polynomial from ordinary polynomial text; non-linearized input gets linearized first.
QPoly<RatFuncField> qpoly_from(const RatPoly& f, uint64_t q, bool& linearized) {
    QPoly<RatFuncField> l(f.field(), q);
    bool is_q = !f.is_zero();
    uint64_t e = 1;
    unsigned i = 0;
    for (std::size_t d = 0; d < f.coeffs().size() && is_q; ++d) {
        if (f.field().is_zero(f.coeffs()[d])) continue;
        while (e < d) {
            e *= q;
            ++i;
        }
        if (e != d) is_q = false;
        else l.set_term(i, f.coeffs()[d]);
    }
    linearized = !is_q;
    return is_q ? l : minimal_qpoly(f, q).L;
}

int cmd_associate(Common c) {
    resolve_field(c);
    const RatFuncField k(GF::make(c.p, c.k), c.t_guard);
    bool linearized = false;
    const QPoly<RatFuncField> l = qpoly_from(parse_poly(c.poly, k), c.q, linearized);
    const GF& fq = k.base();
    std::vector<FieldElement> lambdas;
    if (!c.at.empty())
        lambdas.push_back(parse_point(c.at, c.p));
    else
        for (const Elem& a : fq.elements()) lambdas.push_back({fq, a});
    json rows = json::array();
    std::string text = "L = " + to_string(l) + "\n";
    bool all_ok = true;
    for (const auto& lam : lambdas) {
        json r = {{"lambda", lam.to_string()}};
        try {
            const CyclicReport rep = verify_cyclic_element(l, lam, c.guard_bits);
            r["report"] = to_json(rep);
            all_ok = all_ok && (rep.passed() || rep.skipped());
            text += "lambda = " + lam.to_string() + ": associate " + to_string(*rep.associate) + ", " + rep.status + "\n";
        } catch (const precondition_error& e) {
            if (!c.at.empty()) throw;
            r["skipped"] = e.what();
            text += "lambda = " + lam.to_string() + ": skipped (" + e.what() + ")\n";
        }
        rows.push_back(r);
    }
    json j = head("associate");
    j["L"] = to_json(l);
    j["linearized_input"] = linearized;
    j["points"] = rows;
    emit(c, j, text);
    return all_ok ? kOk : kFailed;
}

json attempts_json(const PipelineResult& r) {
    json a = json::array();
    for (const auto& x : r.attempts) a.push_back(to_json(x));
    return a;
}

std::string attempts_text(const PipelineResult& r) {
    std::string s;
    for (const auto& x : r.attempts)
        s += "  " + x.point.field().name() + " a = " + x.point.to_string() + ": " + x.reason +
             (x.cycle.empty() ? "" : " [" + cycle_notation(x.cycle) + "]") + "\n";
    return s;
}

int cmd_golay(Common c) {
    std::optional<std::vector<FieldElement>> pts;
    if (!c.at.empty()) pts = std::vector<FieldElement>{parse_point(c.at, 2)};
    GolayReport rep;
    try {
        rep = golay_pipeline(c.ext ? c.ext : 3, c.guard_bits, c.seed, pts);
    } catch (const error& e) {
        json j = head("golay");
        j["error"] = e.what();
        emit(c, j, std::string(e.what()) + "\n");
        return kFailed;
    }
    const auto& p = *rep.pipeline.params;
    const auto& acc = *rep.pipeline.accepted();
    bool zero_free = true;
    for (const auto& [jj, z] : rep.zero_sums) zero_free = zero_free && !z;
    const bool ok = p.n == 24 && p.k == 12 && p.d == 8u && rep.octads.size() == 759 && rep.steiner.pass &&
                    rep.census.pairwise_disjoint() && rep.census.union_size == 4096 && rep.sextets.pass && rep.todd.pass &&
                    zero_free;
    json j = head("golay");
    j["accepted"] = to_json(acc.point);
    j["accepted_text"] = acc.point.to_string();
    j["splitting_field"] = rep.pipeline.space->splitting_field.name();
    j["attempts"] = attempts_json(rep.pipeline);
    j["code"] = to_json(p);
    j["generator"] = generator_json(*rep.pipeline.code);
    j["octads"] = blocks_json(to_one_based(rep.octads));
    j["steiner"] = to_json(rep.steiner);
    j["census"] = to_json(rep.census);
    json zs = json::object();
    for (const auto& [jj, z] : rep.zero_sums) zs[std::to_string(jj)] = z;
    j["zero_sums"] = zs;
    j["sextets"] = {{"values", rep.sextets.values}, {"exactly_six", rep.sextets.exactly_six},
                    {"partitions", rep.sextets.partitions}, {"pass", rep.sextets.pass}};
    j["todd"] = to_json(rep.todd);
    j["pass"] = ok;

    std::ostringstream t;
    t << "specialization search:\n" << attempts_text(rep.pipeline);
    t << "accepted a = " << acc.point.to_string() << " in " << acc.point.field().name() << ", splitting field "
      << rep.pipeline.space->splitting_field.name() << "\n";
    t << "code (n, k, d) = (" << p.n << ", " << p.k << ", " << (p.d ? std::to_string(*p.d) : "none") << ")\n";
    t << "weights:";
    for (const auto& [w, n] : p.weights) t << " " << w << ":" << n;
    t << "\ngenerator:\n";
    const auto g = generator_json(*rep.pipeline.code);
    for (std::size_t i = 0; i < g["rows"].size(); ++i)
        t << "  " << g["rows"][i].get<std::string>() << "  " << g["hex"][i].get<std::string>() << "\n";
    t << "octads: " << rep.octads.size() << "\n";
    t << "steiner S(5,8,24): " << (rep.steiner.pass ? "pass" : "FAIL") << " (" << rep.steiner.exactly_once << "/"
      << rep.steiner.subsets << " 5-subsets covered once)\n";
    t << "sum census:";
    for (const auto& l : rep.census.levels) t << " |S_" << l.j << "|=" << l.distinct;
    t << ", union with {0} = " << rep.census.union_size << (rep.census.pairwise_disjoint() ? ", disjoint" : ", OVERLAP")
      << "\n";
    t << "sextets: " << rep.sextets.exactly_six << "/" << rep.sextets.values << " values with six disjoint 4-sets\n";
    t << "todd: " << (rep.todd.pass ? "pass" : "FAIL") << " over " << rep.todd.pairs_meeting_in_four << " pairs\n";
    t << (ok ? "PASS\n" : "FAIL\n");
    emit(c, j, t.str());
    return ok ? kOk : kFailed;
}

int cmd_code(Common c) {
    if (c.p == 0 && c.q == 0) c.p = 2;
    resolve_field(c);
    if (c.k != 1) throw precondition_error("code needs a prime constant field");
    const RatFuncField k(GF::make(c.p, 1), c.t_guard);
    const RatPoly f = parse_poly(c.poly, k);
    const unsigned m = minimal_qpoly(f, c.p).m;
    const std::size_t want = static_cast<std::size_t>(f.degree()) - m;
    const auto pts = c.at.empty() ? specialization_points(c.p, c.ext ? c.ext : 3)
                                  : std::vector<FieldElement>{parse_point(c.at, c.p)};
    const PipelineResult res = code_pipeline(f, pts, want, std::nullopt, c.guard_bits, c.seed);
    json j = head("code");
    j["poly"] = to_string(f);
    j["m"] = m;
    j["target_dimension"] = want;
    j["attempts"] = attempts_json(res);
    std::string text = "m(f) = " + std::to_string(m) + ", target kernel dimension " + std::to_string(want) + "\n" +
                       attempts_text(res);
    if (!res.code) {
        j["pass"] = false;
        emit(c, j, text + "no admissible specialization\n");
        return kFailed;
    }
    j["accepted"] = to_json(res.accepted()->point);
    j["code"] = to_json(*res.params);
    j["generator"] = generator_json(*res.code);
    j["pass"] = true;
    const auto& p = *res.params;
    text += "code (n, k, d) = (" + std::to_string(p.n) + ", " + std::to_string(p.k) + ", " +
            (p.d ? std::to_string(*p.d) : "none") + ")\nweights:";
    for (const auto& [w, n] : p.weights) text += " " + std::to_string(w) + ":" + std::to_string(n);
    emit(c, j, text + "\n");
    return kOk;
}

int cmd_census(Common c, unsigned jmax) {
    RatPoly f = golay_polynomial();
    std::optional<FieldElement> at;
    if (!c.poly.empty()) {
        if (c.p == 0 && c.q == 0) c.p = 2;
        resolve_field(c);
        f = parse_poly(c.poly, RatFuncField(GF::make(c.p, c.k), c.t_guard));
        if (c.at.empty()) throw precondition_error("census of a custom polynomial needs --at");
    }
    if (!c.at.empty()) {
        at = parse_point(c.at, f.field().base().characteristic());
    } else {
        const auto res = code_pipeline(f, specialization_points(2, c.ext ? c.ext : 3), 12, 8, c.guard_bits, c.seed);
        if (!res.code) throw error("no admissible specialization for the default census");
        at = res.accepted()->point;
    }
    const RootSpace rs = root_space(f, *at, c.guard_bits, c.seed);
    const Census cen = sum_census(rs, jmax);
    json j = head("census");
    j["poly"] = to_string(f);
    j["a"] = to_json(*at);
    j["census"] = to_json(cen);
    std::string text = "a = " + at->to_string() + "\n";
    for (const auto& l : cen.levels) {
        text += "|S_" + std::to_string(l.j) + "| = " + std::to_string(l.distinct) + (l.contains_zero ? " (contains 0)" : "") +
                ", multiplicities:";
        for (const auto& [r, n] : l.multiplicity) text += " " + std::to_string(r) + "x" + std::to_string(n);
        text += "\n";
    }
    text += "union with {0}: " + std::to_string(cen.union_size) + (cen.pairwise_disjoint() ? ", disjoint\n" : ", overlapping\n");
    emit(c, j, text);
    return kOk;
}

int cmd_steiner(const Common& c, unsigned t, unsigned k, unsigned v, const std::string& file) {
    std::ifstream in(file);
    if (!in) throw precondition_error("cannot open blocks file " + file);
    json blocks;
    try {
        blocks = json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("blocks file is not JSON: ") + e.what(), e.byte);
    }
    const SteinerReport rep = verify_steiner(blocks_from_json(blocks), t, k, v);
    json j = head("steiner-verify");
    j["t"] = t;
    j["k"] = k;
    j["v"] = v;
    j["blocks"] = blocks.size();
    j["report"] = to_json(rep);
    std::string text = std::string(rep.pass ? "pass" : "FAIL") + ": " + std::to_string(rep.exactly_once) + "/" +
                       std::to_string(rep.subsets) + " " + std::to_string(t) + "-subsets in exactly one block\n";
    if (rep.first_violation) {
        text += "first violation:";
        for (auto x : *rep.first_violation) text += " " + std::to_string(x);
        text += " (in " + std::to_string(rep.first_violation_count) + " blocks)\n";
    }
    emit(c, j, text);
    return rep.pass ? kOk : kFailed;
}

int cmd_goldens(const Common& c, const std::string& corpus) {
    json rows = json::array();
    std::string text;
    bool ok = true;
    for (const auto& row : load_goldens(corpus)) {
        if (row.slow && !c.include_slow) {
            rows.push_back({{"name", row.name}, {"skipped", "slow (use --include-slow)"}});
            text += "SKIP " + row.name + "\n";
            continue;
        }
        const GoldenOutcome out = run_golden(row);
        ok = ok && out.pass;
        rows.push_back({{"name", row.name}, {"pass", out.pass}, {"m", out.m}, {"L", out.L}, {"detail", out.detail},
                        {"seconds", out.seconds}});
        text += std::string(out.pass ? "PASS " : "FAIL ") + row.name + "  m=" + std::to_string(out.m) + "  " + out.detail + "\n";
    }
    json j = head("goldens");
    j["corpus"] = corpus;
    j["rows"] = rows;
    j["pass"] = ok;
    // timings vary between runs; keep the JSON byte-stable unless text output was requested
    for (auto& r : j["rows"]) r.erase("seconds");
    emit(c, j, text);
    return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlin: minimal q-polynomials, specialization probes and root-space codes"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&c](CLI::App* s) {
        s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
        s->add_option("--seed", c.seed, "seed for randomized factorization");
    };
    auto add_field = [&c](CLI::App* s) {
        s->add_option("--q", c.q, "q (a power of the characteristic)");
        s->add_option("--p", c.p, "characteristic of the constant field");
        s->add_option("--k", c.k, "extension degree of the constant field");
        s->add_option("--t-degree-guard", c.t_guard, "largest t-degree allowed in intermediate coefficients");
    };

    auto* minlin = app.add_subcommand("minlin", "minimal q-polynomial of f over F_q(t)");
    add_common(minlin);
    add_field(minlin);
    minlin->add_option("--poly", c.poly, "polynomial in x and t")->required();

    auto* fac = app.add_subcommand("factor", "factor a polynomial over F_{p^k} (generator written g)");
    add_common(fac);
    add_field(fac);
    fac->add_option("--poly", c.poly, "polynomial in x and g")->required();

    auto* ct = app.add_subcommand("cycletype", "factor degrees of f(x, a) for specialization points a");
    add_common(ct);
    add_field(ct);
    ct->add_option("--poly", c.poly, "polynomial in x and t")->required();
    ct->add_option("--at", c.at, "one point as comma-separated coordinates");
    ct->add_option("--ext", c.ext, "all points of F_{q^ext}");

    auto* as = app.add_subcommand("associate", "specialized associate and Frobenius action on the root space");
    add_common(as);
    add_field(as);
    as->add_option("--poly", c.poly, "q-polynomial L (other input is linearized first)")->required();
    as->add_option("--at", c.at, "lambda in F_q as coordinates (default: every lambda)");
    as->add_option("--guard-bits", c.guard_bits, "largest splitting-field degree over F_p");

    auto* gol = app.add_subcommand("golay", "Golay code and S(5,8,24) from x^24 + x + t");
    add_common(gol);
    gol->add_option("--ext", c.ext, "search F_2, ..., F_{2^ext} (default 3)");
    gol->add_option("--at", c.at, "restrict the search to one point");
    gol->add_option("--guard-bits", c.guard_bits, "largest splitting-field degree over F_2");

    auto* code = app.add_subcommand("code", "kernel code of the root space of f at a specialization");
    add_common(code);
    add_field(code);
    code->add_option("--poly", c.poly, "polynomial in x and t")->required();
    code->add_option("--at", c.at, "specialization point");
    code->add_option("--ext", c.ext, "search F_p, ..., F_{p^ext} (default 3)");
    code->add_option("--guard-bits", c.guard_bits, "largest splitting-field degree over F_p");

    unsigned jmax = 4;
    auto* cen = app.add_subcommand("census", "sums of j distinct roots (default: the accepted Golay point)");
    add_common(cen);
    add_field(cen);
    cen->add_option("--poly", c.poly, "polynomial in x and t");
    cen->add_option("--at", c.at, "specialization point");
    cen->add_option("--ext", c.ext, "search extent when --at is absent");
    cen->add_option("--jmax", jmax, "largest subset size");
    cen->add_option("--guard-bits", c.guard_bits, "largest splitting-field degree over F_p");

    unsigned st_t = 5, st_k = 8, st_v = 24;
    std::string blocks_file;
    auto* st = app.add_subcommand("steiner-verify", "check that blocks form a Steiner system S(t,k,v)");
    add_common(st);
    st->add_option("--t", st_t, "strength");
    st->add_option("--k", st_k, "block size");
    st->add_option("--v", st_v, "number of points");
    st->add_option("--blocks", blocks_file, "JSON list of 1-based integer lists")->required();

    std::string corpus = QLIN_DEFAULT_CORPUS;
    auto* gold = app.add_subcommand("goldens", "run the golden corpus of minimal q-polynomials");
    add_common(gold);
    gold->add_flag("--include-slow", c.include_slow, "also run the slow rows");
    gold->add_option("--corpus", corpus, "corpus file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code_ = app.exit(e);
        return code_ == 0 ? kOk : kUsage;
    }

    try {
        if (*minlin) return cmd_minlin(c);
        if (*fac) return cmd_factor(c);
        if (*ct) return cmd_cycletype(c);
        if (*as) return cmd_associate(c);
        if (*gol) return cmd_golay(c);
        if (*code) return cmd_code(c);
        if (*cen) return cmd_census(c, jmax);
        if (*st) return cmd_steiner(c, st_t, st_k, st_v, blocks_file);
        if (*gold) return cmd_goldens(c, corpus);
    } catch (const guard_exceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kGuard;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const field_mismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ramified_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const pole_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const division_by_zero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}

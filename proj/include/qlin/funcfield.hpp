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
 * @file funcfield.hpp
 * @brief The polynomial ring F_q[t] and the rational function field F_q(t).
 *
 * Coefficients of t-polynomials are packed elements of a small base field (prime, or at most 2^16
 * elements) stored as 32-bit words, so the inner loops of multiplication and division stay branch-light.
 * Rational functions are kept reduced with a monic denominator; zero is 0/1.
 */

#ifndef QLIN_FUNCFIELD_HPP
#define QLIN_FUNCFIELD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "fieldcore.hpp"
#include "poly.hpp"

namespace qlin {

/// Polynomial in t, constant term first, no trailing zeros. Meaningful relative to a TRing.
struct TPoly {
    std::vector<uint32_t> c;

    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    bool is_one() const noexcept { return c.size() == 1 && c[0] == 1; }
    bool is_constant() const noexcept { return c.size() <= 1; }
    friend bool operator==(const TPoly&, const TPoly&) = default;
};

inline constexpr int default_t_degree_guard = 100000;

/// Arithmetic context for F_q[t].
class TRing {
   public:
    explicit TRing(GF base, int degree_guard = default_t_degree_guard) : base_(std::move(base)), guard_(degree_guard) {
        if (!base_.is_prime_field() && !base_.has_tables())
            throw guard_exceeded("t-polynomial base field " + base_.name() + " is too large (max 2^16 elements)");
        p_ = base_.characteristic();
        prime_ = base_.is_prime_field();
    }

    const GF& base() const noexcept { return base_; }
    int degree_guard() const noexcept { return guard_; }

    TPoly zero() const { return {}; }
    TPoly one() const { return {{1}}; }
    TPoly t() const { return {{0, 1}}; }
    TPoly constant(const Elem& e) const {
        if (e.v == 0) return {};
        return {{static_cast<uint32_t>(e.v)}};
    }
    TPoly monomial(const Elem& e, std::size_t d) const {
        if (e.v == 0) return {};
        TPoly r;
        r.c.assign(d + 1, 0);
        r.c[d] = static_cast<uint32_t>(e.v);
        return r;
    }

    Elem lead(const TPoly& a) const { return {a.c.back()}; }

    static void trim(TPoly& a) {
        while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
    }

    uint32_t add_c(uint32_t a, uint32_t b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (prime_) {
            const uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return static_cast<uint32_t>(base_.add({a}, {b}).v);
    }
    uint32_t sub_c(uint32_t a, uint32_t b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (prime_) return a >= b ? a - b : a + p_ - b;
        return static_cast<uint32_t>(base_.sub({a}, {b}).v);
    }
    uint32_t mul_c(uint32_t a, uint32_t b) const noexcept {
        if (prime_) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
        return static_cast<uint32_t>(base_.mul({a}, {b}).v);
    }
    uint32_t inv_c(uint32_t a) const { return static_cast<uint32_t>(base_.inv({a}).v); }
    uint32_t neg_c(uint32_t a) const noexcept { return sub_c(0, a); }

    TPoly add(const TPoly& a, const TPoly& b) const {
        TPoly r;
        const auto& big = a.c.size() >= b.c.size() ? a : b;
        const auto& small = a.c.size() >= b.c.size() ? b : a;
        r.c = big.c;
        for (std::size_t i = 0; i < small.c.size(); ++i) r.c[i] = add_c(r.c[i], small.c[i]);
        trim(r);
        return r;
    }

    TPoly neg(const TPoly& a) const {
        if (p_ == 2) return a;
        TPoly r = a;
        for (auto& x : r.c) x = neg_c(x);
        return r;
    }

    TPoly sub(const TPoly& a, const TPoly& b) const {
        if (p_ == 2) return add(a, b);
        TPoly r;
        r.c.assign(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < r.c.size(); ++i)
            r.c[i] = sub_c(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
        trim(r);
        return r;
    }

    /// a -= s * t^shift * b, in place.
    void sub_scaled_shifted(TPoly& a, uint32_t s, std::size_t shift, const TPoly& b) const {
        if (s == 0 || b.is_zero()) return;
        if (a.c.size() < b.c.size() + shift) a.c.resize(b.c.size() + shift, 0);
        if (p_ == 2 && prime_) {
            for (std::size_t j = 0; j < b.c.size(); ++j) a.c[j + shift] ^= b.c[j];
        } else if (prime_) {
            const uint64_t ns = p_ - s;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                a.c[j + shift] = static_cast<uint32_t>((a.c[j + shift] + ns * b.c[j]) % p_);
        } else {
            for (std::size_t j = 0; j < b.c.size(); ++j) a.c[j + shift] = sub_c(a.c[j + shift], mul_c(s, b.c[j]));
        }
        trim(a);
    }

    TPoly scale(const TPoly& a, uint32_t s) const {
        if (s == 0) return {};
        if (s == 1) return a;
        TPoly r = a;
        for (auto& x : r.c) x = mul_c(x, s);
        return r;
    }

    TPoly shift(const TPoly& a, std::size_t n) const {
        if (a.is_zero() || n == 0) return a;
        TPoly r;
        r.c.assign(n, 0);
        r.c.insert(r.c.end(), a.c.begin(), a.c.end());
        return r;
    }

    TPoly mul(const TPoly& a, const TPoly& b) const {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.c.size() == 1) return scale(b, a.c[0]);
        if (b.c.size() == 1) return scale(a, b.c[0]);
        const std::size_t n = a.c.size() + b.c.size() - 1;
        if (static_cast<long long>(n) - 1 > guard_)
            throw guard_exceeded("t-degree " + std::to_string(n - 1) + " exceeds guard " + std::to_string(guard_));
        TPoly r;
        if (p_ == 2 && prime_) {
            r.c = mul_gf2(a.c, b.c);
        } else if (prime_ && std::min(a.c.size(), b.c.size()) >= kKaratsubaCutoff) {
            r.c = mul_karatsuba_unbalanced(a.c, b.c);
        } else if (prime_ && static_cast<uint64_t>(p_ - 1) * (p_ - 1) <= (1ULL << 32) / std::min(a.c.size(), b.c.size())) {
            std::vector<uint64_t> acc(n, 0);
            mul_acc(a.c, b.c, acc);
            r.c.resize(n);
            for (std::size_t i = 0; i < n; ++i) r.c[i] = static_cast<uint32_t>(acc[i] % p_);
        } else {
            r.c.assign(n, 0);
            for (std::size_t i = 0; i < a.c.size(); ++i) {
                if (!a.c[i]) continue;
                for (std::size_t j = 0; j < b.c.size(); ++j)
                    if (b.c[j]) r.c[i + j] = add_c(r.c[i + j], mul_c(a.c[i], b.c[j]));
            }
        }
        trim(r);
        return r;
    }

    TPoly pow(TPoly a, uint64_t e) const {
        TPoly r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return r;
    }

    std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b) const {
        if (b.is_zero()) throw division_by_zero("t-polynomial division by zero");
        if (a.degree() < b.degree()) return {TPoly{}, a};
        const std::size_t db = static_cast<std::size_t>(b.degree());
        const uint32_t inv = inv_c(b.c.back());
        if (prime_ && p_ != 2) return divmod_prime(a, b, inv);
        TPoly r = a;
        TPoly q;
        q.c.assign(a.c.size() - db, 0);
        for (std::size_t d = r.c.size(); d-- > db;) {
            const uint32_t x = r.c[d];
            if (!x) continue;
            const uint32_t c = inv == 1 ? x : mul_c(x, inv);
            q.c[d - db] = c;
            const std::size_t sh = d - db;
            if (p_ == 2 && prime_) {
                for (std::size_t j = 0; j < db; ++j) r.c[sh + j] ^= b.c[j];
            } else if (prime_) {
                const uint64_t nc = p_ - c;
                for (std::size_t j = 0; j < db; ++j)
                    if (b.c[j]) r.c[sh + j] = static_cast<uint32_t>((r.c[sh + j] + nc * b.c[j]) % p_);
            } else {
                for (std::size_t j = 0; j < db; ++j)
                    if (b.c[j]) r.c[sh + j] = sub_c(r.c[sh + j], mul_c(c, b.c[j]));
            }
            r.c[d] = 0;
        }
        r.c.resize(db);
        trim(r);
        trim(q);
        return {q, r};
    }

    TPoly rem(const TPoly& a, const TPoly& b) const { return divmod(a, b).second; }

    /// Exact division (b must divide a).
    TPoly exact_div(const TPoly& a, const TPoly& b) const {
        if (b.c.size() == 1) return scale(a, inv_c(b.c[0]));
        return divmod(a, b).first;
    }

    TPoly monic(const TPoly& a) const {
        if (a.is_zero() || a.c.back() == 1) return a;
        return scale(a, inv_c(a.c.back()));
    }

    /// Monic gcd; gcd(0, 0) = 0.
    TPoly gcd(TPoly a, TPoly b) const {
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            if (b.degree() == 0) return one();
            TPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    /// a(t^q) with coefficients raised to q: the q-power map on F_q'[t] for q = p^r.
    TPoly qth_power(const TPoly& a, uint64_t q) const {
        if (a.is_zero()) return a;
        const unsigned r = base_.log_p(q);
        TPoly out;
        out.c.assign(static_cast<std::size_t>(a.degree()) * q + 1, 0);
        if (static_cast<long long>(out.c.size()) - 1 > guard_)
            throw guard_exceeded("t-degree " + std::to_string(out.c.size() - 1) + " exceeds guard");
        const bool fixed = base_.degree() == 1 || r % base_.degree() == 0;
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (a.c[i]) out.c[i * q] = fixed ? a.c[i] : static_cast<uint32_t>(base_.frobenius({a.c[i]}, r).v);
        return out;
    }

    /// Value at a point of an extension of the base field.
    Elem eval_at(const TPoly& a, const Elem& point, const Embedding& emb) const {
        const GF& e = emb.target();
        Elem acc = e.zero();
        for (std::size_t i = a.c.size(); i-- > 0;) acc = e.add(e.mul(acc, point), emb.apply(Elem{a.c[i]}));
        return acc;
    }

    std::string coeff_string(uint32_t c) const { return base_.to_string({c}); }

    /// Descending powers: "t^24 + t", "2*t^3 + 1", "(g + 1)*t^2 + g".
    std::string to_string(const TPoly& a) const {
        if (a.is_zero()) return "0";
        std::string s;
        for (std::size_t i = a.c.size(); i-- > 0;) {
            const uint32_t c = a.c[i];
            if (!c) continue;
            if (!s.empty()) s += " + ";
            std::string cs = coeff_string(c);
            if (i == 0) {
                s += cs;
                continue;
            }
            if (c != 1) {
                const bool compound = cs.find(' ') != std::string::npos || cs.find('g') != std::string::npos;
                s += (compound && cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs) + "*";
            }
            s += i == 1 ? "t" : "t^" + std::to_string(i);
        }
        return s;
    }

    friend bool operator==(const TRing& a, const TRing& b) noexcept { return a.base_ == b.base_; }

   private:
    // Long division over F_p with lazy reduction: remainder words accumulate in 64 bits and are reduced on demand.
    std::pair<TPoly, TPoly> divmod_prime(const TPoly& a, const TPoly& b, uint32_t inv) const {
        const std::size_t db = static_cast<std::size_t>(b.degree());
        const uint64_t p = p_;
        const uint64_t budget = ~0ULL - (p - 1) * (p - 1);
        std::vector<uint64_t> r(a.c.begin(), a.c.end());
        TPoly q;
        q.c.assign(a.c.size() - db, 0);
        uint64_t bound = p - 1;
        for (std::size_t d = r.size(); d-- > db;) {
            const uint32_t x = static_cast<uint32_t>(r[d] % p);
            if (!x) continue;
            const uint32_t c = static_cast<uint32_t>(uint64_t(x) * inv % p);
            q.c[d - db] = c;
            if (bound > budget) {
                for (std::size_t j = 0; j < d; ++j) r[j] %= p;
                bound = p - 1;
            }
            bound += (p - 1) * (p - 1);
            const uint64_t nc = p - c;
            uint64_t* out = r.data() + (d - db);
            const uint32_t* bc = b.c.data();
            for (std::size_t j = 0; j < db; ++j) out[j] += nc * bc[j];
        }
        TPoly rem;
        rem.c.resize(db);
        for (std::size_t j = 0; j < db; ++j) rem.c[j] = static_cast<uint32_t>(r[j] % p);
        trim(rem);
        trim(q);
        return {q, rem};
    }

    static constexpr std::size_t kKaratsubaCutoff = 48;

    // Schoolbook product over F_p of n-word operands into out[0, 2n - 1).
    void mul_base(const uint32_t* a, const uint32_t* b, std::size_t n, uint32_t* out) const {
        std::vector<uint64_t> acc(2 * n - 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const uint64_t x = a[i];
            if (!x) continue;
            uint64_t* o = acc.data() + i;
            for (std::size_t j = 0; j < n; ++j) o[j] += x * b[j];
        }
        for (std::size_t i = 0; i + 1 < 2 * n; ++i) out[i] = static_cast<uint32_t>(acc[i] % p_);
    }

    // Karatsuba product over F_p of n-word operands into out[0, 2n - 1).
    void mul_kara(const uint32_t* a, const uint32_t* b, std::size_t n, uint32_t* out) const {
        if (n < kKaratsubaCutoff) return mul_base(a, b, n, out);
        const std::size_t h = n / 2, m = n - h;
        const uint64_t p = p_;
        std::vector<uint32_t> sa(m), sb(m), z0(2 * h - 1), z1(2 * m - 1), z2(2 * m - 1);
        for (std::size_t i = 0; i < m; ++i) {
            const uint32_t x0 = i < h ? a[i] : 0, y0 = i < h ? b[i] : 0;
            sa[i] = static_cast<uint32_t>((uint64_t(x0) + a[h + i]) % p);
            sb[i] = static_cast<uint32_t>((uint64_t(y0) + b[h + i]) % p);
        }
        mul_kara(a, b, h, z0.data());
        mul_kara(a + h, b + h, m, z2.data());
        mul_kara(sa.data(), sb.data(), m, z1.data());
        std::vector<uint64_t> acc(2 * n - 1, 0);
        for (std::size_t i = 0; i < z0.size(); ++i) {
            acc[i] += z0[i];
            acc[h + i] += 2 * p - z0[i];
        }
        for (std::size_t i = 0; i < z2.size(); ++i) {
            acc[2 * h + i] += z2[i];
            acc[h + i] += 2 * p - z2[i] + z1[i];
        }
        for (std::size_t i = 0; i + 1 < 2 * n; ++i) out[i] = static_cast<uint32_t>(acc[i] % p);
    }

    // Splits the longer operand into blocks the length of the shorter one.
    std::vector<uint32_t> mul_karatsuba_unbalanced(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
        const std::vector<uint32_t>& lo = a.size() <= b.size() ? a : b;
        const std::vector<uint32_t>& hi = a.size() <= b.size() ? b : a;
        const std::size_t n = lo.size();
        std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
        std::vector<uint32_t> block(n), prod(2 * n - 1);
        for (std::size_t off = 0; off < hi.size(); off += n) {
            const std::size_t len = std::min(n, hi.size() - off);
            std::fill(block.begin(), block.end(), 0);
            std::copy(hi.begin() + off, hi.begin() + off + len, block.begin());
            mul_kara(lo.data(), block.data(), n, prod.data());
            for (std::size_t i = 0; i < prod.size() && off + i < acc.size(); ++i) acc[off + i] += prod[i];
        }
        std::vector<uint32_t> out(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<uint32_t>(acc[i] % p_);
        return out;
    }

    void mul_acc(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, std::vector<uint64_t>& acc) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const uint64_t x = a[i];
            if (!x) continue;
            uint64_t* out = acc.data() + i;
            for (std::size_t j = 0; j < b.size(); ++j) out[j] += x * b[j];
        }
    }

    static std::vector<uint32_t> mul_gf2(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        auto pack = [](const std::vector<uint32_t>& v) {
            std::vector<uint64_t> w((v.size() + 63) / 64, 0);
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i]) w[i / 64] |= 1ULL << (i % 64);
            return w;
        };
        const auto wa = pack(a), wb = pack(b);
        std::vector<uint64_t> wr(wa.size() + wb.size() + 1, 0);
        for (std::size_t i = 0; i < wa.size(); ++i) {
            if (!wa[i]) continue;
            for (std::size_t j = 0; j < wb.size(); ++j) {
                if (!wb[j]) continue;
                const u128 prod = detail::clmul64(wa[i], wb[j]);
                wr[i + j] ^= static_cast<uint64_t>(prod);
                wr[i + j + 1] ^= static_cast<uint64_t>(prod >> 64);
            }
        }
        std::vector<uint32_t> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<uint32_t>((wr[i / 64] >> (i % 64)) & 1);
        return out;
    }

    GF base_;
    int guard_;
    uint32_t p_ = 2;
    bool prime_ = true;
};

/// Element of F_q(t): num/den reduced, den monic.
struct RatFunc {
    TPoly num;
    TPoly den{{1}};

    bool is_zero() const noexcept { return num.is_zero(); }
    bool is_polynomial() const noexcept { return den.is_one(); }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;
};

/// The field F_q(t) as a coefficient-field context.
class RatFuncField {
   public:
    using value_type = RatFunc;

    explicit RatFuncField(GF base, int degree_guard = default_t_degree_guard) : ring_(std::move(base), degree_guard) {}

    static RatFuncField over(uint32_t p, unsigned k) { return RatFuncField(GF::make(p, k)); }

    const TRing& ring() const noexcept { return ring_; }
    const GF& base() const noexcept { return ring_.base(); }
    uint32_t characteristic() const noexcept { return ring_.base().characteristic(); }

    RatFunc zero() const { return {}; }
    RatFunc one() const { return {ring_.one(), ring_.one()}; }
    RatFunc t() const { return {ring_.t(), ring_.one()}; }
    RatFunc from_poly(TPoly p) const { return {std::move(p), ring_.one()}; }
    RatFunc from_base(const Elem& c) const { return {ring_.constant(c), ring_.one()}; }
    RatFunc from_int(int64_t n) const { return from_base(base().from_int(n)); }

    /// Reduced form with monic denominator.
    RatFunc normalize(TPoly num, TPoly den) const {
        if (den.is_zero()) throw division_by_zero("rational function with zero denominator");
        if (num.is_zero()) return zero();
        if (!den.is_one()) {
            const TPoly g = ring_.gcd(num, den);
            if (!g.is_one()) {
                num = ring_.exact_div(num, g);
                den = ring_.exact_div(den, g);
            }
            const uint32_t lc = den.c.back();
            if (lc != 1) {
                const uint32_t inv = ring_.inv_c(lc);
                num = ring_.scale(num, inv);
                den = ring_.scale(den, inv);
            }
        }
        return {std::move(num), std::move(den)};
    }

    bool is_zero(const RatFunc& a) const noexcept { return a.num.is_zero(); }
    bool equal(const RatFunc& a, const RatFunc& b) const noexcept { return a == b; }

    RatFunc add(const RatFunc& a, const RatFunc& b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den.is_one() && b.den.is_one()) return {ring_.add(a.num, b.num), ring_.one()};
        if (a.den == b.den) return normalize(ring_.add(a.num, b.num), a.den);
        const TPoly g = ring_.gcd(a.den, b.den);
        const TPoly bd = ring_.exact_div(b.den, g), ad = ring_.exact_div(a.den, g);
        return normalize(ring_.add(ring_.mul(a.num, bd), ring_.mul(b.num, ad)), ring_.mul(a.den, bd));
    }

    RatFunc neg(const RatFunc& a) const { return {ring_.neg(a.num), a.den}; }
    RatFunc sub(const RatFunc& a, const RatFunc& b) const { return add(a, neg(b)); }

    RatFunc mul(const RatFunc& a, const RatFunc& b) const {
        if (a.is_zero() || b.is_zero()) return zero();
        if (a.den.is_one() && b.den.is_one()) return {ring_.mul(a.num, b.num), ring_.one()};
        return normalize(ring_.mul(a.num, b.num), ring_.mul(a.den, b.den));
    }

    RatFunc inv(const RatFunc& a) const {
        if (a.is_zero()) throw division_by_zero("inverse of zero in " + name());
        return normalize(a.den, a.num);
    }

    RatFunc div(const RatFunc& a, const RatFunc& b) const { return mul(a, inv(b)); }

    RatFunc pow(const RatFunc& a, uint64_t e) const { return {ring_.pow(a.num, e), ring_.pow(a.den, e)}; }

    /// a^q for q a power of p: t -> t^q and coefficient Frobenius.
    RatFunc qth_power(const RatFunc& a, uint64_t q) const {
        return {ring_.qth_power(a.num, q), ring_.qth_power(a.den, q)};
    }

    std::string to_string(const RatFunc& a) const {
        if (a.den.is_one()) return ring_.to_string(a.num);
        return "(" + ring_.to_string(a.num) + ")/(" + ring_.to_string(a.den) + ")";
    }

    std::string name() const { return base().name() + "(t)"; }

    friend bool operator==(const RatFuncField& a, const RatFuncField& b) noexcept { return a.ring_ == b.ring_; }

   private:
    TRing ring_;
};

static_assert(ExactField<RatFuncField>);

using RatPoly = Poly<RatFuncField>;

inline RatFunc rf_normalize(const RatFuncField& k, TPoly num, TPoly den) { return k.normalize(std::move(num), std::move(den)); }

/// a^q where q must equal the size of the base field.
inline RatFunc rf_qth_power(const RatFuncField& k, const RatFunc& a, uint64_t q) {
    if (q != k.base().size()) throw precondition_error("q = " + std::to_string(q) + " differs from |" + k.base().name() + "|");
    return k.qth_power(a, q);
}

/// Value of a at a point of an extension field of the base field.
inline Elem rf_eval(const RatFuncField& k, const RatFunc& a, const Elem& point, const Embedding& emb) {
    const GF& e = emb.target();
    const Elem d = k.ring().eval_at(a.den, point, emb);
    if (e.is_zero(d)) throw pole_error("denominator " + k.ring().to_string(a.den) + " vanishes at " + e.to_string(point));
    return e.div(k.ring().eval_at(a.num, point, emb), d);
}

inline FieldElement rf_eval(const RatFuncField& k, const RatFunc& a, const FieldElement& point) {
    const Embedding emb = Embedding::canonical(k.base(), point.field());
    return {point.field(), rf_eval(k, a, point.value(), emb)};
}

}  // namespace qlin

#endif

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
 * @file fieldcore.hpp
 * @brief Runtime finite fields F_{p^k}.
 *
 * A field is described by a cheap-to-copy handle (GF) onto immutable shared data. Elements are plain
 * 16-byte values (Elem) that only carry meaning together with their field:
 *
 *  - p = 2: the power-basis coordinates are stored bit-packed, bit i = coefficient of g^i (k <= 128).
 *  - p odd: the coordinates are packed as the base-p integer sum c_i p^i (p^k < 2^64, k <= 32).
 *
 * The modulus of F_{p^k} is the monic irreducible of degree k whose coefficient vector (a_0, ..., a_{k-1}),
 * read as the base-p integer a_0 + a_1 p + ... + a_{k-1} p^{k-1}, is minimal. The prime field F_p uses the
 * placeholder modulus x, so its generator is 0 and its power basis is {1}.
 *
 * Fields with at most 2^16 elements additionally carry log/exp tables.
 */

#ifndef QLIN_FIELDCORE_HPP
#define QLIN_FIELDCORE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

#include "errors.hpp"

namespace qlin {

using u128 = unsigned __int128;

/// Raw field element. Meaningful only relative to a GF.
struct Elem {
    u128 v = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
};

struct ElemHash {
    std::size_t operator()(const Elem& e) const noexcept {
        const auto lo = static_cast<uint64_t>(e.v);
        const auto hi = static_cast<uint64_t>(e.v >> 64);
        return std::hash<uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL + 0x7F4A7C15ULL + (lo << 6) + (lo >> 2)));
    }
};

namespace detail {

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---- carry-less multiplication -------------------------------------------------------------

inline u128 clmul64_portable(uint64_t a, uint64_t b) noexcept {
    u128 t[16];
    t[0] = 0;
    t[1] = b;
    for (int i = 2; i < 16; i += 2) {
        t[i] = t[i / 2] << 1;
        t[i + 1] = t[i] ^ b;
    }
    u128 r = 0;
    for (int i = 60; i >= 0; i -= 4) r = (r << 4) ^ t[(a >> i) & 15];
    return r;
}

#if defined(__x86_64__) && defined(__GNUC__)
__attribute__((target("pclmul,sse2"))) inline u128 clmul64_hw(uint64_t a, uint64_t b) noexcept {
    const __m128i x = _mm_set_epi64x(0, static_cast<long long>(a));
    const __m128i y = _mm_set_epi64x(0, static_cast<long long>(b));
    const __m128i z = _mm_clmulepi64_si128(x, y, 0);
    alignas(16) uint64_t out[2];
    _mm_store_si128(reinterpret_cast<__m128i*>(out), z);
    return (static_cast<u128>(out[1]) << 64) | out[0];
}

inline bool cpu_has_pclmul() noexcept {
    static const bool has = __builtin_cpu_supports("pclmul");
    return has;
}

inline u128 clmul64(uint64_t a, uint64_t b) noexcept {
    return cpu_has_pclmul() ? clmul64_hw(a, b) : clmul64_portable(a, b);
}
#else
inline u128 clmul64(uint64_t a, uint64_t b) noexcept { return clmul64_portable(a, b); }
#endif

/// 256-bit GF(2)[x] value, used for products before reduction.
struct U256 {
    u128 lo = 0, hi = 0;
};

inline int bit_length(u128 x) noexcept {
    const auto hi = static_cast<uint64_t>(x >> 64);
    if (hi) return 128 - __builtin_clzll(hi);
    const auto lo = static_cast<uint64_t>(x);
    return lo ? 64 - __builtin_clzll(lo) : 0;
}

inline int degree256(const U256& x) noexcept {
    if (x.hi) return 127 + bit_length(x.hi);
    return bit_length(x.lo) - 1;
}

inline U256 clmul128(u128 a, u128 b) noexcept {
    const auto a0 = static_cast<uint64_t>(a), a1 = static_cast<uint64_t>(a >> 64);
    const auto b0 = static_cast<uint64_t>(b), b1 = static_cast<uint64_t>(b >> 64);
    const u128 lo = clmul64(a0, b0);
    if (!a1 && !b1) return {lo, 0};
    const u128 hi = clmul64(a1, b1);
    const u128 mid = clmul64(a0 ^ a1, b0 ^ b1) ^ lo ^ hi;
    U256 r;
    r.lo = lo ^ (mid << 64);
    r.hi = hi ^ (mid >> 64);
    return r;
}

inline U256 shl256(const U256& x, int s) noexcept {
    if (s == 0) return x;
    if (s >= 128) return {0, x.lo << (s - 128)};
    return {x.lo << s, (x.hi << s) | (x.lo >> (128 - s))};
}

/// Bits [s, s+len) of x, len <= 64.
inline uint64_t extract256(const U256& x, int s, int len) noexcept {
    u128 w;
    if (s >= 128)
        w = x.hi >> (s - 128);
    else if (s == 0)
        w = x.lo;
    else
        w = (x.lo >> s) | (x.hi << (128 - s));
    const uint64_t mask = len >= 64 ? ~0ULL : ((1ULL << len) - 1);
    return static_cast<uint64_t>(w) & mask;
}

// ---- small dense F_p[x] helpers used for modulus search -------------------------------------

using SmallPoly = std::vector<uint64_t>;

inline void trim(SmallPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline uint64_t mod_pow_u64(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = static_cast<uint64_t>(static_cast<u128>(r) * b % p);
        b = static_cast<uint64_t>(static_cast<u128>(b) * b % p);
        e >>= 1;
    }
    return r;
}

inline uint64_t mod_inv_u64(uint64_t a, uint64_t p) { return mod_pow_u64(a, p - 2, p); }

inline SmallPoly small_mulmod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& m, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    SmallPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j] % p) % p;
    }
    // m is monic
    const std::size_t k = m.size() - 1;
    for (std::size_t d = r.size(); d-- > k;) {
        const uint64_t c = r[d];
        if (!c) continue;
        for (std::size_t j = 0; j <= k; ++j) r[d - k + j] = (r[d - k + j] + (p - c) * m[j] % p) % p;
    }
    r.resize(std::min(r.size(), k));
    trim(r);
    return r;
}

inline SmallPoly small_powmod(SmallPoly b, uint64_t e, const SmallPoly& m, uint64_t p) {
    SmallPoly r{1};
    while (e) {
        if (e & 1) r = small_mulmod(r, b, m, p);
        b = small_mulmod(b, b, m, p);
        e >>= 1;
    }
    return r;
}

inline SmallPoly small_gcd(SmallPoly a, SmallPoly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        const uint64_t inv = mod_inv_u64(b.back(), p);
        while (a.size() >= b.size()) {
            const uint64_t c = a.back() * inv % p;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + (p - c) * b[j] % p) % p;
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

/// Rabin's test: m (monic, degree k) is irreducible over F_p.
inline bool small_is_irreducible(const SmallPoly& m, uint64_t p) {
    const std::size_t k = m.size() - 1;
    if (k == 1) return true;
    // powers[i] = x^{p^i} mod m
    std::vector<SmallPoly> powers{SmallPoly{0, 1}};
    for (std::size_t i = 1; i <= k; ++i) powers.push_back(small_powmod(powers.back(), p, m, p));
    auto minus_x = [p](SmallPoly a) {
        if (a.size() < 2) a.resize(2, 0);
        a[1] = (a[1] + p - 1) % p;
        trim(a);
        return a;
    };
    if (!minus_x(powers[k]).empty()) return false;
    for (uint64_t l : prime_factors(k)) {
        const SmallPoly g = small_gcd(minus_x(powers[k / l]), m, p);
        if (g.size() != 1) return false;
    }
    return true;
}

inline std::vector<uint32_t> find_modulus(uint32_t p, unsigned k) {
    if (k == 1) return {0, 1};
    for (uint64_t n = 1;; ++n) {
        SmallPoly m(k + 1, 0);
        uint64_t t = n;
        for (unsigned i = 0; i < k; ++i) {
            m[i] = t % p;
            t /= p;
        }
        if (t != 0) throw error("no irreducible modulus found");  // unreachable for valid (p, k)
        m[k] = 1;
        if (m[0] == 0) continue;
        if (small_is_irreducible(m, p)) return std::vector<uint32_t>(m.begin(), m.end());
    }
}

struct GFData {
    uint32_t p = 2;
    unsigned k = 1;
    std::vector<uint32_t> modulus;
    u128 order_minus_one = 1;
    std::vector<uint64_t> pow_p;  // p^i, odd p
    // p == 2, k >= 2: modulus = x^k + low
    u128 low = 0;
    u128 mask = 1;
    // log/exp tables for |F| <= 2^16, k >= 2
    bool tables = false;
    std::vector<uint32_t> log, exp;
};

}  // namespace detail

/// Handle to an immutable finite field F_{p^k}.
class GF {
   public:
    using value_type = Elem;

    /// Deterministic construction; results are cached process-wide.
    static GF make(uint32_t p, unsigned k);

    uint32_t characteristic() const noexcept { return d_->p; }
    unsigned degree() const noexcept { return d_->k; }
    const std::vector<uint32_t>& modulus() const noexcept { return d_->modulus; }
    /// |F| - 1 (always representable).
    u128 order_minus_one() const noexcept { return d_->order_minus_one; }
    /// |F| when it fits in 64 bits.
    uint64_t size() const {
        if (d_->order_minus_one >= static_cast<u128>(~0ULL)) throw guard_exceeded("field size exceeds 64 bits");
        return static_cast<uint64_t>(d_->order_minus_one + 1);
    }
    bool is_prime_field() const noexcept { return d_->k == 1; }
    bool has_tables() const noexcept { return d_->tables; }

    Elem zero() const noexcept { return {}; }
    Elem one() const noexcept { return {1}; }
    /// The class of x modulo the modulus (0 in a prime field).
    Elem generator() const noexcept { return d_->k == 1 ? Elem{} : (d_->p == 2 ? Elem{2} : Elem{d_->p}); }
    Elem from_int(int64_t n) const noexcept {
        const int64_t p = d_->p;
        int64_t r = n % p;
        if (r < 0) r += p;
        return {static_cast<u128>(r)};
    }

    bool is_zero(const Elem& a) const noexcept { return a.v == 0; }
    bool equal(const Elem& a, const Elem& b) const noexcept { return a.v == b.v; }

    Elem add(const Elem& a, const Elem& b) const noexcept {
        const auto& d = *d_;
        if (d.p == 2) return {a.v ^ b.v};
        if (d.k == 1) {
            const uint64_t s = static_cast<uint64_t>(a.v) + static_cast<uint64_t>(b.v);
            return {s >= d.p ? s - d.p : s};
        }
        uint64_t x = static_cast<uint64_t>(a.v), y = static_cast<uint64_t>(b.v), out = 0;
        for (unsigned i = 0; i < d.k && (x || y); ++i) {
            uint64_t s = x % d.p + y % d.p;
            if (s >= d.p) s -= d.p;
            out += s * d.pow_p[i];
            x /= d.p;
            y /= d.p;
        }
        return {out};
    }

    Elem neg(const Elem& a) const noexcept {
        const auto& d = *d_;
        if (d.p == 2 || a.v == 0) return a;
        if (d.k == 1) return {d.p - a.v};
        uint64_t x = static_cast<uint64_t>(a.v), out = 0;
        for (unsigned i = 0; i < d.k && x; ++i) {
            const uint64_t c = x % d.p;
            if (c) out += (d.p - c) * d.pow_p[i];
            x /= d.p;
        }
        return {out};
    }

    Elem sub(const Elem& a, const Elem& b) const noexcept { return d_->p == 2 ? Elem{a.v ^ b.v} : add(a, neg(b)); }

    Elem mul(const Elem& a, const Elem& b) const noexcept {
        if (a.v == 0 || b.v == 0) return {};
        const auto& d = *d_;
        if (d.k == 1) return {static_cast<uint64_t>(a.v) * static_cast<uint64_t>(b.v) % d.p};
        if (d.tables) {
            uint32_t s = d.log[static_cast<uint32_t>(a.v)] + d.log[static_cast<uint32_t>(b.v)];
            return {d.exp[s]};
        }
        if (d.p == 2) return mul2(a.v, b.v);
        return mul_odd(a, b);
    }

    Elem sqr(const Elem& a) const noexcept { return mul(a, a); }

    Elem pow(Elem a, u128 n) const noexcept {
        const auto& d = *d_;
        if (d.tables && a.v != 0) {
            const uint64_t q1 = static_cast<uint64_t>(d.order_minus_one);
            const uint64_t e = static_cast<uint64_t>(n % q1);
            return {d.exp[static_cast<uint64_t>(d.log[static_cast<uint32_t>(a.v)]) * e % q1]};
        }
        Elem r = one();
        while (n) {
            if (n & 1) r = mul(r, a);
            n >>= 1;
            if (n) a = mul(a, a);
        }
        return r;
    }

    Elem inv(const Elem& a) const {
        if (a.v == 0) throw division_by_zero("inverse of zero in F_" + std::to_string(d_->p) + "^" + std::to_string(d_->k));
        const auto& d = *d_;
        if (d.k == 1) return {detail::mod_inv_u64(static_cast<uint64_t>(a.v), d.p)};
        if (d.tables) {
            const uint32_t q1 = static_cast<uint32_t>(d.order_minus_one);
            const uint32_t l = d.log[static_cast<uint32_t>(a.v)];
            return {d.exp[(q1 - l) % q1]};
        }
        return pow(a, d.order_minus_one - 1);
    }

    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    /// a^{p^r}.
    Elem frobenius(const Elem& a, unsigned r) const noexcept {
        const auto& d = *d_;
        r %= d.k;
        if (r == 0 || a.v == 0 || d.k == 1) return a;
        if (d.tables) {
            const uint64_t q1 = static_cast<uint64_t>(d.order_minus_one);
            uint64_t e = d.log[static_cast<uint32_t>(a.v)];
            for (unsigned i = 0; i < r; ++i) e = e * d.p % q1;
            return {d.exp[e]};
        }
        Elem x = a;
        for (unsigned i = 0; i < r; ++i) x = d.p == 2 ? mul(x, x) : pow(x, d.p);
        return x;
    }

    /// The exponent r with q = p^r; throws if q is not a positive power of p.
    unsigned log_p(uint64_t q) const {
        unsigned r = 0;
        uint64_t x = q;
        while (x > 1 && x % d_->p == 0) {
            x /= d_->p;
            ++r;
        }
        if (x != 1 || r == 0)
            throw precondition_error(std::to_string(q) + " is not a power of the characteristic " + std::to_string(d_->p));
        return r;
    }

    /// a^q for q a power of the characteristic.
    Elem qth_power(const Elem& a, uint64_t q) const { return frobenius(a, log_p(q)); }

    std::vector<uint32_t> coords(const Elem& a) const {
        const auto& d = *d_;
        std::vector<uint32_t> out(d.k, 0);
        if (d.p == 2) {
            for (unsigned i = 0; i < d.k; ++i) out[i] = static_cast<uint32_t>((a.v >> i) & 1);
        } else {
            uint64_t x = static_cast<uint64_t>(a.v);
            for (unsigned i = 0; i < d.k; ++i) {
                out[i] = static_cast<uint32_t>(x % d.p);
                x /= d.p;
            }
        }
        return out;
    }

    /// Coordinate i of a (coefficient of g^i).
    uint32_t coord(const Elem& a, unsigned i) const noexcept {
        const auto& d = *d_;
        if (d.p == 2) return static_cast<uint32_t>((a.v >> i) & 1);
        return static_cast<uint32_t>(static_cast<uint64_t>(a.v) / d.pow_p[i] % d.p);
    }

    Elem from_coords(std::span<const uint32_t> c) const {
        const auto& d = *d_;
        if (c.size() != d.k) throw precondition_error("coordinate vector has length " + std::to_string(c.size()) +
                                                      ", expected " + std::to_string(d.k));
        Elem out;
        for (unsigned i = 0; i < d.k; ++i) {
            if (c[i] >= d.p) throw precondition_error("coordinate out of range [0, p)");
            if (d.p == 2)
                out.v |= static_cast<u128>(c[i]) << i;
            else
                out.v += static_cast<u128>(c[i]) * d.pow_p[i];
        }
        return out;
    }

    /// Lexicographic order of coordinate vectors, constant term first.
    bool lex_less(const Elem& a, const Elem& b) const noexcept {
        if (a.v == b.v) return false;
        if (d_->p == 2) {
            const u128 x = a.v ^ b.v;
            const u128 low = x & (~x + 1);
            return (a.v & low) == 0;
        }
        uint64_t x = static_cast<uint64_t>(a.v), y = static_cast<uint64_t>(b.v);
        for (unsigned i = 0; i < d_->k; ++i) {
            const uint64_t cx = x % d_->p, cy = y % d_->p;
            if (cx != cy) return cx < cy;
            x /= d_->p;
            y /= d_->p;
        }
        return false;
    }

    /// Smallest d | k with a^{p^d} = a.
    unsigned element_degree(const Elem& a) const noexcept {
        for (unsigned d = 1; d < d_->k; ++d)
            if (d_->k % d == 0 && frobenius(a, d) == a) return d;
        return d_->k;
    }

    template <class Rng>
    Elem random(Rng& rng) const {
        const auto& d = *d_;
        if (d.p == 2) {
            u128 v = (static_cast<u128>(rng()) << 64) | static_cast<uint64_t>(rng());
            return {v & d.mask};
        }
        std::uniform_int_distribution<uint32_t> dist(0, d.p - 1);
        Elem out;
        for (unsigned i = 0; i < d.k; ++i) out.v += static_cast<u128>(dist(rng)) * d.pow_p[i];
        return out;
    }

    /// Enumerates the field in coordinate-lexicographic order (|F| <= 2^24).
    std::vector<Elem> elements() const {
        const uint64_t n = size();
        if (n > (1u << 24)) throw guard_exceeded("refusing to enumerate more than 2^24 field elements");
        std::vector<Elem> out;
        out.reserve(n);
        for (uint64_t i = 0; i < n; ++i) out.push_back({i});
        std::sort(out.begin(), out.end(), [this](const Elem& a, const Elem& b) { return lex_less(a, b); });
        return out;
    }

    /// Polynomial in the generator g, highest power first: "g^2 + 1", "2*g + 1", "0".
    std::string to_string(const Elem& a) const {
        if (a.v == 0) return "0";
        const auto c = coords(a);
        std::string s;
        for (unsigned i = d_->k; i-- > 0;) {
            if (!c[i]) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += std::to_string(c[i]);
                continue;
            }
            if (c[i] != 1) s += std::to_string(c[i]) + "*";
            s += i == 1 ? "g" : "g^" + std::to_string(i);
        }
        return s;
    }

    std::string name() const {
        return "F_" + std::to_string(d_->p) + (d_->k > 1 ? "^" + std::to_string(d_->k) : std::string{});
    }

    friend bool operator==(const GF& a, const GF& b) noexcept {
        return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->k == b.d_->k);
    }

   private:
    explicit GF(std::shared_ptr<const detail::GFData> d) : d_(std::move(d)) {}
    static std::shared_ptr<const detail::GFData> build(uint32_t p, unsigned k);

    Elem mul2(u128 a, u128 b) const noexcept {
        const auto& d = *d_;
        detail::U256 prod = detail::clmul128(a, b);
        const int k = static_cast<int>(d.k);
        int deg = detail::degree256(prod);
        while (deg >= k) {
            const int s = std::max(k, deg - 63);
            const uint64_t chunk = detail::extract256(prod, s, deg - s + 1);
            // clear the chunk
            detail::U256 clear = detail::shl256({static_cast<u128>(chunk), 0}, s);
            prod.lo ^= clear.lo;
            prod.hi ^= clear.hi;
            // add chunk * low * x^{s-k}
            detail::U256 fold = detail::shl256(detail::clmul128(chunk, d.low), s - k);
            prod.lo ^= fold.lo;
            prod.hi ^= fold.hi;
            deg = detail::degree256(prod);
        }
        return {prod.lo};
    }

    Elem mul_odd(const Elem& a, const Elem& b) const noexcept {
        const auto& d = *d_;
        const unsigned k = d.k;
        const uint64_t p = d.p;
        uint64_t x[32], y[32], r[64] = {};
        uint64_t ax = static_cast<uint64_t>(a.v), bx = static_cast<uint64_t>(b.v);
        for (unsigned i = 0; i < k; ++i) {
            x[i] = ax % p;
            ax /= p;
            y[i] = bx % p;
            bx /= p;
        }
        for (unsigned i = 0; i < k; ++i) {
            if (!x[i]) continue;
            for (unsigned j = 0; j < k; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
        }
        for (unsigned i = 2 * k - 1; i-- > k;) {
            const uint64_t c = r[i];
            if (!c) continue;
            for (unsigned j = 0; j < k; ++j) r[i - k + j] = (r[i - k + j] + (p - c) * d.modulus[j]) % p;
        }
        uint64_t out = 0;
        for (unsigned i = 0; i < k; ++i) out += r[i] * d.pow_p[i];
        return {out};
    }

    std::shared_ptr<const detail::GFData> d_;
};

inline std::shared_ptr<const detail::GFData> GF::build(uint32_t p, unsigned k) {
    auto d = std::make_shared<detail::GFData>();
    d->p = p;
    d->k = k;
    d->modulus = detail::find_modulus(p, k);
    if (p == 2) {
        d->order_minus_one = k == 128 ? ~static_cast<u128>(0) : (static_cast<u128>(1) << k) - 1;
        d->mask = d->order_minus_one;
        for (unsigned i = 0; i < k; ++i)
            if (d->modulus[i]) d->low |= static_cast<u128>(1) << i;
    } else {
        u128 q = 1;
        for (unsigned i = 0; i < k; ++i) {
            d->pow_p.push_back(static_cast<uint64_t>(q));
            q *= p;
        }
        d->order_minus_one = q - 1;
    }
    const u128 order_m1 = d->order_minus_one;
    if (k >= 2 && order_m1 < (1u << 16)) {
        // find a primitive element and build log/exp tables with the untabled multiply
        GF raw(d);
        const uint64_t q1 = static_cast<uint64_t>(order_m1);
        const auto factors = detail::prime_factors(q1);
        for (uint64_t cand = 2; cand <= q1; ++cand) {
            const Elem g{cand};
            bool primitive = true;
            for (uint64_t l : factors) {
                if (raw.pow(g, q1 / l) == raw.one()) {
                    primitive = false;
                    break;
                }
            }
            if (!primitive) continue;
            d->exp.assign(2 * q1 + 1, 0);
            d->log.assign(q1 + 1, 0);
            Elem x = raw.one();
            for (uint64_t i = 0; i < q1; ++i) {
                d->exp[i] = static_cast<uint32_t>(x.v);
                d->exp[i + q1] = static_cast<uint32_t>(x.v);
                d->log[static_cast<uint32_t>(x.v)] = static_cast<uint32_t>(i);
                x = raw.mul(x, g);
            }
            d->exp[2 * q1] = d->exp[0];
            break;
        }
        d->tables = true;
    }
    return d;
}

inline GF GF::make(uint32_t p, unsigned k) {
    if (!detail::is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw guard_exceeded("characteristic must be below 2^31");
    if (k == 0) throw precondition_error("extension degree must be positive");
    if (p == 2) {
        if (k > 128) throw guard_exceeded("F_2^" + std::to_string(k) + " exceeds the 128-bit element limit");
    } else {
        if (k > 32) throw guard_exceeded("extension degree above 32 for odd characteristic");
        u128 q = 1;
        for (unsigned i = 0; i < k; ++i) {
            q *= p;
            if (q >= (static_cast<u128>(1) << 64))
                throw guard_exceeded("F_" + std::to_string(p) + "^" + std::to_string(k) + " exceeds 64-bit packing");
        }
    }
    static std::mutex mu;
    static std::map<std::pair<uint32_t, unsigned>, std::shared_ptr<const detail::GFData>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({p, k});
        if (it != cache.end()) return GF(it->second);
    }
    auto data = build(p, k);
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(std::make_pair(p, k), std::move(data));
    return GF(it->second);
}

inline GF make_field(uint32_t p, unsigned k) { return GF::make(p, k); }

/// An element bundled with its field; the value-semantic public face of GF arithmetic.
class FieldElement {
   public:
    FieldElement(GF field, Elem value) : field_(std::move(field)), value_(value) {}
    static FieldElement from_coords(const GF& f, std::span<const uint32_t> c) { return {f, f.from_coords(c)}; }

    const GF& field() const noexcept { return field_; }
    const Elem& value() const noexcept { return value_; }
    std::vector<uint32_t> coords() const { return field_.coords(value_); }
    bool is_zero() const noexcept { return value_.v == 0; }
    std::string to_string() const { return field_.to_string(value_); }

    FieldElement operator+(const FieldElement& o) const { return {field_, field_.add(value_, check(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, field_.sub(value_, check(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, field_.mul(value_, check(o))}; }
    FieldElement operator/(const FieldElement& o) const { return {field_, field_.div(value_, check(o))}; }
    FieldElement operator-() const { return {field_, field_.neg(value_)}; }
    FieldElement inv() const { return {field_, field_.inv(value_)}; }
    FieldElement pow(u128 n) const { return {field_, field_.pow(value_, n)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

   private:
    const Elem& check(const FieldElement& o) const {
        if (!(o.field_ == field_)) throw field_mismatch("operands in " + field_.name() + " and " + o.field_.name());
        return o.value_;
    }

    GF field_;
    Elem value_;
};

inline std::vector<uint32_t> coords(const FieldElement& e) { return e.coords(); }

/// e^q for q a power of the characteristic, by repeated p-th powering.
inline FieldElement frobenius(const FieldElement& e, uint64_t q) {
    return {e.field(), e.field().frobenius(e.value(), e.field().log_p(q))};
}

}  // namespace qlin

#endif

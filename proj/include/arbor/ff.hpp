/*
   Copyright 2026 The arbor Authors

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

#ifndef ARBOR_FF_HPP
#define ARBOR_FF_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arbor {

/// Largest supported extension degree k of F_{p^k} over its prime field.
inline constexpr std::size_t kMaxExtensionDegree = 16;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw std::domain_error("inverse of zero in finite field");
    std::int64_t v = s0 % static_cast<std::int64_t>(p);
    if (v < 0) v += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(v);
}

// Dense polynomials over F_p with machine-word coefficients; only used to
// find and validate extension moduli, below any higher-level polynomial type.
using RawPoly = std::vector<std::uint64_t>;

inline void raw_trim(RawPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    RawPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    // m is monic
    const std::size_t k = m.size() - 1;
    for (std::size_t i = r.size(); i-- > k;) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= k; ++j) r[i - k + j] = (r[i - k + j] + p - mulmod(c, m[j], p)) % p;
    }
    r.resize(std::min(r.size(), k));
    raw_trim(r);
    return r;
}

inline RawPoly raw_powmod(RawPoly base, std::uint64_t e, const RawPoly& m, std::uint64_t p) {
    RawPoly r{1};
    while (e) {
        if (e & 1) r = raw_mulmod(r, base, m, p);
        base = raw_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline RawPoly raw_mod(RawPoly a, const RawPoly& b, std::uint64_t p) {
    raw_trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv_lc = invmod(b.back(), p);
    while (!a.empty() && a.size() - 1 >= db) {
        std::uint64_t c = mulmod(a.back(), inv_lc, p);
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
        raw_trim(a);
    }
    return a;
}

inline std::size_t raw_gcd_degree(RawPoly a, RawPoly b, std::uint64_t p) {
    raw_trim(a);
    raw_trim(b);
    while (!b.empty()) {
        RawPoly r = raw_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// Rabin's test: m of degree k is irreducible iff x^{p^k} = x mod m and
// gcd(x^{p^{k/r}} - x, m) = 1 for each prime r | k.
inline bool raw_irreducible(const RawPoly& m, std::uint64_t p) {
    const std::size_t k = m.size() - 1;
    if (k == 1) return true;
    std::vector<RawPoly> frob(k + 1);
    frob[0] = RawPoly{0, 1};
    for (std::size_t i = 1; i <= k; ++i) frob[i] = raw_powmod(frob[i - 1], p, m, p);
    RawPoly diff = frob[k];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    raw_trim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t r : prime_divisors(k)) {
        RawPoly h = frob[k / r];
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        raw_trim(h);
        if (h.empty() || raw_gcd_degree(m, h, p) != 0) return false;
    }
    return true;
}

}  // namespace detail

/// A finite field F_{p^k} = F_p[g]/(modulus(g)), p odd.
///
/// Instances are interned (see `intern_field`) and live for the whole
/// program, so elements refer to their field through a plain pointer and two
/// elements share a field exactly when the pointers are equal.
class FieldSpec {
   public:
    FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
        if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
        if (!detail::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (modulus_.size() < 2 || modulus_.back() != 1)
            throw std::invalid_argument("field modulus must be monic of degree >= 1");
        if (modulus_.size() - 1 > kMaxExtensionDegree)
            throw std::invalid_argument("extension degree exceeds " + std::to_string(kMaxExtensionDegree));
        for (auto c : modulus_)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        k_ = modulus_.size() - 1;
        order_ = 1;
        for (std::size_t i = 0; i < k_; ++i) {
            if (order_ > (std::uint64_t{1} << 62) / p) throw std::invalid_argument("field order exceeds 2^62");
            order_ *= p;
        }
        if (k_ > 1) {
            detail::RawPoly raw(modulus_.begin(), modulus_.end());
            if (!detail::raw_irreducible(raw, p)) throw std::invalid_argument("field modulus is reducible");
        }
    }

    std::uint32_t p() const noexcept { return p_; }
    std::size_t k() const noexcept { return k_; }
    /// Ascending coefficients, length k + 1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// q = p^k.
    std::uint64_t order() const noexcept { return order_; }
    bool is_prime_field() const noexcept { return k_ == 1; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

   private:
    std::uint32_t p_;
    std::size_t k_ = 1;
    std::uint64_t order_ = 0;
    std::vector<std::uint32_t> modulus_;
};

using Field = const FieldSpec*;

/// Returns the canonical shared instance for (p, modulus).
inline Field intern_field(const FieldSpec& spec) {
    static std::mutex mu;
    static std::deque<FieldSpec> storage;
    static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, Field> index;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(spec.p(), spec.modulus());
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    storage.push_back(spec);
    Field f = &storage.back();
    index.emplace(std::move(key), f);
    return f;
}

/// F_p with the degree-1 placeholder modulus x.
inline Field prime_field(std::uint32_t p) { return intern_field(FieldSpec(p, {0, 1})); }

/// F_{p^k} with a modulus found by scanning monic degree-k candidates in a
/// seeded order. Seed 0 scans in increasing base-p order of the lower
/// coefficients (constant term least significant); any other seed scans an
/// affine permutation of that order derived from the seed.
inline Field make_extension(std::uint32_t p, std::size_t k, std::uint64_t seed) {
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (!detail::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("extension degree must be >= 1");
    if (k == 1) return prime_field(p);
    if (k > kMaxExtensionDegree) throw std::invalid_argument("extension degree too large");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > (std::uint64_t{1} << 62) / p) throw std::invalid_argument("field order exceeds 2^62");
        total *= p;
    }
    std::uint64_t offset = 0, stride = 1;
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        offset = rng() % total;
        do {
            stride = 1 + rng() % (total - 1);
        } while (stride % p == 0);
    }
    for (std::uint64_t i = 0; i < total; ++i) {
        std::uint64_t idx = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(i) * stride + offset) % total);
        detail::RawPoly cand(k + 1, 0);
        cand[k] = 1;
        for (std::size_t j = 0; j < k; ++j) {
            cand[j] = idx % p;
            idx /= p;
        }
        if (cand[0] == 0) continue;  // divisible by x
        if (detail::raw_irreducible(cand, p)) {
            std::vector<std::uint32_t> mod(cand.begin(), cand.end());
            return intern_field(FieldSpec(p, std::move(mod)));
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable for prime p
}

/// An element of a finite field: k residues mod p on the power basis.
class Fe {
   public:
    Fe() = default;
    explicit Fe(Field f) : field_(f) {}

    static Fe from_int(Field f, std::int64_t v) {
        Fe r(f);
        std::int64_t p = f->p();
        std::int64_t m = v % p;
        if (m < 0) m += p;
        r.c_[0] = static_cast<std::uint32_t>(m);
        return r;
    }

    static Fe from_coeffs(Field f, std::span<const std::uint32_t> coeffs) {
        if (coeffs.size() > f->k()) throw std::invalid_argument("too many coefficients for field element");
        Fe r(f);
        for (std::size_t i = 0; i < coeffs.size(); ++i) r.c_[i] = coeffs[i] % f->p();
        return r;
    }

    /// Element whose coefficients are the base-p digits of `index`; a
    /// bijection [0, q) -> F_q.
    static Fe from_index(Field f, std::uint64_t index) {
        Fe r(f);
        for (std::size_t i = 0; i < f->k(); ++i) {
            r.c_[i] = static_cast<std::uint32_t>(index % f->p());
            index /= f->p();
        }
        return r;
    }

    /// The class of the generator g (the variable of the modulus).
    static Fe generator(Field f) {
        if (f->k() == 1) return from_int(f, -static_cast<std::int64_t>(f->modulus()[0]));
        Fe r(f);
        r.c_[1] = 1;
        return r;
    }

    Field field() const noexcept { return field_; }
    std::span<const std::uint32_t> coeffs() const noexcept { return {c_.data(), field_ ? field_->k() : 0}; }
    std::uint32_t operator[](std::size_t i) const noexcept { return c_[i]; }

    std::uint64_t index() const noexcept {
        std::uint64_t r = 0;
        for (std::size_t i = field_->k(); i-- > 0;) r = r * field_->p() + c_[i];
        return r;
    }

    bool is_zero() const noexcept {
        return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
    }
    bool is_one() const noexcept {
        if (c_[0] != 1) return false;
        return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
    }
    /// True when the element lies in the prime subfield.
    bool is_prime_subfield() const noexcept {
        return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
    }

    Fe operator-() const {
        Fe r(field_);
        const std::uint32_t p = field_->p();
        for (std::size_t i = 0; i < field_->k(); ++i) r.c_[i] = c_[i] ? p - c_[i] : 0;
        return r;
    }

    Fe& operator+=(const Fe& o) {
        check_same(o);
        const std::uint32_t p = field_->p();
        for (std::size_t i = 0; i < field_->k(); ++i) {
            std::uint32_t s = c_[i] + o.c_[i];
            c_[i] = s >= p ? s - p : s;
        }
        return *this;
    }
    Fe& operator-=(const Fe& o) {
        check_same(o);
        const std::uint32_t p = field_->p();
        for (std::size_t i = 0; i < field_->k(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
        return *this;
    }
    Fe& operator*=(const Fe& o) {
        check_same(o);
        *this = multiply(*this, o);
        return *this;
    }

    friend Fe operator+(Fe a, const Fe& b) { return a += b; }
    friend Fe operator-(Fe a, const Fe& b) { return a -= b; }
    friend Fe operator*(const Fe& a, const Fe& b) {
        a.check_same(b);
        return multiply(a, b);
    }

    friend bool operator==(const Fe& a, const Fe& b) noexcept { return a.field_ == b.field_ && a.c_ == b.c_; }
    friend bool operator!=(const Fe& a, const Fe& b) noexcept { return !(a == b); }
    /// Canonical order: by index (highest basis coefficient most significant).
    friend bool operator<(const Fe& a, const Fe& b) noexcept {
        for (std::size_t i = kMaxExtensionDegree; i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

   private:
    Field field_ = nullptr;
    std::array<std::uint32_t, kMaxExtensionDegree> c_{};

    void check_same(const Fe& o) const {
        if (field_ != o.field_) throw std::invalid_argument("field elements from different fields");
    }

    static Fe multiply(const Fe& a, const Fe& b) {
        const Field f = a.field_;
        const std::size_t k = f->k();
        const std::uint64_t p = f->p();
        Fe r(f);
        if (k == 1) {
            r.c_[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.c_[0]) * b.c_[0] % p);
            return r;
        }
        std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
        const bool small = p < (1u << 20);
        for (std::size_t i = 0; i < k; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                std::uint64_t prod = static_cast<std::uint64_t>(a.c_[i]) * b.c_[j];
                acc[i + j] += small ? prod : prod % p;
            }
        }
        for (std::size_t i = 0; i < 2 * k - 1; ++i) acc[i] %= p;
        const auto& m = f->modulus();
        for (std::size_t i = 2 * k - 1; i-- > k;) {
            std::uint64_t c = acc[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                acc[i - k + j] = (acc[i - k + j] + (p - c) * m[j]) % p;
            }
        }
        for (std::size_t i = 0; i < k; ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i]);
        return r;
    }
};

inline Fe pow(Fe base, std::uint64_t e) {
    Fe r = Fe::from_int(base.field(), 1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Inverse by the extended Euclidean algorithm modulo the field modulus.
inline Fe inv(const Fe& a) {
    const Field f = a.field();
    const std::uint64_t p = f->p();
    if (a.is_zero()) throw std::domain_error("inverse of zero in finite field");
    if (f->k() == 1) return Fe::from_int(f, static_cast<std::int64_t>(detail::invmod(a[0], p)));
    using detail::RawPoly;
    RawPoly r0(f->modulus().begin(), f->modulus().end());
    RawPoly r1(a.coeffs().begin(), a.coeffs().end());
    detail::raw_trim(r1);
    RawPoly s0{}, s1{1};
    auto sub_mul = [p](const RawPoly& x, const RawPoly& q, const RawPoly& y) {
        // x - q*y
        RawPoly out = x;
        if (q.empty() || y.empty()) return out;
        out.resize(std::max(out.size(), q.size() + y.size() - 1), 0);
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                out[i + j] = (out[i + j] + p - detail::mulmod(q[i], y[j], p)) % p;
        detail::raw_trim(out);
        return out;
    };
    while (!r1.empty()) {
        // q, r = divmod(r0, r1)
        RawPoly rem = r0, q;
        const std::size_t d1 = r1.size() - 1;
        const std::uint64_t inv_lc = detail::invmod(r1.back(), p);
        if (rem.size() >= r1.size()) q.assign(rem.size() - d1, 0);
        while (!rem.empty() && rem.size() - 1 >= d1) {
            std::uint64_t c = detail::mulmod(rem.back(), inv_lc, p);
            std::size_t shift = rem.size() - 1 - d1;
            q[shift] = c;
            for (std::size_t j = 0; j <= d1; ++j)
                rem[shift + j] = (rem[shift + j] + p - detail::mulmod(c, r1[j], p)) % p;
            detail::raw_trim(rem);
        }
        detail::raw_trim(q);
        RawPoly s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant
    std::uint64_t scale = detail::invmod(r0[0], p);
    std::vector<std::uint32_t> out(f->k(), 0);
    for (std::size_t i = 0; i < s0.size() && i < out.size(); ++i)
        out[i] = static_cast<std::uint32_t>(detail::mulmod(s0[i], scale, p));
    return Fe::from_coeffs(f, out);
}

/// a^p.
inline Fe frobenius(const Fe& a) { return pow(a, a.field()->p()); }

/// Uniform random element.
template <class Rng>
Fe random_fe(Field f, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f->p() - 1);
    std::array<std::uint32_t, kMaxExtensionDegree> c{};
    for (std::size_t i = 0; i < f->k(); ++i) c[i] = dist(rng);
    return Fe::from_coeffs(f, std::span<const std::uint32_t>(c.data(), f->k()));
}

/// Maps `a` into `target`. Supported when both fields coincide or when `a`
/// lives in the prime field of `target`'s characteristic.
inline Fe embed(const Fe& a, Field target) {
    if (a.field() == target) return a;
    if (a.field()->p() == target->p() && (a.field()->is_prime_field() || a.is_prime_subfield()))
        return Fe::from_int(target, a[0]);
    throw std::invalid_argument("no embedding between the given fields");
}

/// Whether a is a square (0 counts as a square).
inline bool is_square(const Fe& a) {
    if (a.is_zero()) return true;
    return pow(a, (a.field()->order() - 1) / 2).is_one();
}

/// Integer for prime-field elements, otherwise `(c0 + c1*g + ...)` in the
/// generator g.
inline std::string to_string(const Fe& a) {
    if (a.field()->is_prime_field()) return std::to_string(a[0]);
    std::string out;
    for (std::size_t i = a.field()->k(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || a[i] != 1) out += std::to_string(a[i]);
        if (i > 0) {
            if (a[i] != 1) out += "*";
            out += "g";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    if (out.empty()) return "0";
    return "(" + out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Fe& a) { return os << to_string(a); }

}  // namespace arbor

#endif  // ARBOR_FF_HPP

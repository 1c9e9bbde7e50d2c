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

#ifndef ARBOR_POLY_HPP
#define ARBOR_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "ff.hpp"

namespace arbor {

template <class C>
class Poly;

/// Coefficient-domain interface: every domain in the tower F_q, F_q[t],
/// F_q[t][s], ... knows its base field and can build 0, 1 and integers.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Fe> {
    static constexpr bool is_field = true;
    static constexpr int depth = 0;
    static Fe zero(Field f) { return Fe(f); }
    static Fe one(Field f) { return Fe::from_int(f, 1); }
    static Fe from_int(Field f, std::int64_t v) { return Fe::from_int(f, v); }
    static bool is_zero(const Fe& a) { return a.is_zero(); }
};

template <class C>
struct ring_traits<Poly<C>> {
    static constexpr bool is_field = false;
    static constexpr int depth = ring_traits<C>::depth + 1;
    static Poly<C> zero(Field f) { return Poly<C>(f); }
    static Poly<C> one(Field f) { return Poly<C>::constant(ring_traits<C>::one(f)); }
    static Poly<C> from_int(Field f, std::int64_t v) { return Poly<C>::constant(ring_traits<C>::from_int(f, v)); }
    static bool is_zero(const Poly<C>& a) { return a.is_zero(); }
};

inline Field field_of(const Fe& a) { return a.field(); }
inline bool is_zero(const Fe& a) { return a.is_zero(); }

/// Division in a field.
inline Fe exact_div(const Fe& a, const Fe& b) { return a * inv(b); }

/// Dense univariate polynomial over a coefficient domain C, ascending
/// coefficients with no trailing zeros. The zero polynomial has no
/// coefficients but still knows its field.
template <class C>
class Poly {
   public:
    using coeff_type = C;

    Poly() = default;
    explicit Poly(Field f) : field_(f) {}
    Poly(Field f, std::vector<C> coeffs) : field_(f), c_(std::move(coeffs)) { normalize(); }

    static Poly constant(C c) {
        Field f = field_of(c);
        Poly r(f);
        if (!ring_traits<C>::is_zero(c)) r.c_.push_back(std::move(c));
        return r;
    }
    static Poly monomial(C c, std::size_t deg) {
        Field f = field_of(c);
        if (ring_traits<C>::is_zero(c)) return Poly(f);
        std::vector<C> v(deg + 1, ring_traits<C>::zero(f));
        v[deg] = std::move(c);
        return Poly(f, std::move(v));
    }
    /// The variable itself.
    static Poly variable(Field f) { return monomial(ring_traits<C>::one(f), 1); }

    Field field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == ring_traits<C>::one(field_); }
    bool is_monic() const { return !c_.empty() && c_.back() == ring_traits<C>::one(field_); }

    const std::vector<C>& coeffs() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }
    /// Coefficient of var^i, zero beyond the degree.
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_traits<C>::zero(field_); }
    const C& operator[](std::size_t i) const { return c_.at(i); }
    const C& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    void set_coeff(std::size_t i, C c) {
        if (i >= c_.size()) {
            if (ring_traits<C>::is_zero(c)) return;
            c_.resize(i + 1, ring_traits<C>::zero(field_));
        }
        c_[i] = std::move(c);
        normalize();
    }

    Poly operator-() const {
        Poly r(field_);
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(-c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ring_traits<C>::zero(field_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ring_traits<C>::zero(field_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.field_ ? a.field_ : b.field_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, ring_traits<C>::zero(r.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_traits<C>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Canonical order: by degree, then coefficients from the top down.
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i] < b.c_[i]) return true;
            if (b.c_[i] < a.c_[i]) return false;
        }
        return false;
    }

   private:
    Field field_ = nullptr;
    std::vector<C> c_;

    void normalize() {
        while (!c_.empty() && ring_traits<C>::is_zero(c_.back())) c_.pop_back();
    }
};

template <class C>
Field field_of(const Poly<C>& p) {
    return p.field();
}
template <class C>
bool is_zero(const Poly<C>& p) {
    return p.is_zero();
}

using TPoly = Poly<Fe>;

// ---------------------------------------------------------------------------
// Basic operations

template <class C>
Poly<C> scale(const Poly<C>& p, const C& s) {
    std::vector<C> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.push_back(c * s);
    return Poly<C>(p.field(), std::move(v));
}

/// Multiplies by var^k.
template <class C>
Poly<C> shift(const Poly<C>& p, std::size_t k) {
    if (p.is_zero()) return p;
    std::vector<C> v(k, ring_traits<C>::zero(p.field()));
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return Poly<C>(p.field(), std::move(v));
}

template <class C>
Poly<C> derivative(const Poly<C>& p) {
    if (p.degree() < 1) return Poly<C>(p.field());
    std::vector<C> v;
    v.reserve(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        v.push_back(p[i] * ring_traits<C>::from_int(p.field(), static_cast<std::int64_t>(i)));
    return Poly<C>(p.field(), std::move(v));
}

template <class C>
C evaluate(const Poly<C>& p, const C& x) {
    C acc = ring_traits<C>::zero(p.field());
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

/// p(q) by Horner's rule.
template <class C>
Poly<C> compose(const Poly<C>& p, const Poly<C>& q) {
    Poly<C> acc(p.field());
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + Poly<C>::constant(p[i]);
    return acc;
}

template <class C>
C power(C base, std::uint64_t e) {
    C r = ring_traits<C>::one(field_of(base));
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

/// Long division. Each step divides the running leading coefficient exactly
/// by lc(b); over a field this always succeeds, over a ring it throws
/// std::domain_error when a quotient coefficient does not exist.
template <class C>
std::pair<Poly<C>, Poly<C>> divmod(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Field f = a.field() ? a.field() : b.field();
    if (a.degree() < b.degree()) return {Poly<C>(f), a};
    std::vector<C> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<C> q(rem.size() - db, ring_traits<C>::zero(f));
    const bool monic = b.is_monic();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (is_zero(rem[i])) continue;
        C c = monic ? rem[i] : exact_div(rem[i], b.lc());
        const std::size_t s = i - db;
        for (std::size_t j = 0; j <= db; ++j) rem[s + j] -= c * b[j];
        q[s] = std::move(c);
    }
    rem.resize(db);
    return {Poly<C>(f, std::move(q)), Poly<C>(f, std::move(rem))};
}

template <class C>
Poly<C> operator/(const Poly<C>& a, const Poly<C>& b) {
    return divmod(a, b).first;
}
template <class C>
Poly<C> operator%(const Poly<C>& a, const Poly<C>& b) {
    return divmod(a, b).second;
}

/// a / b, requiring a zero remainder.
template <class C>
Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

/// Pseudo-remainder: lc(b)^{deg a - deg b + 1} * a mod b, computed without
/// division.
template <class C>
Poly<C> prem(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
    if (a.degree() < b.degree()) return a;
    const int db = b.degree();
    const C& lb = b.lc();
    int e = a.degree() - db + 1;
    Poly<C> r = a;
    while (!r.is_zero() && r.degree() >= db) {
        Poly<C> t = shift(scale(b, r.lc()), static_cast<std::size_t>(r.degree() - db));
        r = scale(r, lb) - t;
        --e;
    }
    if (e > 0) r = scale(r, power(lb, static_cast<std::uint64_t>(e)));
    return r;
}

template <class C>
Poly<C> make_monic(const Poly<C>& p) {
    if (p.is_zero()) return p;
    if constexpr (ring_traits<C>::is_field) {
        return scale(p, inv(p.lc()));
    } else {
        std::vector<C> v;
        for (const auto& c : p.coeffs()) v.push_back(exact_div(c, p.lc()));
        return Poly<C>(p.field(), std::move(v));
    }
}

/// Monic gcd over a field of coefficients.
template <class C>
Poly<C> gcd(Poly<C> a, Poly<C> b) {
    static_assert(ring_traits<C>::is_field, "gcd needs field coefficients");
    while (!b.is_zero()) {
        Poly<C> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Extended gcd over a field: returns (g, s, t) with s*a + t*b = g monic.
template <class C>
std::tuple<Poly<C>, Poly<C>, Poly<C>> xgcd(Poly<C> a, Poly<C> b) {
    static_assert(ring_traits<C>::is_field, "xgcd needs field coefficients");
    Field f = a.field() ? a.field() : b.field();
    Poly<C> s0 = Poly<C>::constant(ring_traits<C>::one(f)), s1(f);
    Poly<C> t0(f), t1 = Poly<C>::constant(ring_traits<C>::one(f));
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<C> s2 = s0 - q * s1;
        Poly<C> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    C il = inv(a.lc());
    return {scale(a, il), scale(s0, il), scale(t0, il)};
}

// ---------------------------------------------------------------------------
// Resultants. Both routes use the Sylvester-determinant convention
// Res(f, g) = lc(f)^{deg g} * prod_{f(a)=0} g(a).

/// Euclidean resultant over a field.
template <class C>
C resultant_euclid(Poly<C> a, Poly<C> b) {
    static_assert(ring_traits<C>::is_field, "Euclidean resultant needs field coefficients");
    Field f = a.field() ? a.field() : b.field();
    if (a.is_zero() || b.is_zero()) return ring_traits<C>::zero(f);
    C acc = ring_traits<C>::one(f);
    while (true) {
        const int da = a.degree(), db = b.degree();
        if (da == 0) return acc * power(a.lc(), static_cast<std::uint64_t>(db));
        if (db == 0) return acc * power(b.lc(), static_cast<std::uint64_t>(da));
        Poly<C> r = a % b;
        if (r.is_zero()) return ring_traits<C>::zero(f);
        // Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
        if ((da & 1) && (db & 1)) acc = -acc;
        acc = acc * power(b.lc(), static_cast<std::uint64_t>(da - r.degree()));
        a = std::move(b);
        b = std::move(r);
    }
}

/// Fraction-free resultant over an integral domain by the subresultant
/// pseudo-remainder sequence. Every division is exact.
template <class C>
C resultant_subresultant(Poly<C> a, Poly<C> b) {
    Field f = a.field() ? a.field() : b.field();
    if (a.is_zero() || b.is_zero()) return ring_traits<C>::zero(f);
    C sign = ring_traits<C>::one(f);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    }
    if (b.degree() == 0) return sign * power(b.lc(), static_cast<std::uint64_t>(a.degree()));
    C g = ring_traits<C>::one(f);
    C h = ring_traits<C>::one(f);
    while (true) {
        const int da = a.degree(), db = b.degree();
        const int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        Poly<C> r = prem(a, b);
        a = std::move(b);
        if (r.is_zero()) return ring_traits<C>::zero(f);
        C denom = g * power(h, static_cast<std::uint64_t>(delta));
        std::vector<C> v;
        v.reserve(r.size());
        for (const auto& c : r.coeffs()) v.push_back(exact_div(c, denom));
        b = Poly<C>(f, std::move(v));
        g = a.lc();
        if (delta == 0) {
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_div(power(g, static_cast<std::uint64_t>(delta)), power(h, static_cast<std::uint64_t>(delta - 1)));
        }
        if (b.degree() == 0) break;
    }
    const int da = a.degree();
    C num = power(b.lc(), static_cast<std::uint64_t>(da));
    C res = da == 1 ? num : exact_div(num, power(h, static_cast<std::uint64_t>(da - 1)));
    return sign * res;
}

/// Resultant with the Sylvester convention; Euclidean over fields,
/// subresultant otherwise.
template <class C>
C resultant(const Poly<C>& a, const Poly<C>& b) {
    if constexpr (ring_traits<C>::is_field)
        return resultant_euclid(a, b);
    else
        return resultant_subresultant(a, b);
}

// ---------------------------------------------------------------------------
// Structural helpers for nested polynomials.

/// Applies fn to every coefficient; `target` names the base field of the
/// result when fn changes it.
template <class C, class Fn>
auto map_coeffs(const Poly<C>& p, Fn&& fn, Field target = nullptr) {
    using D = std::decay_t<decltype(fn(std::declval<const C&>()))>;
    std::vector<D> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.push_back(fn(c));
    return Poly<D>(target ? target : p.field(), std::move(v));
}

/// Lifts a coefficient into the constants of Poly<C>.
template <class C>
Poly<C> lift_constant(const C& c) {
    return Poly<C>::constant(c);
}

/// Exchanges the two outermost variables: sum_{i,j} c_ij u^i v^j read as a
/// polynomial in u over polynomials in v becomes one in v over u.
template <class C>
Poly<Poly<C>> swap_outer(const Poly<Poly<C>>& p) {
    Field f = p.field();
    std::size_t inner = 0;
    for (const auto& c : p.coeffs()) inner = std::max(inner, c.size());
    std::vector<Poly<C>> out;
    out.reserve(inner);
    for (std::size_t j = 0; j < inner; ++j) {
        std::vector<C> v;
        v.reserve(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) v.push_back(p[i].coeff(j));
        out.emplace_back(f, std::move(v));
    }
    return Poly<Poly<C>>(f, std::move(out));
}

// ---------------------------------------------------------------------------
// Polynomials over finite fields

/// Squarefree test. `inseparable` flags the case f' = 0, which is reported
/// separately from `squarefree`.
struct SquarefreeReport {
    bool squarefree = false;
    bool inseparable = false;
    TPoly radical;
};

inline SquarefreeReport upoly_squarefree(const TPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree test of zero polynomial");
    SquarefreeReport rep;
    TPoly df = derivative(f);
    if (df.is_zero()) {
        rep.inseparable = true;
        rep.squarefree = f.degree() == 0;
        rep.radical = f;
        return rep;
    }
    TPoly g = gcd(f, df);
    rep.squarefree = g.degree() == 0;
    rep.radical = f / g;
    return rep;
}

/// b^e mod m with a 64-bit exponent.
inline TPoly powmod(TPoly base, std::uint64_t e, const TPoly& m) {
    TPoly r = TPoly::constant(Fe::from_int(m.field(), 1)) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        e >>= 1;
        if (e) base = (base * base) % m;
    }
    return r;
}

/// p(q) mod m.
inline TPoly compose_mod(const TPoly& p, const TPoly& q, const TPoly& m) {
    TPoly acc(m.field());
    for (std::size_t i = p.size(); i-- > 0;) acc = (acc * q + TPoly::constant(p[i])) % m;
    return acc;
}

/// p-th root of a polynomial whose derivative vanishes: coefficients move
/// from x^{ip} to x^i and each is replaced by its p-th root a^{q/p}.
inline TPoly pth_root(const TPoly& f) {
    const Field F = f.field();
    const std::uint64_t p = F->p();
    const std::uint64_t e = F->order() / p;
    std::vector<Fe> v;
    for (std::size_t i = 0; i < f.size(); i += p) v.push_back(pow(f[i], e));
    return TPoly(F, std::move(v));
}

/// A polynomial as unit * prod factor^mult with monic irreducible factors in
/// canonical order (degree, then coefficients from the top).
template <class C>
struct Factorization {
    C unit;
    std::vector<std::pair<Poly<C>, int>> factors;
};

namespace detail {

inline void squarefree_decompose(const TPoly& f, int mult, std::vector<std::pair<TPoly, int>>& out) {
    // f monic
    if (f.degree() < 1) return;
    TPoly df = derivative(f);
    if (df.is_zero()) {
        squarefree_decompose(pth_root(f), mult * static_cast<int>(f.field()->p()), out);
        return;
    }
    TPoly c = gcd(f, df);
    TPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        TPoly y = gcd(w, c);
        TPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(make_monic(z), i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree_decompose(pth_root(c), mult * static_cast<int>(f.field()->p()), out);
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<TPoly, int>> distinct_degree(TPoly f) {
    std::vector<std::pair<TPoly, int>> out;
    const Field F = f.field();
    const std::uint64_t q = F->order();
    const TPoly x = TPoly::variable(F);
    TPoly xq = powmod(x, q, f);  // x^q mod f
    TPoly h = xq;                // x^{q^i} mod f
    int i = 1;
    while (f.degree() >= 2 * i) {
        TPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
            xq = xq % f;
        }
        ++i;
        if (f.degree() < 2 * i) break;
        h = compose_mod(h, xq, f);
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

template <class Rng>
void equal_degree(const TPoly& g, int d, Rng& rng, std::vector<TPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const Field F = g.field();
    const std::uint64_t q = F->order();
    const TPoly one = TPoly::constant(Fe::from_int(F, 1));
    while (true) {
        std::vector<Fe> v;
        for (int i = 0; i < g.degree(); ++i) v.push_back(random_fe(F, rng));
        TPoly a(F, std::move(v));
        if (a.degree() < 1) continue;
        // a^{(q^d - 1)/2} = (a * a^q * ... * a^{q^{d-1}})^{(q-1)/2}
        TPoly norm = a % g, cur = a % g;
        for (int i = 1; i < d; ++i) {
            cur = powmod(cur, q, g);
            norm = (norm * cur) % g;
        }
        TPoly b = powmod(norm, (q - 1) / 2, g);
        TPoly h = gcd(g, b - one);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Complete factorization over F_{p^k} (p odd): squarefree decomposition,
/// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
/// with randomness drawn from `seed`.
inline Factorization<Fe> upoly_factor(const TPoly& f, std::uint64_t seed = 0) {
    if (f.is_zero()) throw std::invalid_argument("factorization of zero polynomial");
    if (f.field()->p() == 2) throw std::invalid_argument("characteristic 2 is not supported");
    Factorization<Fe> out{f.lc(), {}};
    if (f.degree() == 0) return out;
    std::vector<std::pair<TPoly, int>> sqf;
    detail::squarefree_decompose(make_monic(f), 1, sqf);
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [g, d] : detail::distinct_degree(part)) {
            std::vector<TPoly> irr;
            detail::equal_degree(g, d, rng, irr);
            for (auto& h : irr) out.factors.emplace_back(std::move(h), mult);
        }
    }
    // merge equal factors coming from different squarefree layers (p-th powers)
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<TPoly, int>> merged;
    for (auto& fm : out.factors) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(std::move(fm));
    }
    out.factors = std::move(merged);
    return out;
}

/// Rabin's irreducibility test over F_q.
inline bool upoly_irreducible(const TPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("irreducibility test needs degree >= 1");
    if (f.degree() == 1) return true;
    const Field F = f.field();
    const TPoly m = make_monic(f);
    const std::size_t n = static_cast<std::size_t>(m.degree());
    const TPoly x = TPoly::variable(F);
    const TPoly xq = powmod(x, F->order(), m);
    std::vector<TPoly> frob{x % m, xq};
    for (std::size_t i = 2; i <= n; ++i) frob.push_back(compose_mod(frob.back(), xq, m));
    if (frob[n] != x % m) return false;
    for (std::uint64_t r : detail::prime_divisors(n)) {
        TPoly h = frob[n / r] - x;
        if (gcd(m, h).degree() != 0) return false;
    }
    return true;
}

/// Degrees of the irreducible factors, with multiplicity, descending.
inline std::vector<int> factor_degrees(const TPoly& f) {
    std::vector<int> out;
    if (f.degree() < 1) return out;
    auto rep = upoly_squarefree(f);
    if (rep.squarefree) {
        for (const auto& [g, d] : detail::distinct_degree(make_monic(f)))
            for (int i = 0; i < g.degree() / d; ++i) out.push_back(d);
    } else {
        for (const auto& [g, m] : upoly_factor(f).factors)
            for (int i = 0; i < m; ++i) out.push_back(g.degree());
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// All roots in the coefficient field, ascending, without multiplicity.
inline std::vector<Fe> roots(const TPoly& f) {
    std::vector<Fe> out;
    for (const auto& [g, m] : upoly_factor(f).factors)
        if (g.degree() == 1) out.push_back(-g[0]);
    std::sort(out.begin(), out.end());
    return out;
}

/// Field homomorphism F_{p^k} -> F_{p^K} for k | K, fixed by sending the
/// generator of the source to the least root of its modulus in the target.
class Embedding {
   public:
    Embedding() = default;
    Embedding(Field from, Field to) : from_(from), to_(to) {
        if (from->p() != to->p() || to->k() % from->k() != 0)
            throw std::invalid_argument("no embedding between these fields");
        if (from->is_prime_field() || from == to) return;
        std::vector<Fe> m;
        for (auto c : from->modulus()) m.push_back(Fe::from_int(to, c));
        auto rs = roots(TPoly(to, std::move(m)));
        if (rs.empty()) throw std::logic_error("modulus has no root in target field");
        image_ = rs.front();
    }
    Field from() const noexcept { return from_; }
    Field to() const noexcept { return to_; }
    Fe operator()(const Fe& a) const {
        if (a.field() != from_) throw std::invalid_argument("element not in embedding source");
        if (from_->is_prime_field()) return Fe::from_int(to_, a[0]);
        if (from_ == to_) return a;
        Fe acc(to_);
        for (std::size_t i = from_->k(); i-- > 0;) acc = acc * image_ + Fe::from_int(to_, a[i]);
        return acc;
    }

   private:
    Field from_ = nullptr;
    Field to_ = nullptr;
    Fe image_;
};

}  // namespace arbor

#endif  // ARBOR_POLY_HPP

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

#ifndef ARBOR_VERIFY_HPP
#define ARBOR_VERIFY_HPP

// Witness checker. Everything below works on plain coefficient vectors with
// schoolbook algorithms and shares no polynomial code with the library; only
// the field arithmetic of ff.hpp and the certificate types are reused.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "certify.hpp"

namespace arbor {
namespace naive {

using Vec = std::vector<Fe>;

inline void trim(Vec& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline Vec add(Vec a, const Vec& b) {
    if (a.size() < b.size()) a.resize(b.size(), Fe(b[0].field()));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

inline Vec neg(Vec a) {
    for (auto& c : a) c = -c;
    return a;
}

inline Vec mul(const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, Fe(a[0].field()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

/// Remainder of a modulo a nonzero b over a field.
inline Vec mod(Vec a, const Vec& b) {
    const std::size_t db = b.size() - 1;
    const Fe il = inv(b.back());
    while (a.size() > db && !a.empty()) {
        Fe c = a.back() * il;
        const std::size_t s = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[s + j] -= c * b[j];
        trim(a);
    }
    return a;
}

inline Vec quo(Vec a, const Vec& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) return {};
    Vec q(a.size() - db, Fe(b[0].field()));
    const Fe il = inv(b.back());
    while (!a.empty() && a.size() > db) {
        Fe c = a.back() * il;
        const std::size_t s = a.size() - 1 - db;
        q[s] = c;
        for (std::size_t j = 0; j <= db; ++j) a[s + j] -= c * b[j];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return q;
}

inline Vec gcd(Vec a, Vec b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Vec r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Fe il = inv(a.back());
        for (auto& c : a) c *= il;
    }
    return a;
}

inline Vec derivative(const Vec& a) {
    Vec r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Fe::from_int(a[i].field(), static_cast<std::int64_t>(i)));
    trim(r);
    return r;
}

inline Vec powmod(Vec base, std::uint64_t e, const Vec& m) {
    Vec r{Fe::from_int(m[0].field(), 1)};
    base = mod(base, m);
    while (e) {
        if (e & 1) r = mod(mul(r, base), m);
        base = mod(mul(base, base), m);
        e >>= 1;
    }
    return r;
}

inline Fe eval(const Vec& a, const Fe& x) {
    Fe acc(x.field());
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

inline Vec compose(const Vec& a, const Vec& b) {
    Vec acc;
    for (std::size_t i = a.size(); i-- > 0;) acc = add(mul(acc, b), Vec{a[i]});
    return acc;
}

inline bool squarefree(const Vec& a) {
    Vec d = derivative(a);
    if (d.empty()) return a.size() <= 1;
    return gcd(a, d).size() == 1;
}

/// Factor degrees of a squarefree polynomial, descending, by repeated
/// gcd with x^{Q^i} - x.
inline std::vector<int> degree_pattern(Vec f) {
    std::vector<int> out;
    trim(f);
    const Field F = f[0].field();
    const std::uint64_t Q = F->order();
    Vec x{Fe(F), Fe::from_int(F, 1)};
    Vec h = x;
    for (int i = 1; f.size() > 1; ++i) {
        if (static_cast<int>(f.size()) - 1 < 2 * i) {
            out.push_back(static_cast<int>(f.size()) - 1);
            break;
        }
        h = powmod(h, Q, f);
        Vec g = gcd(f, add(h, neg(x)));
        const int k = static_cast<int>(g.size()) - 1;
        for (int j = 0; j < k / i; ++j) out.push_back(i);
        if (k > 0) {
            f = quo(f, g);
            h = mod(h, f);
        }
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Determinant by Gaussian elimination.
inline Fe det(std::vector<Vec> M, Field F) {
    const std::size_t n = M.size();
    Fe d = Fe::from_int(F, 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && M[piv][c].is_zero()) ++piv;
        if (piv == n) return Fe(F);
        if (piv != c) {
            std::swap(M[piv], M[c]);
            d = -d;
        }
        d *= M[c][c];
        Fe ip = inv(M[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            Fe k = M[r][c] * ip;
            if (k.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j) M[r][j] -= k * M[c][j];
        }
    }
    return d;
}

/// Discriminant (-1)^{n(n-1)/2} det Sylvester(f, f') of a monic f.
inline Fe discriminant(const Vec& f) {
    const Field F = f[0].field();
    Vec df = derivative(f);
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(df.size()) - 1;  // below m - 1 when p | m
    if (n < 0) return Fe(F);
    const int N = m + n;
    std::vector<Vec> S(N, Vec(N, Fe(F)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) S[r][r + m - i] = f[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) S[n + r][r + n - i] = df[i];
    Fe D = det(S, F);
    return (m * (m - 1) / 2) % 2 ? -D : D;
}

/// Characteristic polynomial det(xI - M) via reduction to upper Hessenberg
/// form and the standard recurrence.
inline Vec charpoly(std::vector<Vec> H, Field F) {
    const std::size_t n = H.size();
    for (std::size_t j = 0; j + 2 < n + 1 && j + 1 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && H[piv][j].is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            std::swap(H[piv], H[j + 1]);
            for (std::size_t r = 0; r < n; ++r) std::swap(H[r][piv], H[r][j + 1]);
        }
        Fe ip = inv(H[j + 1][j]);
        for (std::size_t i = j + 2; i < n; ++i) {
            Fe u = H[i][j] * ip;
            if (u.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) H[i][c] -= u * H[j + 1][c];
            for (std::size_t r = 0; r < n; ++r) H[r][j + 1] += u * H[r][i];
        }
    }
    std::vector<Vec> p(n + 1);
    p[0] = Vec{Fe::from_int(F, 1)};
    const Vec x{Fe(F), Fe::from_int(F, 1)};
    for (std::size_t m = 1; m <= n; ++m) {
        p[m] = mul(add(x, Vec{-H[m - 1][m - 1]}), p[m - 1]);
        Fe prod = Fe::from_int(F, 1);
        for (std::size_t i = 1; i < m; ++i) {
            prod *= H[m - i][m - i - 1];
            Fe coef = prod * H[m - i - 1][m - 1];
            p[m] = add(p[m], neg(mul(Vec{coef}, p[m - i - 1])));
        }
    }
    return p[n];
}

/// Tower algebra F_Q[z_1, ..., z_L] / (m_1(z_1), m_2(z_1; z_2), ...), each
/// m_k monic in z_k with coefficients in the previous level. Elements are
/// flat vectors; the index of z_1^{i_1} ... z_L^{i_L} is mixed radix with
/// z_1 least significant.
class Tower {
   public:
    explicit Tower(Field F) : F_(F) {}
    Field field() const { return F_; }
    std::size_t levels() const { return degs_.size(); }
    std::size_t dim(std::size_t level) const {
        std::size_t d = 1;
        for (std::size_t i = 0; i < level; ++i) d *= static_cast<std::size_t>(degs_[i]);
        return d;
    }
    /// Adds m(z) with coefficients from the current top level, monic.
    void push(std::vector<Vec> coeffs) {
        degs_.push_back(static_cast<int>(coeffs.size()) - 1);
        polys_.push_back(std::move(coeffs));
    }
    Vec zero(std::size_t level) const { return Vec(dim(level), Fe(F_)); }
    Vec one(std::size_t level) const {
        Vec v = zero(level);
        v[0] = Fe::from_int(F_, 1);
        return v;
    }
    /// Generator z_k (1-based) inside the given level.
    Vec gen(std::size_t k, std::size_t level) const {
        Vec v = zero(level);
        v[dim(k - 1)] = Fe::from_int(F_, 1);
        return v;
    }
    /// Element of a lower level viewed in a higher one.
    Vec lift(const Vec& a, std::size_t level) const {
        Vec v = zero(level);
        std::copy(a.begin(), a.end(), v.begin());
        return v;
    }
    Vec add(const Vec& a, const Vec& b) const {
        Vec r = a;
        for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        return r;
    }
    Vec scale(const Vec& a, const Fe& s) const {
        Vec r = a;
        for (auto& c : r) c *= s;
        return r;
    }
    Vec mul(const Vec& a, const Vec& b, std::size_t level) const {
        if (level == 0) return Vec{a[0] * b[0]};
        const std::size_t sub = dim(level - 1);
        const int dg = degs_[level - 1];
        std::vector<Vec> prod(static_cast<std::size_t>(2 * dg - 1), zero(level - 1));
        for (int i = 0; i < dg; ++i) {
            Vec ai(a.begin() + static_cast<long>(i * sub), a.begin() + static_cast<long>((i + 1) * sub));
            for (int j = 0; j < dg; ++j) {
                Vec bj(b.begin() + static_cast<long>(j * sub), b.begin() + static_cast<long>((j + 1) * sub));
                prod[static_cast<std::size_t>(i + j)] = add(prod[static_cast<std::size_t>(i + j)], mul(ai, bj, level - 1));
            }
        }
        const auto& m = polys_[level - 1];
        for (int i = 2 * dg - 2; i >= dg; --i) {
            Vec c = prod[static_cast<std::size_t>(i)];
            for (int j = 0; j < dg; ++j) {
                Vec t = mul(c, m[static_cast<std::size_t>(j)], level - 1);
                prod[static_cast<std::size_t>(i - dg + j)] = add(prod[static_cast<std::size_t>(i - dg + j)], scale(t, Fe::from_int(F_, -1)));
            }
        }
        Vec out;
        out.reserve(dim(level));
        for (int i = 0; i < dg; ++i) out.insert(out.end(), prod[static_cast<std::size_t>(i)].begin(), prod[static_cast<std::size_t>(i)].end());
        return out;
    }

   private:
    Field F_;
    std::vector<int> degs_;
    std::vector<std::vector<Vec>> polys_;
};

/// Synthetic division of g (monic, coefficients in the top level) by
/// (x - root); returns the quotient coefficients and checks the remainder.
inline std::vector<Vec> divide_root(const Tower& T, const std::vector<Vec>& g, const Vec& root, std::size_t level, bool& ok) {
    const std::size_t n = g.size() - 1;
    std::vector<Vec> q(n);
    Vec acc = g[n];
    for (std::size_t i = n; i-- > 0;) {
        q[i] = acc;
        acc = T.add(g[i], T.mul(acc, root, level));
    }
    ok = std::all_of(acc.begin(), acc.end(), [](const Fe& c) { return c.is_zero(); });
    return q;
}

/// Specialized norm of level k: the characteristic polynomial of
/// z_{k+1} - shift_1 z_1 - ... - shift_k z_k on the tower of the first
/// k + 1 adjoined roots of f_c.
inline Vec norm_at(const Vec& fc, int k, const std::vector<int>& shift, bool& ok) {
    const Field F = fc[0].field();
    Tower T(F);
    std::vector<Vec> cur;
    for (const auto& c : fc) cur.push_back(Vec{c});
    ok = true;
    for (int level = 0; level <= k; ++level) {
        T.push(cur);  // minimal polynomial of z_{level+1}
        const std::size_t L = static_cast<std::size_t>(level + 1);
        std::vector<Vec> lifted;
        for (const auto& c : cur) lifted.push_back(T.lift(c, L));
        bool step = true;
        cur = divide_root(T, lifted, T.gen(L, L), L, step);
        ok = ok && step;
    }
    const std::size_t L = static_cast<std::size_t>(k + 1);
    Vec theta = T.gen(L, L);
    for (int i = 0; i < k; ++i)
        theta = T.add(theta, T.scale(T.gen(static_cast<std::size_t>(i + 1), L), Fe::from_int(F, -shift[static_cast<std::size_t>(i)])));
    const std::size_t n = T.dim(L);
    std::vector<Vec> M(n, Vec(n, Fe(F)));
    for (std::size_t j = 0; j < n; ++j) {
        Vec e = T.zero(L);
        e[j] = Fe::from_int(F, 1);
        Vec col = T.mul(theta, e, L);
        for (std::size_t i = 0; i < n; ++i) M[i][j] = col[i];
    }
    return charpoly(M, F);
}

inline Vec specialize(const BiPoly& f, const Fe& c) {
    const Field F = c.field();
    const Field base = f.field();
    // embed the base field by a root of its modulus found by search
    Fe img(F);
    if (!base->is_prime_field() && base != F) {
        bool found = false;
        for (std::uint64_t i = 0; i < F->order() && !found; ++i) {
            Fe r = Fe::from_index(F, i);
            Fe acc(F);
            for (std::size_t j = base->modulus().size(); j-- > 0;) acc = acc * r + Fe::from_int(F, base->modulus()[j]);
            if (acc.is_zero()) {
                img = r;
                found = true;
            }
        }
    }
    auto emb = [&](const Fe& a) {
        if (base->is_prime_field()) return Fe::from_int(F, a[0]);
        if (base == F) return a;
        Fe acc(F);
        for (std::size_t i = base->k(); i-- > 0;) acc = acc * img + Fe::from_int(F, a[i]);
        return acc;
    };
    Vec out;
    for (const auto& tc : f.coeffs()) {
        Fe acc(F);
        for (std::size_t i = tc.size(); i-- > 0;) acc = acc * c + emb(tc[i]);
        out.push_back(acc);
    }
    trim(out);
    return out;
}

inline bool no_common_subset(const std::vector<std::vector<int>>& patterns, int total) {
    std::vector<bool> common(total + 1, true);
    for (const auto& pat : patterns) {
        std::vector<bool> reach(total + 1, false);
        reach[0] = true;
        for (int e : pat)
            for (int s = total; s >= e; --s)
                if (reach[s - e]) reach[s] = true;
        for (int s = 0; s <= total; ++s) common[s] = common[s] && reach[s];
    }
    for (int s = 1; s < total; ++s)
        if (common[s]) return false;
    return true;
}

inline bool eisenstein(const std::vector<Vec>& coeffs, const Vec& prime) {
    if (prime.size() < 2) return false;
    if (degree_pattern(prime) != std::vector<int>{static_cast<int>(prime.size()) - 1} || !squarefree(prime)) return false;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        Vec c = coeffs[i];
        trim(c);
        if (!c.empty() && !mod(c, prime).empty()) return false;
    }
    Vec c0 = coeffs[0];
    trim(c0);
    return !c0.empty() && !mod(c0, mul(prime, prime)).empty();
}

/// Coefficients in t of the x-coefficients of f.
inline std::vector<Vec> t_coeffs(const BiPoly& f) {
    std::vector<Vec> out;
    for (const auto& c : f.coeffs()) out.emplace_back(c.coeffs().begin(), c.coeffs().end());
    return out;
}

/// Bivariate composition f(t, g(t, x)) on nested coefficient vectors.
inline std::vector<Vec> bi_compose(const std::vector<Vec>& f, const std::vector<Vec>& g, Field F) {
    auto bmul = [&](const std::vector<Vec>& a, const std::vector<Vec>& b) {
        std::vector<Vec> r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j].empty() ? Vec{Fe(F)} : r[i + j], mul(a[i], b[j]));
        return r;
    };
    std::vector<Vec> acc{Vec{}};
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = acc.size() == 1 && acc[0].empty() ? acc : bmul(acc, g);
        acc[0] = add(acc[0].empty() ? Vec{Fe(F)} : acc[0], f[i]);
        for (auto& c : acc) trim(c);
    }
    return acc;
}

}  // namespace naive

struct VerifyResult {
    bool ok = false;
    std::string detail;
};

namespace detail {

/// Checks an irreducibility witness for g given by a specializer and an
/// optional Eisenstein route on explicit t-coefficients.
template <class Specializer>
VerifyResult verify_irreducibility(const IrredVerdict& v, int degree, Field base, Specializer&& at,
                                   const std::vector<naive::Vec>* coeffs) {
    if (!v.irreducible()) return {false, "witness is not positive"};
    if (v.reason == IrredVerdict::Reason::Eisenstein) {
        if (!coeffs || !v.prime) return {false, "Eisenstein witness cannot be checked here"};
        naive::Vec pr(v.prime->coeffs().begin(), v.prime->coeffs().end());
        return naive::eisenstein(*coeffs, pr) ? VerifyResult{true, "Eisenstein"} : VerifyResult{false, "Eisenstein check failed"};
    }
    if (v.points.empty()) return {false, "no specialization points"};
    std::vector<std::vector<int>> pats;
    for (const auto& w : v.points) {
        if (w.point.field()->p() != base->p() || w.point.field()->k() != base->k() * static_cast<std::size_t>(w.m))
            return {false, "specialization point in the wrong field"};
        naive::Vec g = at(w.point);
        if (static_cast<int>(g.size()) - 1 != degree) return {false, "degree drops at a specialization point"};
        if (!naive::squarefree(g)) return {false, "specialization is not squarefree"};
        auto pat = naive::degree_pattern(g);
        if (pat != w.pattern) return {false, "recorded degree pattern does not match"};
        pats.push_back(pat);
    }
    if (degree == 1 || naive::no_common_subset(pats, degree)) return {true, "specialization patterns"};
    return {false, "patterns admit a common proper factor degree"};
}

}  // namespace detail

/// Re-verifies a certificate for f from its witness data alone.
inline VerifyResult verify_certificate(const BiPoly& f, const Certificate& cert, int n = 1) {
    using naive::Vec;
    if (!cert.positive()) return {false, "certificate is not positive"};
    const int d = f.degree();
    const Field base = f.field();
    if (cert.kind == Certificate::Kind::IterateIrreducible) {
        const int iters = static_cast<int>(cert.value);
        if (iters != n) return {false, "iterate count mismatch"};
        int D = 1;
        for (int i = 0; i < iters; ++i) D *= d;
        auto at = [&](const Fe& c) {
            Vec fc = naive::specialize(f, c);
            Vec g = fc;
            for (int i = 1; i < iters; ++i) g = naive::compose(fc, g);
            return g;
        };
        std::vector<Vec> co;
        const std::vector<Vec>* cp = nullptr;
        if (cert.iterate_witness.reason == IrredVerdict::Reason::Eisenstein) {
            auto fc = naive::t_coeffs(f);
            co = fc;
            for (int i = 1; i < iters; ++i) co = naive::bi_compose(fc, co, base);
            cp = &co;
        }
        return detail::verify_irreducibility(cert.iterate_witness, D, base, at, cp);
    }
    // FullSymmetric
    if (cert.levels.size() != static_cast<std::size_t>(std::max(1, d - 1))) return {false, "wrong number of levels"};
    std::uint64_t prod = 1;
    for (std::size_t k = 0; k < cert.levels.size(); ++k) {
        const auto& lv = cert.levels[k];
        if (lv.level != static_cast<int>(k) || lv.degree != d - static_cast<int>(k)) return {false, "level bookkeeping mismatch"};
        prod *= static_cast<std::uint64_t>(lv.degree);
        VerifyResult r;
        if (k == 0) {
            auto co = naive::t_coeffs(f);
            r = detail::verify_irreducibility(lv.witness, d, base, [&](const Fe& c) { return naive::specialize(f, c); }, &co);
        } else if (lv.method == LevelCertificate::Method::Norm) {
            if (lv.shift.size() != k) return {false, "shift arity mismatch"};
            int total = 1;
            for (int i = 0; i <= static_cast<int>(k); ++i) total *= d - i;
            bool chain_ok = true;
            r = detail::verify_irreducibility(
                lv.witness, total, base,
                [&](const Fe& c) {
                    bool ok = true;
                    Vec N = naive::norm_at(naive::specialize(f, c), static_cast<int>(k), lv.shift, ok);
                    chain_ok = chain_ok && ok;
                    return N;
                },
                nullptr);
            if (!chain_ok) return {false, "root chain broken at a specialization"};
        } else if (lv.method == LevelCertificate::Method::Discriminant) {
            if (k + 1 != cert.levels.size()) return {false, "discriminant route used below the top level"};
            if (!lv.disc_point) return {false, "missing discriminant point"};
            Vec fc = naive::specialize(f, lv.disc_point->point);
            Fe D = naive::discriminant(fc);
            const std::uint64_t Q = D.field()->order();
            bool nonsquare = !D.is_zero() && !pow(D, (Q - 1) / 2).is_one();
            r = nonsquare ? VerifyResult{true, "non-square discriminant"} : VerifyResult{false, "discriminant is a square or zero"};
        } else {
            return {false, "unexpected method above level 0"};
        }
        if (!r.ok) return {false, "level " + std::to_string(k) + ": " + r.detail};
    }
    std::uint64_t fact = 1;
    for (int i = 2; i <= d; ++i) fact *= static_cast<std::uint64_t>(i);
    if (prod != fact || cert.value != fact) return {false, "degree product differs from d!"};
    return {true, "all levels re-verified"};
}

}  // namespace arbor

#endif  // ARBOR_VERIFY_HPP

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

#ifndef ARBOR_ODONI_HPP
#define ARBOR_ODONI_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bipoly.hpp"
#include "certify.hpp"
#include "wreath.hpp"

namespace arbor {

// ---------------------------------------------------------------------------
// gcd and squarefree decomposition over F_q(t)[x] with F_q[t] coefficients

/// Monic gcd of the x-coefficients; zero for the zero polynomial.
inline TPoly bp_content(const BiPoly& f) {
    TPoly g(f.field());
    for (const auto& c : f.coeffs()) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

inline BiPoly bp_primitive_part(const BiPoly& f) {
    if (f.is_zero()) return f;
    const TPoly c = bp_content(f);
    if (c.is_one()) return f;
    return map_coeffs(f, [&](const TPoly& a) { return exact_div(a, c); });
}

/// gcd over F_q(t) as a primitive polynomial in F_q[t][x] whose leading
/// coefficient is monic in t (monic in x when that coefficient is constant).
inline BiPoly bp_gcd_x(BiPoly a, BiPoly b) {
    a = bp_primitive_part(a);
    b = bp_primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        BiPoly r = prem(a, b);
        a = std::move(b);
        b = bp_primitive_part(r);
    }
    if (a.is_zero()) return a;
    return scale(a, TPoly::constant(inv(a.lc().lc())));
}

/// g = h^p for g with zero x-derivative; requires every coefficient to lie
/// in F_q[t^p], since F_q(t) is not perfect.
inline BiPoly bp_pth_root_x(const BiPoly& g) {
    const std::uint32_t p = g.field()->p();
    std::vector<TPoly> out;
    for (std::size_t i = 0; i < g.size(); i += p) {
        const TPoly& c = g[i];
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j % p != 0 && !c[j].is_zero())
                throw InseparableError("inseparable factor over F_q(t): coefficient " + render(c) + " is not a p-th power");
        out.push_back(pth_root(c));
    }
    return BiPoly(g.field(), std::move(out));
}

namespace detail {

inline void bp_squarefree_decompose(const BiPoly& g, int mult, std::vector<std::pair<BiPoly, int>>& out) {
    // g monic in x
    if (g.degree() < 1) return;
    const int p = static_cast<int>(g.field()->p());
    const BiPoly dg = derivative(g);
    if (dg.is_zero()) {
        bp_squarefree_decompose(bp_pth_root_x(g), mult * p, out);
        return;
    }
    BiPoly c = bp_gcd_x(g, dg);
    BiPoly w = g / c;
    int i = 1;
    while (w.degree() > 0) {
        BiPoly y = bp_gcd_x(w, c);
        BiPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) bp_squarefree_decompose(bp_pth_root_x(c), mult * p, out);
}

}  // namespace detail

/// Squarefree decomposition of a monic g over F_q(t): pairs (factor, e)
/// with g = prod factor^e, factors monic, squarefree and pairwise coprime.
inline std::vector<std::pair<BiPoly, int>> bp_squarefree_decomposition(const BiPoly& g) {
    require_monic_x(g, "bp_squarefree_decomposition");
    std::vector<std::pair<BiPoly, int>> out;
    detail::bp_squarefree_decompose(g, 1, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first == b.first ? a.second < b.second : a.first < b.first;
    });
    return out;
}

/// Separable over F_q(t): no repeated root in an algebraic closure.
inline bool bp_separable_x(const BiPoly& g) {
    if (g.degree() < 1) return true;
    const BiPoly dg = derivative(g);
    if (dg.is_zero()) return false;
    return bp_gcd_x(g, dg).degree() == 0;
}

/// Roots in F_q[t] of a monic squarefree h, ascending; nullopt when no
/// search route applies. A root r has deg r <= max_i deg(h_i) / (deg h - i).
/// Roots are lifted t-adically from the simple roots of h(c, x) for a point
/// c where h(c, x) is squarefree, with exhaustive search as the fallback.
inline std::optional<std::vector<TPoly>> bp_polynomial_roots(const BiPoly& h) {
    require_monic_x(h, "bp_polynomial_roots");
    const Field F = h.field();
    const int e = h.degree();
    int D = 0;
    for (int i = 0; i < e; ++i) {
        const int dg = h[static_cast<std::size_t>(i)].degree();
        if (dg >= 0) D = std::max(D, dg / (e - i));
    }
    std::vector<TPoly> out;
    const TPoly t = TPoly::variable(F);
    for (std::uint64_t idx = 0; idx < F->order(); ++idx) {
        const Fe c = Fe::from_index(F, idx);
        const TPoly hc = bp_specialize_t(h, c);
        if (!upoly_squarefree(hc).squarefree) continue;
        const TPoly sh = t + TPoly::constant(c);
        const BiPoly hs = map_coeffs(h, [&](const TPoly& a) { return compose(a, sh); });  // h(s + c, x)
        const TPoly dhc = derivative(hc);
        for (const Fe& x0 : roots(hc)) {
            const Fe step = inv(evaluate(dhc, x0));
            TPoly r = TPoly::constant(x0);
            for (int j = 1; j <= D; ++j) {
                const TPoly val = bp_eval_x(hs, r);
                r = r - TPoly::monomial(val.coeff(static_cast<std::size_t>(j)) * step, static_cast<std::size_t>(j));
            }
            if (bp_eval_x(hs, r).is_zero()) out.push_back(compose(r, t - TPoly::constant(c)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    // every specialization is singular: exhaustive search over deg <= D
    double count = std::pow(static_cast<double>(F->order()), D + 1);
    if (count > 2e5) return std::nullopt;
    const std::uint64_t total = static_cast<std::uint64_t>(count + 0.5);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Fe> v;
        for (std::uint64_t k = code; v.size() < static_cast<std::size_t>(D + 1); k /= F->order()) v.push_back(Fe::from_index(F, k % F->order()));
        TPoly r(F, std::move(v));
        if (bp_eval_x(h, r).is_zero()) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// basic conditions

struct BasicReport {
    bool monic = false;
    bool degree_above_two = false;
    bool p_odd = false;
    bool p_coprime = false;  // p does not divide d(d-1)
    bool separable = false;
    IrredVerdict irreducibility;
    std::optional<std::pair<BiPoly, BiPoly>> factorization;  // explicit factors when reducible
    std::optional<TPoly> disc;

    bool irreducible() const { return irreducibility.irreducible(); }
    /// Conditions shown to fail.
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        if (!monic) out.emplace_back("f is not monic in x");
        if (!degree_above_two) out.emplace_back("degree d > 2 violated");
        if (!p_odd) out.emplace_back("characteristic p = 2");
        if (!p_coprime) out.emplace_back("p divides d(d-1)");
        if (monic && !separable) out.emplace_back("f is not separable (disc_x(f) = 0)");
        if (factorization) out.emplace_back("f is reducible");
        return out;
    }
    bool passed() const { return failures().empty() && irreducible(); }
};

/// Checks monic, d > 2, p != 2, p not dividing d(d-1), nonzero discriminant
/// and certified irreducibility. A reducible f is reported with explicit
/// factors when the bounded brute-force search finds them.
inline BasicReport check_basic(const BiPoly& f, const IrredBudget& budget = {}) {
    BasicReport r;
    const int d = f.degree();
    const std::uint64_t p = f.field()->p();
    r.monic = d >= 1 && f.lc().is_one();
    r.degree_above_two = d > 2;
    r.p_odd = p != 2;
    r.p_coprime = d >= 1 && static_cast<std::uint64_t>(d) % p != 0 && static_cast<std::uint64_t>(d - 1) % p != 0;
    if (!r.monic) return r;
    try {
        r.disc = bp_disc_x(f);
        r.separable = !r.disc->is_zero();
    } catch (const InseparableError&) {
        r.separable = false;
    }
    r.irreducibility = bp_irreducible_oneside(f, budget);
    if (!r.irreducible() && d >= 2) {
        if (auto rs = bp_polynomial_roots(f); rs && !rs->empty()) {
            BiPoly lin(f.field(), {-rs->front(), TPoly::constant(Fe::from_int(f.field(), 1))});
            r.factorization = std::make_pair(lin, f / lin);
            return r;
        }
        try {
            r.factorization = bp_factor_bruteforce(f);
        } catch (const std::invalid_argument&) {
            // outside the brute-force caps: stays Unknown
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// critical points

struct CriticalPoint {
    BiPoly minpoly;                 // monic squarefree factor of f'
    int multiplicity = 1;           // exponent in the squarefree decomposition of f'
    std::optional<TPoly> root;      // present iff deg_x(minpoly) = 1
    int degree() const { return minpoly.degree(); }
};

/// Zeros of f' grouped by the squarefree decomposition over F_q(t). Roots
/// in F_q[t] are split off as degree-1 points carrying the root; what
/// remains of each squarefree factor is kept whole.
inline std::vector<CriticalPoint> critical_points(const BiPoly& f) {
    require_monic_x(f, "critical_points");
    const BiPoly df = derivative(f);
    if (df.is_zero()) throw InseparableError("critical_points: f' vanishes identically");
    const int d = f.degree();
    if (static_cast<std::uint64_t>(d) % f.field()->p() == 0)
        throw std::invalid_argument("critical_points: p divides deg f");
    const BiPoly g = scale(df, TPoly::constant(inv(Fe::from_int(f.field(), d))));
    std::vector<CriticalPoint> out;
    const TPoly one = TPoly::constant(Fe::from_int(f.field(), 1));
    for (auto& [h, e] : bp_squarefree_decomposition(g)) {
        BiPoly rest = h;
        if (h.degree() > 1) {
            if (auto rs = bp_polynomial_roots(h)) {
                for (const TPoly& r : *rs) {
                    BiPoly lin(f.field(), {-r, one});
                    out.push_back(CriticalPoint{lin, e, r});
                    rest = rest / lin;
                }
            }
        }
        if (rest.degree() == 1) {
            out.push_back(CriticalPoint{rest, e, -rest[0]});
        } else if (rest.degree() > 1) {
            out.push_back(CriticalPoint{rest, e, std::nullopt});
        }
    }
    std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        return a.minpoly == b.minpoly ? a.multiplicity < b.multiplicity : a.minpoly < b.minpoly;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Morse property

struct MorseReport {
    bool morse = false;
    bool nondegenerate = false;    // gcd_x(f', f'') constant
    bool distinct_values = false;  // N(s) separable in s
    BiPoly critical_value_poly;    // N(s) = Res_x(f - s, f'), s in the x slot
    std::string details;
};

/// Critical points nondegenerate and critical values distinct over an
/// algebraic closure of F_q(t).
inline MorseReport morse_check(const BiPoly& f) {
    require_monic_x(f, "morse_check");
    const Field F = f.field();
    const int d = f.degree();
    if (d < 2 || static_cast<std::uint64_t>(d) % F->p() == 0)
        throw std::invalid_argument("morse_check: needs d >= 2 and p not dividing d");
    MorseReport r;
    const BiPoly df = derivative(f);
    const BiPoly ddf = derivative(df);
    r.nondegenerate = ddf.is_zero() ? df.degree() == 0 : bp_gcd_x(df, ddf).degree() == 0;

    // f(t, x) - s and f'(t, x) over F_q[t][s]
    using SPoly = Poly<BiPoly>;
    auto lift = [](const TPoly& c) { return BiPoly::constant(c); };
    SPoly fs = map_coeffs(f, lift);
    fs.set_coeff(0, fs[0] - BiPoly::variable(F));
    SPoly dfs = map_coeffs(df, lift);
    r.critical_value_poly = resultant(fs, dfs);
    r.distinct_values = bp_separable_x(r.critical_value_poly);
    r.morse = r.nondegenerate && r.distinct_values;
    if (!r.nondegenerate) r.details = "a critical point is degenerate";
    if (!r.distinct_values) r.details += std::string(r.details.empty() ? "" : "; ") + "critical values collide";
    if (r.morse) r.details = "nondegenerate critical points with distinct critical values";
    return r;
}

// ---------------------------------------------------------------------------
// critical orbits

struct OrbitRecord {
    std::size_t source = 0;  // index into the critical point list
    int level = 1;
    BiPoly R;                // polynomial in y (x slot) over F_q[t]
};

/// f^{ol}(x) reduced modulo a monic m.
inline BiPoly orbit_residue(const BiPoly& f, const BiPoly& m, int l) {
    BiPoly r = f % m;
    for (int j = 1; j < l; ++j) {
        BiPoly acc(f.field());
        for (std::size_t i = f.size(); i-- > 0;) acc = (acc * r + BiPoly::constant(f[i])) % m;
        r = acc;
    }
    return r;
}

/// Value f^{ol}(t, r) for a rational point r.
inline TPoly orbit_value(const BiPoly& f, const TPoly& r, int l) {
    TPoly v = r;
    for (int j = 0; j < l; ++j) v = bp_eval_x(f, v);
    return v;
}

/// R_l(y) = Res_x(m(x), y - f^{ol}(t, x)), monic of degree deg m in y.
inline OrbitRecord orbit_minpoly(const BiPoly& f, const std::vector<CriticalPoint>& cps, std::size_t index, int l) {
    if (l < 1) throw std::invalid_argument("orbit_minpoly: level must be at least 1");
    const CriticalPoint& cp = cps.at(index);
    const Field F = f.field();
    OrbitRecord rec;
    rec.source = index;
    rec.level = l;
    const BiPoly y = BiPoly::variable(F);
    if (cp.root) {
        rec.R = y - BiPoly::constant(orbit_value(f, *cp.root, l));
        return rec;
    }
    const BiPoly r = orbit_residue(f, cp.minpoly, l);
    Poly<BiPoly> G(F, {-r, BiPoly::constant(TPoly::constant(Fe::from_int(F, 1)))});
    rec.R = norm_poly(cp.minpoly, G);
    return rec;
}

struct OrbitCollision {
    std::size_t a = 0;
    int l = 1;
    std::size_t b = 0;
    int m = 1;
};

struct SeparationReport {
    std::vector<CriticalPoint> points;
    // all pairs of critical points
    bool separated = false;
    std::optional<OrbitCollision> first_collision;
    // b restricted to conjugates of a
    bool separated_conjugates = false;
    std::optional<OrbitCollision> first_conjugate_collision;
    // per point a: all (a, l) against (b, m), l <= m, b arbitrary
    std::vector<bool> anchored;
};

/// Checks f^{ol}(a) != f^{om}(b) for 1 <= l <= m <= n unless (l, a) = (m, b)
/// as points of an algebraic closure: distinct sources or levels compare by
/// gcd_y of their orbit polynomials; a source against itself at the same
/// level requires R_l squarefree, which separates distinct conjugates.
inline SeparationReport orbit_separation(const BiPoly& f, int n, std::vector<CriticalPoint> cps) {
    if (n < 1) throw std::invalid_argument("orbit_separation: n must be at least 1");
    SeparationReport rep;
    const std::size_t k = cps.size();
    std::vector<std::vector<BiPoly>> R(k);
    for (std::size_t i = 0; i < k; ++i)
        for (int l = 1; l <= n; ++l) R[i].push_back(orbit_minpoly(f, cps, i, l).R);
    rep.anchored.assign(k, true);
    rep.separated = true;
    rep.separated_conjugates = true;
    for (int m = 1; m <= n; ++m)
        for (int l = 1; l <= m; ++l)
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    if (l == m && j < i) continue;  // symmetric duplicate
                    const BiPoly& A = R[i][static_cast<std::size_t>(l - 1)];
                    const BiPoly& B = R[j][static_cast<std::size_t>(m - 1)];
                    const bool hit = (l == m && i == j) ? !bp_separable_x(A) : bp_gcd_x(A, B).degree() > 0;
                    if (!hit) continue;
                    OrbitCollision c{i, l, j, m};
                    if (rep.separated) rep.first_collision = c;
                    rep.separated = false;
                    rep.anchored[i] = false;
                    if (l == m) rep.anchored[j] = false;
                    if (i == j) {
                        if (rep.separated_conjugates) rep.first_conjugate_collision = c;
                        rep.separated_conjugates = false;
                    }
                }
    rep.points = std::move(cps);
    return rep;
}

inline SeparationReport orbit_separation(const BiPoly& f, int n) { return orbit_separation(f, n, critical_points(f)); }

// ---------------------------------------------------------------------------
// primitive prime divisors

struct PrimeDivisorRecord {
    TPoly prime;
    int level = 1;
    int valuation = 1;
    bool primitive = false;
    bool squarefree_primitive = false;
    std::optional<bool> coprime_to_b;  // only for trinomial shapes
};

/// b(t) when f = x^d + a(t) x^e + b(t) with e in {1, d-1} and a != 0.
inline std::optional<TPoly> trinomial_constant(const BiPoly& f) {
    const int d = f.degree();
    if (d < 3 || !f.lc().is_one()) return std::nullopt;
    std::vector<int> middle;
    for (int i = 1; i < d; ++i)
        if (!f[static_cast<std::size_t>(i)].is_zero()) middle.push_back(i);
    if (middle.size() != 1 || (middle[0] != 1 && middle[0] != d - 1)) return std::nullopt;
    return f[0];
}

/// Prime factors of f^{om}(t, gamma) for m = 1..n. A prime of level m is
/// primitive iff it divides no earlier orbit value.
inline std::vector<PrimeDivisorRecord> primitive_prime_divisors(const BiPoly& f, const TPoly& gamma, int n,
                                                                std::uint64_t seed = 0) {
    if (n < 1) throw std::invalid_argument("primitive_prime_divisors: n must be at least 1");
    std::vector<TPoly> values;
    for (int m = 1; m <= n; ++m) {
        values.push_back(bp_eval_x(f, m == 1 ? gamma : values.back()));
        if (values.back().is_zero())
            throw std::domain_error("primitive_prime_divisors: orbit value vanishes at level " + std::to_string(m));
    }
    const std::optional<TPoly> b = trinomial_constant(f);
    std::vector<PrimeDivisorRecord> out;
    for (int m = 1; m <= n; ++m) {
        for (const auto& [prime, e] : upoly_factor(values[static_cast<std::size_t>(m - 1)], seed).factors) {
            PrimeDivisorRecord rec;
            rec.prime = prime;
            rec.level = m;
            rec.valuation = e;
            rec.primitive = true;
            for (int j = 1; j < m && rec.primitive; ++j)
                if ((values[static_cast<std::size_t>(j - 1)] % prime).is_zero()) rec.primitive = false;
            rec.squarefree_primitive = rec.primitive && e == 1;
            if (b) rec.coprime_to_b = !(*b % prime).is_zero();
            out.push_back(std::move(rec));
        }
    }
    return out;
}

inline std::vector<PrimeDivisorRecord> primitive_prime_divisors(const BiPoly& f, const CriticalPoint& cp, int n,
                                                                std::uint64_t seed = 0) {
    if (!cp.root) throw std::invalid_argument("primitive_prime_divisors: critical point is not rational");
    return primitive_prime_divisors(f, *cp.root, n, seed);
}

// ---------------------------------------------------------------------------
// verdict

struct DiscReport {
    TPoly disc;
    Factorization<Fe> factorization;
    TPoly squarefree_part;  // product of primes of odd exponent
    bool squarefree = false;
    /// disc is not a constant times a square in F_q-bar[t], so the
    /// geometric group is not contained in A_d.
    bool geometric_nonsquare = false;
};

inline DiscReport disc_report(const TPoly& disc, std::uint64_t seed = 0) {
    DiscReport r;
    r.disc = disc;
    r.factorization = upoly_factor(disc, seed);
    r.squarefree_part = TPoly::constant(Fe::from_int(disc.field(), 1));
    r.squarefree = !disc.is_zero();
    for (const auto& [g, e] : r.factorization.factors) {
        if (e > 1) r.squarefree = false;
        if (e % 2) r.squarefree_part = r.squarefree_part * g;
    }
    r.geometric_nonsquare = r.squarefree_part.degree() > 0;
    return r;
}

struct PrimeTable {
    std::size_t point = 0;  // index of the rational critical point
    std::vector<PrimeDivisorRecord> records;
    std::optional<std::string> error;
};

struct Verdict {
    enum class Conclusion { HypothesesHold, Fails, Inconclusive };
    int n = 1;
    BasicReport basic;
    std::optional<DiscReport> disc;
    std::optional<Certificate> group;  // Gal(f) = S_d over F_q(t)
    std::vector<CriticalPoint> critical;
    bool multiplicity_one_exists = false;
    std::optional<MorseReport> morse;
    std::optional<SeparationReport> separation;
    std::vector<PrimeTable> prime_tables;
    std::vector<Certificate> iterates;  // f^{om}, m = 1..n
    Conclusion conclusion = Conclusion::Inconclusive;
    std::vector<std::string> reasons;
    std::optional<BigInt> predicted_order;  // |[S_d]^n| when the hypotheses hold
    double predicted_order_log10 = 0;
};

inline const char* to_string(Verdict::Conclusion c) {
    switch (c) {
        case Verdict::Conclusion::HypothesesHold: return "HypothesesHold";
        case Verdict::Conclusion::Fails: return "Fails";
        default: return "Inconclusive";
    }
}

/// Runs every hypothesis check up to level n and aggregates them. The
/// conclusion is HypothesesHold(n) only when each required condition holds
/// with a certificate; a condition shown false gives Fails; anything left
/// uncertified gives Inconclusive.
inline Verdict check_odoni(const BiPoly& f, int n, const CertifyBudget& budget = {}, std::uint64_t seed = 0) {
    if (n < 1) throw std::invalid_argument("check_odoni: n must be at least 1");
    Verdict v;
    v.n = n;
    CertifyBudget b = budget;
    b.irred.seed = seed;
    v.basic = check_basic(f, b.irred);
    std::vector<std::string> fails = v.basic.failures(), unknown;
    if (!fails.empty()) {
        v.conclusion = Verdict::Conclusion::Fails;
        v.reasons = fails;
        return v;
    }
    if (!v.basic.irreducible() && !v.basic.factorization) unknown.emplace_back("irreducibility of f not certified");
    const int d = f.degree();
    if (v.basic.disc) v.disc = disc_report(*v.basic.disc, seed);

    if (v.basic.irreducible()) {
        if (d <= 5) {
            v.group = certify_full_symmetric(f, b);
            if (!v.group->positive()) unknown.push_back("Gal(f) = S_d not certified: " + v.group->reason);
        } else {
            unknown.emplace_back("Gal(f) = S_d is not certifiable for d > 5");
        }
    }

    try {
        v.critical = critical_points(f);
    } catch (const InseparableError& e) {
        unknown.emplace_back(std::string("critical points: ") + e.what());
    }
    for (const auto& cp : v.critical) v.multiplicity_one_exists = v.multiplicity_one_exists || cp.multiplicity == 1;
    if (!v.critical.empty() && !v.multiplicity_one_exists) fails.emplace_back("no critical point of multiplicity one");

    v.morse = morse_check(f);

    if (!v.critical.empty()) {
        v.separation = orbit_separation(f, n, v.critical);
        if (!v.separation->separated) {
            const auto& c = *v.separation->first_collision;
            fails.push_back("orbit separation: level " + std::to_string(c.l) + " of critical point " + std::to_string(c.a) +
                            " meets level " + std::to_string(c.m) + " of critical point " + std::to_string(c.b));
        }
        for (std::size_t i = 0; i < v.critical.size(); ++i) {
            if (!v.critical[i].root) continue;
            PrimeTable table;
            table.point = i;
            try {
                table.records = primitive_prime_divisors(f, v.critical[i], n, seed);
            } catch (const std::domain_error& e) {
                table.error = e.what();
            }
            v.prime_tables.push_back(std::move(table));
        }
    }

    if (fails.empty()) {
        for (int m = 1; m <= n; ++m) {
            v.iterates.push_back(certify_iterate_irreducible(f, m, b));
            if (!v.iterates.back().positive()) {
                unknown.push_back("irreducibility of iterate " + std::to_string(m) + " not certified");
                break;
            }
        }
    }

    if (!fails.empty()) {
        v.conclusion = Verdict::Conclusion::Fails;
        v.reasons = fails;
    } else if (!unknown.empty()) {
        v.conclusion = Verdict::Conclusion::Inconclusive;
        v.reasons = unknown;
    } else {
        v.conclusion = Verdict::Conclusion::HypothesesHold;
        v.predicted_order_log10 = wreath_order_log10(d, n);
        if (v.predicted_order_log10 < 1e6) v.predicted_order = wreath_order(d, n);
    }
    return v;
}

}  // namespace arbor

#endif  // ARBOR_ODONI_HPP

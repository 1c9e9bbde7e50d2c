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

#ifndef ARBOR_BIPOLY_HPP
#define ARBOR_BIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "render.hpp"

namespace arbor {

/// f(t, x) as a polynomial in x whose coefficients lie in F_q[t].
using BiPoly = Poly<TPoly>;

/// Raised when a derivative in x vanishes identically.
class InseparableError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

inline BiPoly bp_from_terms(Field f, const std::vector<std::tuple<std::int64_t, int, int>>& terms) {
    // (coefficient, t-exponent, x-exponent)
    BiPoly out(f);
    for (const auto& [c, et, ex] : terms) {
        TPoly tc = TPoly::monomial(Fe::from_int(f, c), static_cast<std::size_t>(et));
        out += BiPoly::monomial(tc, static_cast<std::size_t>(ex));
    }
    return out;
}

inline std::string render(const BiPoly& f) { return render(f, std::vector<std::string>{"x", "t"}); }

/// Largest t-degree among the x-coefficients.
inline int t_degree(const BiPoly& f) {
    int d = -1;
    for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
    return d;
}

inline void require_monic_x(const BiPoly& f, const char* what) {
    if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument(std::string(what) + ": f must be monic in x of positive degree");
}

/// f(t, g(t, x)).
inline BiPoly bp_compose(const BiPoly& f, const BiPoly& g) {
    require_monic_x(f, "bp_compose");
    return compose(f, g);
}

/// The n-th iterate f o f o ... o f.
inline BiPoly bp_iterate(const BiPoly& f, int n) {
    if (n < 1) throw std::invalid_argument("bp_iterate: n must be at least 1");
    require_monic_x(f, "bp_iterate");
    BiPoly g = f;
    for (int i = 1; i < n; ++i) g = compose(f, g);
    return g;
}

inline BiPoly bp_derivative_x(const BiPoly& f) { return derivative(f); }

/// (-1)^{d(d-1)/2} Res_x(f, f') for f monic in x.
inline TPoly bp_disc_x(const BiPoly& f) {
    require_monic_x(f, "bp_disc_x");
    BiPoly df = derivative(f);
    if (df.is_zero()) throw InseparableError("bp_disc_x: derivative in x vanishes");
    const int d = f.degree();
    TPoly r = resultant(f, df);
    return (static_cast<long>(d) * (d - 1) / 2) % 2 ? -r : r;
}

/// f(c, x) for c in an extension of the base field of f.
inline TPoly bp_specialize_t(const BiPoly& f, const Fe& c, const Embedding& emb) {
    if (emb.from() != f.field() || emb.to() != c.field()) throw std::invalid_argument("bp_specialize_t: embedding mismatch");
    return map_coeffs(f, [&](const TPoly& a) {
        Fe acc(c.field());
        for (std::size_t i = a.size(); i-- > 0;) acc = acc * c + emb(a[i]);
        return acc;
    }, c.field());
}

inline TPoly bp_specialize_t(const BiPoly& f, const Fe& c) { return bp_specialize_t(f, c, Embedding(f.field(), c.field())); }

/// f(t, r(t)).
inline TPoly bp_eval_x(const BiPoly& f, const TPoly& r) {
    TPoly acc(f.field());
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * r + f[i];
    return acc;
}

/// Up to `count` distinct indices from [0, n) in a seeded pseudo-random
/// order; all of them when count >= n.
inline std::vector<std::uint64_t> distinct_indices(std::uint64_t n, std::uint64_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> out;
    if (count >= n || n <= 4 * count) {
        out.resize(n);
        for (std::uint64_t i = 0; i < n; ++i) out[i] = i;
        std::shuffle(out.begin(), out.end(), rng);
        if (out.size() > count) out.resize(count);
        return out;
    }
    std::unordered_set<std::uint64_t> seen;
    std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
    while (out.size() < count) {
        std::uint64_t v = dist(rng);
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// One-sided irreducibility over F_q(t)

struct SpecializationWitness {
    int m = 1;              // specialization field is F_{q^m}
    Fe point;               // c in F_{q^m}
    std::vector<int> pattern;  // factor degrees of f(c, x), descending
};

struct IrredVerdict {
    enum class Status { Irreducible, Unknown };
    enum class Reason { None, Eisenstein, Specialization };
    Status status = Status::Unknown;
    Reason reason = Reason::None;
    std::optional<TPoly> prime;                  // Eisenstein prime
    std::vector<SpecializationWitness> points;   // one irreducible point, or patterns with no common subset degree
    bool irreducible() const { return status == Status::Irreducible; }
};

struct IrredBudget {
    int max_m = 3;
    std::uint64_t max_samples = 64;  // per extension degree
    std::uint64_t seed = 0;
    bool use_eisenstein = true;
};

/// F_{q^m} for the base field F_q = F_{p^k}.
inline Field specialization_field(Field base, int m) {
    return make_extension(base->p(), base->k() * static_cast<std::size_t>(m), 0);
}

inline bool eisenstein_at(const BiPoly& f, const TPoly& prime) {
    const int d = f.degree();
    for (int i = 0; i < d; ++i)
        if (!(f[i] % prime).is_zero()) return false;
    return !(f[0] % (prime * prime)).is_zero();
}

namespace detail {

/// Set of proper factor degrees compatible with a degree pattern.
inline std::vector<bool> subset_sums(const std::vector<int>& pattern, int total) {
    std::vector<bool> reach(total + 1, false);
    reach[0] = true;
    for (int e : pattern)
        for (int s = total; s >= e; --s) reach[s] = reach[s] || reach[s - e];
    return reach;
}

}  // namespace detail

/// Certifies irreducibility of a monic f over F_q(t) by an Eisenstein
/// prime or by specializations: either one f(c, x) is irreducible, or the
/// factor-degree patterns of several specializations admit no common proper
/// subset sum. Only points where f(c, x) is squarefree are used. Never
/// certifies a reducible polynomial.
inline IrredVerdict bp_irreducible_oneside(const BiPoly& f, const IrredBudget& budget = {}) {
    require_monic_x(f, "bp_irreducible_oneside");
    IrredVerdict v;
    const int d = f.degree();
    if (d == 1) {
        v.status = IrredVerdict::Status::Irreducible;
        v.reason = IrredVerdict::Reason::Specialization;
        v.points.push_back({1, Fe(f.field()), {1}});
        return v;
    }
    if (budget.use_eisenstein && !f[0].is_zero() && f[0].degree() >= 1) {
        for (const auto& [pr, mult] : upoly_factor(f[0]).factors) {
            if (mult == 1 && eisenstein_at(f, pr)) {
                v.status = IrredVerdict::Status::Irreducible;
                v.reason = IrredVerdict::Reason::Eisenstein;
                v.prime = pr;
                return v;
            }
        }
    }
    std::vector<bool> common(d + 1, true);
    std::vector<SpecializationWitness> used;
    for (int m = 1; m <= budget.max_m; ++m) {
        Field F;
        try {
            F = specialization_field(f.field(), m);
        } catch (const std::invalid_argument&) {
            break;
        }
        Embedding emb(f.field(), F);
        for (std::uint64_t idx : distinct_indices(F->order(), budget.max_samples, budget.seed * 1000003ULL + m)) {
            Fe c = Fe::from_index(F, idx);
            TPoly fc = bp_specialize_t(f, c, emb);
            if (!upoly_squarefree(fc).squarefree) continue;
            std::vector<int> pat = factor_degrees(fc);
            if (pat.size() == 1) {
                v.status = IrredVerdict::Status::Irreducible;
                v.reason = IrredVerdict::Reason::Specialization;
                v.points = {{m, c, pat}};
                return v;
            }
            auto reach = detail::subset_sums(pat, d);
            bool narrows = false;
            for (int s = 1; s < d; ++s)
                if (common[s] && !reach[s]) narrows = true;
            if (!narrows) continue;
            for (int s = 1; s < d; ++s) common[s] = common[s] && reach[s];
            used.push_back({m, c, pat});
            bool any = false;
            for (int s = 1; s < d; ++s) any = any || common[s];
            if (!any) {
                v.status = IrredVerdict::Status::Irreducible;
                v.reason = IrredVerdict::Reason::Specialization;
                v.points = std::move(used);
                return v;
            }
        }
    }
    return v;
}

/// Re-derives an irreducibility witness from scratch.
inline bool recheck_witness(const BiPoly& f, const IrredVerdict& v) {
    if (!v.irreducible()) return false;
    const int d = f.degree();
    if (v.reason == IrredVerdict::Reason::Eisenstein) return v.prime && upoly_irreducible(*v.prime) && eisenstein_at(f, *v.prime);
    if (v.points.empty()) return false;
    std::vector<bool> common(d + 1, true);
    for (const auto& w : v.points) {
        Field F = specialization_field(f.field(), w.m);
        if (w.point.field() != F) return false;
        TPoly fc = bp_specialize_t(f, w.point);
        if (!upoly_squarefree(fc).squarefree) return false;
        auto pat = factor_degrees(fc);
        if (pat != w.pattern) return false;
        auto reach = detail::subset_sums(pat, d);
        for (int s = 1; s < d; ++s) common[s] = common[s] && reach[s];
    }
    for (int s = 1; s < d; ++s)
        if (common[s]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exhaustive factor search (small cases only)

struct BruteforceCaps {
    int max_deg_x = 4;
    int max_deg_t = 2;
    std::uint32_t max_p = 5;
};

/// Searches all monic-in-x divisors of f with x-degree at most deg_x(f)/2.
/// The t-degree of the coefficient of x^{e-j} in a monic factor of degree e
/// is at most floor(j * D), D = max_i deg_t(c_i)/(d - i), which makes the
/// search exhaustive. Returns a factor pair or nullopt for irreducible f.
inline std::optional<std::pair<BiPoly, BiPoly>> bp_factor_bruteforce(const BiPoly& f, const BruteforceCaps& caps = {}) {
    require_monic_x(f, "bp_factor_bruteforce");
    const Field F = f.field();
    const int d = f.degree();
    if (d > caps.max_deg_x || t_degree(f) > caps.max_deg_t || F->order() > caps.max_p)
        throw std::invalid_argument("bp_factor_bruteforce: input exceeds search caps");
    // D as an exact fraction num/den, maximised over i < d
    long num = 0, den = 1;
    for (int i = 0; i < d; ++i) {
        if (f[i].is_zero()) continue;
        long n2 = f[i].degree(), d2 = d - i;
        if (n2 * den > num * d2) {
            num = n2;
            den = d2;
        }
    }
    const std::uint64_t q = F->order();
    for (int e = 1; 2 * e <= d; ++e) {
        std::vector<int> bound(e);  // t-degree bound for coefficient of x^{e-j}, j = 1..e
        int slots = 0;
        for (int j = 1; j <= e; ++j) {
            bound[j - 1] = static_cast<int>((j * num) / den);
            slots += bound[j - 1] + 1;
        }
        std::vector<std::uint64_t> digits(slots, 0);
        while (true) {
            std::vector<TPoly> cs(e + 1, TPoly(F));
            cs[e] = TPoly::constant(Fe::from_int(F, 1));
            int pos = 0;
            for (int j = 1; j <= e; ++j) {
                std::vector<Fe> v;
                for (int s = 0; s <= bound[j - 1]; ++s) v.push_back(Fe::from_index(F, digits[pos++]));
                cs[e - j] = TPoly(F, std::move(v));
            }
            BiPoly g(F, std::move(cs));
            auto [h, r] = divmod(f, g);
            if (r.is_zero()) return std::make_pair(g, h);
            int k = 0;
            while (k < slots && ++digits[k] == q) digits[k++] = 0;
            if (k == slots) break;
        }
    }
    return std::nullopt;
}

}  // namespace arbor

#endif  // ARBOR_BIPOLY_HPP

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

#ifndef ARBOR_CERTIFY_HPP
#define ARBOR_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bipoly.hpp"

namespace arbor {

/// Quotient of a monic g by (x - root), where root is a root of g modulo
/// the chain. `reduce` brings a coefficient to normal form modulo the chain;
/// the reduced remainder must vanish.
template <class C, class Reduce>
Poly<C> divide_out_root(const Poly<C>& g, const C& root, Reduce&& reduce) {
    if (g.degree() < 1 || !g.is_monic()) throw std::invalid_argument("divide_out_root: g must be monic of positive degree");
    const int n = g.degree();
    const Field F = g.field();
    std::vector<C> q(static_cast<std::size_t>(n), ring_traits<C>::zero(F));
    C acc = g.lc();
    for (int i = n - 1; i >= 0; --i) {
        q[static_cast<std::size_t>(i)] = reduce(acc);
        acc = g[static_cast<std::size_t>(i)] + q[static_cast<std::size_t>(i)] * root;
    }
    if (!is_zero(reduce(acc))) throw std::logic_error("divide_out_root: nonzero remainder modulo the chain");
    return Poly<C>(F, std::move(q));
}

/// Res_z(m(z), G(z, x)) as a polynomial in x: m is a polynomial in z over
/// C, G a polynomial in x whose coefficients are polynomials in z over C.
template <class C>
Poly<C> norm_poly(const Poly<C>& m, const Poly<Poly<C>>& G) {
    Poly<Poly<C>> gz = swap_outer(G);
    Poly<Poly<C>> mz = map_coeffs(m, [](const C& c) { return Poly<C>::constant(c); });
    return resultant(mz, gz);
}

struct LevelCertificate {
    enum class Method { Irreducible, Norm, Discriminant };
    int level = 0;
    int degree = 0;  // [K_{level+1} : K_level]
    Method method = Method::Irreducible;
    std::vector<int> shift;              // lambda (and mu) of the norm
    std::optional<BiPoly> norm;          // the norm polynomial in x over F_q[t]
    IrredVerdict witness;                // irreducibility of f or of the norm
    std::optional<SpecializationWitness> disc_point;  // non-square discriminant value
    int attempts = 0;
};

struct Certificate {
    enum class Kind { FullSymmetric, IterateIrreducible, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::uint64_t value = 0;  // d! or n
    std::string reason;
    std::vector<LevelCertificate> levels;
    IrredVerdict iterate_witness;
    bool positive() const { return kind != Kind::Inconclusive; }
};

struct CertifyBudget {
    IrredBudget irred{};
    int max_shift_attempts = 16;
};

namespace detail {

using ZPoly = Poly<TPoly>;           // z over t
using XZPoly = Poly<ZPoly>;          // x over z over t
using Z2Poly = Poly<ZPoly>;          // z2 over z1 over t
using XZ2Poly = Poly<Z2Poly>;        // x over z2 over z1 over t

inline std::uint64_t factorial_u64(int d) {
    std::uint64_t f = 1;
    for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Shift parameters in a fixed order: (1), (2), ... or (1,1), (1,2), ...
inline std::vector<std::vector<int>> shift_sequence(std::uint32_t p, int arity, int cap) {
    std::vector<std::vector<int>> out;
    const int top = static_cast<int>(p) - 1;
    if (arity == 1) {
        for (int l = 1; l <= top && static_cast<int>(out.size()) < cap; ++l) out.push_back({l});
    } else {
        for (int s = 2; s <= 2 * top && static_cast<int>(out.size()) < cap; ++s)
            for (int l = 1; l <= top && static_cast<int>(out.size()) < cap; ++l) {
                int m = s - l;
                if (m >= 1 && m <= top) out.push_back({l, m});
            }
    }
    return out;
}

/// Irreducibility of a norm over F_q(t) from specialization patterns only,
/// so that the witness can be re-checked from the polynomial f alone.
inline IrredVerdict certify_norm(const BiPoly& N, const IrredBudget& budget) {
    IrredBudget b = budget;
    b.use_eisenstein = false;
    return bp_irreducible_oneside(N, b);
}

}  // namespace detail

/// The level-1 quotient f(x)/(x - z) over F_q[t][z]/(f(z)).
inline detail::XZPoly level1_quotient(const BiPoly& f) {
    using namespace detail;
    XZPoly fx = map_coeffs(f, [](const TPoly& c) { return ZPoly::constant(c); });
    ZPoly z = ZPoly::variable(f.field());
    return divide_out_root(fx, z, [&](const ZPoly& c) { return c % f; });
}

/// Res_z(f(z), f_1(z; x + lambda z)).
inline BiPoly level1_norm(const BiPoly& f, const detail::XZPoly& f1, int lambda) {
    using namespace detail;
    const Field F = f.field();
    ZPoly lz = scale(ZPoly::variable(F), TPoly::constant(Fe::from_int(F, lambda)));
    XZPoly sub(F, {lz, ZPoly::constant(TPoly::constant(Fe::from_int(F, 1)))});
    XZPoly G = map_coeffs(compose(f1, sub), [&](const ZPoly& c) { return c % f; });
    return norm_poly(f, G);
}

/// Level-2 quotient f_1(z1; x)/(x - z2) over the two-step chain.
inline detail::XZ2Poly level2_quotient(const BiPoly& f, const detail::XZPoly& f1) {
    using namespace detail;
    const Field F = f.field();
    // f1 viewed as a polynomial in z2 over F_q[t][z1]
    const Z2Poly& m2 = f1;
    auto reduce2 = [&](const Z2Poly& c) { return map_coeffs(c % m2, [&](const ZPoly& a) { return a % f; }); };
    XZ2Poly fx = map_coeffs(f1, [](const ZPoly& c) { return Z2Poly::constant(c); });
    Z2Poly z2 = Z2Poly::variable(F);
    return divide_out_root(fx, z2, reduce2);
}

/// Res_{z1}(f(z1), Res_{z2}(f_1(z1; z2), f_2(z1, z2; x + lambda z1 + mu z2))).
inline BiPoly level2_norm(const BiPoly& f, const detail::XZPoly& f1, const detail::XZ2Poly& f2, int lambda, int mu) {
    using namespace detail;
    const Field F = f.field();
    const Z2Poly& m2 = f1;
    ZPoly lz1 = scale(ZPoly::variable(F), TPoly::constant(Fe::from_int(F, lambda)));
    Z2Poly shift = Z2Poly::constant(lz1) + scale(Z2Poly::variable(F), ZPoly::constant(TPoly::constant(Fe::from_int(F, mu))));
    XZ2Poly sub(F, {shift, Z2Poly::constant(ZPoly::constant(TPoly::constant(Fe::from_int(F, 1))))});
    XZ2Poly G = map_coeffs(compose(f2, sub), [&](const Z2Poly& c) {
        return map_coeffs(c % m2, [&](const ZPoly& a) { return a % f; });
    });
    // eliminate z2 over C = F_q[t][z1], then z1 over F_q[t]
    Poly<ZPoly> inner = norm_poly(m2, G);  // x over z1 over t
    XZPoly inner_x = map_coeffs(inner, [&](const ZPoly& a) { return a % f; });
    return norm_poly(f, inner_x);
}

/// Non-square value of disc_x(f) at a specialization point, if one is found.
inline std::optional<SpecializationWitness> find_nonsquare_discriminant(const BiPoly& f, const IrredBudget& budget) {
    const TPoly disc = bp_disc_x(f);
    for (int m = 1; m <= budget.max_m; ++m) {
        Field F = specialization_field(f.field(), m);
        Embedding emb(f.field(), F);
        for (std::uint64_t idx : distinct_indices(F->order(), budget.max_samples, budget.seed * 7919ULL + m)) {
            Fe c = Fe::from_index(F, idx);
            Fe acc(F);
            for (std::size_t i = disc.size(); i-- > 0;) acc = acc * c + emb(disc[i]);
            if (!acc.is_zero() && !is_square(acc)) return SpecializationWitness{m, c, {}};
        }
    }
    return std::nullopt;
}

/// Certifies Gal(f/F_q(t)) = S_d for d <= 5 by adjoining roots one at a
/// time. Level 0 is the irreducibility of f. Level k >= 1 certifies that the
/// k-th quotient stays irreducible over the field generated by k roots,
/// through the irreducibility of its norm down to F_q(t). The last level
/// (a quadratic) uses a non-square discriminant value when d >= 4, since
/// the lower levels already force |G| >= d!/2; for d = 3 the norm is tried
/// first with the discriminant as fallback.
inline Certificate certify_full_symmetric(const BiPoly& f, const CertifyBudget& budget = {}) {
    require_monic_x(f, "certify_full_symmetric");
    const int d = f.degree();
    if (d < 2 || d > 5) throw std::invalid_argument("certify_full_symmetric: degree must be between 2 and 5");
    Certificate cert;
    LevelCertificate l0;
    l0.level = 0;
    l0.degree = d;
    l0.method = LevelCertificate::Method::Irreducible;
    l0.witness = bp_irreducible_oneside(f, budget.irred);
    l0.attempts = 1;
    if (!l0.witness.irreducible()) {
        cert.reason = "level 0: irreducibility of f not certified";
        return cert;
    }
    cert.levels.push_back(l0);
    if (derivative(f).is_zero()) {
        cert.reason = "f is inseparable";
        return cert;
    }
    const detail::XZPoly f1 = d >= 3 ? level1_quotient(f) : detail::XZPoly(f.field());
    std::optional<detail::XZ2Poly> f2;
    for (int k = 1; k <= d - 2; ++k) {
        const bool last = k == d - 2;
        LevelCertificate lc;
        lc.level = k;
        lc.degree = d - k;
        bool done = false;
        if (!last || d == 3) {
            lc.method = LevelCertificate::Method::Norm;
            for (const auto& sh : detail::shift_sequence(f.field()->p(), k, budget.max_shift_attempts)) {
                ++lc.attempts;
                BiPoly N;
                if (k == 1) {
                    N = level1_norm(f, f1, sh[0]);
                } else {
                    if (!f2) f2 = level2_quotient(f, f1);
                    N = level2_norm(f, f1, *f2, sh[0], sh[1]);
                }
                IrredVerdict v = detail::certify_norm(N, budget.irred);
                if (v.irreducible()) {
                    lc.shift = sh;
                    lc.norm = N;
                    lc.witness = std::move(v);
                    done = true;
                    break;
                }
            }
        }
        if (!done && last) {
            lc.method = LevelCertificate::Method::Discriminant;
            lc.shift.clear();
            lc.disc_point = find_nonsquare_discriminant(f, budget.irred);
            done = lc.disc_point.has_value();
        }
        if (!done) {
            cert.reason = "level " + std::to_string(k) + ": " +
                          (lc.method == LevelCertificate::Method::Norm ? "norm irreducibility not certified"
                                                                        : "no non-square discriminant value found");
            return cert;
        }
        cert.levels.push_back(std::move(lc));
    }
    std::uint64_t prod = 1;
    for (const auto& l : cert.levels) prod *= static_cast<std::uint64_t>(l.degree);
    if (prod != detail::factorial_u64(d)) throw std::logic_error("certify_full_symmetric: chain degrees do not multiply to d!");
    cert.kind = Certificate::Kind::FullSymmetric;
    cert.value = detail::factorial_u64(d);
    return cert;
}

/// Certifies that f^{on} is irreducible over F_q(t).
inline Certificate certify_iterate_irreducible(const BiPoly& f, int n, const CertifyBudget& budget = {}) {
    if (n < 1) throw std::invalid_argument("certify_iterate_irreducible: n must be at least 1");
    Certificate cert;
    cert.iterate_witness = bp_irreducible_oneside(bp_iterate(f, n), budget.irred);
    if (cert.iterate_witness.irreducible()) {
        cert.kind = Certificate::Kind::IterateIrreducible;
        cert.value = static_cast<std::uint64_t>(n);
    } else {
        cert.reason = "no irreducibility witness for iterate " + std::to_string(n);
    }
    return cert;
}

}  // namespace arbor

#endif  // ARBOR_CERTIFY_HPP

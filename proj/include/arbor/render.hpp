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

#ifndef ARBOR_RENDER_HPP
#define ARBOR_RENDER_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace arbor {

namespace detail {

struct Monomial {
    std::vector<int> exps;  // outermost variable first
    Fe coeff;
};

inline void collect(const Fe& c, std::vector<int>& exps, std::vector<Monomial>& out) {
    if (!c.is_zero()) out.push_back({exps, c});
}

template <class C>
void collect(const Poly<C>& p, std::vector<int>& exps, std::vector<Monomial>& out) {
    for (std::size_t i = p.size(); i-- > 0;) {
        exps.push_back(static_cast<int>(i));
        collect(p[i], exps, out);
        exps.pop_back();
    }
}

inline std::string power_string(const std::string& var, int e) {
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

inline std::string join_terms(const std::vector<Monomial>& terms, const std::vector<std::string>& vars_outer_first,
                              const std::string& sep_plus) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& m = terms[k];
        std::vector<std::string> parts;
        bool has_var = false;
        for (int e : m.exps) has_var |= e > 0;
        if (!m.coeff.is_one() || !has_var) parts.push_back(to_string(m.coeff));
        // innermost variable printed first
        for (std::size_t v = m.exps.size(); v-- > 0;)
            if (m.exps[v] > 0) parts.push_back(power_string(vars_outer_first[v], m.exps[v]));
        std::string term;
        for (std::size_t i = 0; i < parts.size(); ++i) term += (i ? "*" : "") + parts[i];
        out += (k ? sep_plus : "") + term;
    }
    return out;
}

}  // namespace detail

/// Expanded rendering. `vars` lists variable names from the outermost
/// variable inwards, e.g. {"x", "t"} for a polynomial in x over F_q[t].
/// Terms are ordered by descending degree in the outermost variable, then
/// the next one.
template <class C>
std::string render(const Poly<C>& p, const std::vector<std::string>& vars, const std::string& sep = " + ") {
    if (vars.size() != static_cast<std::size_t>(ring_traits<Poly<C>>::depth))
        throw std::invalid_argument("variable list does not match nesting depth");
    std::vector<detail::Monomial> terms;
    std::vector<int> exps;
    detail::collect(p, exps, terms);
    return detail::join_terms(terms, vars, sep);
}

inline std::string render(const TPoly& p, const std::string& var = "t") { return render(p, std::vector<std::string>{var}); }

/// Factored rendering such as `2*t*(t^2+3)^2`.
inline std::string render_factored(const Factorization<Fe>& fz, const std::string& var = "t") {
    std::vector<std::string> parts;
    const bool bare = fz.factors.empty();
    if (!fz.unit.is_one() || bare) parts.push_back(to_string(fz.unit));
    for (const auto& [g, m] : fz.factors) {
        std::string body = render(g, std::vector<std::string>{var}, "+");
        const bool atom = g.size() >= 1 && std::count_if(g.coeffs().begin(), g.coeffs().end(),
                                                         [](const Fe& c) { return !c.is_zero(); }) == 1;
        std::string s = atom ? body : "(" + body + ")";
        if (m > 1) s += "^" + std::to_string(m);
        parts.push_back(std::move(s));
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
    return out;
}

}  // namespace arbor

#endif  // ARBOR_RENDER_HPP

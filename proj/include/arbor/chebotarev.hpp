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

#ifndef ARBOR_CHEBOTAREV_HPP
#define ARBOR_CHEBOTAREV_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "bipoly.hpp"
#include "wreath.hpp"

namespace arbor {

inline constexpr int kMaxSampleDegree = 8;

/// Degrees of the irreducible factors of f^{on}(c, x) over the field of c,
/// descending; none when f^{on}(c, x) has a repeated factor, which happens
/// exactly when disc_x(f^{on}) vanishes at c.
inline std::optional<CycleType> frobenius_cycle_type(const BiPoly& f, int n, const Fe& c, const Embedding& emb) {
    if (n < 1) throw std::invalid_argument("frobenius_cycle_type: n must be at least 1");
    const TPoly fc = bp_specialize_t(f, c, emb);
    TPoly g = fc;
    for (int i = 1; i < n; ++i) g = compose(fc, g);
    if (!upoly_squarefree(g).squarefree) return std::nullopt;
    CycleType out;
    for (int k : factor_degrees(g)) out.push_back(static_cast<std::uint64_t>(k));
    return out;
}

inline std::optional<CycleType> frobenius_cycle_type(const BiPoly& f, int n, const Fe& c) {
    return frobenius_cycle_type(f, n, c, Embedding(f.field(), c.field()));
}

struct SampleSpec {
    int n = 1;
    int m_lo = 1;
    int m_hi = 1;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct PerDegreeSample {
    int m = 1;
    std::uint64_t field_size = 0;
    std::uint64_t attempted = 0;
    std::uint64_t excluded = 0;
    std::map<CycleType, std::uint64_t> counts;
};

struct SampleReport {
    BiPoly f;
    SampleSpec spec;
    std::map<CycleType, std::uint64_t> counts;
    std::uint64_t attempted = 0;
    std::uint64_t excluded = 0;
    std::vector<PerDegreeSample> per_m;      // ascending m, only degrees actually sampled
    std::vector<std::string> escalations;   // overflow carried to larger m
    std::uint64_t usable() const { return attempted - excluded; }
};

namespace detail {

/// Points per extension degree: round-robin over [lo, hi], with any excess
/// over the field size carried to the next degree.
inline std::map<int, std::uint64_t> sample_quota(std::uint64_t q, const SampleSpec& s, std::vector<std::string>& notes) {
    std::map<int, std::uint64_t> quota;
    const std::uint64_t span = static_cast<std::uint64_t>(s.m_hi - s.m_lo + 1);
    for (int m = s.m_lo; m <= s.m_hi; ++m) {
        const std::uint64_t k = static_cast<std::uint64_t>(m - s.m_lo);
        quota[m] = s.samples / span + (k < s.samples % span ? 1 : 0);
    }
    std::uint64_t carry = 0;
    for (int m = s.m_lo; m <= kMaxSampleDegree; ++m) {
        std::uint64_t want = quota[m] + carry;
        carry = 0;
        // q^m, saturating
        std::uint64_t size = 1;
        for (int i = 0; i < m; ++i) size = size > (std::uint64_t{1} << 62) / q ? std::uint64_t{1} << 62 : size * q;
        if (want > size) {
            carry = want - size;
            want = size;
            if (m < kMaxSampleDegree)
                notes.push_back("m=" + std::to_string(m) + ": " + std::to_string(carry) + " samples carried to m=" +
                                std::to_string(m + 1));
        }
        quota[m] = want;
        if (m >= s.m_hi && carry == 0) break;
    }
    if (carry > 0) throw std::invalid_argument("chebotarev_sample: sample budget exceeds the points of F_{q^m}, m <= 8");
    for (auto it = quota.begin(); it != quota.end();) it = it->second == 0 ? quota.erase(it) : std::next(it);
    return quota;
}

}  // namespace detail

/// Frobenius cycle types at distinct random points of F_{q^m} for m cycling
/// through the range. Points are fixed by the seed before any work is
/// split, so the report does not depend on the worker count.
inline SampleReport chebotarev_sample(const BiPoly& f, const SampleSpec& spec, unsigned workers = 1) {
    require_monic_x(f, "chebotarev_sample");
    if (spec.samples < 1) throw std::invalid_argument("chebotarev_sample: samples must be at least 1");
    if (spec.n < 1) throw std::invalid_argument("chebotarev_sample: n must be at least 1");
    if (spec.m_lo < 1 || spec.m_hi < spec.m_lo || spec.m_hi > kMaxSampleDegree)
        throw std::invalid_argument("chebotarev_sample: m-range must lie in [1, 8]");
    SampleReport rep;
    rep.f = f;
    rep.spec = spec;
    const auto quota = detail::sample_quota(f.field()->order(), spec, rep.escalations);

    struct Task {
        std::size_t slot;
        Fe point;
    };
    std::vector<Field> fields;
    std::vector<Embedding> embs;
    std::vector<Task> tasks;
    for (const auto& [m, k] : quota) {
        Field F = specialization_field(f.field(), m);
        fields.push_back(F);
        embs.emplace_back(f.field(), F);
        PerDegreeSample pm;
        pm.m = m;
        pm.field_size = F->order();
        rep.per_m.push_back(pm);
        for (std::uint64_t idx : distinct_indices(F->order(), k, spec.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(m)))
            tasks.push_back(Task{rep.per_m.size() - 1, Fe::from_index(F, idx)});
    }

    std::vector<std::optional<CycleType>> results(tasks.size());
    const std::size_t nw = std::max<std::size_t>(1, std::min<std::size_t>(workers, tasks.size()));
    auto run = [&](std::size_t w) {
        const std::size_t lo = tasks.size() * w / nw, hi = tasks.size() * (w + 1) / nw;
        for (std::size_t i = lo; i < hi; ++i) results[i] = frobenius_cycle_type(f, spec.n, tasks[i].point, embs[tasks[i].slot]);
    };
    std::vector<std::thread> threads;
    for (std::size_t w = 1; w < nw; ++w) threads.emplace_back(run, w);
    run(0);
    for (auto& t : threads) t.join();

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto& pm = rep.per_m[tasks[i].slot];
        ++pm.attempted;
        ++rep.attempted;
        if (!results[i]) {
            ++pm.excluded;
            ++rep.excluded;
        } else {
            ++pm.counts[*results[i]];
            ++rep.counts[*results[i]];
        }
    }
    return rep;
}

enum class ComparisonVerdict { ConsistentWithFullWreath, Inconsistent, InsufficientData };

inline const char* to_string(ComparisonVerdict v) {
    switch (v) {
        case ComparisonVerdict::ConsistentWithFullWreath: return "ConsistentWithFullWreath";
        case ComparisonVerdict::Inconsistent: return "Inconsistent";
        default: return "InsufficientData";
    }
}

struct CompareOptions {
    double tolerance = 0.05;
    double max_sigma = 5.0;
    std::uint64_t min_samples = 500;
    std::uint64_t reference_seed = 0;
    unsigned workers = 1;
};

struct ComparisonRow {
    CycleType type;
    std::uint64_t observed = 0;
    double observed_fraction = 0;
    double expected = 0;
    double sigma = 0;  // signed deviation in standard deviations
};

struct ComparisonReport {
    double tv_distance = 0;
    double chi_square = 0;
    int dof = 0;
    double p_value = 1;
    double irreducible_observed = 0;
    double irreducible_expected = 0;
    double worst_sigma = 0;
    double tolerance = 0.05;
    std::uint64_t usable = 0;
    std::string reference;  // "exact" or "montecarlo(N)"
    std::vector<ComparisonRow> rows;
    ComparisonVerdict verdict = ComparisonVerdict::InsufficientData;
};

/// Compares observed counts with reference probabilities. Consistent iff
/// the total variation is within tolerance and no class deviates by more
/// than max_sigma standard deviations.
inline ComparisonReport compare_counts(const std::map<CycleType, std::uint64_t>& counts,
                                       const std::map<CycleType, double>& reference, std::uint64_t leaves,
                                       const CompareOptions& opt = {}) {
    ComparisonReport r;
    r.tolerance = opt.tolerance;
    for (const auto& [c, k] : counts) r.usable += k;
    std::map<CycleType, std::pair<std::uint64_t, double>> joint;
    for (const auto& [c, k] : counts) joint[c].first = k;
    for (const auto& [c, p] : reference) joint[c].second = p;
    const double N = static_cast<double>(r.usable);
    const CycleType full{leaves};
    int classes = 0;
    for (const auto& [c, op] : joint) {
        const auto [k, p] = op;
        ComparisonRow row;
        row.type = c;
        row.observed = k;
        row.observed_fraction = N > 0 ? static_cast<double>(k) / N : 0;
        row.expected = p;
        r.tv_distance += std::abs(row.observed_fraction - p);
        if (p > 0) {
            ++classes;
            const double E = N * p;
            if (E > 0) r.chi_square += (static_cast<double>(k) - E) * (static_cast<double>(k) - E) / E;
            const double sd = std::sqrt(N * p * (1 - p));
            row.sigma = sd > 0 ? (static_cast<double>(k) - E) / sd : 0;
        } else if (k > 0) {
            r.chi_square = std::numeric_limits<double>::infinity();
            row.sigma = std::numeric_limits<double>::infinity();
        }
        r.worst_sigma = std::max(r.worst_sigma, std::abs(row.sigma));
        if (c == full) {
            r.irreducible_observed = row.observed_fraction;
            r.irreducible_expected = p;
        }
        r.rows.push_back(row);
    }
    r.tv_distance = std::min(1.0, r.tv_distance / 2);
    r.dof = std::max(0, classes - 1);
    if (std::isinf(r.chi_square)) {
        r.p_value = 0;
    } else if (r.dof > 0) {
        r.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(r.dof), r.chi_square));
    }
    if (r.usable < opt.min_samples) {
        r.verdict = ComparisonVerdict::InsufficientData;
    } else if (r.tv_distance <= opt.tolerance && r.worst_sigma <= opt.max_sigma) {
        r.verdict = ComparisonVerdict::ConsistentWithFullWreath;
    } else {
        r.verdict = ComparisonVerdict::Inconsistent;
    }
    return r;
}

/// Leaf-action cycle-type distribution of [S_d]^n: exact when the group has
/// at most kEnumerationCap elements, otherwise a Monte Carlo estimate.
inline std::map<CycleType, double> wreath_reference(const TreeSpec& spec, std::uint64_t mc_samples, std::uint64_t seed,
                                                    unsigned workers, std::string& label) {
    std::map<CycleType, double> out;
    if (wreath_order_log10(spec.d, spec.n) <= std::log10(static_cast<double>(kEnumerationCap)) + 1e-9) {
        ExactDistribution ex = wreath_exact_distribution(spec);
        for (const auto& [c, k] : ex.counts) out[c] = static_cast<double>(k) / static_cast<double>(ex.total);
        label = "exact";
    } else {
        MonteCarloDistribution mc = wreath_montecarlo_distribution(spec, mc_samples, seed, workers);
        for (const auto& [c, k] : mc.counts) out[c] = static_cast<double>(k) / static_cast<double>(mc.samples);
        label = "montecarlo(" + std::to_string(mc_samples) + ")";
    }
    return out;
}

/// Compares a sample report with the [S_d]^n distribution. A Monte Carlo
/// reference uses ten times the usable sample count.
inline ComparisonReport compare_distribution(const SampleReport& report, const TreeSpec& spec, const CompareOptions& opt = {}) {
    if (spec.d != report.f.degree() || spec.n != report.spec.n)
        throw std::invalid_argument("compare_distribution: tree does not match the sampled iterate");
    std::string label;
    const std::uint64_t mc = std::max<std::uint64_t>(10 * report.usable(), 10 * opt.min_samples);
    auto ref = wreath_reference(spec, mc, opt.reference_seed, opt.workers, label);
    ComparisonReport r = compare_counts(report.counts, ref, spec.leaves(), opt);
    r.reference = label;
    return r;
}

}  // namespace arbor

#endif  // ARBOR_CHEBOTAREV_HPP

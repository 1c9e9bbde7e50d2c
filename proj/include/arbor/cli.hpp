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

#ifndef ARBOR_CLI_HPP
#define ARBOR_CLI_HPP

// Command-line frontend. Exit codes: 0 pass, 1 negative or inconclusive,
// 2 usage, configuration or parse error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "parse.hpp"
#include "report.hpp"

namespace arbor {
namespace cli {

using report::Json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kExitPass = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Invalid configuration; reported on stderr with exit code 2.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::uint32_t p = 0;
    std::string poly;
    int n = 1;
    std::uint64_t seed = 0;
    int max_m = 3;
    std::uint64_t samples = 3000;
    double tolerance = 0.05;
    std::string m_range = "1..4";
    unsigned workers = 1;
    std::string out;
    std::string csv;
};

inline Field field_from(std::uint32_t p) {
    if (p < 3 || p >= (1u << 31) || !detail::is_prime(p)) throw ConfigError("--field must be an odd prime below 2^31, got " + std::to_string(p));
    return prime_field(p);
}

inline BiPoly poly_from(const std::string& text, Field F) {
    try {
        return parse_bipoly(text, F);
    } catch (const ParseError& e) {
        throw ConfigError(std::string("--poly ") + e.what());
    }
}

inline std::pair<int, int> m_range_from(const std::string& s) {
    int lo = 0, hi = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%d..%d%c", &lo, &hi, &tail) == 2) {
    } else if (std::sscanf(s.c_str(), "%d%c", &lo, &tail) == 1) {
        hi = lo;
    } else {
        throw ConfigError("--m must look like 1..4, got '" + s + "'");
    }
    if (lo < 1 || hi < lo || hi > kMaxSampleDegree)
        throw ConfigError("--m range must satisfy 1 <= lo <= hi <= " + std::to_string(kMaxSampleDegree));
    return {lo, hi};
}

inline CertifyBudget budget_from(const RunConfig& c) {
    CertifyBudget b;
    b.irred.max_m = c.max_m;
    return b;
}

inline Json envelope(const std::string& command, Json config, Json result) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["config"] = std::move(config);
    j["result"] = std::move(result);
    return j;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("cannot open '" + path + "' for writing");
    os << text;
    if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

/// JSON goes to --out when given (with a one-line summary on stdout),
/// otherwise to stdout.
inline void emit(const RunConfig& c, const Json& doc, const std::string& summary, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (c.out.empty()) {
        out << text;
    } else {
        write_file(c.out, text);
        out << summary << "\n";
    }
}

inline Json base_config(const RunConfig& c, const BiPoly& f) {
    Json j;
    j["field"] = c.p;
    j["poly"] = render(f);
    j["n"] = c.n;
    j["seed"] = c.seed;
    j["max_m"] = c.max_m;
    return j;
}

// ---------------------------------------------------------------------------
// check

inline int cmd_check(const RunConfig& c, std::ostream& out) {
    const BiPoly f = poly_from(c.poly, field_from(c.p));
    const Verdict v = check_odoni(f, c.n, budget_from(c), c.seed);
    std::string summary = std::string(to_string(v.conclusion));
    if (v.conclusion == Verdict::Conclusion::HypothesesHold) summary += "(" + std::to_string(c.n) + ")";
    emit(c, envelope("check", base_config(c, f), report::verdict_json(v)), summary, out);
    return v.conclusion == Verdict::Conclusion::HypothesesHold ? kExitPass : kExitNegative;
}

// ---------------------------------------------------------------------------
// wreath

struct WreathOptions {
    int d = 2;
    int n = 1;
    bool exact = false;
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
};

inline int cmd_wreath(const RunConfig& c, const WreathOptions& w, std::ostream& out) {
    if (w.exact == (w.sample > 0)) throw ConfigError("wreath needs exactly one of --exact or --sample N");
    const TreeSpec spec(w.d, w.n);
    Json config;
    config["d"] = w.d;
    config["n"] = w.n;
    config["mode"] = w.exact ? "exact" : "sample";
    if (!w.exact) {
        config["samples"] = w.sample;
        config["seed"] = w.seed;
    }
    Json result;
    const double lg = wreath_order_log10(w.d, w.n);
    result["order"] = lg <= 1e4 ? Json(wreath_order(w.d, w.n).str()) : Json(nullptr);
    result["order_log10"] = lg;
    result["leaves"] = spec.leaves();
    result["distribution"] = Json::array();
    std::string csv = w.exact ? "cycle_type,count,probability\n" : "cycle_type,count,frequency\n";
    if (w.exact) {
        const ExactDistribution dist = wreath_exact_distribution(spec);
        result["total"] = dist.total;
        for (const auto& [type, k] : dist.counts) {
            auto [num, den] = dist.probability(type);
            const std::string frac = std::to_string(num) + "/" + std::to_string(den);
            result["distribution"].push_back(Json{{"cycle_type", type},
                                                  {"count", k},
                                                  {"numerator", num},
                                                  {"denominator", den},
                                                  {"probability", frac}});
            csv += "\"" + to_string(type) + "\"," + std::to_string(k) + "," + frac + "\n";
        }
    } else {
        const MonteCarloDistribution dist = wreath_montecarlo_distribution(spec, w.sample, w.seed, c.workers);
        result["total"] = dist.samples;
        for (const auto& [type, k] : dist.counts) {
            result["distribution"].push_back(
                Json{{"cycle_type", type}, {"count", k}, {"frequency", dist.probability(type)}});
            std::ostringstream os;
            os << "\"" << to_string(type) << "\"," << k << "," << dist.probability(type) << "\n";
            csv += os.str();
        }
    }
    if (!c.csv.empty()) write_file(c.csv, csv);
    const std::string summary = "order " + (result["order"].is_null() ? "10^" + std::to_string(lg) : result["order"].get<std::string>()) +
                                ", " + std::to_string(result["distribution"].size()) + " cycle types";
    emit(c, envelope("wreath", config, result), summary, out);
    return kExitPass;
}

// ---------------------------------------------------------------------------
// chebotarev

inline int cmd_chebotarev(const RunConfig& c, std::ostream& out) {
    const BiPoly f = poly_from(c.poly, field_from(c.p));
    const auto [lo, hi] = m_range_from(c.m_range);
    if (c.samples == 0) throw ConfigError("--samples must be positive");
    if (!(c.tolerance > 0 && c.tolerance < 1)) throw ConfigError("--tolerance must lie in (0, 1)");
    Json config = base_config(c, f);
    config["samples"] = c.samples;
    config["m"] = std::to_string(lo) + ".." + std::to_string(hi);
    config["tolerance"] = c.tolerance;
    Json result;
    const BasicReport basic = check_basic(f, budget_from(c).irred);
    if (!basic.passed()) {
        std::vector<std::string> reasons = basic.failures();
        if (reasons.empty()) reasons.emplace_back("irreducibility of f not certified");
        result["verdict"] = "NotApplicable";
        result["reasons"] = reasons;
        result["basic"] = report::basic_json(basic);
        emit(c, envelope("chebotarev", config, result), "NotApplicable: " + reasons.front(), out);
        return kExitNegative;
    }
    const TreeSpec spec(f.degree(), c.n);
    SampleSpec ss;
    ss.n = c.n;
    ss.m_lo = lo;
    ss.m_hi = hi;
    ss.samples = c.samples;
    ss.seed = c.seed;
    const SampleReport rep = chebotarev_sample(f, ss, c.workers);
    CompareOptions opt;
    opt.tolerance = c.tolerance;
    opt.reference_seed = c.seed;
    opt.workers = c.workers;
    const ComparisonReport cmp = compare_distribution(rep, spec, opt);
    result["verdict"] = to_string(cmp.verdict);
    std::vector<std::string> reasons;
    if (cmp.verdict == ComparisonVerdict::InsufficientData)
        reasons.push_back("only " + std::to_string(cmp.usable) + " usable samples, need " + std::to_string(opt.min_samples));
    if (cmp.verdict == ComparisonVerdict::Inconsistent) reasons.push_back("observed distribution departs from the full wreath product");
    result["reasons"] = reasons;
    result["sample"] = report::sample_json(rep);
    result["comparison"] = report::comparison_json(cmp);
    if (!c.csv.empty()) {
        std::ostringstream os;
        os << "cycle_type,count,expected_probability\n";
        for (const auto& r : cmp.rows) os << "\"" << to_string(r.type) << "\"," << r.observed << "," << r.expected << "\n";
        write_file(c.csv, os.str());
    }
    std::ostringstream summary;
    summary << to_string(cmp.verdict) << " (tv " << cmp.tv_distance << ", " << cmp.usable << " usable)";
    emit(c, envelope("chebotarev", config, result), summary.str(), out);
    return cmp.verdict == ComparisonVerdict::ConsistentWithFullWreath ? kExitPass : kExitNegative;
}

// ---------------------------------------------------------------------------
// certify

inline int cmd_certify(const RunConfig& c, const std::string& mode, std::ostream& out) {
    const BiPoly f = poly_from(c.poly, field_from(c.p));
    Json config = base_config(c, f);
    config["mode"] = mode;
    Certificate cert;
    if (mode == "full-symmetric") {
        require_monic_x(f, "certify");
        if (f.degree() < 2 || f.degree() > 5) throw ConfigError("full-symmetric mode needs 2 <= deg_x f <= 5");
        config.erase("n");
        cert = certify_full_symmetric(f, budget_from(c));
    } else if (mode == "iterate-irreducible") {
        require_monic_x(f, "certify");
        cert = certify_iterate_irreducible(f, c.n, budget_from(c));
    } else {
        throw ConfigError("--mode must be full-symmetric or iterate-irreducible");
    }
    std::string summary = report::to_string(cert.kind);
    if (cert.positive()) summary += "(" + std::to_string(cert.value) + ")";
    emit(c, envelope("certify", config, report::certificate_json(cert)), summary, out);
    return cert.positive() ? kExitPass : kExitNegative;
}

// ---------------------------------------------------------------------------
// scan

/// Monic irreducible polynomials in t of degree 1..bound, by degree and then
/// by coefficient index.
inline std::vector<TPoly> monic_irreducibles(Field F, int bound) {
    std::vector<TPoly> out;
    const std::uint64_t q = F->order();
    for (int k = 1; k <= bound; ++k) {
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<Fe> coeffs;
            std::uint64_t r = idx;
            for (int i = 0; i < k; ++i) {
                coeffs.push_back(Fe::from_index(F, r % q));
                r /= q;
            }
            coeffs.push_back(Fe::from_int(F, 1));
            TPoly g(F, std::move(coeffs));
            if (upoly_irreducible(g)) out.push_back(std::move(g));
        }
    }
    return out;
}

/// Number of monic irreducibles of degree 1..bound over F_q by the Moebius
/// formula, computed independently of the enumeration.
inline std::uint64_t count_monic_irreducibles(std::uint64_t q, int bound) {
    auto mobius = [](int n) {
        int m = 1;
        for (int pr = 2; pr * pr <= n; ++pr) {
            if (n % pr) continue;
            n /= pr;
            if (n % pr == 0) return 0;
            m = -m;
        }
        return n > 1 ? -m : m;
    };
    std::uint64_t total = 0;
    for (int k = 1; k <= bound; ++k) {
        std::int64_t s = 0;
        for (int e = 1; e <= k; ++e) {
            if (k % e) continue;
            std::int64_t pw = 1;
            for (int i = 0; i < e; ++i) pw *= static_cast<std::int64_t>(q);
            s += mobius(k / e) * pw;
        }
        total += static_cast<std::uint64_t>(s / k);
    }
    return total;
}

struct ScanRow {
    std::string family, a, b, poly;
    bool basic = false, irreducible = false, sd_certified = false, multiplicity_one = false, morse = false,
         orbit_separated = false, iterates_certified = false;
    std::string verdict;
};

inline const char* kScanHeader =
    "family,a,b,poly,basic,irreducible,sd_certified,multiplicity_one,morse,orbit_separated,iterates_certified,verdict";

inline std::string to_csv(const ScanRow& r) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string s = r.family + "," + r.a + "," + r.b + "," + r.poly;
    for (bool v : {r.basic, r.irreducible, r.sd_certified, r.multiplicity_one, r.morse, r.orbit_separated, r.iterates_certified})
        s += std::string(",") + b(v);
    return s + "," + r.verdict;
}

inline ScanRow scan_row_from_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 12) throw ConfigError("malformed scan CSV row: " + line);
    ScanRow r;
    r.family = cells[0];
    r.a = cells[1];
    r.b = cells[2];
    r.poly = cells[3];
    bool* flags[] = {&r.basic, &r.irreducible, &r.sd_certified, &r.multiplicity_one, &r.morse, &r.orbit_separated, &r.iterates_certified};
    for (int i = 0; i < 7; ++i) *flags[i] = cells[static_cast<std::size_t>(4 + i)] == "true";
    r.verdict = cells[11];
    return r;
}

inline Json to_json(const ScanRow& r) {
    return Json{{"family", r.family},
                {"a", r.a},
                {"b", r.b},
                {"poly", r.poly},
                {"basic", r.basic},
                {"irreducible", r.irreducible},
                {"sd_certified", r.sd_certified},
                {"multiplicity_one", r.multiplicity_one},
                {"morse", r.morse},
                {"orbit_separated", r.orbit_separated},
                {"iterates_certified", r.iterates_certified},
                {"verdict", r.verdict}};
}

inline BiPoly family_member(const std::string& family, int d, const TPoly& a, const TPoly& b) {
    Field F = a.field();
    std::vector<TPoly> coeffs(static_cast<std::size_t>(d) + 1, TPoly(F));
    coeffs[static_cast<std::size_t>(d)] = TPoly::constant(Fe::from_int(F, 1));
    coeffs[0] = b;
    const std::size_t slot = family == "trinomial-xd-1" ? static_cast<std::size_t>(d - 1) : 1;
    coeffs[slot] = coeffs[slot] + a;
    return BiPoly(F, std::move(coeffs));
}

inline ScanRow scan_one(const std::string& family, int d, const TPoly& a, const TPoly& b, int n, const CertifyBudget& budget,
                        std::uint64_t seed) {
    const BiPoly f = family_member(family, d, a, b);
    ScanRow r;
    r.family = family;
    r.a = render(a);
    r.b = render(b);
    r.poly = render(f);
    const Verdict v = check_odoni(f, n, budget, seed);
    r.basic = v.basic.passed();
    r.irreducible = v.basic.irreducible();
    r.sd_certified = v.group && v.group->positive();
    r.multiplicity_one = v.multiplicity_one_exists;
    r.morse = v.morse && v.morse->morse;
    r.orbit_separated = v.separation && v.separation->separated;
    r.iterates_certified = static_cast<int>(v.iterates.size()) == n &&
                           std::all_of(v.iterates.begin(), v.iterates.end(), [](const Certificate& x) { return x.positive(); });
    r.verdict = to_string(v.conclusion);
    return r;
}

struct ScanOptions {
    std::string family;
    int d = 3;
    int deg_bound = 1;
};

inline int cmd_scan(const RunConfig& c, const ScanOptions& s, std::ostream& out) {
    if (s.family != "trinomial-xd-1" && s.family != "trinomial-x1")
        throw ConfigError("--family must be trinomial-xd-1 or trinomial-x1");
    if (s.d < 3) throw ConfigError("--d must be at least 3");
    if (s.deg_bound < 0) throw ConfigError("--deg-bound must be non-negative");
    const Field F = field_from(c.p);
    const std::vector<TPoly> irr = monic_irreducibles(F, s.deg_bound);
    const std::uint64_t per = count_monic_irreducibles(F->order(), s.deg_bound);
    if (irr.size() != per) throw std::logic_error("irreducible enumeration disagrees with the closed-form count");
    const std::uint64_t expected = per * per;

    std::vector<ScanRow> rows;
    const std::string marker = c.csv.empty() ? "" : c.csv + ".progress";
    if (!c.csv.empty() && std::filesystem::exists(marker) && std::filesystem::exists(c.csv)) {
        std::uint64_t done = 0;
        std::ifstream(marker) >> done;
        std::ifstream is(c.csv);
        std::string line;
        std::getline(is, line);
        if (line != kScanHeader) throw ConfigError("existing CSV '" + c.csv + "' has a different header");
        while (rows.size() < done && std::getline(is, line)) rows.push_back(scan_row_from_csv(line));
    }
    if (!c.csv.empty()) {
        std::string text = std::string(kScanHeader) + "\n";
        for (const auto& r : rows) text += to_csv(r) + "\n";
        write_file(c.csv, text);
        write_file(marker, std::to_string(rows.size()) + "\n");
    }

    const CertifyBudget budget = budget_from(c);
    const std::size_t total = irr.size() * irr.size();
    const unsigned workers = std::max(1u, c.workers);
    const std::size_t batch = 4 * static_cast<std::size_t>(workers);
    while (rows.size() < total) {
        const std::size_t lo = rows.size(), hi = std::min(total, lo + batch);
        std::vector<ScanRow> fresh(hi - lo);
        auto run = [&](unsigned w) {
            for (std::size_t i = lo + w; i < hi; i += workers)
                fresh[i - lo] = scan_one(s.family, s.d, irr[i / irr.size()], irr[i % irr.size()], c.n, budget, c.seed);
        };
        std::vector<std::thread> threads;
        for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run, w);
        run(0);
        for (auto& t : threads) t.join();
        if (!c.csv.empty()) {
            std::ofstream os(c.csv, std::ios::binary | std::ios::app);
            for (const auto& r : fresh) os << to_csv(r) << "\n";
            if (!os) throw std::runtime_error("append to '" + c.csv + "' failed");
        }
        for (auto& r : fresh) rows.push_back(std::move(r));
        if (!c.csv.empty()) write_file(marker, std::to_string(rows.size()) + "\n");
    }
    if (rows.size() != expected) throw std::logic_error("scan row count differs from the family cardinality");
    if (!c.csv.empty()) std::filesystem::remove(marker);

    Json config;
    config["family"] = s.family;
    config["d"] = s.d;
    config["field"] = c.p;
    config["deg_bound"] = s.deg_bound;
    config["n"] = c.n;
    config["seed"] = c.seed;
    config["max_m"] = c.max_m;
    Json counts = Json::object();
    for (const char* k : {"HypothesesHold", "Fails", "Inconclusive"}) counts[k] = 0;
    std::uint64_t pass = 0;
    Json jrows = Json::array();
    for (const auto& r : rows) {
        counts[r.verdict] = counts[r.verdict].get<std::uint64_t>() + 1;
        if (r.verdict == "HypothesesHold") ++pass;
        jrows.push_back(to_json(r));
    }
    Json result;
    result["rows"] = rows.size();
    result["expected_rows"] = expected;
    result["irreducibles_per_coefficient"] = per;
    result["counts"] = counts;
    result["pass_rate"] = rows.empty() ? Json(nullptr) : Json(static_cast<double>(pass) / static_cast<double>(rows.size()));
    result["table"] = jrows;
    const std::string summary = std::to_string(rows.size()) + " rows, " + std::to_string(pass) + " HypothesesHold";
    emit(c, envelope("scan", config, result), summary, out);
    return kExitPass;
}

// ---------------------------------------------------------------------------
// iterate and orbit (human-readable)

inline int cmd_iterate(const RunConfig& c, std::ostream& out) {
    const BiPoly f = poly_from(c.poly, field_from(c.p));
    const BiPoly fn = bp_iterate(f, c.n);
    const DiscReport dr = disc_report(bp_disc_x(fn), c.seed);
    out << "f = " << render(f) << "\n";
    out << "f^" << c.n << " = " << render(fn) << "\n";
    out << "disc_x(f^" << c.n << ") = " << (dr.disc.is_zero() ? std::string("0") : render_factored(dr.factorization)) << "\n";
    if (!c.out.empty()) {
        Json result;
        result["iterate"] = render(fn);
        result["degree"] = fn.degree();
        result["disc"] = render(dr.disc);
        result["disc_factorization"] = report::factorization_json(dr.factorization);
        result["disc_squarefree"] = dr.squarefree;
        write_file(c.out, envelope("iterate", base_config(c, f), result).dump(2) + "\n");
    }
    return kExitPass;
}

inline int cmd_orbit(const RunConfig& c, std::ostream& out) {
    const BiPoly f = poly_from(c.poly, field_from(c.p));
    require_monic_x(f, "orbit");
    const std::vector<CriticalPoint> cps = critical_points(f);
    Json result;
    result["critical_points"] = Json::array();
    out << "f = " << render(f) << "\n";
    out << "critical points (" << cps.size() << "):\n";
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const CriticalPoint& cp = cps[i];
        Json cj = report::critical_point_json(cp);
        out << "  [" << i << "] " << (cp.root ? "x = " + render(*cp.root) : "root of " + render(cp.minpoly)) << ", multiplicity "
            << cp.multiplicity << "\n";
        cj["orbit"] = Json::array();
        for (int l = 1; l <= c.n; ++l) {
            const OrbitRecord rec = orbit_minpoly(f, cps, i, l);
            std::string text = render(rec.R, std::vector<std::string>{"y", "t"});
            out << "      level " << l << ": " << text << "\n";
            cj["orbit"].push_back(Json{{"level", l}, {"poly", text}});
        }
        if (cp.root) {
            try {
                const auto recs = primitive_prime_divisors(f, cp, c.n, c.seed);
                cj["primitive_primes"] = Json::array();
                for (const auto& r : recs) {
                    out << "      level " << r.level << " prime " << render(r.prime) << " (v = " << r.valuation << ")"
                        << (r.primitive ? " primitive" : "") << "\n";
                    cj["primitive_primes"].push_back(report::prime_record_json(r));
                }
            } catch (const std::domain_error& e) {
                out << "      primitive primes: " << e.what() << "\n";
                cj["primitive_primes_error"] = e.what();
            }
        }
        result["critical_points"].push_back(cj);
    }
    const SeparationReport sep = orbit_separation(f, c.n, cps);
    out << "orbit separation: " << (sep.separated ? "separated" : "collision") << "\n";
    result["separation"] = report::separation_json(sep);
    if (!c.out.empty()) write_file(c.out, envelope("orbit", base_config(c, f), result).dump(2) + "\n");
    return kExitPass;
}

// ---------------------------------------------------------------------------
// entry point

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"arbor: arboreal Galois representations over F_q(t)"};
    app.require_subcommand(1);
    RunConfig c;
    WreathOptions w;
    ScanOptions s;
    std::string mode;

    auto add_poly_options = [&](CLI::App* sub, bool seed_required) {
        sub->add_option("--field", c.p, "odd prime p")->required();
        sub->add_option("--poly", c.poly, "f(t, x), e.g. \"x^3 + t*x + t\"")->required();
        auto* seed = sub->add_option("--seed", c.seed, "seed for randomized steps");
        if (seed_required) seed->required();
        sub->add_option("--max-m", c.max_m, "largest specialization degree for witness search")->check(CLI::Range(1, 8));
        sub->add_option("--out", c.out, "write the JSON report to this path");
    };

    CLI::App* check = app.add_subcommand("check", "check the hypotheses for f at level n");
    add_poly_options(check, false);
    check->add_option("--n", c.n, "iterate level")->required()->check(CLI::PositiveNumber);

    CLI::App* wreath = app.add_subcommand("wreath", "order and cycle-type distribution of the iterated wreath product");
    wreath->add_option("--d", w.d, "arity")->required();
    wreath->add_option("--n", w.n, "height")->required();
    auto* ex = wreath->add_flag("--exact", w.exact, "enumerate the whole group");
    auto* sm = wreath->add_option("--sample", w.sample, "draw N uniform elements");
    ex->excludes(sm);
    auto* wseed = wreath->add_option("--seed", w.seed, "seed for --sample");
    sm->needs(wseed);
    wreath->add_option("--workers", c.workers, "threads")->check(CLI::Range(1, 256));
    wreath->add_option("--out", c.out, "write the JSON report to this path");
    wreath->add_option("--csv", c.csv, "write the distribution as CSV");

    CLI::App* cheb = app.add_subcommand("chebotarev", "compare Frobenius statistics with the wreath product");
    add_poly_options(cheb, true);
    cheb->add_option("--n", c.n, "iterate level")->required()->check(CLI::PositiveNumber);
    cheb->add_option("--samples", c.samples, "specialization points");
    cheb->add_option("--m", c.m_range, "extension degree range, e.g. 1..4");
    cheb->add_option("--tolerance", c.tolerance, "total variation tolerance");
    cheb->add_option("--workers", c.workers, "threads")->check(CLI::Range(1, 256));
    cheb->add_option("--csv", c.csv, "write cycle-type rows as CSV");

    CLI::App* cert = app.add_subcommand("certify", "exact certificates");
    add_poly_options(cert, false);
    cert->add_option("--mode", mode, "full-symmetric or iterate-irreducible")->required();
    cert->add_option("--n", c.n, "iterate level")->check(CLI::PositiveNumber);

    CLI::App* scan = app.add_subcommand("scan", "run the checker over a trinomial family");
    scan->add_option("--family", s.family, "trinomial-xd-1 or trinomial-x1")->required();
    scan->add_option("--d", s.d, "degree in x")->required();
    scan->add_option("--field", c.p, "odd prime p")->required();
    scan->add_option("--deg-bound", s.deg_bound, "maximal degree of a(t) and b(t)")->required();
    scan->add_option("--n", c.n, "iterate level")->required()->check(CLI::PositiveNumber);
    scan->add_option("--seed", c.seed, "seed for randomized steps");
    scan->add_option("--max-m", c.max_m, "largest specialization degree for witness search")->check(CLI::Range(1, 8));
    scan->add_option("--workers", c.workers, "threads")->check(CLI::Range(1, 256));
    scan->add_option("--out", c.out, "write the JSON report to this path");
    scan->add_option("--csv", c.csv, "write rows as CSV (resumable)");

    CLI::App* iter = app.add_subcommand("iterate", "print f^n and its discriminant");
    add_poly_options(iter, false);
    iter->add_option("--n", c.n, "iterate level")->required()->check(CLI::PositiveNumber);

    CLI::App* orbit = app.add_subcommand("orbit", "print critical points, orbits and primitive primes");
    add_poly_options(orbit, false);
    orbit->add_option("--n", c.n, "iterate level")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(c, out);
        if (wreath->parsed()) return cmd_wreath(c, w, out);
        if (cheb->parsed()) return cmd_chebotarev(c, out);
        if (cert->parsed()) return cmd_certify(c, mode, out);
        if (scan->parsed()) return cmd_scan(c, s, out);
        if (iter->parsed()) return cmd_iterate(c, out);
        if (orbit->parsed()) return cmd_orbit(c, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    }
    return kExitUsage;
}

}  // namespace cli
}  // namespace arbor

#endif  // ARBOR_CLI_HPP

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

#ifndef ARBOR_REPORT_HPP
#define ARBOR_REPORT_HPP

// JSON views of the result types. Polynomials appear in canonical text
// form; specialization points carry their field modulus and element index
// so that witnesses can be re-checked without this library.

#include <cmath>
#include <string>

#include "json.hpp"

#include "certify.hpp"
#include "chebotarev.hpp"
#include "odoni.hpp"
#include "wreath.hpp"

namespace arbor {
namespace report {

using Json = nlohmann::ordered_json;
using arbor::to_string;

inline Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json field_json(Field F) {
    Json j;
    j["p"] = F->p();
    j["k"] = F->k();
    j["modulus"] = F->modulus();
    return j;
}

inline Json pattern_json(const std::vector<int>& pat) { return Json(pat); }

inline Json witness_point_json(const SpecializationWitness& w) {
    Json j;
    j["m"] = w.m;
    j["field"] = field_json(w.point.field());
    j["index"] = w.point.index();
    j["value"] = to_string(w.point);
    j["pattern"] = pattern_json(w.pattern);
    return j;
}

inline Json irred_json(const IrredVerdict& v) {
    Json j;
    j["status"] = v.irreducible() ? "Irreducible" : "Unknown";
    j["reason"] = v.reason == IrredVerdict::Reason::Eisenstein        ? "Eisenstein"
                  : v.reason == IrredVerdict::Reason::Specialization ? "Specialization"
                                                                     : "None";
    j["prime"] = v.prime ? Json(render(*v.prime)) : Json(nullptr);
    j["points"] = Json::array();
    for (const auto& w : v.points) j["points"].push_back(witness_point_json(w));
    return j;
}

inline const char* to_string(LevelCertificate::Method m) {
    switch (m) {
        case LevelCertificate::Method::Irreducible: return "Irreducible";
        case LevelCertificate::Method::Norm: return "Norm";
        default: return "Discriminant";
    }
}

inline const char* to_string(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::FullSymmetric: return "FullSymmetric";
        case Certificate::Kind::IterateIrreducible: return "IterateIrreducible";
        default: return "Inconclusive";
    }
}

inline Json certificate_json(const Certificate& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["value"] = c.value;
    j["reason"] = c.reason;
    if (c.kind == Certificate::Kind::IterateIrreducible || (c.kind == Certificate::Kind::Inconclusive && c.levels.empty())) {
        j["iterate_witness"] = irred_json(c.iterate_witness);
    }
    if (!c.levels.empty()) {
        j["levels"] = Json::array();
        for (const auto& l : c.levels) {
            Json lj;
            lj["level"] = l.level;
            lj["degree"] = l.degree;
            lj["method"] = to_string(l.method);
            lj["shift"] = l.shift;
            lj["attempts"] = l.attempts;
            lj["norm"] = l.norm ? Json(render(*l.norm)) : Json(nullptr);
            if (l.method == LevelCertificate::Method::Discriminant) {
                lj["disc_point"] = l.disc_point ? witness_point_json(*l.disc_point) : Json(nullptr);
            } else {
                lj["witness"] = irred_json(l.witness);
            }
            j["levels"].push_back(lj);
        }
    }
    return j;
}

inline Json factorization_json(const Factorization<Fe>& fz) {
    Json j;
    j["unit"] = to_string(fz.unit);
    j["factors"] = Json::array();
    for (const auto& [g, e] : fz.factors) j["factors"].push_back(Json{{"factor", render(g)}, {"exponent", e}});
    j["text"] = render_factored(fz);
    return j;
}

inline Json critical_point_json(const CriticalPoint& cp) {
    Json j;
    j["minpoly"] = render(cp.minpoly);
    j["degree"] = cp.degree();
    j["multiplicity"] = cp.multiplicity;
    j["root"] = cp.root ? Json(render(*cp.root)) : Json(nullptr);
    return j;
}

inline Json collision_json(const std::optional<OrbitCollision>& c) {
    if (!c) return nullptr;
    return Json{{"a", c->a}, {"l", c->l}, {"b", c->b}, {"m", c->m}};
}

inline Json separation_json(const SeparationReport& s) {
    Json j;
    j["separated"] = s.separated;
    j["first_collision"] = collision_json(s.first_collision);
    j["separated_conjugates_only"] = s.separated_conjugates;
    j["first_conjugate_collision"] = collision_json(s.first_conjugate_collision);
    j["anchored"] = Json::array();
    for (bool b : s.anchored) j["anchored"].push_back(b);
    return j;
}

inline Json prime_record_json(const PrimeDivisorRecord& r) {
    Json j;
    j["level"] = r.level;
    j["prime"] = render(r.prime);
    j["valuation"] = r.valuation;
    j["primitive"] = r.primitive;
    j["squarefree_primitive"] = r.squarefree_primitive;
    j["coprime_to_b"] = r.coprime_to_b ? Json(*r.coprime_to_b) : Json(nullptr);
    return j;
}

inline Json morse_json(const MorseReport& m) {
    Json j;
    j["morse"] = m.morse;
    j["nondegenerate"] = m.nondegenerate;
    j["distinct_values"] = m.distinct_values;
    j["critical_value_poly"] = render(m.critical_value_poly, std::vector<std::string>{"s", "t"});
    j["details"] = m.details;
    return j;
}

inline Json basic_json(const BasicReport& b) {
    Json j;
    j["monic"] = b.monic;
    j["degree_above_two"] = b.degree_above_two;
    j["p_odd"] = b.p_odd;
    j["p_coprime_d_d1"] = b.p_coprime;
    j["separable"] = b.separable;
    j["irreducibility"] = irred_json(b.irreducibility);
    j["factorization"] = b.factorization ? Json::array({render(b.factorization->first), render(b.factorization->second)})
                                          : Json(nullptr);
    j["disc"] = b.disc ? Json(render(*b.disc)) : Json(nullptr);
    j["passed"] = b.passed();
    return j;
}

inline Json verdict_json(const Verdict& v) {
    Json j;
    j["conclusion"] = to_string(v.conclusion);
    j["n"] = v.n;
    j["reasons"] = v.reasons;
    j["predicted_order"] = v.predicted_order ? Json(v.predicted_order->str()) : Json(nullptr);
    j["predicted_order_log10"] = v.conclusion == Verdict::Conclusion::HypothesesHold ? Json(v.predicted_order_log10) : Json(nullptr);
    j["basic"] = basic_json(v.basic);
    if (v.disc) {
        Json d;
        d["factorization"] = factorization_json(v.disc->factorization);
        d["squarefree"] = v.disc->squarefree;
        d["squarefree_part"] = render(v.disc->squarefree_part);
        d["geometric_nonsquare"] = v.disc->geometric_nonsquare;
        j["disc"] = d;
    } else {
        j["disc"] = nullptr;
    }
    j["group_certificate"] = v.group ? certificate_json(*v.group) : Json(nullptr);
    j["critical_points"] = Json::array();
    for (const auto& cp : v.critical) j["critical_points"].push_back(critical_point_json(cp));
    j["multiplicity_one_exists"] = v.multiplicity_one_exists;
    j["morse"] = v.morse ? morse_json(*v.morse) : Json(nullptr);
    j["orbit_separation"] = v.separation ? separation_json(*v.separation) : Json(nullptr);
    j["primitive_primes"] = Json::array();
    for (const auto& t : v.prime_tables) {
        Json tj;
        tj["critical_point"] = t.point;
        tj["error"] = t.error ? Json(*t.error) : Json(nullptr);
        tj["records"] = Json::array();
        for (const auto& r : t.records) tj["records"].push_back(prime_record_json(r));
        j["primitive_primes"].push_back(tj);
    }
    j["iterate_certificates"] = Json::array();
    for (const auto& c : v.iterates) j["iterate_certificates"].push_back(certificate_json(c));
    return j;
}

inline Json counts_json(const std::map<CycleType, std::uint64_t>& counts) {
    Json j = Json::array();
    for (const auto& [c, k] : counts) j.push_back(Json{{"cycle_type", c}, {"count", k}});
    return j;
}

inline Json sample_json(const SampleReport& r) {
    Json j;
    j["attempted"] = r.attempted;
    j["excluded"] = r.excluded;
    j["usable"] = r.usable();
    j["counts"] = counts_json(r.counts);
    j["escalations"] = r.escalations;
    j["per_m"] = Json::array();
    for (const auto& pm : r.per_m) {
        Json pj;
        pj["m"] = pm.m;
        pj["field_size"] = pm.field_size;
        pj["attempted"] = pm.attempted;
        pj["excluded"] = pm.excluded;
        pj["counts"] = counts_json(pm.counts);
        j["per_m"].push_back(pj);
    }
    return j;
}

inline Json comparison_json(const ComparisonReport& c) {
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["tolerance"] = c.tolerance;
    j["tv_distance"] = c.tv_distance;
    j["chi_square"] = number_or_null(c.chi_square);
    j["dof"] = c.dof;
    j["p_value"] = c.p_value;
    j["worst_sigma"] = number_or_null(c.worst_sigma);
    j["irreducible_observed"] = c.irreducible_observed;
    j["irreducible_expected"] = c.irreducible_expected;
    j["usable"] = c.usable;
    j["reference"] = c.reference;
    j["rows"] = Json::array();
    for (const auto& r : c.rows)
        j["rows"].push_back(Json{{"cycle_type", r.type},
                                 {"observed", r.observed},
                                 {"observed_fraction", r.observed_fraction},
                                 {"expected", r.expected},
                                 {"sigma", number_or_null(r.sigma)}});
    return j;
}

}  // namespace report
}  // namespace arbor

#endif  // ARBOR_REPORT_HPP

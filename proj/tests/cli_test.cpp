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

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "arbor/cli.hpp"

namespace arbor {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome run_cli(const std::string& args) {
    const std::string cmd = std::string(ARBOR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    Outcome r;
    if (!pipe) return r;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, k);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("arbor_cli_" + std::to_string(::getpid()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    fs::path dir_;
};

TEST_F(CliTest, CheckExitCodes) {
    Outcome ok = run_cli("check --field 5 --poly \"x^3 + t*x^2 + t + 1\" --n 2 --seed 7");
    ASSERT_EQ(ok.code, 0);
    Json j = Json::parse(ok.out);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["command"], "check");
    EXPECT_EQ(j["config"]["poly"], "x^3 + t*x^2 + t + 1");
    EXPECT_EQ(j["result"]["conclusion"], "HypothesesHold");
    EXPECT_EQ(j["result"]["predicted_order"], "1296");

    Outcome neg = run_cli("check --field 5 --poly \"x^2 + t\" --n 1");
    ASSERT_EQ(neg.code, 1);
    Json jn = Json::parse(neg.out);
    EXPECT_EQ(jn["result"]["conclusion"], "Fails");
    bool degree_reason = false;
    for (const auto& r : jn["result"]["reasons"]) degree_reason |= r.get<std::string>().find("d > 2") != std::string::npos;
    EXPECT_TRUE(degree_reason);

    EXPECT_EQ(run_cli("check --field 4 --poly \"x^3 + t\" --n 1").code, 2);
    EXPECT_EQ(run_cli("check --field 2 --poly \"x^3 + t\" --n 1").code, 2);
    EXPECT_EQ(run_cli("check --field 5 --poly \"x^3 + + t\" --n 1").code, 2);
    EXPECT_EQ(run_cli("check --field 5 --poly \"x^3 + t\"").code, 2);
    EXPECT_EQ(run_cli("bogus").code, 2);
    EXPECT_EQ(run_cli("--help").code, 0);
}

TEST_F(CliTest, ParseErrorReportsPosition) {
    const std::string cmd = std::string(ARBOR_CLI_PATH) + " check --field 5 --poly \"x^3 + t*y\" --n 1 2>&1 >/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    char buf[512] = {0};
    std::size_t k = fread(buf, 1, sizeof buf - 1, pipe);
    pclose(pipe);
    EXPECT_NE(std::string(buf, k).find("1:"), std::string::npos);
}

TEST_F(CliTest, CheckOutFileMatchesStdout) {
    Outcome a = run_cli("check --field 5 --poly \"x^3 + t*x^2 + t\" --n 2 --seed 7");
    Outcome b = run_cli("check --field 5 --poly \"x^3 + t*x^2 + t\" --n 2 --seed 7 --out " + path("c.json"));
    EXPECT_EQ(a.code, 1);
    EXPECT_EQ(b.code, 1);
    EXPECT_EQ(a.out, slurp(path("c.json")));
    EXPECT_EQ(Json::parse(a.out)["result"]["conclusion"], "Fails");
}

TEST_F(CliTest, Wreath) {
    Outcome r = run_cli("wreath --d 2 --n 2 --exact --csv " + path("w.csv"));
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["result"]["order"], "8");
    ASSERT_EQ(j["result"]["distribution"].size(), 4u);
    std::map<CycleType, std::pair<std::uint64_t, std::uint64_t>> probs;
    for (const auto& row : j["result"]["distribution"])
        probs[row["cycle_type"].get<CycleType>()] = {row["numerator"].get<std::uint64_t>(), row["denominator"].get<std::uint64_t>()};
    using Frac = std::pair<std::uint64_t, std::uint64_t>;
    EXPECT_EQ(probs[(CycleType{1, 1, 1, 1})], Frac(1, 8));
    EXPECT_EQ(probs[(CycleType{2, 1, 1})], Frac(1, 4));
    EXPECT_EQ(probs[(CycleType{2, 2})], Frac(3, 8));
    EXPECT_EQ(probs[(CycleType{4})], Frac(1, 4));
    EXPECT_EQ(slurp(path("w.csv")),
              "cycle_type,count,probability\n\"[1,1,1,1]\",1,1/8\n\"[2,1,1]\",2,1/4\n\"[2,2]\",3,3/8\n\"[4]\",2,1/4\n");

    Outcome r3 = run_cli("wreath --d 3 --n 2 --exact");
    ASSERT_EQ(r3.code, 0);
    EXPECT_EQ(Json::parse(r3.out)["result"]["order"], "1296");
    EXPECT_EQ(Json::parse(r3.out)["result"]["total"], 1296);

    EXPECT_EQ(run_cli("wreath --d 2 --n 30 --exact").code, 2);
    EXPECT_EQ(run_cli("wreath --d 2 --n 3 --sample 100").code, 2);
    EXPECT_EQ(run_cli("wreath --d 2 --n 3").code, 2);

    Outcome s1 = run_cli("wreath --d 3 --n 3 --sample 5000 --seed 11");
    Outcome s2 = run_cli("wreath --d 3 --n 3 --sample 5000 --seed 11 --workers 4");
    ASSERT_EQ(s1.code, 0);
    EXPECT_EQ(s1.out, s2.out);
    EXPECT_EQ(Json::parse(s1.out)["result"]["total"], 5000);
}

TEST_F(CliTest, Chebotarev) {
    const std::string base = "chebotarev --field 5 --poly \"x^3 + t*x + t\" --n 1 --m 1..4 --seed 42";
    Outcome r = run_cli(base + " --samples 3000");
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["result"]["verdict"], "ConsistentWithFullWreath");
    EXPECT_NEAR(j["result"]["comparison"]["irreducible_observed"].get<double>(), 1.0 / 3, 0.05);
    // every excluded m = 1 point is a root of the discriminant t^2 (t + 3)
    for (const auto& pm : j["result"]["sample"]["per_m"]) {
        if (pm["m"] == 1) {
            EXPECT_EQ(pm["excluded"], 2);
        }
    }

    Outcome again = run_cli(base + " --samples 3000 --workers 3");
    EXPECT_EQ(again.out, r.out);

    Outcome few = run_cli(base + " --samples 10");
    EXPECT_EQ(few.code, 1);
    Json jf = Json::parse(few.out);
    EXPECT_EQ(jf["result"]["verdict"], "InsufficientData");
    EXPECT_FALSE(jf["result"]["reasons"].empty());

    EXPECT_EQ(run_cli("chebotarev --field 5 --poly \"x^3 + t*x + t\" --n 1").code, 2);
    EXPECT_EQ(run_cli(base + " --m 0..3").code, 2);
    EXPECT_EQ(run_cli("chebotarev --field 5 --poly \"x^2 + t\" --n 1 --seed 1").code, 1);
}

TEST_F(CliTest, Certify) {
    Outcome full = run_cli("certify --field 5 --poly \"x^3 + t*x + t\" --mode full-symmetric");
    ASSERT_EQ(full.code, 0);
    Json j = Json::parse(full.out);
    EXPECT_EQ(j["result"]["kind"], "FullSymmetric");
    EXPECT_EQ(j["result"]["value"], 6);
    EXPECT_FALSE(j["result"]["levels"].empty());

    Outcome it = run_cli("certify --field 5 --poly \"x^3 + t*x + t\" --mode iterate-irreducible --n 2");
    ASSERT_EQ(it.code, 0);
    Json ji = Json::parse(it.out);
    EXPECT_EQ(ji["result"]["kind"], "IterateIrreducible");
    EXPECT_EQ(ji["result"]["value"], 2);
    EXPECT_EQ(ji["result"]["iterate_witness"]["status"], "Irreducible");

    EXPECT_EQ(run_cli("certify --field 5 --poly \"x^3 + 4*t^3\" --mode full-symmetric").code, 1);
    EXPECT_EQ(run_cli("certify --field 5 --poly \"x^3 + 4*t^3\" --mode iterate-irreducible --n 1").code, 1);
    EXPECT_EQ(run_cli("certify --field 7 --poly \"x^6 + t\" --mode full-symmetric").code, 2);
    EXPECT_EQ(run_cli("certify --field 5 --poly \"x^3 + t\" --mode other").code, 2);
}

TEST_F(CliTest, CertifyWitnessRechecks) {
    Outcome full = run_cli("certify --field 5 --poly \"x^3 + t*x + t\" --mode full-symmetric");
    Json levels = Json::parse(full.out)["result"]["levels"];
    ASSERT_EQ(levels.size(), 2u);
    const Field F = prime_field(5);
    const BiPoly f = parse_bipoly("x^3 + t*x + t", F);
    std::size_t checked_points = 0;
    for (const auto& lv : levels) {
        if (lv["method"] == "Discriminant") continue;
        const BiPoly g = lv["norm"].is_null() ? f : parse_bipoly(lv["norm"].get<std::string>(), F);
        const Json& w = lv["witness"];
        ASSERT_EQ(w["status"], "Irreducible");
        if (w["reason"] == "Eisenstein") {
            EXPECT_TRUE(eisenstein_at(g, parse_tpoly(w["prime"].get<std::string>(), F)));
            continue;
        }
        // rebuild every point from its field modulus and index
        for (const auto& pt : w["points"]) {
            const Field E = specialization_field(F, pt["m"].get<int>());
            ASSERT_EQ(E->modulus(), pt["field"]["modulus"].get<std::vector<std::uint32_t>>());
            const Fe c = Fe::from_index(E, pt["index"].get<std::uint64_t>());
            EXPECT_EQ(factor_degrees(bp_specialize_t(g, c)), pt["pattern"].get<std::vector<int>>());
            ++checked_points;
        }
    }
    EXPECT_GT(checked_points, 0u);
}

TEST_F(CliTest, ScanMatchesFamilyCardinality) {
    Outcome r = run_cli("scan --family trinomial-xd-1 --d 3 --field 5 --deg-bound 1 --n 2 --csv " + path("s.csv"));
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["result"]["rows"], 25);
    EXPECT_EQ(j["result"]["expected_rows"], 25);
    EXPECT_FALSE(j["result"]["pass_rate"].is_null());
    const std::string csv = slurp(path("s.csv"));
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 26);
    EXPECT_NE(csv.find("trinomial-xd-1,t,t,x^3 + t*x^2 + t,"), std::string::npos);
    EXPECT_NE(csv.find("trinomial-xd-1,t,t + 1,x^3 + t*x^2 + t + 1,true,true,true,true,true,true,true,HypothesesHold"),
              std::string::npos);
    std::map<std::string, std::string> verdicts;
    for (const auto& row : j["result"]["table"]) verdicts[row["poly"]] = row["verdict"];
    EXPECT_EQ(verdicts["x^3 + t*x^2 + t"], "Fails");
    EXPECT_EQ(verdicts["x^3 + t*x^2 + t + 1"], "HypothesesHold");
    EXPECT_FALSE(fs::exists(path("s.csv.progress")));
}

TEST_F(CliTest, ScanDeterministicAcrossRunsAndWorkers) {
    const std::string base = "scan --family trinomial-x1 --d 3 --field 7 --deg-bound 1 --n 1";
    Outcome a = run_cli(base + " --csv " + path("a.csv") + " --out " + path("a.json"));
    Outcome b = run_cli(base + " --csv " + path("b.csv") + " --out " + path("b.json") + " --workers 4");
    Outcome c = run_cli(base + " --csv " + path("a2.csv") + " --out " + path("a2.json"));
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("a2.csv")));
    EXPECT_EQ(slurp(path("a.json")), slurp(path("a2.json")));
    EXPECT_EQ(Json::parse(slurp(path("a.json")))["result"]["rows"], 49);
}

TEST_F(CliTest, ScanResumesFromProgressMarker) {
    const std::string base = "scan --family trinomial-xd-1 --d 3 --field 5 --deg-bound 1 --n 2";
    ASSERT_EQ(run_cli(base + " --csv " + path("full.csv") + " --out " + path("full.json")).code, 0);
    const std::string full = slurp(path("full.csv"));
    // interrupted run: 9 rows recorded, a torn tenth line after them
    std::istringstream is(full);
    std::string line, partial;
    for (int i = 0; i < 10 && std::getline(is, line); ++i) partial += line + "\n";
    partial += "trinomial-xd-1,t + 1,t +";
    {
        std::ofstream(path("r.csv"), std::ios::binary) << partial;
        std::ofstream(path("r.csv.progress")) << 9 << "\n";
    }
    ASSERT_EQ(run_cli(base + " --csv " + path("r.csv") + " --out " + path("r.json")).code, 0);
    EXPECT_EQ(slurp(path("r.csv")), full);
    EXPECT_EQ(slurp(path("r.json")), slurp(path("full.json")));
    EXPECT_FALSE(fs::exists(path("r.csv.progress")));
}

TEST_F(CliTest, ScanEmptyFamily) {
    Outcome r = run_cli("scan --family trinomial-x1 --d 3 --field 5 --deg-bound 0 --n 2 --csv " + path("e.csv"));
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["result"]["rows"], 0);
    EXPECT_TRUE(j["result"]["pass_rate"].is_null());
    EXPECT_EQ(slurp(path("e.csv")),
              "family,a,b,poly,basic,irreducible,sd_certified,multiplicity_one,morse,orbit_separated,iterates_certified,verdict\n");
    EXPECT_EQ(run_cli("scan --family other --d 3 --field 5 --deg-bound 1 --n 1").code, 2);
}

TEST(CliCountTest, MonicIrreducibleCountMatchesEnumeration) {
    for (std::uint32_t p : {3u, 5u, 7u})
        for (int bound = 0; bound <= 3; ++bound) {
            if (p == 7 && bound == 3) continue;
            EXPECT_EQ(cli::monic_irreducibles(prime_field(p), bound).size(), cli::count_monic_irreducibles(p, bound));
        }
    EXPECT_EQ(cli::count_monic_irreducibles(2, 4), 2u + 1u + 2u + 3u);
    EXPECT_EQ(cli::count_monic_irreducibles(5, 2), 5u + 10u);
}

TEST_F(CliTest, IterateAndOrbit) {
    Outcome it = run_cli("iterate --field 5 --poly \"x^3 + t*x^2 + t + 1\" --n 2 --out " + path("i.json"));
    ASSERT_EQ(it.code, 0);
    EXPECT_NE(it.out.find("f^2 = x^9"), std::string::npos);
    Json ji = Json::parse(slurp(path("i.json")));
    EXPECT_EQ(ji["command"], "iterate");
    EXPECT_EQ(ji["result"]["degree"], 9);
    const Field F = prime_field(5);
    const BiPoly f2 = bp_iterate(parse_bipoly("x^3 + t*x^2 + t + 1", F), 2);
    EXPECT_EQ(ji["result"]["iterate"], render(f2));
    EXPECT_EQ(ji["result"]["disc"], render(bp_disc_x(f2)));

    Outcome ob = run_cli("orbit --field 5 --poly \"x^3 + t*x^2 + t\" --n 2 --out " + path("o.json"));
    ASSERT_EQ(ob.code, 0);
    EXPECT_NE(ob.out.find("critical points (2)"), std::string::npos);
    Json jo = Json::parse(slurp(path("o.json")));
    EXPECT_EQ(jo["result"]["critical_points"].size(), 2u);
    EXPECT_FALSE(jo["result"]["separation"]["separated"].get<bool>());
}

}  // namespace
}  // namespace arbor

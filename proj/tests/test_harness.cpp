#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "zetalab/harness.hpp"
#include "zetalab/prime_model.hpp"
#include "zetalab/summation.hpp"

using namespace zetalab;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const ReportDocument& report() {
    static const ReportDocument doc = run_claims(EvalConfig{}, 4);
    return doc;
}

const ClaimRecord& find(const std::string& id) {
    const auto& claims = report().claims;
    const auto it = std::find_if(claims.begin(), claims.end(), [&](const ClaimRecord& r) { return r.claim_id == id; });
    if (it == claims.end()) throw std::runtime_error("missing claim " + id);
    return *it;
}

std::string input(const ClaimRecord& r, const std::string& key) {
    for (const auto& [k, v] : r.inputs)
        if (k == key) return v;
    return {};
}

}  // namespace

class Golden : public ::testing::TestWithParam<int> {};

TEST_P(Golden, TableMatches) {
    const auto id = parse_table_id("T" + std::to_string(GetParam()));
    ASSERT_TRUE(id);
    const std::string golden = read_file(std::string(ZETALAB_GOLDEN_DIR) + "/T" + std::to_string(GetParam()) + ".csv");
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(emit_table(*id), golden);
}

INSTANTIATE_TEST_SUITE_P(AllTables, Golden, ::testing::Range(1, 8));

TEST(Tables, Ids) {
    EXPECT_EQ(parse_table_id("t3"), TableId::T3);
    EXPECT_FALSE(parse_table_id("T8"));
    EXPECT_FALSE(parse_table_id(""));
    EXPECT_EQ(to_string(TableId::T7), "T7");
}

TEST(Tables, ShapeAndLineEndings) {
    const std::string t1 = emit_table(TableId::T1);
    EXPECT_EQ(t1.rfind("row,q,n,gamma,q_of_n_gamma,consistent\r\n", 0), 0u);
    EXPECT_EQ(std::count(t1.begin(), t1.end(), '\n'), 26);
    EXPECT_EQ(std::count(t1.begin(), t1.end(), '\r'), 26);
    const std::string t5 = emit_table(TableId::T5);
    EXPECT_EQ(std::count(t5.begin(), t5.end(), '\n'), 8);
    EXPECT_EQ(t5.find("false"), std::string::npos);
}

TEST(Tables, FlowThroughFormulas) {
    auto& c = formula_counters();
    const auto q = c.q_of.load(), b = c.b_of.load(), dq = c.delta_q_relation.load(), tw = c.twin_relation.load(),
               chi = c.chi_model.load(), sieve = c.sieve.load();
    for (int i = 1; i <= 7; ++i) (void)emit_table(*parse_table_id("T" + std::to_string(i)));
    EXPECT_GE(c.q_of.load(), q + 25);
    EXPECT_GE(c.b_of.load(), b + 50);
    EXPECT_GE(c.delta_q_relation.load(), dq + 25);
    EXPECT_GE(c.twin_relation.load(), tw + 16);
    EXPECT_GT(c.chi_model.load(), chi);
    EXPECT_GT(c.sieve.load(), sieve);
}

TEST(Figure1, Cells) {
    Figure1Grid g;
    g.b_min = kTwoPi;
    g.b_max = kTwoPi;
    g.b_steps = 1;
    g.gamma_min = 0;
    g.gamma_max = 1;
    const std::string csv = emit_figure1(g);
    EXPECT_EQ(csv.rfind("b,gamma,q\r\n", 0), 0u);
    EXPECT_NE(csv.find(",1,15.1542622415\r\n"), std::string::npos) << csv;
    EXPECT_NE(csv.find(",0,2.71828182846\r\n"), std::string::npos) << csv;

    Figure1Grid wide;
    wide.b_min = 1e6;
    wide.b_max = 1e6;
    wide.b_steps = 1;
    wide.gamma_min = 1;
    wide.gamma_max = 1;
    const std::string far = emit_figure1(wide);
    const auto last = far.rfind(',');
    EXPECT_NEAR(std::stod(far.substr(last + 1)), 1.0, 1e-5);
}

TEST(Csv, Quoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(Registry, CompleteAndUnique) {
    const auto& ids = claim_registry();
    const std::set<std::string> unique(ids.begin(), ids.end());
    EXPECT_EQ(unique.size(), ids.size());
    for (const char* id : {"T7.control", "T7.r1", "T7.r25", "EQ38", "EQ39", "EQ40", "EQ41", "EQ49.n2", "EQ49.n10",
                           "T1.r25", "T2.r25", "T3.r8", "T4.r8", "T5.r7", "THM4"}) {
        EXPECT_TRUE(unique.count(id)) << id;
    }
    ASSERT_EQ(report().claims.size(), ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(report().claims[i].claim_id, ids[i]);
}

TEST(Claims, ControlSupported) {
    const auto& r = find("T7.control");
    EXPECT_EQ(r.verdict, Verdict::supported);
    EXPECT_LE(r.residual, 1e-8);
}

TEST(Claims, TabulatedOrdinatesHonest) {
    for (int i = 1; i <= 25; ++i) {
        const auto& r = find("T7.r" + std::to_string(i));
        EXPECT_LE(r.evaluator_agreement, 1e-8) << i;
        EXPECT_NE(r.verdict, Verdict::indeterminate) << i;
        EXPECT_NEAR(std::stod(input(r, "abs_zeta_plus_eta")), r.residual, 1e-8 + 1e-11 * r.residual) << i;
    }
    EXPECT_NEAR(find("T7.r1").residual, 2.3238807435129185, 1e-8);
}

TEST(Claims, KernelSineRefutedAgainstClosedForm) {
    for (int n = 2; n <= 10; ++n) {
        const auto& r = find("EQ49.n" + std::to_string(n));
        EXPECT_EQ(r.verdict, Verdict::refuted) << n;
        EXPECT_NEAR(r.residual, kernel_sine_closed_form(std::log(static_cast<double>(n))), 1e-10) << n;
    }
}

TEST(Claims, PrimeRows) {
    EXPECT_EQ(find("T2.r2").verdict, Verdict::supported);
    EXPECT_EQ(find("T2.r2").residual, 0.0);
    for (int i = 1; i <= 7; ++i) EXPECT_EQ(find("T5.r" + std::to_string(i)).verdict, Verdict::supported) << i;
    EXPECT_EQ(find("EQ77").verdict, Verdict::refuted);
}

TEST(Claims, DivergentIntegralsIndeterminate) {
    for (const char* id : {"EQ39", "EQ40", "EQ41"}) {
        const auto& r = find(id);
        EXPECT_EQ(r.verdict, Verdict::indeterminate) << id;
        EXPECT_FALSE(r.note.empty()) << id;
    }
}

TEST(Claims, WindingAgreesWithScan) { EXPECT_EQ(find("THM4").verdict, Verdict::supported); }

TEST(Report, CountsLine) {
    const std::string data = report().render_data();
    std::size_t s = 0, f = 0, u = 0;
    for (const auto& r : report().claims) {
        s += r.verdict == Verdict::supported;
        f += r.verdict == Verdict::refuted;
        u += r.verdict == Verdict::indeterminate;
    }
    std::ostringstream line;
    line << "claims=" << report().claims.size() << "\tsupported=" << s << "\trefuted=" << f << "\tindeterminate=" << u;
    EXPECT_NE(data.find(line.str()), std::string::npos);
    EXPECT_EQ(data.find("[timing]"), std::string::npos);
    EXPECT_NE(report().render().find("[timing]"), std::string::npos);
    for (int i = 1; i <= 7; ++i) EXPECT_NE(data.find("[table T" + std::to_string(i) + "]"), std::string::npos);
}

TEST(Report, DeterministicAcrossWorkerCounts) {
    const std::string one = run_claims(EvalConfig{}, 1).render_data();
    const std::string many = run_claims(EvalConfig{}, 8).render_data();
    EXPECT_EQ(one, many);
    EXPECT_EQ(one, report().render_data());
}

TEST(Report, RecordRendering) {
    ClaimRecord r;
    r.claim_id = "demo";
    r.add_input("x", 0.5);
    r.computed = Complex(1.0, -2.0);
    r.asserted = "x = 1";
    r.residual = 0.25;
    r.threshold = 0.5;
    r.decide();
    EXPECT_EQ(render_claim(r),
              "claim_id=demo\tinput.x=0.5\tcomputed=1-2i\tasserted=x = 1\tresidual=0.25\tthreshold=0.5\t"
              "verdict=supported\tevaluator_agreement=0");
    r.note = "n";
    EXPECT_NE(render_claim(r).find("\tnote=n"), std::string::npos);
}

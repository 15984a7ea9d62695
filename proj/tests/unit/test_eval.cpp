#include <gtest/gtest.h>

#include "json.hpp"

#include "bicross/error.hpp"
#include "bicross/eval.hpp"
#include "test_support.hpp"

using namespace bicross;
using namespace bicross::testing;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::IoError;
}

// Fixture keys, in kAllMetrics order.
const char* const kKeys[] = {"P5", "P10", "MAP", "NDCG10", "NDCG", "Rprec", "Recall"};

void expect_report(const eval::MetricReport& report, const json& expected, double tol) {
    for (const auto& [qid, values] : expected["per_query"].items()) {
        ASSERT_TRUE(report.per_query.contains(qid)) << qid;
        for (eval::Metric m : eval::kAllMetrics) {
            const std::string name = kKeys[static_cast<std::size_t>(m)];
            EXPECT_NEAR(report.per_query.at(qid)[static_cast<std::size_t>(m)], values[name].get<double>(), tol)
                << qid << " " << name;
        }
    }
    EXPECT_EQ(report.per_query.size(), expected["per_query"].size());
    for (eval::Metric m : eval::kAllMetrics) {
        const std::string name = kKeys[static_cast<std::size_t>(m)];
        EXPECT_NEAR(report.value(m), expected["mean"][name].get<double>(), tol) << "mean " << name;
    }
}

}  // namespace

TEST(Metrics, HandSheet) {
    const auto expected = json::parse(read_text(fixture("metrics_hand_expected.json")));
    const auto run = eval::parse_run(fixture("metrics_hand.run"));
    const auto qrels = eval::parse_qrels(fixture("metrics_hand.qrels"));
    const auto report = eval::evaluate(run, qrels);
    expect_report(report, expected, 1e-9);
    EXPECT_EQ(report.no_relevant, std::vector<std::string>{"h08"});
    EXPECT_EQ(report.missing_from_run, std::vector<std::string>{"h09"});
    EXPECT_NEAR(eval::mean_average_precision(run, qrels), expected["mean"]["MAP"].get<double>(), 1e-9);
}

TEST(Metrics, RationalValuesAreExact) {
    const auto run = eval::parse_run(fixture("metrics_hand.run"));
    const auto qrels = eval::parse_qrels(fixture("metrics_hand.qrels"));
    EXPECT_EQ(eval::precision_at_k(run.at("h05"), qrels, 5), 2.0 / 5.0);
    EXPECT_EQ(eval::precision_at_k(run.at("h05"), qrels, 10), 4.0 / 10.0);
    EXPECT_EQ(eval::recall(run.at("h05"), qrels), 4.0 / 5.0);
    EXPECT_EQ(eval::rprec(run.at("h10"), qrels), 2.0 / 4.0);
}

TEST(Metrics, RandomizedReference) {
    const auto expected = json::parse(read_text(fixture("metrics_random_expected.json")));
    const auto run = eval::parse_run(fixture("metrics_random.run"));
    const auto qrels = eval::parse_qrels(fixture("metrics_random.qrels"));
    expect_report(eval::evaluate(run, qrels), expected, 1e-6);
}

TEST(Metrics, BoundsOnRandomRuns) {
    const auto run = eval::parse_run(fixture("metrics_random.run"));
    const auto qrels = eval::parse_qrels(fixture("metrics_random.qrels"));
    for (const auto& [qid, list] : run) {
        for (eval::Metric m : eval::kAllMetrics) {
            const double v = eval::compute_metric(m, list, qrels);
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0 + 1e-12);
        }
    }
    EXPECT_EQ(eval::parse_metric("ndcg_cut_10"), eval::Metric::NDCG10);
    EXPECT_EQ(eval::parse_metric("P@5"), eval::Metric::P5);
    EXPECT_EQ(code_of([] { eval::parse_metric("bpref"); }), ErrorCode::InvalidArgument);
}

TEST(TrecIo, RunRoundTripIsByteIdentical) {
    TempDir dir;
    std::string tag;
    const auto original = read_text(fixture("run_1000.txt"));
    const auto run = eval::parse_run_text(original, Stage::fused, &tag);
    EXPECT_EQ(tag, "roundtrip");
    std::size_t rows = 0;
    for (const auto& [q, l] : run) rows += l.size();
    EXPECT_EQ(rows, 1000u);
    eval::write_run(run, dir / "out.txt", tag);
    EXPECT_EQ(read_text(dir / "out.txt"), original);
}

TEST(TrecIo, MalformedRows) {
    EXPECT_EQ(code_of([] { eval::parse_run_text("q Q0 d 1 1.0\n"); }), ErrorCode::MalformedRow);
    EXPECT_EQ(code_of([] { eval::parse_run_text("q Q0 d x 1.0 t\n"); }), ErrorCode::MalformedRow);
    EXPECT_EQ(code_of([] { eval::parse_run_text("q Q0 d 1 1.0 t\nq Q0 d 2 0.5 t\n"); }), ErrorCode::DuplicateDoc);
    EXPECT_EQ(code_of([] { eval::parse_qrels_text("q 0 d\n"); }), ErrorCode::MalformedRow);
    EXPECT_EQ(code_of([] { eval::parse_qrels_text("q 0 d 1\nq 0 d 2\n"); }), ErrorCode::DuplicateDoc);
    try {
        eval::parse_qrels_text("q 0 a 1\nq 0 b one\n");
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(TrecIo, QrelsRoundTrip) {
    TempDir dir;
    const auto q = eval::parse_qrels(fixture("metrics_hand.qrels"));
    eval::write_qrels(q, dir / "q.txt");
    const auto back = eval::parse_qrels(dir / "q.txt");
    EXPECT_EQ(back.judgments(), q.judgments());
    EXPECT_EQ(back.grade("h04", "a"), 2);
    EXPECT_EQ(back.grade("h04", "unjudged"), 0);
    EXPECT_EQ(back.relevant_count("h05"), 5u);
}

TEST(TTest, ReferenceFixture) {
    const auto j = json::parse(read_text(fixture("ttest_30.json")));
    const auto a = j["a"].get<std::vector<double>>();
    const auto b = j["b"].get<std::vector<double>>();
    const auto r = eval::paired_t_test(b, a);
    EXPECT_NEAR(r.t, j["t"].get<double>(), 1e-6);
    EXPECT_NEAR(r.p, j["p"].get<double>(), 1e-6);
    EXPECT_EQ(r.df, 29u);
    EXPECT_FALSE(r.degenerate);
}

TEST(TTest, DegenerateAndErrors) {
    const std::vector<double> a{0.3, 0.5, 0.7};
    const auto r = eval::paired_t_test(a, a);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.p, 1.0);
    EXPECT_EQ(r.t, 0.0);
    const std::vector<double> shifted{0.4, 0.6, 0.8};
    const auto s = eval::paired_t_test(shifted, a);
    EXPECT_FALSE(s.degenerate);
    EXPECT_LT(s.p, 1e-6);
    const std::vector<double> one{0.1};
    EXPECT_EQ(code_of([&] { eval::paired_t_test(one, one); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { eval::paired_t_test(a, one); }), ErrorCode::InvalidArgument);
}

TEST(Table, TwoRunsGetPValues) {
    const auto run = eval::parse_run(fixture("metrics_hand.run"));
    const auto qrels = eval::parse_qrels(fixture("metrics_hand.qrels"));
    const std::vector<eval::MetricReport> reports{eval::evaluate(run, qrels), eval::evaluate(run, qrels)};
    const std::vector<std::string> names{"a", "b"};
    const auto md = eval::format_table(reports, names, eval::TableFormat::markdown);
    EXPECT_NE(md.find("| a "), std::string::npos) << md;
    EXPECT_NE(md.find("p-value"), std::string::npos) << md;
    EXPECT_NE(md.find("h08"), std::string::npos) << md;
    const auto tsv = eval::format_table(std::span(reports).first(1), std::span(names).first(1), eval::TableFormat::tsv);
    EXPECT_EQ(tsv.find("p-value"), std::string::npos);
    EXPECT_NE(tsv.find("P@5"), std::string::npos) << tsv;
}

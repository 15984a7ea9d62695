// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bicross/encoders.hpp"
#include "bicross/error.hpp"
#include "bicross/eval.hpp"
#include "bicross/lexical.hpp"
#include "bicross/pipeline.hpp"
#include "bicross/ranking.hpp"
#include "test_support.hpp"

using namespace bicross;
using namespace bicross::testing;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failure notes for one criterion.
struct Check {
    std::vector<std::string> problems;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && problems.size() < 5) problems.push_back(what);
        if (!ok && problems.size() == 5) problems.push_back("...");
    }
    bool ok() const { return problems.empty(); }
};

int failures = 0;

void report(const char* name, const std::function<void(Check&)>& body) {
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.problems.push_back(std::string("exception: ") + e.what());
    }
    std::string line = std::string(c.ok() ? "PASS" : "FAIL") + "  " + name;
    if (!c.detail.empty()) line += "  (" + c.detail + ")";
    for (const auto& p : c.problems) line += "\n      " + p;
    std::puts(line.c_str());
    std::fflush(stdout);
    if (!c.ok()) ++failures;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

RankedList permuted(Stage stage, const std::vector<std::string>& docs, const std::vector<std::size_t>& order) {
    std::vector<std::pair<std::string, double>> v;
    for (std::size_t r = 0; r < order.size(); ++r) v.emplace_back(docs[order[r]], static_cast<double>(order.size() - r));
    return make_ranked_list("q", stage, v);
}

double score_of(const RankedList& l, const std::string& doc) {
    for (const auto& e : l.entries) {
        if (e.doc_id == doc) return e.score;
    }
    return std::nan("");
}

void bm25_oracle(Check& c) {
    const auto docs = synthetic_documents(1000, 7);
    const auto qs = synthetic_queries(20, 11);
    const auto t0 = Clock::now();
    const auto index = lexical::InvertedIndex::build(docs);
    const BruteForceBm25 brute(docs);
    double worst = 0.0;
    std::size_t compared = 0;
    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
        const auto list = index.retrieve_tokens(qs[qi], "q" + std::to_string(qi), docs.size());
        check_invariants(list);
        std::unordered_map<std::string, double> got;
        for (const auto& e : list.entries) got[e.doc_id] = e.score;
        for (std::size_t d = 0; d < docs.size(); ++d) {
            const double want = brute.score(qs[qi], d);
            const auto it = got.find(docs[d].doc_id);
            const double have = it == got.end() ? 0.0 : it->second;
            worst = std::max(worst, std::abs(have - want));
            c.require(it != got.end() || want == 0.0, "doc " + docs[d].doc_id + " matched but not retrieved");
            ++compared;
        }
    }
    const double secs = seconds_since(t0);
    c.require(worst <= 1e-9, "max |diff| " + fmt("%.3e", worst));
    c.require(secs < 10.0, "took " + fmt("%.2f", secs) + " s");
    c.detail = std::to_string(compared) + " scores, max diff " + fmt("%.1e", worst) + ", " + fmt("%.2f", secs) + " s";
}

void fusion_closed_forms(Check& c) {
    std::vector<std::string> docs;
    for (int i = 0; i < 400; ++i) docs.push_back("d" + std::to_string(1000 + i));
    std::vector<std::size_t> id(400);
    for (std::size_t i = 0; i < 400; ++i) id[i] = i;
    auto third = id;
    std::swap(third[0], third[2]);
    const auto cross = permuted(Stage::rerank, docs, id);

    const auto both_first = ranking::rrf(permuted(Stage::refine, docs, id), cross, 60.0);
    c.require(both_first.entries[0].doc_id == "d1000" && both_first.entries[0].score == 2.0 / 61.0, "rrf 2/61");
    const auto one_third = ranking::rrf(permuted(Stage::refine, docs, third), cross, 60.0);
    c.require(score_of(one_third, "d1000") == 1.0 / 61.0 + 1.0 / 63.0, "rrf 1/61 + 1/63");

    const auto b = ranking::borda(permuted(Stage::refine, docs, id), cross);
    c.require(b.entries.front().score == 2.0, "borda top 2.0");
    c.require(b.entries.back().score == 0.005, "borda last 0.005, got " + fmt("%.17g", b.entries.back().score));

    ranking::FusionConfig cfg;
    cfg.alpha = 0.5;
    cfg.beta = 0.4;
    auto list = [](Stage s, std::vector<std::pair<std::string, double>> v) { return make_ranked_list("q", s, std::move(v)); };
    const auto f = ranking::wcombsum(list(Stage::bm25, {{"max", 12.5}, {"m1", 7}, {"m2", 3}, {"min", 0.25}}),
                                     list(Stage::refine, {{"max", 0.93}, {"m1", 0.4}, {"m2", 0.6}, {"min", -0.2}}),
                                     list(Stage::rerank, {{"max", 0.8}, {"m1", 0.75}, {"m2", 0.3}, {"min", 0.05}}), cfg);
    c.require(score_of(f, "max") == 1.0, "wcombsum all-max doc " + fmt("%.17g", score_of(f, "max")));
    c.require(score_of(f, "min") == 0.0, "wcombsum all-min doc " + fmt("%.17g", score_of(f, "min")));
    check_invariants(f);
    c.detail = "rrf, borda N=400, wcombsum a=.5 b=.4";
}

void aggregation_oracle(Check& c) {
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<int> len(1, 40);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    const ranking::AggregationWeights w;
    std::size_t mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        std::vector<double> s(static_cast<std::size_t>(len(rng)));
        for (double& x : s) x = val(rng);
        std::vector<double> sorted = s;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        sorted.resize(std::min<std::size_t>(sorted.size(), 3));
        double want = 0.0;
        for (std::size_t k = 0; k < sorted.size(); ++k) want += w.w[k] * sorted[k];
        if (ranking::aggregate_topk(std::span<const double>(s), w) != want) ++mismatches;
    }
    c.require(mismatches == 0, std::to_string(mismatches) + " lists differ");
    c.detail = "10000 lists, exact";
}

double worst_metric_diff(const std::string& stem, Check& c) {
    const auto expected = json::parse(read_text(fixture(stem + "_expected.json")));
    const auto report = eval::evaluate(eval::parse_run(fixture(stem + ".run")), eval::parse_qrels(fixture(stem + ".qrels")));
    static const char* const keys[] = {"P5", "P10", "MAP", "NDCG10", "NDCG", "Rprec", "Recall"};
    double worst = 0.0;
    c.require(report.per_query.size() == expected["per_query"].size(), stem + ": evaluated query count");
    for (const auto& [qid, values] : expected["per_query"].items()) {
        const auto it = report.per_query.find(qid);
        if (it == report.per_query.end()) {
            c.require(false, stem + ": " + qid + " not evaluated");
            continue;
        }
        for (eval::Metric m : eval::kAllMetrics) {
            const auto i = static_cast<std::size_t>(m);
            worst = std::max(worst, std::abs(it->second[i] - values[keys[i]].get<double>()));
        }
    }
    for (eval::Metric m : eval::kAllMetrics) {
        const auto i = static_cast<std::size_t>(m);
        worst = std::max(worst, std::abs(report.mean[i] - expected["mean"][keys[i]].get<double>()));
    }
    return worst;
}

void metrics_oracle(Check& c) {
    const double hand = worst_metric_diff("metrics_hand", c);
    const double random = worst_metric_diff("metrics_random", c);
    c.require(hand <= 1e-9, "hand sheet max diff " + fmt("%.3e", hand));
    c.require(random <= 1e-6, "randomized max diff " + fmt("%.3e", random));
    c.detail = "hand " + fmt("%.1e", hand) + ", randomized " + fmt("%.1e", random);
}

void cascade_invariants(Check& c) {
    TempDir dir("accept-cascade");
    const auto set = make_planted_set(dir.path(), PlantedKind::paraphrase, 200);
    auto cfg = pipeline::load_run_config(set.config);
    const auto out = dir / "run.txt";
    pipeline::PipelineOptions opts;
    opts.out = out;
    const auto result = pipeline::run_pipeline(cfg, opts);
    c.require(result.ok(), "topics failed");
    const auto& bm25 = result.stages.at(Stage::bm25);
    const auto& refine = result.stages.at(Stage::refine);
    const auto& rerank = result.stages.at(Stage::rerank);
    const auto& fused = result.stages.at(Stage::fused);
    c.require(bm25.size() == refine.size() && refine.size() == rerank.size() && rerank.size() == fused.size(),
              "stage list counts differ");
    for (std::size_t i = 0; i < bm25.size(); ++i) {
        for (const auto* l : {&bm25[i], &refine[i], &rerank[i], &fused[i], &result.final[i]}) {
            try {
                check_invariants(*l);
            } catch (const Error& e) {
                c.require(false, e.what());
            }
        }
        const auto b = doc_set(bm25[i]);
        const auto r = doc_set(refine[i]);
        for (const auto& e : refine[i].entries) c.require(b.contains(e.doc_id), "refine doc not in bm25: " + e.doc_id);
        for (const auto& e : rerank[i].entries) c.require(r.contains(e.doc_id), "rerank doc not in refine: " + e.doc_id);
        c.require(bm25[i].size() <= cfg.cutoffs.stage1 && refine[i].size() == bm25[i].size() &&
                      rerank[i].size() <= cfg.cutoffs.stage2 &&
                      result.final[i].size() <= cfg.cutoffs.final,
                  "cutoff exceeded for " + bm25[i].query_id);
    }

    const auto first = read_text(out);
    opts.out = dir / "again.txt";
    pipeline::run_pipeline(cfg, opts);
    c.require(read_text(opts.out) == first, "repeated run differs");

    cfg.paths.cache = dir / "emb.cache";
    opts.out = dir / "cold.txt";
    pipeline::run_pipeline(cfg, opts);
    opts.out = dir / "warm.txt";
    pipeline::run_pipeline(cfg, opts);
    c.require(read_text(dir / "cold.txt") == read_text(dir / "warm.txt"), "cold and warm cache runs differ");
    c.require(read_text(dir / "cold.txt") == first, "cached run differs from uncached run");
    c.detail = std::to_string(bm25.size()) + " topics, 4 runs byte-identical";
}

double mean_ndcg10(const eval::Run& run, const eval::Qrels& qrels) {
    return eval::evaluate(run, qrels).value(eval::Metric::NDCG10);
}

void planted_end_to_end(Check& c) {
    const auto t0 = Clock::now();
    TempDir dir("accept-planted");

    const auto verbatim = make_planted_set(dir / "verbatim", PlantedKind::verbatim, 200);
    auto vcfg = pipeline::load_run_config(verbatim.config);
    c.require(vcfg.cutoffs.stage1 == 50 && vcfg.cutoffs.stage2 == 20 && vcfg.cutoffs.final == 10, "cutoffs not 50/20/10");
    const auto vres = pipeline::run_pipeline(vcfg);
    c.require(vres.ok() && vres.final.size() == 5, "verbatim run incomplete");
    std::size_t at_one = 0;
    for (const auto& l : vres.final) {
        const bool hit = !l.entries.empty() && l.entries[0].doc_id == verbatim.relevant.at(l.query_id);
        c.require(hit, "topic " + l.query_id + ": planted doc not at rank 1");
        at_one += hit;
    }

    const auto para = make_planted_set(dir / "paraphrase", PlantedKind::paraphrase, 200);
    const auto pcfg = pipeline::load_run_config(para.config);
    pipeline::PipelineOptions opts;
    opts.out = dir / "para.txt";
    opts.keep_stages = true;
    const auto pres = pipeline::run_pipeline(pcfg, opts);
    c.require(pres.ok(), "paraphrase run incomplete");
    const auto qrels = eval::parse_qrels(para.qrels);
    const auto pipeline_run = eval::parse_run(opts.out);
    eval::Run bm25_only;
    for (const auto& [qid, list] : eval::parse_run(opts.out.string() + ".bm25", Stage::bm25)) {
        bm25_only[qid] = truncate(list, pcfg.cutoffs.final);
    }
    const double p = mean_ndcg10(pipeline_run, qrels);
    const double b = mean_ndcg10(bm25_only, qrels);
    c.require(p >= b, "pipeline NDCG@10 " + fmt("%.4f", p) + " < BM25 " + fmt("%.4f", b));

    const double secs = seconds_since(t0);
    c.require(secs < 60.0, "took " + fmt("%.2f", secs) + " s");
    c.detail = std::to_string(at_one) + "/5 planted at rank 1; paraphrase NDCG@10 pipeline " + fmt("%.4f", p) +
               " vs bm25 " + fmt("%.4f", b) + "; " + fmt("%.2f", secs) + " s";
}

void t_test_oracle(Check& c) {
    const auto j = json::parse(read_text(fixture("ttest_30.json")));
    const auto a = j["a"].get<std::vector<double>>();
    const auto b = j["b"].get<std::vector<double>>();
    const auto r = eval::paired_t_test(b, a);
    c.require(std::abs(r.t - j["t"].get<double>()) <= 1e-6, "t " + fmt("%.10g", r.t));
    c.require(std::abs(r.p - j["p"].get<double>()) <= 1e-6, "p " + fmt("%.10g", r.p));
    c.require(!r.degenerate, "fixture flagged degenerate");
    const auto d = eval::paired_t_test(a, a);
    c.require(d.degenerate && d.p == 1.0, "identical samples: p " + fmt("%.17g", d.p));
    c.detail = "t " + fmt("%.6f", r.t) + ", p " + fmt("%.6f", r.p);
}

}  // namespace

int main() {
    spdlog::set_level(spdlog::level::err);
    report("bm25 matches brute-force oracle", bm25_oracle);
    report("fusion closed forms", fusion_closed_forms);
    report("top-k sentence aggregation oracle", aggregation_oracle);
    report("metrics match reference", metrics_oracle);
    report("cascade invariants and determinism", cascade_invariants);
    report("planted end-to-end", planted_end_to_end);
    report("paired t-test", t_test_oracle);
    return failures == 0 ? 0 : 1;
}

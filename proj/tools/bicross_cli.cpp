#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bicross/corpus.hpp"
#include "bicross/error.hpp"
#include "bicross/eval.hpp"
#include "bicross/lexical.hpp"
#include "bicross/pipeline.hpp"
#include "bicross/ranking.hpp"

namespace fs = std::filesystem;
using namespace bicross;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kTopicFailures = 1;
constexpr int kError = 2;

int cmd_ingest(const fs::path& input, const fs::path& manifest, const fs::path& out, unsigned threads) {
    const auto summary = corpus::ingest_directory(input, manifest, out, threads);
    for (const auto& [lang, s] : summary.stats_by_lang) {
        std::printf("%s\t%llu docs\tavgdl %.4f\tavg_sentences %.4f\n", lang.c_str(),
                    static_cast<unsigned long long>(s.doc_count), s.avgdl, s.avg_sentences);
    }
    if (summary.skipped > 0) std::printf("skipped\t%zu\n", summary.skipped);
    return kOk;
}

int cmd_index_build(const fs::path& corpus_dir, const std::string& lang, const fs::path& out) {
    const auto index = lexical::InvertedIndex::build_from_store(corpus_dir, lang);
    index.save(out);
    std::printf("%zu docs, %zu terms -> %s\n", index.doc_count(), index.term_count(), out.c_str());
    return kOk;
}

int cmd_index_search(const fs::path& index_file, const std::string& query, std::size_t k, const std::string& format,
                     const std::string& qid, const std::string& tag) {
    const auto index = lexical::InvertedIndex::load(index_file);
    const auto list = index.retrieve_topk(query, qid, k);
    if (format == "trec") {
        std::fputs(eval::format_run_rows(list, tag).c_str(), stdout);
    } else {
        for (const auto& e : list.entries) std::printf("%zu\t%s\t%.6f\n", e.rank, e.doc_id.c_str(), e.score);
    }
    return kOk;
}

int cmd_validate(const std::vector<fs::path>& configs) {
    int rc = kOk;
    for (const auto& file : configs) {
        const auto diags = pipeline::validate_config(pipeline::load_run_config(file));
        if (diags.empty()) {
            std::printf("ok\t%s\n", file.c_str());
            continue;
        }
        rc = kError;
        for (const auto& d : diags) std::printf("error\t%s\t%s\n", file.c_str(), d.c_str());
    }
    return rc;
}

int cmd_run(const fs::path& config, fs::path out, bool keep_stages) {
    const auto cfg = pipeline::load_run_config(config);
    if (out.empty()) out = cfg.run_tag + ".txt";
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    pipeline::PipelineOptions opts;
    opts.out = out;
    opts.keep_stages = keep_stages;
    const auto result = pipeline::run_pipeline(cfg, opts);
    for (const auto& t : result.failed_topics) std::fprintf(stderr, "topic %s failed\n", t.c_str());
    return result.ok() ? kOk : kTopicFailures;
}

int cmd_eval(const fs::path& run_a, const fs::path& run_b, const fs::path& qrels_file, const std::string& format) {
    const auto qrels = eval::parse_qrels(qrels_file);
    std::vector<eval::MetricReport> reports;
    std::vector<std::string> names;
    for (const auto& f : {run_a, run_b}) {
        if (f.empty()) continue;
        std::string tag;
        reports.push_back(eval::evaluate(eval::parse_run(f, Stage::fused, &tag), qrels));
        names.push_back(tag.empty() ? f.filename().string() : tag);
    }
    if (names.size() == 2 && names[0] == names[1]) {
        names[0] = run_a.filename().string();
        names[1] = run_b.filename().string();
    }
    std::fputs(eval::format_table(reports, names, eval::parse_table_format(format)).c_str(), stdout);
    return kOk;
}

struct FuseArgs {
    std::string method = "wcombsum";
    fs::path bm25, refine, rerank, out;
    double alpha = 0.5;
    double beta = 0.4;
    double rrf_k = 60.0;
    std::size_t k = 0;
    std::string tag = "fused";
};

int cmd_fuse(const FuseArgs& a) {
    ranking::FusionConfig cfg;
    cfg.method = ranking::parse_fusion_method(a.method);
    cfg.alpha = a.alpha;
    cfg.beta = a.beta;
    cfg.rrf_k = a.rrf_k;
    if (const auto d = ranking::fusion_diagnostics(cfg); !d.empty()) throw Error(ErrorCode::InvalidArgument, d.front());
    if (cfg.method == ranking::FusionMethod::wcombsum && a.bm25.empty()) {
        throw Error(ErrorCode::InvalidArgument, "wcombsum needs --bm25");
    }
    const auto refine = eval::parse_run(a.refine, Stage::refine);
    const auto rerank = eval::parse_run(a.rerank, Stage::rerank);
    const auto bm25 = a.bm25.empty() ? eval::Run{} : eval::parse_run(a.bm25, Stage::bm25);
    eval::Run fused;
    for (const auto& [qid, cross] : rerank) {
        const auto bi = refine.find(qid);
        if (bi == refine.end()) throw Error(ErrorCode::MissingStageScore, "query " + qid + " missing from refine run");
        const auto bm = bm25.find(qid);
        if (cfg.method == ranking::FusionMethod::wcombsum && bm == bm25.end()) {
            throw Error(ErrorCode::MissingStageScore, "query " + qid + " missing from bm25 run");
        }
        // rrf/borda need equal doc sets: restrict the refine list to the rerank docs.
        RankedList bi_list = bi->second;
        if (cfg.method == ranking::FusionMethod::rrf || cfg.method == ranking::FusionMethod::borda) {
            const auto keep = doc_set(cross);
            std::vector<std::pair<std::string, double>> v;
            for (const auto& e : bi_list.entries) {
                if (keep.contains(e.doc_id)) v.emplace_back(e.doc_id, e.score);
            }
            bi_list = make_ranked_list(qid, Stage::refine, std::move(v));
        }
        auto list = ranking::fuse(bm == bm25.end() ? cross : bm->second, bi_list, cross, cfg);
        fused[qid] = a.k > 0 ? truncate(list, a.k) : std::move(list);
    }
    eval::write_run(fused, a.out, a.tag);
    return kOk;
}

int cmd_tune(const fs::path& config, const fs::path& grid_file, const fs::path& qrels_file, const std::string& metric) {
    auto cfg = pipeline::load_run_config(config);
    const auto grid = ranking::load_weight_grid(grid_file);
    const auto qrels = eval::parse_qrels(qrels_file);
    const auto m = eval::parse_metric(metric);
    auto dev_run = [&](const ranking::AggregationWeights& w) {
        cfg.weights = w;
        const auto result = pipeline::run_pipeline(cfg);
        eval::Run run;
        for (const auto& l : result.final) run[l.query_id] = l;
        std::printf("%s\t%s\t%.6f\n", w.to_string().c_str(), std::string(eval::to_string(m)).c_str(),
                    eval::evaluate(run, qrels).value(m));
        return run;
    };
    const auto best = ranking::grid_search_weights(grid, qrels, dev_run, m);
    std::printf("best\t%s\n", best.to_string().c_str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multistage BM25 + bi-encoder + cross-encoder retrieval"};
    app.require_subcommand(1);
    std::string log_level = "info";
    app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off")->capture_default_str();

    auto* ingest = app.add_subcommand("ingest", "Parse XML documents into per-language corpus stores");
    fs::path in_dir, manifest, corpus_out;
    unsigned threads = 0;
    ingest->add_option("--input", in_dir, "Directory holding the XML files")->required();
    ingest->add_option("--manifest", manifest, "TSV: path, doc_id, lang")->required();
    ingest->add_option("--out", corpus_out, "Corpus store directory")->required();
    ingest->add_option("--threads", threads, "0 = hardware concurrency");

    auto* index = app.add_subcommand("index", "Build or query a BM25 index");
    index->require_subcommand(1);
    auto* build = index->add_subcommand("build", "Build an index from a corpus store");
    fs::path idx_corpus, idx_out;
    std::string idx_lang;
    build->add_option("--corpus", idx_corpus)->required();
    build->add_option("--lang", idx_lang)->required();
    build->add_option("--out", idx_out)->required();
    auto* search = index->add_subcommand("search", "Top-k BM25 search");
    fs::path idx_file;
    std::string query, qid = "q", tag = "bm25", search_format = "trec";
    std::size_t k = 1000;
    search->add_option("--index", idx_file)->required();
    search->add_option("--query", query)->required();
    search->add_option("--k", k)->capture_default_str();
    search->add_option("--qid", qid)->capture_default_str();
    search->add_option("--tag", tag)->capture_default_str();
    search->add_option("--format", search_format)->check(CLI::IsMember({"trec", "tsv"}))->capture_default_str();

    auto* run = app.add_subcommand("run", "Run the full cascade for every topic in a config");
    fs::path run_cfg, run_out;
    bool keep_stages = false;
    run->add_option("--config", run_cfg)->required();
    run->add_option("--out", run_out, "Run file (default <run_tag>.txt)");
    run->add_flag("--keep-stages", keep_stages, "Also write <out>.bm25/.refine/.rerank/.fused");

    auto* validate = app.add_subcommand("validate", "Check run configs without running them");
    std::vector<fs::path> val_cfgs;
    validate->add_option("configs", val_cfgs)->required();

    auto* ev = app.add_subcommand("eval", "Evaluate one or two runs");
    fs::path ev_run, ev_run_b, ev_qrels;
    std::string ev_format = "markdown";
    ev->add_option("--run", ev_run)->required();
    ev->add_option("--run-b", ev_run_b);
    ev->add_option("--qrels", ev_qrels)->required();
    ev->add_option("--format", ev_format)->check(CLI::IsMember({"tsv", "markdown"}))->capture_default_str();

    auto* fuse = app.add_subcommand("fuse", "Fuse stage run files");
    FuseArgs fa;
    fuse->add_option("--method", fa.method)->check(CLI::IsMember({"rrf", "borda", "wcombsum", "none"}))->capture_default_str();
    fuse->add_option("--bm25", fa.bm25, "BM25 stage run (wcombsum)");
    fuse->add_option("--refine", fa.refine)->required();
    fuse->add_option("--rerank", fa.rerank)->required();
    fuse->add_option("--out", fa.out)->required();
    fuse->add_option("--alpha", fa.alpha)->capture_default_str();
    fuse->add_option("--beta", fa.beta)->capture_default_str();
    fuse->add_option("--rrf-k", fa.rrf_k)->capture_default_str();
    fuse->add_option("--k", fa.k, "Truncate each list (0 = keep all)");
    fuse->add_option("--tag", fa.tag)->capture_default_str();

    auto* tune = app.add_subcommand("tune-weights", "Grid search the sentence aggregation weights");
    fs::path tune_cfg, grid, tune_qrels;
    std::string metric = "ndcg";
    tune->add_option("--config", tune_cfg)->required();
    tune->add_option("--grid", grid)->required();
    tune->add_option("--qrels", tune_qrels)->required();
    tune->add_option("--metric", metric)->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    // Logs go to stderr so run rows and tables on stdout stay clean.
    spdlog::set_default_logger(spdlog::stderr_color_mt("bicross"));
    spdlog::set_level(spdlog::level::from_str(log_level));

    try {
        if (*ingest) return cmd_ingest(in_dir, manifest, corpus_out, threads);
        if (*build) return cmd_index_build(idx_corpus, idx_lang, idx_out);
        if (*search) return cmd_index_search(idx_file, query, k, search_format, qid, tag);
        if (*run) return cmd_run(run_cfg, run_out, keep_stages);
        if (*validate) return cmd_validate(val_cfgs);
        if (*ev) return cmd_eval(ev_run, ev_run_b, ev_qrels, ev_format);
        if (*fuse) return cmd_fuse(fa);
        if (*tune) return cmd_tune(tune_cfg, grid, tune_qrels, metric);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kError;
    }
    return kError;
}

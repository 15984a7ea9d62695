#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "bicross/corpus.hpp"
#include "bicross/encoders.hpp"
#include "bicross/error.hpp"
#include "bicross/eval.hpp"
#include "bicross/lexical.hpp"
#include "bicross/pipeline.hpp"
#include "bicross/queries.hpp"
#include "bicross/ranking.hpp"

namespace py = pybind11;
namespace fs = std::filesystem;
using namespace bicross;

namespace {

using Pairs = std::vector<std::pair<std::string, double>>;
using Rows = std::vector<std::tuple<std::string, double, std::size_t>>;

Rows rows_of(const RankedList& l) {
    Rows out;
    out.reserve(l.size());
    for (const auto& e : l.entries) out.emplace_back(e.doc_id, e.score, e.rank);
    return out;
}

RankedList list_of(const Pairs& p, Stage stage) {
    return make_ranked_list("q", stage, p);
}

queries::QueryTopic topic_from(const py::dict& d) {
    queries::QueryTopic t;
    t.topic_id = py::str(d["topic_id"]);
    t.lang = d.contains("lang") ? d["lang"].cast<std::string>() : "en";
    t.keyword = d["keyword"].cast<std::string>();
    t.conversational = d["conversational"].cast<std::string>();
    if (d.contains("expansions")) t.expansions = d["expansions"].cast<std::vector<std::string>>();
    return t;
}

py::dict metrics_dict(const eval::MetricValues& v) {
    py::dict d;
    for (eval::Metric m : eval::kAllMetrics) d[py::str(std::string(eval::to_string(m)))] = v[static_cast<std::size_t>(m)];
    return d;
}

ranking::FusionConfig fusion_config(const std::string& method, double alpha, double beta, double rrf_k) {
    ranking::FusionConfig cfg;
    cfg.method = ranking::parse_fusion_method(method);
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.rrf_k = rrf_k;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_bicross, m) {
    m.doc() = "Multistage BM25 / bi-encoder / cross-encoder retrieval";

    // Module keeps a reference; the raw handle outlives interpreter teardown harmlessly.
    static PyObject* exc_type = py::exception<Error>(m, "BicrossError", PyExc_RuntimeError).ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = py::reinterpret_borrow<py::object>(exc_type)(e.what());
            err.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(exc_type, err.ptr());
        }
    });

    // corpus
    m.def("normalize_tokens", &corpus::normalize_tokens, py::arg("text"), py::arg("lang") = "en");
    m.def("split_sentences", &corpus::split_sentences, py::arg("text"), py::arg("lang") = "en");
    m.def("stem", &corpus::stem_word, py::arg("word"), py::arg("lang") = "en");
    m.def("extract_paragraphs", &corpus::extract_paragraphs, py::arg("raw_xml"));
    m.def(
        "ingest",
        [](const fs::path& input, const fs::path& manifest, const fs::path& out, unsigned threads) {
            corpus::IngestSummary s;
            {
                py::gil_scoped_release release;
                s = corpus::ingest_directory(input, manifest, out, threads);
            }
            py::dict langs;
            for (const auto& [lang, st] : s.stats_by_lang) {
                langs[py::str(lang)] = py::dict(py::arg("doc_count") = st.doc_count, py::arg("avgdl") = st.avgdl,
                                                py::arg("avg_sentences") = st.avg_sentences);
            }
            return py::dict(py::arg("languages") = langs, py::arg("skipped") = s.skipped);
        },
        py::arg("input_dir"), py::arg("manifest"), py::arg("out_dir"), py::arg("threads") = 0);

    // lexical
    py::class_<lexical::InvertedIndex>(m, "Index")
        .def_static(
            "build",
            [](const fs::path& corpus_dir, const std::string& lang, double k1, double b) {
                return lexical::InvertedIndex::build_from_store(corpus_dir, lang, {k1, b});
            },
            py::arg("corpus_dir"), py::arg("lang") = "en", py::arg("k1") = 1.2, py::arg("b") = 0.75)
        .def_static(
            "from_texts",
            [](const std::vector<std::pair<std::string, std::string>>& docs, const std::string& lang) {
                std::vector<corpus::Document> v;
                for (const auto& [id, text] : docs) {
                    corpus::Document d;
                    d.doc_id = id;
                    d.lang = lang;
                    d.tokens = corpus::normalize_tokens(text, lang);
                    v.push_back(std::move(d));
                }
                return lexical::InvertedIndex::build(v);
            },
            py::arg("docs"), py::arg("lang") = "en")
        .def_static("load", &lexical::InvertedIndex::load, py::arg("path"))
        .def("save", &lexical::InvertedIndex::save, py::arg("path"))
        .def_property_readonly("lang", &lexical::InvertedIndex::lang)
        .def_property_readonly("doc_count", &lexical::InvertedIndex::doc_count)
        .def_property_readonly("term_count", &lexical::InvertedIndex::term_count)
        .def("document_frequency", &lexical::InvertedIndex::document_frequency, py::arg("term"))
        .def("idf", &lexical::InvertedIndex::idf, py::arg("term"))
        .def(
            "bm25_score",
            [](const lexical::InvertedIndex& idx, const std::vector<std::string>& tokens, const std::string& doc) {
                return idx.bm25_score(tokens, doc);
            },
            py::arg("query_tokens"), py::arg("doc_id"))
        .def(
            "search",
            [](const lexical::InvertedIndex& idx, const std::string& query, std::size_t k) {
                return rows_of(idx.retrieve_topk(query, "q", k));
            },
            py::arg("query"), py::arg("k") = 1000, "List of (doc_id, score, rank).");

    // queries
    m.def(
        "derive_query",
        [](const py::dict& topic, const std::string& type) {
            return queries::derive_query(topic_from(topic), queries::parse_query_type(type));
        },
        py::arg("topic"), py::arg("query_type") = "key_conv");

    // encoders
    m.def(
        "hashing_embed",
        [](const std::vector<std::string>& texts, std::size_t dim, std::uint64_t seed) {
            return encoders::HashingEmbedder(dim, seed).embed_batch(texts, "en");
        },
        py::arg("texts"), py::arg("dim") = 64, py::arg("seed") = 42);
    m.def(
        "cosine", [](const std::vector<float>& u, const std::vector<float>& v) { return encoders::cosine(u, v); },
        py::arg("u"), py::arg("v"));
    m.def(
        "overlap_scores",
        [](const std::string& query, const std::vector<std::string>& sentences) {
            return encoders::TokenOverlapScorer().score_batch(query, sentences);
        },
        py::arg("query"), py::arg("sentences"));

    // ranking
    m.def(
        "aggregate_topk",
        [](const std::vector<double>& scores, std::vector<double> weights) {
            return ranking::aggregate_topk(std::span<const double>(scores), ranking::make_weights(std::move(weights)));
        },
        py::arg("scores"), py::arg("weights") = std::vector<double>{0.5, 0.3, 0.2});
    m.def(
        "rrf", [](const Pairs& bi, const Pairs& cross, double k) {
            return rows_of(ranking::rrf(list_of(bi, Stage::refine), list_of(cross, Stage::rerank), k));
        },
        py::arg("bi"), py::arg("cross"), py::arg("k") = 60.0);
    m.def(
        "borda", [](const Pairs& bi, const Pairs& cross) {
            return rows_of(ranking::borda(list_of(bi, Stage::refine), list_of(cross, Stage::rerank)));
        },
        py::arg("bi"), py::arg("cross"));
    m.def(
        "wcombsum",
        [](const Pairs& bm25, const Pairs& bi, const Pairs& cross, double alpha, double beta) {
            return rows_of(ranking::wcombsum(list_of(bm25, Stage::bm25), list_of(bi, Stage::refine),
                                             list_of(cross, Stage::rerank), fusion_config("wcombsum", alpha, beta, 60.0)));
        },
        py::arg("bm25"), py::arg("bi"), py::arg("cross"), py::arg("alpha") = 0.5, py::arg("beta") = 0.4);

    // eval
    m.def(
        "evaluate",
        [](const fs::path& run, const fs::path& qrels) {
            const auto r = eval::evaluate(eval::parse_run(run), eval::parse_qrels(qrels));
            py::dict per_query;
            for (const auto& [q, v] : r.per_query) per_query[py::str(q)] = metrics_dict(v);
            return py::dict(py::arg("mean") = metrics_dict(r.mean), py::arg("per_query") = per_query,
                            py::arg("no_relevant") = r.no_relevant, py::arg("missing_from_run") = r.missing_from_run);
        },
        py::arg("run"), py::arg("qrels"));
    m.def(
        "paired_t_test",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            const auto r = eval::paired_t_test(a, b);
            return py::dict(py::arg("t") = r.t, py::arg("p") = r.p, py::arg("df") = r.df,
                            py::arg("degenerate") = r.degenerate);
        },
        py::arg("a"), py::arg("b"));

    // pipeline
    m.def(
        "validate_config",
        [](const fs::path& file) { return pipeline::validate_config(pipeline::load_run_config(file)); },
        py::arg("config"));
    m.def(
        "run",
        [](const fs::path& config, const fs::path& out, bool keep_stages) {
            const auto cfg = pipeline::load_run_config(config);
            pipeline::PipelineOptions opts;
            opts.out = out;
            opts.keep_stages = keep_stages;
            pipeline::RunResult r;
            {
                py::gil_scoped_release release;
                r = pipeline::run_pipeline(cfg, opts);
            }
            py::dict final_lists;
            for (const auto& l : r.final) final_lists[py::str(l.query_id)] = rows_of(l);
            return py::dict(py::arg("final") = final_lists, py::arg("failed_topics") = r.failed_topics);
        },
        py::arg("config"), py::arg("out") = fs::path{}, py::arg("keep_stages") = false);
}

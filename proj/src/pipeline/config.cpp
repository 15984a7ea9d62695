#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "bicross/corpus.hpp"
#include "bicross/error.hpp"
#include "bicross/pipeline.hpp"
#include "bicross/text.hpp"

namespace bicross::pipeline {
namespace {

[[noreturn]] void bad(std::size_t line_no, const std::string& why) {
    throw Error(ErrorCode::InvalidConfig, "line " + std::to_string(line_no) + ": " + why);
}

double to_double(std::string_view v, std::size_t line_no) {
    const std::string s(v);
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) bad(line_no, "'" + s + "' is not a number");
    return out;
}

std::size_t to_size(std::string_view v, std::size_t line_no) {
    const std::string s(v);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        bad(line_no, "'" + s + "' is not a non-negative integer");
    }
    try {
        return static_cast<std::size_t>(std::stoull(s));
    } catch (const std::exception&) {
        bad(line_no, "'" + s + "' is out of range");
    }
}

std::string fmt_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

RunConfig parse_run_config(std::string_view content, const std::filesystem::path& base_dir) {
    RunConfig cfg;
    auto path_value = [&](std::string_view v) {
        std::filesystem::path p{std::string(v)};
        return p.is_relative() && !base_dir.empty() ? (base_dir / p).lexically_normal() : p;
    };
    using Setter = std::function<void(std::string_view, std::size_t)>;
    const std::unordered_map<std::string, Setter> setters = {
        {"run_tag", [&](auto v, auto) { cfg.run_tag = std::string(v); }},
        {"query_lang", [&](auto v, auto) { cfg.query_lang = std::string(v); }},
        {"doc_lang", [&](auto v, auto) { cfg.doc_lang = std::string(v); }},
        {"query_type",
         [&](auto v, auto n) {
             try {
                 cfg.query_type = queries::parse_query_type(v);
             } catch (const Error& e) {
                 bad(n, e.what());
             }
         }},
        {"bi_provider", [&](auto v, auto) { cfg.bi_provider = std::string(v); }},
        {"cross_provider", [&](auto v, auto) { cfg.cross_provider = std::string(v); }},
        {"bi_endpoint", [&](auto v, auto) { cfg.bi_endpoint = std::string(v); }},
        {"cross_endpoint", [&](auto v, auto) { cfg.cross_endpoint = std::string(v); }},
        {"batch_size", [&](auto v, auto n) { cfg.batch_size = to_size(v, n); }},
        {"fusion.method",
         [&](auto v, auto n) {
             try {
                 cfg.fusion.method = ranking::parse_fusion_method(v);
             } catch (const Error& e) {
                 bad(n, e.what());
             }
         }},
        {"fusion.alpha", [&](auto v, auto n) { cfg.fusion.alpha = to_double(v, n); }},
        {"fusion.beta", [&](auto v, auto n) { cfg.fusion.beta = to_double(v, n); }},
        {"fusion.rrf_k", [&](auto v, auto n) { cfg.fusion.rrf_k = to_double(v, n); }},
        {"cutoffs.stage1", [&](auto v, auto n) { cfg.cutoffs.stage1 = to_size(v, n); }},
        {"cutoffs.stage2", [&](auto v, auto n) { cfg.cutoffs.stage2 = to_size(v, n); }},
        {"cutoffs.final", [&](auto v, auto n) { cfg.cutoffs.final = to_size(v, n); }},
        {"weights",
         [&](auto v, auto n) {
             std::string s(v);
             for (char& c : s) {
                 if (c == ',') c = ' ';
             }
             cfg.weights.w.clear();
             for (const std::string& f : text::split_whitespace(s)) cfg.weights.w.push_back(to_double(f, n));
         }},
        {"paths.corpus", [&](auto v, auto) { cfg.paths.corpus = path_value(v); }},
        {"paths.index", [&](auto v, auto) { cfg.paths.index = path_value(v); }},
        {"paths.topics", [&](auto v, auto) { cfg.paths.topics = path_value(v); }},
        {"paths.expansions", [&](auto v, auto) { cfg.paths.expansions = path_value(v); }},
        {"paths.translations", [&](auto v, auto) { cfg.paths.translations = path_value(v); }},
        {"paths.cache", [&](auto v, auto) { cfg.paths.cache = path_value(v); }},
        {"parallelism",
         [&](auto v, auto n) { cfg.parallelism = static_cast<unsigned>(to_size(v, n)); }},
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) end = content.size();
        ++line_no;
        std::string_view line = content.substr(start, end - start);
        start = end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = text::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) bad(line_no, "expected 'key = value'");
        const std::string key(text::trim(line.substr(0, eq)));
        const std::string_view value = text::trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) bad(line_no, "unknown key '" + key + "'");
        it->second(value, line_no);
    }
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::IoError, "cannot open config " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    RunConfig cfg;
    try {
        cfg = parse_run_config(buf.str(), file.parent_path());
    } catch (const Error& e) {
        throw Error(e.code(), file.string() + ": " + e.what());
    }
    if (const char* ep = std::getenv("BICROSS_BI_ENDPOINT"); ep && *ep) cfg.bi_endpoint = ep;
    if (const char* ep = std::getenv("BICROSS_CROSS_ENDPOINT"); ep && *ep) cfg.cross_endpoint = ep;
    return cfg;
}

std::string format_run_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "run_tag = " << cfg.run_tag << '\n'
        << "query_lang = " << cfg.query_lang << '\n'
        << "doc_lang = " << cfg.doc_lang << '\n'
        << "query_type = " << queries::to_string(cfg.query_type) << '\n'
        << "bi_provider = " << cfg.bi_provider << '\n'
        << "cross_provider = " << cfg.cross_provider << '\n';
    if (!cfg.bi_endpoint.empty()) out << "bi_endpoint = " << cfg.bi_endpoint << '\n';
    if (!cfg.cross_endpoint.empty()) out << "cross_endpoint = " << cfg.cross_endpoint << '\n';
    out << "batch_size = " << cfg.batch_size << '\n'
        << "fusion.method = " << ranking::to_string(cfg.fusion.method) << '\n'
        << "fusion.alpha = " << fmt_double(cfg.fusion.alpha) << '\n'
        << "fusion.beta = " << fmt_double(cfg.fusion.beta) << '\n'
        << "fusion.rrf_k = " << fmt_double(cfg.fusion.rrf_k) << '\n'
        << "cutoffs.stage1 = " << cfg.cutoffs.stage1 << '\n'
        << "cutoffs.stage2 = " << cfg.cutoffs.stage2 << '\n'
        << "cutoffs.final = " << cfg.cutoffs.final << '\n'
        << "weights = ";
    for (std::size_t i = 0; i < cfg.weights.w.size(); ++i) out << (i ? ", " : "") << fmt_double(cfg.weights.w[i]);
    out << '\n';
    auto path = [&](const char* key, const std::filesystem::path& p) {
        if (!p.empty()) out << key << " = " << p.string() << '\n';
    };
    path("paths.corpus", cfg.paths.corpus);
    path("paths.index", cfg.paths.index);
    path("paths.topics", cfg.paths.topics);
    path("paths.expansions", cfg.paths.expansions);
    path("paths.translations", cfg.paths.translations);
    path("paths.cache", cfg.paths.cache);
    out << "parallelism = " << cfg.parallelism << '\n';
    return out.str();
}

std::vector<std::string> validate_config(const RunConfig& cfg) {
    std::vector<std::string> d;
    if (cfg.run_tag.empty() || cfg.run_tag.find_first_of(" \t") != std::string::npos) {
        d.emplace_back("run_tag must be a non-empty single word");
    }
    if (!corpus::is_supported_language(cfg.query_lang)) d.push_back("unsupported query_lang '" + cfg.query_lang + "'");
    if (!corpus::is_supported_language(cfg.doc_lang)) d.push_back("unsupported doc_lang '" + cfg.doc_lang + "'");
    if (cfg.cutoffs.final < 1) d.emplace_back("cutoffs.final must be at least 1");
    if (cfg.cutoffs.stage2 < cfg.cutoffs.final) d.emplace_back("cutoffs.stage2 must be >= cutoffs.final");
    if (cfg.cutoffs.stage1 < cfg.cutoffs.stage2) d.emplace_back("cutoffs.stage1 must be >= cutoffs.stage2");
    for (std::string& f : ranking::fusion_diagnostics(cfg.fusion)) d.push_back(std::move(f));
    try {
        cfg.weights.validate();
    } catch (const Error& e) {
        d.push_back("weights: " + std::string(e.what()));
    }
    if (cfg.bilingual() && cfg.paths.translations.empty()) {
        d.emplace_back("bilingual run (query_lang != doc_lang) requires paths.translations");
    }
    if (cfg.query_type == queries::QueryType::t5) {
        if (cfg.paths.expansions.empty()) d.emplace_back("query_type t5 requires paths.expansions");
        if (cfg.bilingual()) d.emplace_back("query_type t5 is not supported for bilingual runs (expansions are not translated)");
    }
    if (cfg.bi_provider != "hashing" && cfg.bi_provider != "remote") {
        d.push_back("unknown bi_provider '" + cfg.bi_provider + "'");
    }
    if (cfg.cross_provider != "overlap" && cfg.cross_provider != "remote") {
        d.push_back("unknown cross_provider '" + cfg.cross_provider + "'");
    }
    if (cfg.bi_provider == "remote" && cfg.bi_endpoint.empty()) d.emplace_back("remote bi_provider requires bi_endpoint");
    if (cfg.cross_provider == "remote" && cfg.cross_endpoint.empty()) {
        d.emplace_back("remote cross_provider requires cross_endpoint");
    }
    if (cfg.batch_size < 1) d.emplace_back("batch_size must be at least 1");
    if (cfg.paths.corpus.empty()) d.emplace_back("paths.corpus is required");
    if (cfg.paths.topics.empty()) d.emplace_back("paths.topics is required");
    if (cfg.parallelism < 1) d.emplace_back("parallelism must be at least 1");
    return d;
}

}  // namespace bicross::pipeline

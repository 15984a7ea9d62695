#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <spdlog/spdlog.h>

#include "bicross/corpus.hpp"
#include "bicross/error.hpp"
#include "bicross/text.hpp"

namespace bicross::corpus {
namespace {

bool starts_with_ci(std::string_view s, std::size_t pos, std::string_view prefix) {
    if (s.size() - pos < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const char a = static_cast<char>(std::tolower(static_cast<unsigned char>(s[pos + i])));
        if (a != prefix[i]) return false;
    }
    return true;
}

std::size_t find_ci(std::string_view s, std::string_view needle, std::size_t from) {
    for (std::size_t i = from; i + needle.size() <= s.size(); ++i) {
        if (starts_with_ci(s, i, needle)) return i;
    }
    return std::string_view::npos;
}

// Position of the '>' closing a tag that starts at `lt`, honouring quoted
// attribute values.
std::size_t tag_end(std::string_view s, std::size_t lt) {
    char quote = 0;
    for (std::size_t i = lt + 1; i < s.size(); ++i) {
        const char c = s[i];
        if (quote) {
            if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '>') {
            return i;
        }
    }
    return std::string_view::npos;
}

struct Tag {
    std::string name;
    bool closing = false;
    bool self_closing = false;
};

Tag parse_tag(std::string_view body) {
    Tag tag;
    std::size_t i = 0;
    if (i < body.size() && body[i] == '/') {
        tag.closing = true;
        ++i;
    }
    while (i < body.size()) {
        const auto c = static_cast<unsigned char>(body[i]);
        if (std::isspace(c) || c == '/' || c == '>') break;
        tag.name.push_back(static_cast<char>(std::tolower(c)));
        ++i;
    }
    tag.self_closing = !body.empty() && body.back() == '/';
    return tag;
}

void decode_entities(std::string_view in, std::string& out) {
    std::size_t i = 0;
    while (i < in.size()) {
        if (in[i] != '&') {
            out.push_back(in[i++]);
            continue;
        }
        const std::size_t semi = in.find(';', i);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(in[i++]);
            continue;
        }
        const std::string_view ent = in.substr(i + 1, semi - i - 1);
        bool handled = true;
        if (ent == "amp") {
            out.push_back('&');
        } else if (ent == "lt") {
            out.push_back('<');
        } else if (ent == "gt") {
            out.push_back('>');
        } else if (ent == "quot") {
            out.push_back('"');
        } else if (ent == "apos") {
            out.push_back('\'');
        } else if (ent == "nbsp") {
            text::append_utf8(out, 0xA0);
        } else if (ent.size() > 1 && ent[0] == '#') {
            char32_t cp = 0;
            const bool hex = ent[1] == 'x' || ent[1] == 'X';
            const std::string digits(ent.substr(hex ? 2 : 1));
            try {
                std::size_t used = 0;
                const unsigned long v = std::stoul(digits, &used, hex ? 16 : 10);
                if (used != digits.size() || v == 0 || v > 0x10FFFF) {
                    handled = false;
                } else {
                    cp = static_cast<char32_t>(v);
                }
            } catch (const std::exception&) {
                handled = false;
            }
            if (handled) text::append_utf8(out, cp);
        } else {
            handled = false;
        }
        if (handled) {
            i = semi + 1;
        } else {
            out.push_back(in[i++]);
        }
    }
}

}  // namespace

std::vector<std::string> extract_paragraphs(std::string_view raw) {
    std::vector<std::string> paragraphs;
    std::string current;
    bool in_p = false;

    auto finish = [&] {
        std::string collapsed = text::collapse_whitespace(current);
        if (!collapsed.empty()) paragraphs.push_back(std::move(collapsed));
        current.clear();
        in_p = false;
    };

    std::size_t pos = 0;
    while (pos < raw.size()) {
        const std::size_t lt = raw.find('<', pos);
        const std::size_t text_end = lt == std::string_view::npos ? raw.size() : lt;
        if (in_p && text_end > pos) decode_entities(raw.substr(pos, text_end - pos), current);
        if (lt == std::string_view::npos) break;

        if (raw.compare(lt, 4, "<!--") == 0) {
            const std::size_t end = raw.find("-->", lt + 4);
            if (end == std::string_view::npos) break;
            pos = end + 3;
            continue;
        }
        if (raw.compare(lt, 9, "<![CDATA[") == 0) {
            const std::size_t end = raw.find("]]>", lt + 9);
            if (end == std::string_view::npos) break;
            if (in_p) current.append(raw.substr(lt + 9, end - lt - 9));
            pos = end + 3;
            continue;
        }
        const std::size_t gt = tag_end(raw, lt);
        if (gt == std::string_view::npos) break;
        pos = gt + 1;
        if (lt + 1 < raw.size() && (raw[lt + 1] == '?' || raw[lt + 1] == '!')) continue;

        const Tag tag = parse_tag(raw.substr(lt + 1, gt - lt - 1));
        if (tag.name == "p") {
            if (in_p) finish();
            if (!tag.closing && !tag.self_closing) in_p = true;
        } else if (!in_p && !tag.closing && !tag.self_closing && (tag.name == "script" || tag.name == "style")) {
            const std::size_t close = find_ci(raw, "</" + tag.name, pos);
            if (close == std::string_view::npos) break;
            pos = close;
        }
    }
    if (in_p) finish();
    return paragraphs;
}

Document ingest_document(std::string_view raw_xml, std::string doc_id, std::string lang) {
    if (doc_id.empty()) throw Error(ErrorCode::InvalidArgument, "empty doc_id");
    const auto normalizer = default_normalizer(lang);
    Document doc;
    doc.raw_paragraphs = extract_paragraphs(raw_xml);
    if (doc.raw_paragraphs.empty()) {
        throw Error(ErrorCode::MalformedInput, "document '" + doc_id + "' has no <p> text");
    }
    for (const std::string& para : doc.raw_paragraphs) {
        for (std::string& s : split_sentences(para, lang)) doc.sentences.push_back(std::move(s));
        for (std::string& t : normalizer->normalize(para)) doc.tokens.push_back(std::move(t));
    }
    doc.doc_id = std::move(doc_id);
    doc.lang = std::move(lang);
    return doc;
}

std::vector<std::pair<std::string, std::string>> split_concatenated(std::string_view raw) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t lt = find_ci(raw, "<doc", pos);
        if (lt == std::string_view::npos) break;
        const char after = lt + 4 < raw.size() ? raw[lt + 4] : '\0';
        if (!(after == '>' || std::isspace(static_cast<unsigned char>(after)))) {
            pos = lt + 4;
            continue;
        }
        const std::size_t gt = tag_end(raw, lt);
        if (gt == std::string_view::npos) break;
        const std::string_view head = raw.substr(lt, gt - lt);
        std::string id;
        std::size_t at = 0;
        while ((at = head.find("id", at)) != std::string_view::npos) {
            const bool word_start = at > 0 && std::isspace(static_cast<unsigned char>(head[at - 1]));
            std::size_t q = at + 2;
            while (q < head.size() && std::isspace(static_cast<unsigned char>(head[q]))) ++q;
            if (word_start && q < head.size() && head[q] == '=') {
                ++q;
                while (q < head.size() && std::isspace(static_cast<unsigned char>(head[q]))) ++q;
                if (q < head.size() && (head[q] == '"' || head[q] == '\'')) {
                    const std::size_t end = head.find(head[q], q + 1);
                    if (end != std::string_view::npos) id = std::string(head.substr(q + 1, end - q - 1));
                }
                break;
            }
            at += 2;
        }
        const std::size_t close = find_ci(raw, "</doc>", gt + 1);
        const std::size_t body_end = close == std::string_view::npos ? raw.size() : close;
        out.emplace_back(std::move(id), std::string(raw.substr(gt + 1, body_end - gt - 1)));
        pos = close == std::string_view::npos ? raw.size() : close + 6;
    }
    return out;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw Error(ErrorCode::IoError, "cannot open manifest " + manifest.string());
    std::vector<ManifestEntry> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view t = text::trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            const std::size_t tab = t.find('\t', start);
            cols.emplace_back(text::trim(t.substr(start, tab - start)));
            if (tab == std::string_view::npos) break;
            start = tab + 1;
        }
        if (cols.size() != 3 || cols[0].empty() || cols[1].empty() || cols[2].empty()) {
            throw Error(ErrorCode::MalformedRow,
                        manifest.string() + ":" + std::to_string(line_no) + ": expected path<TAB>doc_id<TAB>lang");
        }
        out.push_back({cols[0], cols[1], cols[2]});
    }
    return out;
}

CorpusStats compute_corpus_stats(std::span<const Document> docs) {
    if (docs.empty()) throw Error(ErrorCode::EmptyCorpus, "cannot compute statistics of an empty corpus");
    std::uint64_t tokens = 0;
    std::uint64_t sentences = 0;
    for (const Document& d : docs) {
        tokens += d.tokens.size();
        sentences += d.sentences.size();
    }
    CorpusStats stats;
    stats.doc_count = docs.size();
    stats.avgdl = static_cast<double>(tokens) / static_cast<double>(docs.size());
    stats.avg_sentences = static_cast<double>(sentences) / static_cast<double>(docs.size());
    return stats;
}

IngestSummary ingest_directory(const std::filesystem::path& input_dir, const std::filesystem::path& manifest,
                               const std::filesystem::path& out_dir, unsigned threads) {
    struct Task {
        std::string doc_id;
        std::string lang;
        std::string xml;
    };
    std::vector<Task> tasks;
    IngestSummary summary;
    for (const ManifestEntry& entry : read_manifest(manifest)) {
        if (!is_supported_language(entry.lang)) {
            spdlog::warn("skipping {}: unsupported language '{}'", entry.file.string(), entry.lang);
            ++summary.skipped;
            continue;
        }
        const std::filesystem::path file = input_dir / entry.file;
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            spdlog::warn("skipping {}: cannot open file", file.string());
            ++summary.skipped;
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        if (entry.doc_id == "*") {
            for (auto& [id, body] : split_concatenated(buf.str())) {
                if (id.empty()) {
                    spdlog::warn("skipping record without id in {}", file.string());
                    ++summary.skipped;
                    continue;
                }
                tasks.push_back({std::move(id), entry.lang, std::move(body)});
            }
        } else {
            tasks.push_back({entry.doc_id, entry.lang, buf.str()});
        }
    }

    std::vector<std::optional<Document>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = ingest_document(tasks[i].xml, tasks[i].doc_id, tasks[i].lang);
            } catch (const Error& e) {
                spdlog::warn("skipping document '{}': {}", tasks[i].doc_id, e.what());
            }
        }
    };
    const unsigned n_threads = std::max(1u, threads ? threads : std::thread::hardware_concurrency());
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
        worker();
    }

    std::map<std::string, std::vector<Document>> by_lang;
    std::map<std::string, std::unordered_set<std::string>> seen;
    for (auto& r : results) {
        if (!r) {
            ++summary.skipped;
            continue;
        }
        if (!seen[r->lang].insert(r->doc_id).second) {
            spdlog::warn("skipping duplicate doc_id '{}' ({})", r->doc_id, r->lang);
            ++summary.skipped;
            continue;
        }
        by_lang[r->lang].push_back(std::move(*r));
    }
    if (by_lang.empty()) throw Error(ErrorCode::EmptyCorpus, "no documents could be ingested");

    std::filesystem::create_directories(out_dir);
    for (const auto& [lang, docs] : by_lang) {
        const CorpusStats stats = compute_corpus_stats(docs);
        write_store(out_dir, lang, docs);
        write_stats(out_dir, lang, stats);
        summary.stats_by_lang.emplace(lang, stats);
        spdlog::info("ingested {} {} documents (avgdl {:.2f}, avg sentences {:.2f})", stats.doc_count, lang,
                     stats.avgdl, stats.avg_sentences);
    }
    return summary;
}

}  // namespace bicross::corpus

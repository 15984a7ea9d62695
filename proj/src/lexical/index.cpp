#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "bicross/error.hpp"
#include "bicross/lexical.hpp"
#include "bicross/text.hpp"

namespace bicross::lexical {
namespace {

constexpr char kMagic[8] = {'B', 'X', 'I', 'D', 'X', '\0', '\r', '\n'};
constexpr std::uint32_t kVersion = 1;

// Collects postings with documents numbered in arrival order.
class Builder {
public:
    explicit Builder(Bm25Params params) : params_(params) {}

    void add(const corpus::Document& doc) {
        if (lang_.empty()) lang_ = doc.lang;
        if (doc.lang != lang_) {
            throw Error(ErrorCode::InvalidArgument,
                        "document '" + doc.doc_id + "' is '" + doc.lang + "', index is '" + lang_ + "'");
        }
        const auto n = static_cast<std::uint32_t>(ids_.size());
        ids_.push_back(doc.doc_id);
        lengths_.push_back(static_cast<std::uint32_t>(doc.tokens.size()));
        sentence_total_ += doc.sentences.size();
        std::map<std::string_view, std::uint32_t> tf;
        for (const std::string& t : doc.tokens) ++tf[t];
        for (const auto& [term, count] : tf) {
            auto it = postings_.find(term);
            if (it == postings_.end()) it = postings_.emplace(std::string(term), std::vector<Posting>{}).first;
            it->second.push_back({n, count});
        }
    }

    void finish(std::string& lang, Bm25Params& params, corpus::CorpusStats& stats,
                std::vector<std::string>& doc_ids, std::vector<std::uint32_t>& lengths,
                std::unordered_map<std::string, std::uint32_t>& terms, std::vector<std::vector<Posting>>& postings) {
        if (ids_.empty()) throw Error(ErrorCode::EmptyCorpus, "cannot index an empty corpus");
        std::vector<std::uint32_t> order(ids_.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ids_[a] < ids_[b]; });
        std::vector<std::uint32_t> remap(ids_.size());
        doc_ids.clear();
        lengths.clear();
        std::uint64_t total = 0;
        for (std::uint32_t i = 0; i < order.size(); ++i) {
            if (i > 0 && ids_[order[i]] == ids_[order[i - 1]]) {
                throw Error(ErrorCode::DuplicateDoc, "duplicate doc_id '" + ids_[order[i]] + "'");
            }
            remap[order[i]] = i;
            doc_ids.push_back(ids_[order[i]]);
            lengths.push_back(lengths_[order[i]]);
            total += lengths_[order[i]];
        }
        terms.clear();
        postings.clear();
        postings.reserve(postings_.size());
        for (auto& [term, list] : postings_) {
            for (Posting& p : list) p.doc = remap[p.doc];
            std::sort(list.begin(), list.end(), [](const Posting& a, const Posting& b) { return a.doc < b.doc; });
            terms.emplace(term, static_cast<std::uint32_t>(postings.size()));
            postings.push_back(std::move(list));
        }
        lang = lang_;
        params = params_;
        stats.doc_count = ids_.size();
        stats.avgdl = static_cast<double>(total) / static_cast<double>(ids_.size());
        stats.avg_sentences = static_cast<double>(sentence_total_) / static_cast<double>(ids_.size());
    }

private:
    Bm25Params params_;
    std::string lang_;
    std::vector<std::string> ids_;
    std::vector<std::uint32_t> lengths_;
    std::uint64_t sentence_total_ = 0;
    std::map<std::string, std::vector<Posting>, std::less<>> postings_;
};

class Writer {
public:
    template <class T>
    void pod(T v) {
        char buf[sizeof(T)];
        std::memcpy(buf, &v, sizeof(T));
        data.append(buf, sizeof(T));
    }
    void str(std::string_view s) {
        pod(static_cast<std::uint32_t>(s.size()));
        data.append(s);
    }
    std::string data;
};

class Reader {
public:
    explicit Reader(std::string_view d) : d_(d) {}
    template <class T>
    T pod() {
        need(sizeof(T));
        T v;
        std::memcpy(&v, d_.data() + pos_, sizeof(T));
        pos_ += sizeof(T);
        return v;
    }
    std::string str() {
        const auto n = pod<std::uint32_t>();
        need(n);
        std::string s(d_.substr(pos_, n));
        pos_ += n;
        return s;
    }
    bool done() const { return pos_ == d_.size(); }

private:
    void need(std::size_t n) const {
        if (d_.size() - pos_ < n) throw Error(ErrorCode::CorruptStore, "index file truncated");
    }
    std::string_view d_;
    std::size_t pos_ = 0;
};

}  // namespace

InvertedIndex InvertedIndex::build(std::span<const corpus::Document> docs, Bm25Params params) {
    Builder b(params);
    for (const corpus::Document& d : docs) b.add(d);
    InvertedIndex idx;
    b.finish(idx.lang_, idx.params_, idx.stats_, idx.doc_ids_, idx.doc_lengths_, idx.terms_, idx.postings_);
    idx.finalize();
    return idx;
}

InvertedIndex InvertedIndex::build_from_store(const std::filesystem::path& corpus_dir, std::string_view lang,
                                              Bm25Params params) {
    const auto file = corpus::store_file(corpus_dir, lang);
    if (!std::filesystem::exists(file)) {
        throw Error(ErrorCode::EmptyCorpus, "no corpus store at " + file.string());
    }
    Builder b(params);
    corpus::StoreReader reader(file);
    while (auto doc = reader.next()) b.add(*doc);
    InvertedIndex idx;
    b.finish(idx.lang_, idx.params_, idx.stats_, idx.doc_ids_, idx.doc_lengths_, idx.terms_, idx.postings_);
    if (idx.lang_ != lang) throw Error(ErrorCode::CorruptStore, "store " + file.string() + " holds '" + idx.lang_ + "'");
    idx.finalize();
    return idx;
}

void InvertedIndex::finalize() {
    const double n = static_cast<double>(doc_ids_.size());
    idf_.resize(postings_.size());
    for (std::size_t t = 0; t < postings_.size(); ++t) {
        const double df = static_cast<double>(postings_[t].size());
        idf_[t] = std::log(1.0 + (n - df + 0.5) / (df + 0.5));
    }
    doc_numbers_.clear();
    doc_numbers_.reserve(doc_ids_.size());
    for (std::uint32_t i = 0; i < doc_ids_.size(); ++i) doc_numbers_.emplace(doc_ids_[i], i);
}

void InvertedIndex::save(const std::filesystem::path& file) const {
    Writer w;
    w.str(lang_);
    w.pod(params_.k1);
    w.pod(params_.b);
    w.pod(stats_.doc_count);
    w.pod(stats_.avgdl);
    w.pod(stats_.avg_sentences);
    w.pod(static_cast<std::uint64_t>(doc_ids_.size()));
    for (std::size_t i = 0; i < doc_ids_.size(); ++i) {
        w.str(doc_ids_[i]);
        w.pod(doc_lengths_[i]);
    }
    // Term dictionary in lexicographic order so equal indexes give equal bytes.
    std::vector<std::pair<std::string_view, std::uint32_t>> dict(terms_.begin(), terms_.end());
    std::sort(dict.begin(), dict.end());
    w.pod(static_cast<std::uint64_t>(dict.size()));
    for (const auto& [term, id] : dict) {
        w.str(term);
        const auto& list = postings_[id];
        w.pod(static_cast<std::uint32_t>(list.size()));
        for (const Posting& p : list) {
            w.pod(p.doc);
            w.pod(p.tf);
        }
    }

    Writer header;
    header.data.append(kMagic, sizeof(kMagic));
    header.pod(kVersion);
    header.pod(static_cast<std::uint64_t>(w.data.size()));
    header.pod(text::fnv1a64(w.data));

    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    const auto tmp = std::filesystem::path(file.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
        out.write(header.data.data(), static_cast<std::streamsize>(header.data.size()));
        out.write(w.data.data(), static_cast<std::streamsize>(w.data.size()));
        if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

InvertedIndex InvertedIndex::load(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open index " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string bytes = ss.str();

    Reader head(bytes);
    char magic[sizeof(kMagic)];
    for (char& c : magic) c = head.pod<char>();
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw Error(ErrorCode::CorruptStore, file.string() + " is not an index file");
    }
    if (const auto v = head.pod<std::uint32_t>(); v != kVersion) {
        throw Error(ErrorCode::CorruptStore, "unsupported index version " + std::to_string(v));
    }
    const auto size = head.pod<std::uint64_t>();
    const auto checksum = head.pod<std::uint64_t>();
    const std::size_t header_size = sizeof(kMagic) + 4 + 8 + 8;
    if (bytes.size() - header_size != size) throw Error(ErrorCode::CorruptStore, "index payload size mismatch");
    const std::string_view payload = std::string_view(bytes).substr(header_size);
    if (text::fnv1a64(payload) != checksum) throw Error(ErrorCode::CorruptStore, "index checksum mismatch");

    Reader r(payload);
    InvertedIndex idx;
    idx.lang_ = r.str();
    idx.params_.k1 = r.pod<double>();
    idx.params_.b = r.pod<double>();
    idx.stats_.doc_count = r.pod<std::uint64_t>();
    idx.stats_.avgdl = r.pod<double>();
    idx.stats_.avg_sentences = r.pod<double>();
    const auto ndocs = r.pod<std::uint64_t>();
    if (ndocs != idx.stats_.doc_count || ndocs == 0) throw Error(ErrorCode::CorruptStore, "bad document count");
    for (std::uint64_t i = 0; i < ndocs; ++i) {
        idx.doc_ids_.push_back(r.str());
        idx.doc_lengths_.push_back(r.pod<std::uint32_t>());
    }
    const auto nterms = r.pod<std::uint64_t>();
    for (std::uint64_t t = 0; t < nterms; ++t) {
        std::string term = r.str();
        const auto n = r.pod<std::uint32_t>();
        std::vector<Posting> list(n);
        for (Posting& p : list) {
            p.doc = r.pod<std::uint32_t>();
            p.tf = r.pod<std::uint32_t>();
            if (p.doc >= ndocs || p.tf == 0) throw Error(ErrorCode::CorruptStore, "bad posting for '" + term + "'");
        }
        idx.terms_.emplace(std::move(term), static_cast<std::uint32_t>(idx.postings_.size()));
        idx.postings_.push_back(std::move(list));
    }
    if (!r.done()) throw Error(ErrorCode::CorruptStore, "trailing bytes in index");
    idx.finalize();
    return idx;
}

bool InvertedIndex::contains_doc(std::string_view doc_id) const {
    return doc_numbers_.contains(std::string(doc_id));
}

std::uint32_t InvertedIndex::doc_length(std::string_view doc_id) const {
    const auto it = doc_numbers_.find(std::string(doc_id));
    if (it == doc_numbers_.end()) throw Error(ErrorCode::UnknownDocument, "unknown document '" + std::string(doc_id) + "'");
    return doc_lengths_[it->second];
}

std::size_t InvertedIndex::document_frequency(std::string_view term) const { return postings(term).size(); }

std::span<const Posting> InvertedIndex::postings(std::string_view term) const {
    const auto it = terms_.find(std::string(term));
    if (it == terms_.end()) return {};
    return postings_[it->second];
}

double InvertedIndex::idf(std::string_view term) const {
    const auto it = terms_.find(std::string(term));
    if (it != terms_.end()) return idf_[it->second];
    const double n = static_cast<double>(doc_ids_.size());
    return std::log(1.0 + (n + 0.5) / 0.5);
}

std::vector<InvertedIndex::QueryTerm> InvertedIndex::query_terms(std::span<const std::string> tokens) const {
    std::vector<QueryTerm> out;
    for (const std::string& tok : tokens) {
        const auto it = terms_.find(tok);
        if (it == terms_.end()) continue;
        auto same = std::find_if(out.begin(), out.end(), [&](const QueryTerm& q) { return q.term == it->second; });
        if (same == out.end()) {
            out.push_back({it->second, 1});
        } else {
            ++same->qtf;
        }
    }
    return out;
}

double InvertedIndex::term_weight(std::uint32_t term, std::uint32_t tf, std::uint32_t dl) const {
    const double f = tf;
    const double norm = params_.k1 * (1.0 - params_.b + params_.b * static_cast<double>(dl) / stats_.avgdl);
    return idf_[term] * f * (params_.k1 + 1.0) / (f + norm);
}

double InvertedIndex::bm25_score(std::span<const std::string> query_tokens, std::string_view doc_id) const {
    const auto it = doc_numbers_.find(std::string(doc_id));
    if (it == doc_numbers_.end()) throw Error(ErrorCode::UnknownDocument, "unknown document '" + std::string(doc_id) + "'");
    const std::uint32_t doc = it->second;
    double score = 0.0;
    for (const QueryTerm& q : query_terms(query_tokens)) {
        const auto& list = postings_[q.term];
        const auto p = std::lower_bound(list.begin(), list.end(), doc,
                                        [](const Posting& a, std::uint32_t d) { return a.doc < d; });
        if (p == list.end() || p->doc != doc) continue;
        score += q.qtf * term_weight(q.term, p->tf, doc_lengths_[doc]);
    }
    return score;
}

RankedList InvertedIndex::retrieve_topk(std::string_view query, std::string query_id, std::size_t k) const {
    const auto tokens = corpus::normalize_tokens(query, lang_);
    if (tokens.empty()) throw Error(ErrorCode::EmptyQuery, "no query terms left after normalization");
    return retrieve_tokens(tokens, std::move(query_id), k);
}

RankedList InvertedIndex::retrieve_tokens(std::span<const std::string> query_tokens, std::string query_id,
                                          std::size_t k) const {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    if (query_tokens.empty()) throw Error(ErrorCode::EmptyQuery, "empty query");
    std::vector<double> acc(doc_ids_.size(), 0.0);
    std::vector<std::uint8_t> hit(doc_ids_.size(), 0);
    std::vector<std::uint32_t> touched;
    for (const QueryTerm& q : query_terms(query_tokens)) {
        for (const Posting& p : postings_[q.term]) {
            if (!hit[p.doc]) {
                hit[p.doc] = 1;
                touched.push_back(p.doc);
            }
            acc[p.doc] += q.qtf * term_weight(q.term, p.tf, doc_lengths_[p.doc]);
        }
    }
    // Doc numbers follow doc_id order, so comparing numbers is the doc_id tie-break.
    auto better = [&](std::uint32_t a, std::uint32_t b) { return acc[a] != acc[b] ? acc[a] > acc[b] : a < b; };
    const std::size_t n = std::min(k, touched.size());
    std::partial_sort(touched.begin(), touched.begin() + static_cast<std::ptrdiff_t>(n), touched.end(), better);
    RankedList out{std::move(query_id), Stage::bm25, {}};
    out.entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.entries.push_back({doc_ids_[touched[i]], acc[touched[i]], i + 1});
    return out;
}

}  // namespace bicross::lexical

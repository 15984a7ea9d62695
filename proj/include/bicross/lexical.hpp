#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bicross/corpus.hpp"
#include "bicross/ranked_list.hpp"

namespace bicross::lexical {

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;

    bool operator==(const Bm25Params&) const = default;
};

struct Posting {
    std::uint32_t doc = 0;  // internal document number
    std::uint32_t tf = 0;

    bool operator==(const Posting&) const = default;
};

/// Immutable BM25 index over one language corpus. Query methods are const and
/// allocate their own scratch space, so concurrent queries need no locking.
class InvertedIndex {
public:
    /// Throws EmptyCorpus.
    static InvertedIndex build(std::span<const corpus::Document> docs, Bm25Params params = {});
    /// Streams `<dir>/<lang>.jsonl`. Throws EmptyCorpus, CorruptStore.
    static InvertedIndex build_from_store(const std::filesystem::path& corpus_dir, std::string_view lang,
                                          Bm25Params params = {});

    void save(const std::filesystem::path& file) const;
    /// Throws CorruptStore on a bad magic, version or checksum.
    static InvertedIndex load(const std::filesystem::path& file);

    const std::string& lang() const noexcept { return lang_; }
    const corpus::CorpusStats& stats() const noexcept { return stats_; }
    const Bm25Params& params() const noexcept { return params_; }
    std::size_t doc_count() const noexcept { return doc_ids_.size(); }
    std::size_t term_count() const noexcept { return postings_.size(); }

    bool contains_doc(std::string_view doc_id) const;
    /// Throws UnknownDocument.
    std::uint32_t doc_length(std::string_view doc_id) const;
    std::size_t document_frequency(std::string_view term) const;
    std::span<const Posting> postings(std::string_view term) const;
    const std::string& doc_id(std::uint32_t doc) const { return doc_ids_.at(doc); }

    /// ln(1 + (N - df + 0.5) / (df + 0.5)).
    double idf(std::string_view term) const;

    /// BM25 of already-normalized query tokens against one document; repeated
    /// tokens count once per occurrence. Throws UnknownDocument.
    double bm25_score(std::span<const std::string> query_tokens, std::string_view doc_id) const;

    /// Top-k documents sharing at least one token with the query. Throws
    /// EmptyQuery when nothing survives normalization, InvalidArgument for k = 0.
    RankedList retrieve_topk(std::string_view query, std::string query_id = "", std::size_t k = 1000) const;
    RankedList retrieve_tokens(std::span<const std::string> query_tokens, std::string query_id = "",
                               std::size_t k = 1000) const;

    bool operator==(const InvertedIndex&) const = default;

private:
    struct QueryTerm {
        std::uint32_t term;
        std::uint32_t qtf;
    };
    std::vector<QueryTerm> query_terms(std::span<const std::string> tokens) const;
    double term_weight(std::uint32_t term, std::uint32_t tf, std::uint32_t dl) const;
    void finalize();

    std::string lang_;
    Bm25Params params_;
    corpus::CorpusStats stats_;
    std::vector<std::string> doc_ids_;  // sorted ascending, so doc number order is the tie-break order
    std::vector<std::uint32_t> doc_lengths_;
    std::unordered_map<std::string, std::uint32_t> terms_;
    std::vector<std::vector<Posting>> postings_;
    std::vector<double> idf_;
    std::unordered_map<std::string, std::uint32_t> doc_numbers_;
};

}  // namespace bicross::lexical

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace bicross::corpus {

/// A single language-tagged document. Immutable once built and safe to share
/// across threads.
struct Document {
    std::string doc_id;
    std::string lang;
    std::vector<std::string> raw_paragraphs;
    std::vector<std::string> sentences;
    std::vector<std::string> tokens;

    bool operator==(const Document&) const = default;
};

struct CorpusStats {
    std::uint64_t doc_count = 0;
    double avgdl = 0.0;
    double avg_sentences = 0.0;

    bool operator==(const CorpusStats&) const = default;
};

// ---------------------------------------------------------------------------
// Text processing

/// Languages with a registered stopword list, sentence splitter and stemmer.
std::span<const std::string_view> supported_languages() noexcept;
bool is_supported_language(std::string_view lang) noexcept;

/// Throws UnsupportedLanguage.
const std::unordered_set<std::string>& stopwords(std::string_view lang);

/// Turns raw text into index terms. Implementations must be pure.
class Normalizer {
public:
    virtual ~Normalizer() = default;
    virtual std::string_view lang() const noexcept = 0;
    virtual std::vector<std::string> normalize(std::string_view text) const = 0;
};

/// Default normalizer for a language: lowercase, word split, stopword
/// removal, Snowball stemming. Throws UnsupportedLanguage.
std::shared_ptr<const Normalizer> default_normalizer(std::string_view lang);

/// Stems one lowercased word with the language's Snowball stemmer.
std::string stem_word(std::string_view word, std::string_view lang);

std::vector<std::string> normalize_tokens(std::string_view text, std::string_view lang);

/// Rule-based splitter: breaks after runs of . ! ? (plus closing quotes and
/// brackets) that are followed by whitespace, except after a known
/// abbreviation of `lang` or before a lowercase continuation.
std::vector<std::string> split_sentences(std::string_view text, std::string_view lang);

// ---------------------------------------------------------------------------
// Ingestion

/// Text content of every <p> element in document order, markup stripped,
/// entities decoded, whitespace collapsed; empty paragraphs are dropped.
std::vector<std::string> extract_paragraphs(std::string_view raw_xml);

/// Throws MalformedInput when no paragraph text can be extracted.
Document ingest_document(std::string_view raw_xml, std::string doc_id, std::string lang);

/// Splits a file holding several `<doc id="...">...</doc>` records.
std::vector<std::pair<std::string, std::string>> split_concatenated(std::string_view raw);

struct ManifestEntry {
    std::filesystem::path file;
    std::string doc_id;  // "*" means: take ids from <doc id="..."> records in the file
    std::string lang;
};

/// Tab-separated `path<TAB>doc_id<TAB>lang`; blank lines and '#' comments ignored.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest);

struct IngestSummary {
    std::unordered_map<std::string, CorpusStats> stats_by_lang;
    std::size_t skipped = 0;
};

/// Reads every manifest entry under `input_dir`, ingests in parallel and
/// writes one store per language into `out_dir`. Malformed documents are
/// skipped with a warning.
IngestSummary ingest_directory(const std::filesystem::path& input_dir, const std::filesystem::path& manifest,
                               const std::filesystem::path& out_dir, unsigned threads = 0);

/// Throws EmptyCorpus.
CorpusStats compute_corpus_stats(std::span<const Document> docs);

// ---------------------------------------------------------------------------
// Corpus store: `<dir>/<lang>.jsonl` (one document per line) plus a
// `<dir>/<lang>.stats.json` sidecar.

std::filesystem::path store_file(const std::filesystem::path& dir, std::string_view lang);
std::filesystem::path stats_file(const std::filesystem::path& dir, std::string_view lang);

std::string to_store_line(const Document& doc);
Document from_store_line(std::string_view line);

void write_store(const std::filesystem::path& dir, std::string_view lang, std::span<const Document> docs);
void write_stats(const std::filesystem::path& dir, std::string_view lang, const CorpusStats& stats);
CorpusStats read_stats(const std::filesystem::path& dir, std::string_view lang);

/// Streams a store file line by line. Throws CorruptStore on a bad record.
class StoreReader {
public:
    explicit StoreReader(const std::filesystem::path& file);
    ~StoreReader();
    StoreReader(StoreReader&&) noexcept;
    StoreReader& operator=(StoreReader&&) noexcept;

    std::optional<Document> next();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::vector<Document> read_store(const std::filesystem::path& file);

/// Random access to document sentences by id.
class DocumentLookup {
public:
    virtual ~DocumentLookup() = default;
    /// Throws UnknownDocument.
    virtual std::vector<std::string> sentences(std::string_view doc_id) const = 0;
};

class MemoryDocuments final : public DocumentLookup {
public:
    explicit MemoryDocuments(std::vector<Document> docs);
    std::vector<std::string> sentences(std::string_view doc_id) const override;
    std::span<const Document> documents() const noexcept { return docs_; }

private:
    std::vector<Document> docs_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

/// Offset-indexed view over a store file; records are parsed on demand with
/// positioned reads, so concurrent lookups need no locking.
class DocumentStore final : public DocumentLookup {
public:
    explicit DocumentStore(const std::filesystem::path& file);
    ~DocumentStore() override;
    DocumentStore(const DocumentStore&) = delete;
    DocumentStore& operator=(const DocumentStore&) = delete;

    std::vector<std::string> sentences(std::string_view doc_id) const override;
    Document get(std::string_view doc_id) const;
    bool contains(std::string_view doc_id) const;
    std::size_t size() const noexcept { return offsets_.size(); }

private:
    struct Span {
        std::uint64_t offset;
        std::uint64_t length;
    };
    int fd_ = -1;
    std::unordered_map<std::string, Span> offsets_;
};

}  // namespace bicross::corpus

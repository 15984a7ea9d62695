#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>

#include "bicross/corpus.hpp"
#include "bicross/error.hpp"
#include "json.hpp"

namespace bicross::corpus {

using nlohmann::json;

std::filesystem::path store_file(const std::filesystem::path& dir, std::string_view lang) {
    return dir / (std::string(lang) + ".jsonl");
}

std::filesystem::path stats_file(const std::filesystem::path& dir, std::string_view lang) {
    return dir / (std::string(lang) + ".stats.json");
}

std::string to_store_line(const Document& doc) {
    json j;
    j["doc_id"] = doc.doc_id;
    j["lang"] = doc.lang;
    j["raw_paragraphs"] = doc.raw_paragraphs;
    j["sentences"] = doc.sentences;
    j["tokens"] = doc.tokens;
    return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

Document from_store_line(std::string_view line) {
    try {
        const json j = json::parse(line);
        Document doc;
        doc.doc_id = j.at("doc_id").get<std::string>();
        doc.lang = j.at("lang").get<std::string>();
        if (j.contains("raw_paragraphs")) doc.raw_paragraphs = j["raw_paragraphs"].get<std::vector<std::string>>();
        doc.sentences = j.at("sentences").get<std::vector<std::string>>();
        doc.tokens = j.at("tokens").get<std::vector<std::string>>();
        if (doc.doc_id.empty()) throw Error(ErrorCode::CorruptStore, "record with empty doc_id");
        return doc;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptStore, std::string("bad store record: ") + e.what());
    }
}

void write_store(const std::filesystem::path& dir, std::string_view lang, std::span<const Document> docs) {
    std::filesystem::create_directories(dir);
    const auto path = store_file(dir, lang);
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
        for (const Document& d : docs) out << to_store_line(d) << '\n';
        if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_stats(const std::filesystem::path& dir, std::string_view lang, const CorpusStats& stats) {
    std::filesystem::create_directories(dir);
    json j;
    j["lang"] = lang;
    j["doc_count"] = stats.doc_count;
    j["avgdl"] = stats.avgdl;
    j["avg_sentences"] = stats.avg_sentences;
    std::ofstream out(stats_file(dir, lang), std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + stats_file(dir, lang).string());
    out << j.dump(2) << '\n';
}

CorpusStats read_stats(const std::filesystem::path& dir, std::string_view lang) {
    const auto path = stats_file(dir, lang);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    try {
        const json j = json::parse(in);
        CorpusStats s;
        s.doc_count = j.at("doc_count").get<std::uint64_t>();
        s.avgdl = j.at("avgdl").get<double>();
        s.avg_sentences = j.at("avg_sentences").get<double>();
        return s;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptStore, path.string() + ": " + e.what());
    }
}

struct StoreReader::Impl {
    std::ifstream in;
    std::string path;
    std::size_t line_no = 0;
};

StoreReader::StoreReader(const std::filesystem::path& file) : impl_(std::make_unique<Impl>()) {
    impl_->in.open(file, std::ios::binary);
    impl_->path = file.string();
    if (!impl_->in) throw Error(ErrorCode::IoError, "cannot open store " + impl_->path);
}

StoreReader::~StoreReader() = default;
StoreReader::StoreReader(StoreReader&&) noexcept = default;
StoreReader& StoreReader::operator=(StoreReader&&) noexcept = default;

std::optional<Document> StoreReader::next() {
    std::string line;
    while (std::getline(impl_->in, line)) {
        ++impl_->line_no;
        if (line.empty()) continue;
        try {
            return from_store_line(line);
        } catch (const Error& e) {
            throw Error(ErrorCode::CorruptStore, impl_->path + ":" + std::to_string(impl_->line_no) + ": " + e.what());
        }
    }
    return std::nullopt;
}

std::vector<Document> read_store(const std::filesystem::path& file) {
    StoreReader reader(file);
    std::vector<Document> out;
    while (auto doc = reader.next()) out.push_back(std::move(*doc));
    return out;
}

MemoryDocuments::MemoryDocuments(std::vector<Document> docs) : docs_(std::move(docs)) {
    for (std::size_t i = 0; i < docs_.size(); ++i) by_id_.emplace(docs_[i].doc_id, i);
}

std::vector<std::string> MemoryDocuments::sentences(std::string_view doc_id) const {
    const auto it = by_id_.find(std::string(doc_id));
    if (it == by_id_.end()) throw Error(ErrorCode::UnknownDocument, "unknown document '" + std::string(doc_id) + "'");
    return docs_[it->second].sentences;
}

DocumentStore::DocumentStore(const std::filesystem::path& file) {
    fd_ = ::open(file.c_str(), O_RDONLY | O_CLOEXEC);
    if (fd_ < 0) throw Error(ErrorCode::IoError, "cannot open store " + file.string() + ": " + std::strerror(errno));
    // One sequential pass to record record offsets; ids are pulled out by a
    // full parse so the index agrees with what get() returns.
    std::ifstream in(file, std::ios::binary);
    std::string line;
    std::uint64_t offset = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::uint64_t len = line.size();
        if (!line.empty()) {
            Document d;
            try {
                d = from_store_line(line);
            } catch (const Error& e) {
                ::close(fd_);
                throw Error(ErrorCode::CorruptStore, file.string() + ":" + std::to_string(line_no) + ": " + e.what());
            }
            offsets_[d.doc_id] = Span{offset, len};
        }
        offset += len + 1;
    }
}

DocumentStore::~DocumentStore() {
    if (fd_ >= 0) ::close(fd_);
}

Document DocumentStore::get(std::string_view doc_id) const {
    const auto it = offsets_.find(std::string(doc_id));
    if (it == offsets_.end()) throw Error(ErrorCode::UnknownDocument, "unknown document '" + std::string(doc_id) + "'");
    std::string buf(it->second.length, '\0');
    std::size_t done = 0;
    while (done < buf.size()) {
        const ssize_t n = ::pread(fd_, buf.data() + done, buf.size() - done,
                                  static_cast<off_t>(it->second.offset + done));
        if (n < 0 && errno == EINTR) continue;
        if (n <= 0) throw Error(ErrorCode::CorruptStore, "short read for document '" + std::string(doc_id) + "'");
        done += static_cast<std::size_t>(n);
    }
    return from_store_line(buf);
}

bool DocumentStore::contains(std::string_view doc_id) const { return offsets_.contains(std::string(doc_id)); }

std::vector<std::string> DocumentStore::sentences(std::string_view doc_id) const { return get(doc_id).sentences; }

}  // namespace bicross::corpus

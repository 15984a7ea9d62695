#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "bicross/error.hpp"
#include "bicross/eval.hpp"
#include "bicross/text.hpp"

namespace bicross::eval {

void Qrels::add(const std::string& query_id, const std::string& doc_id, int grade) {
    if (grade < 0) throw Error(ErrorCode::InvalidArgument, "negative grade for " + query_id + "/" + doc_id);
    if (!judgments_[query_id].emplace(doc_id, grade).second) {
        throw Error(ErrorCode::DuplicateDoc, "duplicate judgment for " + query_id + "/" + doc_id);
    }
}

int Qrels::grade(std::string_view query_id, std::string_view doc_id) const {
    const auto q = judgments_.find(query_id);
    if (q == judgments_.end()) return 0;
    const auto d = q->second.find(doc_id);
    return d == q->second.end() ? 0 : d->second;
}

std::size_t Qrels::relevant_count(std::string_view query_id) const {
    const auto q = judgments_.find(query_id);
    if (q == judgments_.end()) return 0;
    return static_cast<std::size_t>(
        std::count_if(q->second.begin(), q->second.end(), [](const auto& kv) { return kv.second > 0; }));
}

std::vector<int> Qrels::relevant_grades(std::string_view query_id) const {
    std::vector<int> out;
    const auto q = judgments_.find(query_id);
    if (q == judgments_.end()) return out;
    for (const auto& [doc, g] : q->second) {
        if (g > 0) out.push_back(g);
    }
    return out;
}

std::vector<std::string> Qrels::query_ids() const {
    std::vector<std::string> out;
    out.reserve(judgments_.size());
    for (const auto& [q, docs] : judgments_) out.push_back(q);
    return out;
}

namespace {

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

[[noreturn]] void bad_row(std::size_t line_no, const std::string& why) {
    throw Error(ErrorCode::MalformedRow, "line " + std::to_string(line_no) + ": " + why);
}

template <class T>
bool parse_int(std::string_view s, T& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

template <class Fn>
void for_each_row(std::string_view content, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) end = content.size();
        ++line_no;
        std::string_view line = content.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!text::trim(line).empty()) fn(line_no, text::split_whitespace(line));
        start = end + 1;
    }
}

}  // namespace

Qrels parse_qrels_text(std::string_view content) {
    Qrels qrels;
    for_each_row(content, [&](std::size_t line_no, const std::vector<std::string>& f) {
        if (f.size() != 4) bad_row(line_no, "expected 'query_id 0 doc_id grade'");
        int grade = 0;
        if (!parse_int(f[3], grade)) bad_row(line_no, "grade '" + f[3] + "' is not an integer");
        if (grade < 0) bad_row(line_no, "negative grade");
        try {
            qrels.add(f[0], f[2], grade);
        } catch (const Error& e) {
            throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
        }
    });
    return qrels;
}

Qrels parse_qrels(const std::filesystem::path& file) {
    try {
        return parse_qrels_text(read_file(file));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IoError) throw;
        throw Error(e.code(), file.string() + ": " + e.what());
    }
}

void write_qrels(const Qrels& qrels, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + file.string());
    for (const auto& [q, docs] : qrels.judgments()) {
        for (const auto& [d, g] : docs) out << q << " 0 " << d << ' ' << g << '\n';
    }
}

Run parse_run_text(std::string_view content, Stage stage, std::string* run_tag) {
    Run run;
    std::map<std::string, std::unordered_set<std::string>> seen;
    for_each_row(content, [&](std::size_t line_no, const std::vector<std::string>& f) {
        if (f.size() != 6) bad_row(line_no, "expected 'query_id Q0 doc_id rank score run_tag'");
        std::size_t rank = 0;
        if (!parse_int(f[3], rank) || rank == 0) bad_row(line_no, "rank '" + f[3] + "' is not a positive integer");
        char* end = nullptr;
        const double score = std::strtod(f[4].c_str(), &end);
        if (end != f[4].c_str() + f[4].size() || std::isnan(score)) bad_row(line_no, "score '" + f[4] + "' is not a number");
        if (!seen[f[0]].insert(f[2]).second) {
            throw Error(ErrorCode::DuplicateDoc, "line " + std::to_string(line_no) + ": " + f[0] + "/" + f[2] + " repeated");
        }
        if (run_tag && run_tag->empty()) *run_tag = f[5];
        RankedList& list = run[f[0]];
        list.query_id = f[0];
        list.stage = stage;
        list.entries.push_back({f[2], score, rank});
    });
    for (auto& [q, list] : run) {
        std::stable_sort(list.entries.begin(), list.entries.end(),
                         [](const RankedEntry& a, const RankedEntry& b) { return a.rank < b.rank; });
    }
    return run;
}

Run parse_run(const std::filesystem::path& file, Stage stage, std::string* run_tag) {
    try {
        return parse_run_text(read_file(file), stage, run_tag);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IoError) throw;
        throw Error(e.code(), file.string() + ": " + e.what());
    }
}

std::string format_run_rows(const RankedList& list, std::string_view run_tag) {
    std::string out;
    char score[64];
    for (const RankedEntry& e : list.entries) {
        std::snprintf(score, sizeof(score), "%.6f", e.score);
        out += list.query_id;
        out += " Q0 ";
        out += e.doc_id;
        out += ' ';
        out += std::to_string(e.rank);
        out += ' ';
        out += score;
        out += ' ';
        out += run_tag;
        out += '\n';
    }
    return out;
}

void write_run(std::span<const RankedList> lists, const std::filesystem::path& file, std::string_view run_tag) {
    if (run_tag.empty() || run_tag.find_first_of(" \t\n") != std::string_view::npos) {
        throw Error(ErrorCode::InvalidArgument, "run tag must be a non-empty single word");
    }
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + file.string());
    for (const RankedList& list : lists) out << format_run_rows(list, run_tag);
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + file.string());
}

void write_run(const Run& run, const std::filesystem::path& file, std::string_view run_tag) {
    std::vector<RankedList> lists;
    lists.reserve(run.size());
    for (const auto& [q, list] : run) lists.push_back(list);
    write_run(std::span<const RankedList>(lists), file, run_tag);
}

}  // namespace bicross::eval

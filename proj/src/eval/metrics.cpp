#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "bicross/error.hpp"
#include "bicross/eval.hpp"

namespace bicross::eval {
namespace {

double gain(int grade) { return std::exp2(static_cast<double>(grade)) - 1.0; }
double discount(std::size_t rank) { return std::log2(static_cast<double>(rank) + 1.0); }

std::size_t relevant_in_top(const RankedList& run, const Qrels& qrels, std::size_t k) {
    std::size_t hits = 0;
    const std::size_t n = std::min(k, run.entries.size());
    for (std::size_t i = 0; i < n; ++i) hits += qrels.grade(run.query_id, run.entries[i].doc_id) > 0;
    return hits;
}

}  // namespace

double precision_at_k(const RankedList& run, const Qrels& qrels, std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "precision cutoff must be at least 1");
    return static_cast<double>(relevant_in_top(run, qrels, k)) / static_cast<double>(k);
}

double average_precision(const RankedList& run, const Qrels& qrels) {
    const std::size_t r = qrels.relevant_count(run.query_id);
    if (r == 0) return 0.0;
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < run.entries.size(); ++i) {
        if (qrels.grade(run.query_id, run.entries[i].doc_id) > 0) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(r);
}

double ndcg_at_k(const RankedList& run, const Qrels& qrels, std::size_t k) {
    std::vector<int> ideal = qrels.relevant_grades(run.query_id);
    if (ideal.empty()) return 0.0;
    std::sort(ideal.begin(), ideal.end(), std::greater<>());
    const std::size_t depth = k == 0 ? run.entries.size() : std::min(k, run.entries.size());
    const std::size_t ideal_depth = k == 0 ? ideal.size() : std::min(k, ideal.size());
    double dcg = 0.0;
    for (std::size_t i = 0; i < depth; ++i) {
        const int g = qrels.grade(run.query_id, run.entries[i].doc_id);
        if (g > 0) dcg += gain(g) / discount(i + 1);
    }
    double idcg = 0.0;
    for (std::size_t i = 0; i < ideal_depth; ++i) idcg += gain(ideal[i]) / discount(i + 1);
    return dcg / idcg;
}

double rprec(const RankedList& run, const Qrels& qrels) {
    const std::size_t r = qrels.relevant_count(run.query_id);
    if (r == 0) return 0.0;
    return static_cast<double>(relevant_in_top(run, qrels, r)) / static_cast<double>(r);
}

double recall(const RankedList& run, const Qrels& qrels) {
    const std::size_t r = qrels.relevant_count(run.query_id);
    if (r == 0) return 0.0;
    return static_cast<double>(relevant_in_top(run, qrels, run.entries.size())) / static_cast<double>(r);
}

double mean_average_precision(const Run& run, const Qrels& qrels) { return evaluate(run, qrels).value(Metric::MAP); }

std::string_view to_string(Metric m) noexcept {
    switch (m) {
        case Metric::P5: return "P@5";
        case Metric::P10: return "P@10";
        case Metric::MAP: return "MAP";
        case Metric::NDCG10: return "NDCG@10";
        case Metric::NDCG: return "NDCG";
        case Metric::Rprec: return "Rprec";
        case Metric::Recall: return "Recall";
    }
    return "unknown";
}

Metric parse_metric(std::string_view name) {
    std::string n;
    for (char c : name) n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (n == "p@5" || n == "p_5") return Metric::P5;
    if (n == "p@10" || n == "p_10") return Metric::P10;
    if (n == "map") return Metric::MAP;
    if (n == "ndcg@10" || n == "ndcg_cut_10") return Metric::NDCG10;
    if (n == "ndcg") return Metric::NDCG;
    if (n == "rprec") return Metric::Rprec;
    if (n == "recall") return Metric::Recall;
    throw Error(ErrorCode::InvalidArgument, "unknown metric '" + std::string(name) + "'");
}

double compute_metric(Metric m, const RankedList& run, const Qrels& qrels) {
    switch (m) {
        case Metric::P5: return precision_at_k(run, qrels, 5);
        case Metric::P10: return precision_at_k(run, qrels, 10);
        case Metric::MAP: return average_precision(run, qrels);
        case Metric::NDCG10: return ndcg_at_k(run, qrels, 10);
        case Metric::NDCG: return ndcg_at_k(run, qrels, 0);
        case Metric::Rprec: return rprec(run, qrels);
        case Metric::Recall: return recall(run, qrels);
    }
    return 0.0;
}

std::vector<double> MetricReport::per_query_values(Metric m) const {
    std::vector<double> out;
    out.reserve(per_query.size());
    for (const auto& [q, values] : per_query) out.push_back(values[static_cast<std::size_t>(m)]);
    return out;
}

MetricReport evaluate(const Run& run, const Qrels& qrels) {
    MetricReport report;
    for (const std::string& q : qrels.query_ids()) {
        if (qrels.relevant_count(q) == 0) {
            report.no_relevant.push_back(q);
            continue;
        }
        const auto it = run.find(q);
        RankedList empty{q, Stage::fused, {}};
        if (it == run.end()) report.missing_from_run.push_back(q);
        const RankedList& list = it == run.end() ? empty : it->second;
        MetricValues values{};
        for (std::size_t m = 0; m < kAllMetrics.size(); ++m) values[m] = compute_metric(kAllMetrics[m], list, qrels);
        report.per_query.emplace(q, values);
    }
    if (!report.per_query.empty()) {
        for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
            double sum = 0.0;
            for (const auto& [q, values] : report.per_query) sum += values[m];
            report.mean[m] = sum / static_cast<double>(report.per_query.size());
        }
    }
    return report;
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "tsv") return TableFormat::tsv;
    if (name == "markdown" || name == "md") return TableFormat::markdown;
    throw Error(ErrorCode::InvalidArgument, "unknown table format '" + std::string(name) + "'");
}

std::string format_table(std::span<const MetricReport> reports, std::span<const std::string> names, TableFormat format) {
    if (reports.size() != names.size()) throw Error(ErrorCode::InvalidArgument, "one name per report expected");
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"run"};
    for (Metric m : kAllMetrics) header.emplace_back(to_string(m));
    rows.push_back(header);
    char buf[64];
    for (std::size_t r = 0; r < reports.size(); ++r) {
        std::vector<std::string> row{names[r]};
        for (double v : reports[r].mean) {
            std::snprintf(buf, sizeof(buf), "%.4f", v);
            row.emplace_back(buf);
        }
        rows.push_back(std::move(row));
    }
    bool any_degenerate = false;
    if (reports.size() == 2) {
        std::vector<std::string> row{"p-value (t-test)"};
        for (Metric m : kAllMetrics) {
            // Pair on the queries both reports scored.
            std::vector<double> a;
            std::vector<double> b;
            for (const auto& [q, va] : reports[0].per_query) {
                const auto it = reports[1].per_query.find(q);
                if (it == reports[1].per_query.end()) continue;
                a.push_back(va[static_cast<std::size_t>(m)]);
                b.push_back(it->second[static_cast<std::size_t>(m)]);
            }
            if (a.size() < 2) {
                row.emplace_back("n/a");
                continue;
            }
            const TTestResult t = paired_t_test(b, a);
            any_degenerate = any_degenerate || t.degenerate;
            std::snprintf(buf, sizeof(buf), t.degenerate ? "%.4f*" : "%.4f", t.p);
            row.emplace_back(buf);
        }
        rows.push_back(std::move(row));
    }

    std::ostringstream out;
    if (format == TableFormat::tsv) {
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << row[c];
            out << '\n';
        }
    } else {
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        }
        auto emit = [&](const std::vector<std::string>& row) {
            out << '|';
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << ' ' << row[c] << std::string(width[c] - row[c].size(), ' ') << " |";
            }
            out << '\n';
        };
        emit(rows[0]);
        out << '|';
        for (std::size_t c = 0; c < width.size(); ++c) out << std::string(width[c] + 2, '-') << '|';
        out << '\n';
        for (std::size_t r = 1; r < rows.size(); ++r) emit(rows[r]);
    }

    std::size_t evaluated = reports.empty() ? 0 : reports[0].per_query.size();
    std::size_t excluded = reports.empty() ? 0 : reports[0].no_relevant.size();
    out << "\nqueries evaluated: " << evaluated;
    if (excluded > 0) {
        out << "; excluded (no relevant documents): " << excluded << " (";
        for (std::size_t i = 0; i < excluded; ++i) out << (i ? ", " : "") << reports[0].no_relevant[i];
        out << ')';
    }
    for (std::size_t r = 0; r < reports.size(); ++r) {
        if (!reports[r].missing_from_run.empty()) {
            out << "; " << names[r] << " missing " << reports[r].missing_from_run.size() << " query(ies), scored 0";
        }
    }
    if (any_degenerate) out << "\n* all per-query differences are zero";
    out << '\n';
    return out.str();
}

}  // namespace bicross::eval

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bicross/ranked_list.hpp"

namespace bicross::eval {

/// Graded judgments; anything unjudged is grade 0.
class Qrels {
public:
    /// Throws DuplicateDoc, InvalidArgument (negative grade).
    void add(const std::string& query_id, const std::string& doc_id, int grade);

    int grade(std::string_view query_id, std::string_view doc_id) const;
    /// Documents with grade > 0.
    std::size_t relevant_count(std::string_view query_id) const;
    std::vector<int> relevant_grades(std::string_view query_id) const;
    std::vector<std::string> query_ids() const;
    bool empty() const noexcept { return judgments_.empty(); }
    const std::map<std::string, std::map<std::string, int, std::less<>>, std::less<>>& judgments() const noexcept {
        return judgments_;
    }

private:
    std::map<std::string, std::map<std::string, int, std::less<>>, std::less<>> judgments_;
};

using Run = std::map<std::string, RankedList>;

// ---------------------------------------------------------------------------
// TREC files

/// `query_id 0 doc_id grade`. Throws MalformedRow (with line number), DuplicateDoc.
Qrels parse_qrels(const std::filesystem::path& file);
Qrels parse_qrels_text(std::string_view content);
void write_qrels(const Qrels& qrels, const std::filesystem::path& file);

/// `query_id Q0 doc_id rank score run_tag`. Entries of each query are ordered
/// by rank. Throws MalformedRow, DuplicateDoc.
Run parse_run(const std::filesystem::path& file, Stage stage = Stage::fused, std::string* run_tag = nullptr);
Run parse_run_text(std::string_view content, Stage stage = Stage::fused, std::string* run_tag = nullptr);

/// One row per entry, score with 6 decimals.
std::string format_run_rows(const RankedList& list, std::string_view run_tag);
/// Lists written in the given order.
void write_run(std::span<const RankedList> lists, const std::filesystem::path& file, std::string_view run_tag);
/// Lists written in query_id order.
void write_run(const Run& run, const std::filesystem::path& file, std::string_view run_tag);

// ---------------------------------------------------------------------------
// Metrics (grade > 0 is relevant; gain 2^grade - 1, discount log2(rank + 1))

double precision_at_k(const RankedList& run, const Qrels& qrels, std::size_t k);
double average_precision(const RankedList& run, const Qrels& qrels);
/// k = 0 is full depth: DCG over the whole list against the ideal ordering of
/// every judged-relevant document.
double ndcg_at_k(const RankedList& run, const Qrels& qrels, std::size_t k);
double rprec(const RankedList& run, const Qrels& qrels);
double recall(const RankedList& run, const Qrels& qrels);
/// Mean AP over qrels queries with at least one relevant document.
double mean_average_precision(const Run& run, const Qrels& qrels);

enum class Metric { P5, P10, MAP, NDCG10, NDCG, Rprec, Recall };
inline constexpr std::array<Metric, 7> kAllMetrics = {Metric::P5,   Metric::P10,   Metric::MAP,   Metric::NDCG10,
                                                      Metric::NDCG, Metric::Rprec, Metric::Recall};
std::string_view to_string(Metric m) noexcept;
/// Accepts the display names above and lowercase forms such as "ndcg_cut_10".
Metric parse_metric(std::string_view name);
double compute_metric(Metric m, const RankedList& run, const Qrels& qrels);

using MetricValues = std::array<double, kAllMetrics.size()>;

struct MetricReport {
    std::map<std::string, MetricValues> per_query;
    MetricValues mean{};
    std::vector<std::string> no_relevant;      // judged queries left out of the means
    std::vector<std::string> missing_from_run;  // scored as all zeros

    double value(Metric m) const { return mean[static_cast<std::size_t>(m)]; }
    std::vector<double> per_query_values(Metric m) const;
};

/// Means over qrels queries with >= 1 relevant document.
MetricReport evaluate(const Run& run, const Qrels& qrels);

// ---------------------------------------------------------------------------
// Significance

struct TTestResult {
    double t = 0.0;
    double p = 1.0;
    std::size_t df = 0;
    bool degenerate = false;  // every difference was zero
};

/// Two-sided paired t-test on a - b. Throws InvalidArgument for unequal
/// lengths or fewer than two pairs.
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

enum class TableFormat { tsv, markdown };
TableFormat parse_table_format(std::string_view name);

/// One row per run with all seven means; with exactly two reports, adds a
/// row of paired t-test p-values (b vs a) and a footnote on excluded queries.
std::string format_table(std::span<const MetricReport> reports, std::span<const std::string> names, TableFormat format);

}  // namespace bicross::eval

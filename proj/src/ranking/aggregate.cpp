#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <spdlog/spdlog.h>

#include "bicross/error.hpp"
#include "bicross/ranking.hpp"
#include "bicross/text.hpp"

namespace bicross::ranking {

void AggregationWeights::validate() const {
    if (w.empty()) throw Error(ErrorCode::InvariantViolation, "aggregation weights are empty");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w[i]) || w[i] <= 0.0) {
            throw Error(ErrorCode::InvariantViolation, "aggregation weights must be positive: " + to_string());
        }
        if (i > 0 && !(w[i - 1] > w[i])) {
            throw Error(ErrorCode::InvariantViolation, "aggregation weights must be strictly decreasing: " + to_string());
        }
    }
}

std::string AggregationWeights::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? ", " : "") << w[i];
    out << ']';
    return out.str();
}

AggregationWeights make_weights(std::vector<double> w) {
    AggregationWeights out{std::move(w)};
    out.validate();
    return out;
}

double aggregate_topk(std::span<const double> scores, const AggregationWeights& weights) {
    if (scores.empty()) throw Error(ErrorCode::EmptyScores, "no sentence scores to aggregate");
    for (double s : scores) {
        if (!std::isfinite(s)) throw Error(ErrorCode::NonFiniteScore, "non-finite sentence score");
    }
    const std::size_t k = std::min(weights.w.size(), scores.size());
    std::vector<double> top(k);
    std::partial_sort_copy(scores.begin(), scores.end(), top.begin(), top.end(), std::greater<>());
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum += weights.w[i] * top[i];
    return sum;
}

double aggregate_topk(std::span<const ScoredSentence> scores, const AggregationWeights& weights) {
    std::vector<double> values;
    values.reserve(scores.size());
    for (const ScoredSentence& s : scores) values.push_back(s.score);
    return aggregate_topk(std::span<const double>(values), weights);
}

std::size_t first_n_sentences(const corpus::CorpusStats& stats) {
    const double n = std::round(stats.avg_sentences);
    return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

AggregationWeights grid_search_weights(std::span<const AggregationWeights> grid, const eval::Qrels& qrels,
                                       const DevRunFn& dev_run, eval::Metric metric) {
    if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "weight grid is empty");
    for (const AggregationWeights& w : grid) w.validate();
    bool any_relevant = false;
    for (const std::string& q : qrels.query_ids()) any_relevant |= qrels.relevant_count(q) > 0;
    if (!any_relevant) throw Error(ErrorCode::NoQrels, "no query has a relevant document");

    std::size_t best = 0;
    double best_value = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const eval::MetricReport report = eval::evaluate(dev_run(grid[i]), qrels);
        const double v = report.value(metric);
        spdlog::info("weights {} -> {} = {:.6f}", grid[i].to_string(), eval::to_string(metric), v);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    return grid[best];
}

std::vector<AggregationWeights> load_weight_grid(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + file.string());
    std::vector<AggregationWeights> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        const auto fields = text::split_whitespace(line);
        if (fields.empty()) continue;
        AggregationWeights w{{}};
        for (const std::string& f : fields) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(f, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != f.size()) {
                throw Error(ErrorCode::MalformedRow, file.string() + ":" + std::to_string(line_no) + ": bad weight '" + f + "'");
            }
            w.w.push_back(v);
        }
        try {
            w.validate();
        } catch (const Error& e) {
            throw Error(ErrorCode::InvariantViolation, file.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace bicross::ranking

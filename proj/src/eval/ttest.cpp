#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>

#include "bicross/error.hpp"
#include "bicross/eval.hpp"

namespace bicross::eval {

TTestResult paired_t_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::InvalidArgument, "paired t-test needs equal-length samples (" + std::to_string(a.size()) +
                                                    " vs " + std::to_string(b.size()) + ")");
    }
    const std::size_t n = a.size();
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "paired t-test needs at least two pairs");

    TTestResult out;
    out.df = n - 1;
    std::vector<double> d(n);
    bool all_zero = true;
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = a[i] - b[i];
        all_zero &= d[i] == 0.0;
        mean += d[i];
    }
    if (all_zero) {
        out.degenerate = true;
        return out;
    }
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double x : d) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (sd == 0.0) {
        out.t = mean > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
        out.p = 0.0;
        return out;
    }
    out.t = mean / (sd / std::sqrt(static_cast<double>(n)));
    const boost::math::students_t dist(static_cast<double>(out.df));
    out.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(out.t))));
    return out;
}

}  // namespace bicross::eval

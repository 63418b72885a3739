#include "langshift/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

#include "exact_sum.hpp"
#include "langshift/error.hpp"

namespace langshift {

std::string_view to_string(TestMethod method) noexcept {
    switch (method) {
        case TestMethod::mann_whitney_u_exact: return "mann_whitney_u_exact";
        case TestMethod::mann_whitney_u_normal: return "mann_whitney_u_normal";
        case TestMethod::paired_t: return "paired_t";
    }
    return "unknown";
}

std::string_view to_string(ShiftVerdict verdict) noexcept {
    switch (verdict) {
        case ShiftVerdict::shift_toward: return "shift_toward";
        case ShiftVerdict::shift_away: return "shift_away";
        case ShiftVerdict::tie: return "tie";
    }
    return "unknown";
}

namespace {

void check_distribution(std::span<const double> p, const char* name) {
    detail::ExactSum total;
    for (double v : p) {
        if (!std::isfinite(v) || v < 0.0) {
            throw NumericError(std::string("jsd: ") + name + " has a negative or non-finite entry");
        }
        total.add(v);
    }
    if (std::abs(total.value() - 1.0) > 1e-9) {
        throw NumericError(std::string("jsd: ") + name + " does not sum to 1");
    }
}

double kl_to_mixture(double a, double m) { return a > 0.0 ? a * std::log2(a / m) : 0.0; }

void check_finite(std::span<const double> v, const char* what) {
    if (!std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); })) {
        throw NumericError(std::string(what) + ": non-finite input");
    }
}

// Number of arrangements of n x-values and m y-values (no ties) for each
// value of U_x = #{(i, j) : x_i > y_j}, u = 0..n*m.
std::vector<std::uint64_t> mann_whitney_counts(std::size_t n, std::size_t m) {
    // table[j][u] holds counts for the current i and j y-values.
    std::vector<std::vector<std::uint64_t>> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = {1}; // i = 0: U is 0
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
            cur[j].assign(i * j + 1, 0);
            // Largest element is an x: it beats all j y-values.
            for (std::size_t u = 0; u < prev[j].size(); ++u) cur[j][u + j] += prev[j][u];
            // Largest element is a y: U unchanged.
            if (j > 0) {
                for (std::size_t u = 0; u < cur[j - 1].size(); ++u) cur[j][u] += cur[j - 1][u];
            }
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

} // namespace

double jsd(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw NumericError("jsd: distributions have different lengths");
    check_distribution(p, "p");
    check_distribution(q, "q");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double m = 0.5 * (p[i] + q[i]);
        if (m == 0.0) continue;
        sum += kl_to_mixture(p[i], m) + kl_to_mixture(q[i], m);
    }
    return std::clamp(0.5 * sum, 0.0, 1.0);
}

TestResult mann_whitney_u(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) throw NumericError("mann_whitney_u: both samples must be non-empty");
    check_finite(x, "mann_whitney_u");
    check_finite(y, "mann_whitney_u");

    const std::size_t n = x.size();
    const std::size_t m = y.size();
    const std::size_t total = n + m;

    std::vector<double> pooled;
    pooled.reserve(total);
    pooled.insert(pooled.end(), x.begin(), x.end());
    pooled.insert(pooled.end(), y.begin(), y.end());
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });

    // Mean ranks for tie groups; tie_term accumulates sum(t^3 - t).
    std::vector<double> rank(total);
    double tie_term = 0.0;
    bool ties = false;
    for (std::size_t i = 0; i < total;) {
        std::size_t j = i;
        while (j + 1 < total && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        const double mean_rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mean_rank;
        const double t = static_cast<double>(j - i + 1);
        if (j > i) {
            ties = true;
            tie_term += t * t * t - t;
        }
        i = j + 1;
    }

    double rank_sum_x = 0.0;
    for (std::size_t i = 0; i < n; ++i) rank_sum_x += rank[i];
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    const double u = rank_sum_x - nd * (nd + 1.0) / 2.0;

    TestResult result;
    result.statistic = u;

    if (!ties && total <= kExactMannWhitneyLimit) {
        result.method = TestMethod::mann_whitney_u_exact;
        const auto counts = mann_whitney_counts(n, m);
        const auto u_int = static_cast<std::size_t>(std::llround(u));
        std::uint64_t below = 0, above = 0, all = 0;
        for (std::size_t k = 0; k < counts.size(); ++k) {
            all += counts[k];
            if (k <= u_int) below += counts[k];
            if (k >= u_int) above += counts[k];
        }
        const double tail = static_cast<double>(std::min(below, above)) / static_cast<double>(all);
        result.p_value = std::min(1.0, 2.0 * tail);
        return result;
    }

    result.method = TestMethod::mann_whitney_u_normal;
    const double nt = static_cast<double>(total);
    const double variance = nd * md / 12.0 * ((nt + 1.0) - tie_term / (nt * (nt - 1.0)));
    if (!(variance > 0.0)) {
        result.p_value = 1.0;
        result.degenerate = true;
        return result;
    }
    const double deviation = std::max(0.0, std::abs(u - nd * md / 2.0) - 0.5);
    const double z = deviation / std::sqrt(variance);
    result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    return result;
}

double student_t_cdf(double t, double df) {
    if (!(df > 0.0) || std::isnan(t)) throw NumericError("student_t_cdf: invalid arguments");
    if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
    // P(|T| > |t|) = I_{df/(df+t^2)}(df/2, 1/2)
    const double tail = boost::math::ibeta(0.5 * df, 0.5, df / (df + t * t));
    return t >= 0.0 ? 1.0 - 0.5 * tail : 0.5 * tail;
}

TestResult paired_t(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw NumericError("paired_t: vectors have different lengths");
    if (a.size() < 2) throw NumericError("paired_t: need at least two pairs");
    check_finite(a, "paired_t");
    check_finite(b, "paired_t");

    const std::size_t n = a.size();
    const double nd = static_cast<double>(n);
    std::vector<double> d(n);
    detail::ExactSum sum;
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = a[i] - b[i];
        sum.add(d[i]);
    }
    const double mean = sum.value() / nd;
    detail::ExactSum squares;
    for (double v : d) squares.add((v - mean) * (v - mean));
    const double sd = std::sqrt(squares.value() / (nd - 1.0));

    TestResult result;
    result.method = TestMethod::paired_t;
    if (sd == 0.0) {
        result.degenerate = true;
        if (mean == 0.0) {
            result.statistic = 0.0;
            result.p_value = 1.0;
        } else {
            result.statistic = std::copysign(INFINITY, mean);
            result.p_value = 0.0;
        }
        return result;
    }
    const double t = mean / (sd / std::sqrt(nd));
    const double df = nd - 1.0;
    result.statistic = t;
    result.p_value = std::clamp(boost::math::ibeta(0.5 * df, 0.5, df / (df + t * t)), 0.0, 1.0);
    return result;
}

ShiftVerdict ordering_check(double before_to_source, double after_to_source) {
    if (!std::isfinite(before_to_source) || !std::isfinite(after_to_source) || before_to_source < 0.0 ||
        after_to_source < 0.0) {
        throw NumericError("ordering_check: divergences must be finite and non-negative");
    }
    if (after_to_source < before_to_source - kOrderingTolerance) return ShiftVerdict::shift_toward;
    if (after_to_source > before_to_source + kOrderingTolerance) return ShiftVerdict::shift_away;
    return ShiftVerdict::tie;
}

} // namespace langshift

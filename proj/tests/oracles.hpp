#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numeric code.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

// Two-sided Mann-Whitney p by listing every way to choose which pooled
// ranks belong to x (tie-free data only). Ranks are 1..n+m.
inline double mann_whitney_enumerated(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<std::pair<double, int>> pooled;
    for (double v : x) pooled.emplace_back(v, 0);
    for (double v : y) pooled.emplace_back(v, 1);
    std::sort(pooled.begin(), pooled.end());
    const int n = static_cast<int>(x.size());
    const int total = static_cast<int>(pooled.size());
    int observed_rank_sum = 0;
    for (int i = 0; i < total; ++i) {
        if (pooled[i].second == 0) observed_rank_sum += i + 1;
    }
    const int u_observed = observed_rank_sum - n * (n + 1) / 2;

    std::uint64_t le = 0, ge = 0, all = 0;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
        if (std::popcount(mask) != n) continue;
        int rank_sum = 0;
        for (int i = 0; i < total; ++i) {
            if (mask & (1u << i)) rank_sum += i + 1;
        }
        const int u = rank_sum - n * (n + 1) / 2;
        ++all;
        if (u <= u_observed) ++le;
        if (u >= u_observed) ++ge;
    }
    return std::min(1.0, 2.0 * static_cast<double>(std::min(le, ge)) / static_cast<double>(all));
}

// Two-sided permutation p for the Mann-Whitney U statistic, by Monte Carlo:
// fraction of random relabelings with |U - nm/2| at least the observed one.
inline double mann_whitney_permutation(const std::vector<double>& x, const std::vector<double>& y,
                                       std::size_t permutations, std::uint64_t seed) {
    std::vector<double> pooled(x);
    pooled.insert(pooled.end(), y.begin(), y.end());
    const std::size_t n = x.size();
    auto u_of = [&](const std::vector<double>& arr) {
        // Direct pair counting with half credit for ties.
        double u = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = n; j < arr.size(); ++j) {
                if (arr[i] > arr[j]) u += 1.0;
                else if (arr[i] == arr[j]) u += 0.5;
            }
        }
        return u;
    };
    const double centre = static_cast<double>(n * y.size()) / 2.0;
    const double observed = std::abs(u_of(pooled) - centre);
    std::mt19937_64 rng(seed);
    std::size_t extreme = 0;
    for (std::size_t k = 0; k < permutations; ++k) {
        std::shuffle(pooled.begin(), pooled.end(), rng);
        if (std::abs(u_of(pooled) - centre) >= observed - 1e-9) ++extreme;
    }
    return static_cast<double>(extreme) / static_cast<double>(permutations);
}

inline double t_density(double x, double df) {
    const double log_norm = std::lgamma((df + 1) / 2) - std::lgamma(df / 2) - 0.5 * std::log(df * M_PI);
    return std::exp(log_norm - (df + 1) / 2 * std::log1p(x * x / df));
}

// CDF of Student's t by adaptive Gauss-Kronrod quadrature of the density.
inline double t_cdf_quadrature(double t, double df) {
    auto f = [df](double x) { return t_density(x, df); };
    const double area = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::abs(t), 15, 1e-13);
    return t >= 0 ? 0.5 + area : 0.5 - area;
}

// Video id by pattern matching on the raw URL text.
inline std::optional<std::string> video_id_by_regex(const std::string& url) {
    static const std::regex watch(R"(youtube\.com/watch\?(?:.*&)?v=([A-Za-z0-9_-]{11})(?:[&#]|$))");
    static const std::regex short_host(R"(youtu\.be/([A-Za-z0-9_-]{11})(?:[?#/]|$))");
    static const std::regex embed(R"(youtube\.com/embed/([A-Za-z0-9_-]{11})(?:[?#/]|$))");
    std::smatch match;
    for (const auto* re : {&watch, &short_host, &embed}) {
        if (std::regex_search(url, match, *re)) return match[1].str();
    }
    return std::nullopt;
}

// Jensen-Shannon divergence written out with natural logs, converted to
// base 2 at the end.
inline double jsd_natural_log(const std::vector<double>& p, const std::vector<double>& q) {
    double acc = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double m = (p[i] + q[i]) / 2;
        if (p[i] > 0) acc += p[i] * std::log(p[i] / m);
        if (q[i] > 0) acc += q[i] * std::log(q[i] / m);
    }
    return acc / 2 / std::log(2.0);
}

} // namespace oracle

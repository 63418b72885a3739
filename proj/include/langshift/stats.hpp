#pragma once

#include <span>
#include <string_view>

namespace langshift {

enum class TestMethod { mann_whitney_u_exact, mann_whitney_u_normal, paired_t };

std::string_view to_string(TestMethod method) noexcept;

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    TestMethod method = TestMethod::paired_t;
    /// The p-value comes from a declared convention (zero variance) rather
    /// than from the test distribution.
    bool degenerate = false;
};

/// Jensen-Shannon divergence with base-2 logarithms, in [0, 1].
/// Throws NumericError on length mismatch, negative or non-finite entries,
/// or inputs whose sum is not 1 within 1e-9.
double jsd(std::span<const double> p, std::span<const double> q);

/// Two-sided Mann-Whitney U test. `statistic` is U for `x`.
/// Exact null distribution when |x| + |y| <= 16 and there are no ties;
/// otherwise the normal approximation with tie-corrected variance and a
/// continuity correction. Identical pooled values give p = 1.
TestResult mann_whitney_u(std::span<const double> x, std::span<const double> y);

/// Combined sample size up to which mann_whitney_u enumerates the exact
/// distribution.
inline constexpr std::size_t kExactMannWhitneyLimit = 16;

/// Two-sided paired Student's t test on d = a - b (sample sd, n - 1 df).
/// Zero variance yields p = 1 when mean(d) = 0 and p = 0 otherwise, with
/// `degenerate` set.
TestResult paired_t(std::span<const double> a, std::span<const double> b);

/// Student's t cumulative distribution function.
double student_t_cdf(double t, double df);

enum class ShiftVerdict { shift_toward, shift_away, tie };

std::string_view to_string(ShiftVerdict verdict) noexcept;

inline constexpr double kOrderingTolerance = 1e-12;

/// Compares divergence-to-source before and after the event: shift_toward
/// when the after-corpus is closer by more than kOrderingTolerance.
ShiftVerdict ordering_check(double before_to_source, double after_to_source);

} // namespace langshift

#pragma once

#include <cmath>

namespace langshift::detail {

// Order-independent summation of doubles in a 128-bit fixed-point register
// with 80 fractional bits. Inputs must satisfy |x| < 2^46; bits below 2^-80
// are truncated. Because every addition is an exact integer addition, the
// result does not depend on summation order and scales exactly when the
// input multiset is duplicated.
class ExactSum {
public:
    static constexpr int kFractionBits = 80;

    void add(double x) { acc_ += static_cast<__int128>(std::ldexp(x, kFractionBits)); }

    void add(const ExactSum& other) { acc_ += other.acc_; }

    double value() const { return std::ldexp(static_cast<double>(acc_), -kFractionBits); }

private:
    __int128 acc_ = 0;
};

} // namespace langshift::detail

#pragma once

#include <cmath>
#include <limits>

namespace ohg {

// A real number stored as (natural-log magnitude, sign). Zero has sign 0 and
// log magnitude -inf. Used for quantities that leave double range (3^n for
// n in the thousands and beyond).
struct LogValue {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static LogValue zero() { return {}; }
    static LogValue from_log(double log_abs, int sign = 1) {
        if (sign == 0 || (std::isinf(log_abs) && log_abs < 0)) return zero();
        return {log_abs, sign > 0 ? 1 : -1};
    }
    static LogValue from_double(double x) {
        if (x == 0.0) return zero();
        return {std::log(std::fabs(x)), x > 0 ? 1 : -1};
    }

    bool is_zero() const { return sign == 0; }

    // May overflow to +/-inf; the log form is authoritative.
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    LogValue operator-() const { return {log_abs, -sign}; }

    friend LogValue operator*(const LogValue& a, const LogValue& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return {a.log_abs + b.log_abs, a.sign * b.sign};
    }
    friend LogValue operator/(const LogValue& a, const LogValue& b) {
        if (a.is_zero()) return zero();
        return {a.log_abs - b.log_abs, a.sign * b.sign};
    }

    friend LogValue operator+(const LogValue& a, const LogValue& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const LogValue& big = a.log_abs >= b.log_abs ? a : b;
        const LogValue& small = a.log_abs >= b.log_abs ? b : a;
        const double ratio = std::exp(small.log_abs - big.log_abs);
        if (big.sign == small.sign) return {big.log_abs + std::log1p(ratio), big.sign};
        if (ratio == 1.0) return zero();
        return {big.log_abs + std::log1p(-ratio), big.sign};
    }
    friend LogValue operator-(const LogValue& a, const LogValue& b) { return a + (-b); }
};

}  // namespace ohg

#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>

namespace crnbinom {

/// Exact rational number. All algebra in this library is exact; no
/// floating point ever enters a verdict.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// gmpxx has no long long constructor; route wide values through a string.
inline Rational rational_of(long long value) {
    if (value >= std::numeric_limits<long>::min() && value <= std::numeric_limits<long>::max())
        return Rational(static_cast<long>(value));
    return Rational(std::to_string(value));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "n" or "n/d". Throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& text) {
    Rational q(text);
    q.canonicalize();
    return q;
}

}  // namespace crnbinom

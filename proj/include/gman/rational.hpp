#pragma once

#include <gmpxx.h>

#include <string>

namespace gman {

/// Exact rational scalar. Every coefficient in the kernel is one of these;
/// no floating point appears anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed input.
inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace gman

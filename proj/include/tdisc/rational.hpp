#pragma once

#include <gmpxx.h>

#include <string>

#include "tdisc/errors.hpp"

namespace tdisc {

// Exact arbitrary-precision rational. All coefficient arithmetic in the
// library goes through this type; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational rat_of(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q". Keeps the value canonical (gcd 1, positive denominator).
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal", 0);
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw parse_error("bad rational literal '" + s + "'", 0);
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'", 0);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace tdisc

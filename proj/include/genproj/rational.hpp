#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace genproj {

// Exact rational scalar. Always kept canonical (lowest terms, positive
// denominator) by GMP; all arithmetic is exact.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q".
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    return q;
}

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int rsign(const Rational& q) { return sgn(q); }

}  // namespace genproj

#pragma once

#include <gmpxx.h>

#include <string>

#include "kodaira/errors.hpp"

namespace kodaira {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// as long as values are canonicalized on entry; arithmetic preserves it.
using ExactScalar = mpq_class;
using ExactInt = mpz_class;

inline ExactScalar rat(long num, long den = 1) {
    if (den == 0) throw ZeroDenominator("zero denominator in rational literal");
    ExactScalar q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "p/q", or "-p/q". Whitespace is not accepted.
inline ExactScalar parse_rat(const std::string& s) {
    if (s.empty()) throw SchemaError("empty rational literal");
    try {
        ExactScalar q(s);
        q.canonicalize();
        if (q.get_den() <= 0) throw SchemaError("nonpositive denominator: " + s);
        return q;
    } catch (const std::invalid_argument&) {
        throw SchemaError("malformed rational literal: " + s);
    }
}

// Serializes as "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_str(const ExactScalar& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double rat_double(const ExactScalar& q) { return q.get_d(); }

// Conversion into an evaluation field; double needs an explicit bridge
// because mpq_class has no conversion operator to double.
template <class F>
F from_scalar(const ExactScalar& c) {
    return F(c);
}

template <>
inline double from_scalar<double>(const ExactScalar& c) {
    return c.get_d();
}

}  // namespace kodaira

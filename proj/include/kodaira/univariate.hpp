#pragma once

#include <utility>
#include <vector>

#include "kodaira/laurent.hpp"
#include "kodaira/scalar.hpp"

namespace kodaira {

// Dense univariate polynomial over Q, coefficient of z^i at index i.
// Trailing zero coefficients are trimmed; the zero polynomial is {}.
namespace uni {

using Dense = std::vector<ExactScalar>;

inline void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long degree(const Dense& p) { return static_cast<long>(p.size()) - 1; }

inline bool is_zero(const Dense& p) { return p.empty(); }

// Converts a univariate LaurentPoly; shift_out receives the monomial shift
// that was factored off so that the result has a nonzero constant term
// (zero polynomial gives shift 0).
inline Dense from_laurent(const LaurentPoly& p, long* shift_out = nullptr) {
    if (p.num_vars() != 1) throw DimensionMismatch("expected a univariate polynomial");
    if (p.is_zero()) {
        if (shift_out) *shift_out = 0;
        return {};
    }
    long lo = p.min_exponents()[0];
    long hi = p.max_exponents()[0];
    Dense d(static_cast<size_t>(hi - lo + 1), ExactScalar(0));
    for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e[0] - lo)] = c;
    if (shift_out) *shift_out = lo;
    return d;
}

inline LaurentPoly to_laurent(const Dense& p, const std::string& var, long shift = 0) {
    LaurentPoly out({var});
    for (size_t i = 0; i < p.size(); ++i)
        out.add_term({static_cast<long>(i) + shift}, p[i]);
    return out;
}

inline Dense mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, ExactScalar(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Euclidean division: returns {quotient, remainder}.
inline std::pair<Dense, Dense> divmod(const Dense& a, const Dense& b) {
    if (b.empty()) throw ZeroDenominator("polynomial division by zero");
    Dense r = a, q;
    trim(r);
    if (degree(r) >= degree(b)) q.resize(r.size() - b.size() + 1, ExactScalar(0));
    while (!r.empty() && degree(r) >= degree(b)) {
        ExactScalar c = r.back() / b.back();
        size_t off = r.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) r[off + i] -= c * b[i];
        trim(r);
    }
    trim(q);
    return {q, r};
}

inline Dense monic(Dense p) {
    trim(p);
    if (p.empty()) return p;
    ExactScalar lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

// Monic gcd over Q.
inline Dense gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

inline ExactScalar eval(const Dense& p, const ExactScalar& x) {
    ExactScalar acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Multiplicity of x as a root (repeated exact division by (z - x)).
inline long root_multiplicity(Dense p, const ExactScalar& x) {
    trim(p);
    long m = 0;
    Dense lin{-x, ExactScalar(1)};
    while (!p.empty() && eval(p, x) == 0) {
        p = divmod(p, lin).first;
        ++m;
    }
    return m;
}

// All rational roots with multiplicities (rational root theorem on the
// integer-cleared polynomial). remainder_degree_out receives the degree of
// the factor left after dividing all rational roots out.
inline std::vector<std::pair<ExactScalar, long>> rational_roots(Dense p,
                                                                long* remainder_degree_out =
                                                                    nullptr) {
    trim(p);
    std::vector<std::pair<ExactScalar, long>> roots;
    if (p.empty() || degree(p) == 0) {
        if (remainder_degree_out) *remainder_degree_out = 0;
        return roots;
    }
    // Strip the root at 0 first.
    size_t z = 0;
    while (z < p.size() && p[z] == 0) ++z;
    if (z > 0) {
        roots.emplace_back(ExactScalar(0), static_cast<long>(z));
        p.erase(p.begin(), p.begin() + static_cast<long>(z));
    }
    // Clear denominators.
    ExactInt den_lcm = 1;
    for (const auto& c : p) {
        ExactInt d = c.get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    std::vector<ExactInt> ip;
    ip.reserve(p.size());
    for (const auto& c : p) ip.push_back(ExactInt(c * den_lcm));
    ExactInt a0 = abs(ip.front());
    ExactInt an = abs(ip.back());
    // Candidate roots r/s with r | a0, s | an.
    std::vector<ExactInt> rs, ss;
    auto divisors = [](const ExactInt& n) {
        std::vector<ExactInt> ds;
        for (ExactInt i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                ds.push_back(i);
                if (i * i != n) ds.push_back(n / i);
            }
        return ds;
    };
    rs = divisors(a0);
    ss = divisors(an);
    for (const auto& r : rs)
        for (const auto& s : ss)
            for (int sign : {1, -1}) {
                ExactScalar cand(sign * r, s);
                cand.canonicalize();
                long m = root_multiplicity(p, cand);
                if (m > 0) {
                    roots.emplace_back(cand, m);
                    Dense lin{-cand, ExactScalar(1)};
                    for (long k = 0; k < m; ++k) p = divmod(p, lin).first;
                }
            }
    if (remainder_degree_out) *remainder_degree_out = p.empty() ? 0 : degree(p);
    return roots;
}

}  // namespace uni

}  // namespace kodaira

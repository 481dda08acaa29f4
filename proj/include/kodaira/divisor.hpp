#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kodaira/errors.hpp"
#include "kodaira/line_bundle.hpp"
#include "kodaira/rational_func.hpp"
#include "kodaira/univariate.hpp"

namespace kodaira {

// Rational point of P^1: affine value in the z = x1/x0 chart, or infinity.
struct PointP1 {
    bool at_infinity = false;
    ExactScalar value;  // meaningful iff !at_infinity

    static PointP1 infinity() {
        PointP1 p;
        p.at_infinity = true;
        return p;
    }
    static PointP1 affine(ExactScalar v) {
        PointP1 p;
        p.value = std::move(v);
        return p;
    }

    friend bool operator==(const PointP1& a, const PointP1& b) {
        if (a.at_infinity != b.at_infinity) return false;
        return a.at_infinity || a.value == b.value;
    }
    friend bool operator<(const PointP1& a, const PointP1& b) {
        if (a.at_infinity != b.at_infinity) return b.at_infinity;  // infinity sorts last
        if (a.at_infinity) return false;
        return a.value < b.value;
    }

    std::string str() const { return at_infinity ? "inf" : rat_str(value); }
};

// Finite formal integer combination of rational points of P^1.
class DivisorP1 {
public:
    DivisorP1() = default;

    void add(const PointP1& p, long mult) {
        if (mult == 0) return;
        auto [it, inserted] = support_.emplace(p, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second == 0) support_.erase(it);
        }
    }

    const std::map<PointP1, long>& support() const { return support_; }

    long degree() const {
        long d = 0;
        for (const auto& [p, m] : support_) d += m;
        return d;
    }

    bool is_effective() const {
        for (const auto& [p, m] : support_)
            if (m < 0) return false;
        return true;
    }

    long coefficient(const PointP1& p) const {
        auto it = support_.find(p);
        return it == support_.end() ? 0 : it->second;
    }

    friend DivisorP1 operator+(const DivisorP1& a, const DivisorP1& b) {
        DivisorP1 r = a;
        for (const auto& [p, m] : b.support_) r.add(p, m);
        return r;
    }

    friend DivisorP1 operator-(const DivisorP1& a, const DivisorP1& b) {
        DivisorP1 r = a;
        for (const auto& [p, m] : b.support_) r.add(p, -m);
        return r;
    }

    friend bool operator==(const DivisorP1& a, const DivisorP1& b) {
        return a.support_ == b.support_;
    }

private:
    std::map<PointP1, long> support_;
};

namespace detail {
// Numerator and denominator of a univariate f in dense form, together with
// the monomial shifts (order at 0 carried by the Laurent monomial factor).
struct UniParts {
    uni::Dense num, den;
    long num_shift = 0, den_shift = 0;
};

inline UniParts uni_parts(const RationalFunc& f) {
    if (f.variables().size() != 1)
        throw DimensionMismatch("expected a univariate rational function");
    if (f.is_zero()) throw ZeroFunction();
    UniParts p;
    p.num = uni::from_laurent(f.num(), &p.num_shift);
    p.den = uni::from_laurent(f.den(), &p.den_shift);
    return p;
}
}  // namespace detail

// Zero/pole multiplicity of f at p; at infinity, deg(den) - deg(num)
// (with Laurent monomial shifts counted in the degrees).
inline long ord_at(const RationalFunc& f, const PointP1& p) {
    detail::UniParts u = detail::uni_parts(f);
    if (p.at_infinity) {
        return (uni::degree(u.den) + u.den_shift) - (uni::degree(u.num) + u.num_shift);
    }
    if (p.value == 0) return u.num_shift - u.den_shift;
    return uni::root_multiplicity(u.num, p.value) - uni::root_multiplicity(u.den, p.value);
}

// (f) = sum of ord_p(f) [p] over all rational points and infinity. Requires
// num and den to split into rational linear factors.
inline DivisorP1 principal_divisor(const RationalFunc& f) {
    detail::UniParts u = detail::uni_parts(f);
    DivisorP1 d;
    d.add(PointP1::affine(0), u.num_shift - u.den_shift);
    long rem_num = 0, rem_den = 0;
    for (const auto& [root, mult] : uni::rational_roots(u.num, &rem_num))
        d.add(PointP1::affine(root), mult);
    for (const auto& [root, mult] : uni::rational_roots(u.den, &rem_den))
        d.add(PointP1::affine(root), -mult);
    if (rem_num > 0 || rem_den > 0)
        throw NonSplitPolynomial("an irreducible factor of degree >= 2 remains");
    d.add(PointP1::infinity(), ord_at(f, PointP1::infinity()));
    return d;
}

inline bool is_effective(const DivisorP1& d) { return d.is_effective(); }

// Local defining function of D on the z-chart: prod (z - v)^{a_v} over the
// affine support (infinity contributes only on the other chart).
inline RationalFunc local_defining_function(const DivisorP1& d,
                                            const std::string& var = "z") {
    RationalFunc f = RationalFunc::constant({var}, 1);
    RationalFunc z = RationalFunc::variable({var}, var);
    for (const auto& [p, m] : d.support()) {
        if (p.at_infinity) continue;
        RationalFunc lin = z - RationalFunc::constant({var}, p.value);
        f = f * lin.pow(m);
    }
    return f;
}

// The cocycle of [D] on the standard cover of P^1, built from f_0/f_1 where
// f_i are the local defining functions of D on the two charts. The ratio is
// always a unit monomial c * (x1/x0)^{deg D}.
inline MonomialCocycle divisor_cocycle(const DivisorP1& d) {
    ExactScalar c(1);
    for (const auto& [p, m] : d.support()) {
        if (p.at_infinity || p.value == 0) continue;
        ExactScalar factor = -p.value;
        long mult = m;
        bool invert = mult < 0;
        if (invert) mult = -mult;
        for (long k = 0; k < mult; ++k) {
            if (invert)
                c /= factor;
            else
                c *= factor;
        }
    }
    MonomialCocycle coc(2, {"x0", "x1"});
    long deg = d.degree();
    coc.set_pair(0, 1, UnitMonomial(c, {-deg, deg}));
    return coc;
}

// The Picard degree of the associated line bundle [D].
inline long bundle_of_divisor(const DivisorP1& d) {
    return equivalence_degree(divisor_cocycle(d));
}

struct SectionSpace {
    DivisorP1 divisor;
    std::vector<RationalFunc> basis;  // in the chart variable z
};

// Basis of L(D) = { f : D + (f) effective }: z^k / B(z) for B the affine
// local defining function and 0 <= k <= deg D. Empty when deg D < 0.
inline SectionSpace section_space(const DivisorP1& d, const std::string& var = "z") {
    SectionSpace s;
    s.divisor = d;
    long deg = d.degree();
    if (deg < 0) return s;
    RationalFunc b = local_defining_function(d, var);
    RationalFunc z = RationalFunc::variable({var}, var);
    for (long k = 0; k <= deg; ++k) s.basis.push_back(z.pow(k) / b);
    return s;
}

// On P^1 linear equivalence is equality of degrees; the witness f with
// D - D' = (f) is the affine defining function of the difference.
inline bool linearly_equivalent(const DivisorP1& a, const DivisorP1& b,
                                RationalFunc* witness_out = nullptr,
                                const std::string& var = "z") {
    if (a.degree() != b.degree()) return false;
    RationalFunc f = local_defining_function(a - b, var);
    if (witness_out) *witness_out = f;
    return true;
}

}  // namespace kodaira

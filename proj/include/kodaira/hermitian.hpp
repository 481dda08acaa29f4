#pragma once

#include <string>
#include <vector>

#include "kodaira/errors.hpp"
#include "kodaira/exact_matrix.hpp"
#include "kodaira/rational_func.hpp"

namespace kodaira {

// A rational expression in chart variables z_1..z_n and w_1..w_n, where w_i
// stands for the conjugate of z_i. The two are treated as independent
// variables; conjugation only enters at evaluation time (rational sample
// points are their own conjugates).
using HermExpr = RationalFunc;

inline std::vector<std::string> herm_vars(size_t n) {
    std::vector<std::string> v;
    for (size_t i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
    for (size_t i = 1; i <= n; ++i) v.push_back("w" + std::to_string(i));
    return v;
}

// Formal partial with respect to z_i (anti = false) or w_i (anti = true),
// 1-based i.
inline HermExpr wirtinger(const HermExpr& e, size_t i, bool anti) {
    size_t n = e.variables().size() / 2;
    if (i < 1 || i > n) throw UnknownVariable("index " + std::to_string(i));
    return e.formal_partial((anti ? n : 0) + i - 1);
}

// Swaps z_i <-> w_i. Rational coefficients are their own conjugates, so this
// is the formal conjugate of the expression.
inline HermExpr conj_swap(const HermExpr& e) {
    size_t n = e.variables().size() / 2;
    auto swap_poly = [&](const LaurentPoly& p) {
        LaurentPoly out(p.variables());
        for (const auto& [exps, c] : p.terms()) {
            Exponents e2(exps.size());
            for (size_t i = 0; i < n; ++i) {
                e2[i] = exps[n + i];
                e2[n + i] = exps[i];
            }
            out.add_term(e2, c);
        }
        return out;
    };
    return HermExpr(swap_poly(e.num()), swap_poly(e.den()));
}

inline bool is_real_expr(const HermExpr& e) { return conj_swap(e) == e; }

// Chern connection form of the metric h: theta_i = (d h / d z_i) / h.
inline std::vector<HermExpr> chern_theta(const HermExpr& h) {
    if (h.is_zero()) throw ZeroMetric();
    size_t n = h.variables().size() / 2;
    std::vector<HermExpr> theta;
    for (size_t i = 1; i <= n; ++i) theta.push_back(wirtinger(h, i, false) / h);
    return theta;
}

// Coefficient matrix of a (1,1)-form: entry (i,j) multiplies dz_i ^ dconj(z_j).
struct FormCoeffMatrix {
    size_t n = 0;
    std::vector<std::vector<HermExpr>> entries;
    std::string normalization;

    const HermExpr& at(size_t i, size_t j) const { return entries[i][j]; }

    friend FormCoeffMatrix operator+(const FormCoeffMatrix& a, const FormCoeffMatrix& b) {
        if (a.n != b.n) throw DimensionMismatch("form matrices of different size");
        FormCoeffMatrix r = a;
        for (size_t i = 0; i < a.n; ++i)
            for (size_t j = 0; j < a.n; ++j)
                r.entries[i][j] = a.entries[i][j] + b.entries[i][j];
        return r;
    }

    friend FormCoeffMatrix operator-(const FormCoeffMatrix& a, const FormCoeffMatrix& b) {
        if (a.n != b.n) throw DimensionMismatch("form matrices of different size");
        FormCoeffMatrix r = a;
        for (size_t i = 0; i < a.n; ++i)
            for (size_t j = 0; j < a.n; ++j)
                r.entries[i][j] = a.entries[i][j] - b.entries[i][j];
        return r;
    }

    bool is_zero() const {
        for (const auto& row : entries)
            for (const auto& e : row)
                if (!e.is_zero()) return false;
        return true;
    }

    // Hermitian symmetry: entry (j,i) is the conjugate swap of entry (i,j).
    bool is_hermitian() const {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!(entries[j][i] == conj_swap(entries[i][j]))) return false;
        return true;
    }
};

inline const char* kPositivityNormalization =
    "omega = (i/(2*pi)) * 2 * sum_{i,j} M[i][j] dz_i ^ dconj(z_j); "
    "positive-definiteness of M is invariant under the positive scale factor";

// Curvature of the metric h on a line bundle as the coefficient matrix of
// the positivity-oriented (1,1)-form: M[i][j] = -d_{z_i} d_{w_j} log h,
// computed through the algebraic identity
// (d_{z_i} h * d_{w_j} h - h * d_{w_j} d_{z_i} h) / h^2, so no symbolic
// logarithm is needed. With this orientation the metric (1 + z w)^{-1}
// (the hyperplane-bundle metric induced by Fubini-Study) comes out positive.
inline FormCoeffMatrix curvature(const HermExpr& h) {
    if (h.is_zero()) throw ZeroMetric();
    size_t n = h.variables().size() / 2;
    FormCoeffMatrix m;
    m.n = n;
    m.normalization = kPositivityNormalization;
    m.entries.assign(n, std::vector<HermExpr>(n));
    HermExpr h2 = h * h;
    for (size_t i = 1; i <= n; ++i) {
        HermExpr dzi = wirtinger(h, i, false);
        for (size_t j = 1; j <= n; ++j) {
            HermExpr dwj = wirtinger(h, j, true);
            HermExpr mixed = wirtinger(dzi, j, true);
            m.entries[i - 1][j - 1] = (dzi * dwj - h * mixed) / h2;
        }
    }
    return m;
}

// Fubini-Study form on chart `chart` of P^n: the matrix of
// d_{z_i} d_{w_j} log(1 + sum_l z_l w_l). The expression is the same in
// every affine chart, so the chart index only selects the interpretation of
// the local coordinates.
inline FormCoeffMatrix fubini_study(size_t n, size_t chart = 0) {
    if (chart > n) throw IndexOutOfRange("chart index past projective dimension");
    std::vector<std::string> vars = herm_vars(n);
    HermExpr s = HermExpr::constant(vars, 1);
    for (size_t l = 1; l <= n; ++l)
        s = s + HermExpr::variable(vars, "z" + std::to_string(l)) *
                    HermExpr::variable(vars, "w" + std::to_string(l));
    // log(1 + sum) = -log h for h = (1 + sum)^{-1}; curvature() already
    // carries the sign that makes this positive.
    return curvature(s.inverse());
}

struct PointVerdict {
    std::vector<ExactScalar> point;
    bool positive = false;
    std::vector<ExactScalar> minors;
    ExactScalar min_minor;
};

struct PositivityReport {
    bool all_positive = true;
    std::string normalization;
    std::vector<PointVerdict> verdicts;
};

// Evaluates the Hermitian matrix at each rational sample point (w_i = z_i,
// conjugation being the identity on rationals) and tests positive
// definiteness through leading principal minors.
inline PositivityReport positivity_sample(const FormCoeffMatrix& m,
                                          const std::vector<std::vector<ExactScalar>>& points) {
    PositivityReport rep;
    rep.normalization = m.normalization;
    for (const auto& p : points) {
        if (p.size() != m.n) throw DimensionMismatch("sample point of wrong dimension");
        std::vector<ExactScalar> full(2 * m.n);
        for (size_t i = 0; i < m.n; ++i) full[i] = full[m.n + i] = p[i];
        ExactMatrix em(m.n, m.n);
        for (size_t i = 0; i < m.n; ++i)
            for (size_t j = 0; j < m.n; ++j) {
                const HermExpr& e = m.entries[i][j];
                if (e.den().eval<ExactScalar>(full) == 0) {
                    std::string ps;
                    for (const auto& c : p) ps += (ps.empty() ? "" : ",") + rat_str(c);
                    throw PoleAtSample("form coefficient has a pole at (" + ps + ")");
                }
                em.at(i, j) = e.eval<ExactScalar>(full);
            }
        PointVerdict v;
        v.point = p;
        v.positive = true;
        for (size_t k = 1; k <= m.n; ++k) {
            ExactScalar mk = em.leading_minor(k);
            v.minors.push_back(mk);
            if (mk <= 0) v.positive = false;
        }
        v.min_minor = *std::min_element(v.minors.begin(), v.minors.end());
        if (!v.positive) rep.all_positive = false;
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

}  // namespace kodaira

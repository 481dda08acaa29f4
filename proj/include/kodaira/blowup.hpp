#pragma once

#include <map>
#include <string>
#include <vector>

#include "kodaira/errors.hpp"
#include "kodaira/line_bundle.hpp"
#include "kodaira/rational_func.hpp"

namespace kodaira {

// The blowup of C^n at the origin, modeled through its chart atlas: chart i
// (1-based, i = 1..n) carries coordinates u_1..u_n with u_j = z_j / z_i for
// j != i and u_i = z_i in the coordinates z of the base.
struct BlowupAtlas {
    size_t n;

    explicit BlowupAtlas(size_t n_) : n(n_) {
        if (n < 2) throw DimensionMismatch("blowup needs dimension >= 2");
    }

    std::vector<std::string> chart_vars() const {
        std::vector<std::string> v;
        for (size_t i = 1; i <= n; ++i) v.push_back("u" + std::to_string(i));
        return v;
    }

    std::vector<std::string> base_vars() const {
        std::vector<std::string> v;
        for (size_t i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
        return v;
    }

    void check_chart(size_t i) const {
        if (i < 1 || i > n) throw InvalidChart("chart index out of range");
    }
};

using RationalMapTuple = std::vector<RationalFunc>;

// Base coordinates z_1..z_n expressed in chart-j coordinates:
// z_j = u_j, z_i = u_j * u_i for i != j.
inline RationalMapTuple chart_parameterization(const BlowupAtlas& atlas, size_t j) {
    atlas.check_chart(j);
    std::vector<std::string> uv = atlas.chart_vars();
    RationalMapTuple out;
    RationalFunc uj = RationalFunc::variable(uv, "u" + std::to_string(j));
    for (size_t i = 1; i <= atlas.n; ++i) {
        if (i == j)
            out.push_back(uj);
        else
            out.push_back(uj * RationalFunc::variable(uv, "u" + std::to_string(i)));
    }
    return out;
}

// The transition f_k o f_j^{-1} written in chart-j coordinates. Component i
// is the chart-k coordinate z^k_i = z_i / z_k (i != k), z^k_k = z_k.
inline RationalMapTuple chart_transition(const BlowupAtlas& atlas, size_t j, size_t k) {
    atlas.check_chart(j);
    atlas.check_chart(k);
    if (j == k) throw InvalidChart("transition requires two distinct charts");
    std::vector<std::string> uv = atlas.chart_vars();
    RationalMapTuple base = chart_parameterization(atlas, j);  // z_i in chart-j coords
    RationalMapTuple out;
    for (size_t i = 1; i <= atlas.n; ++i) {
        if (i == k)
            out.push_back(base[i - 1]);
        else
            out.push_back(base[i - 1] / base[k - 1]);
    }
    return out;
}

// Symbolic determinant by Laplace expansion (dimensions here are tiny).
inline RationalFunc rational_det(const std::vector<std::vector<RationalFunc>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    const std::vector<std::string>& vars = m[0][0].variables();
    RationalFunc acc = RationalFunc::constant(vars, 0);
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<RationalFunc>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<RationalFunc> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        RationalFunc term = m[0][c] * rational_det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline RationalFunc jacobian_det_of(const RationalMapTuple& map) {
    size_t n = map.size();
    std::vector<std::vector<RationalFunc>> jac(n, std::vector<RationalFunc>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            jac[r][c] = map[r].formal_partial(c);
    return rational_det(jac);
}

// Determinant of the Jacobian of chart_transition(j, k), in chart-j
// coordinates. Equals (z_j/z_k)^{n-1} = u_k^{-(n-1)} up to a global sign.
inline RationalFunc jacobian_det(const BlowupAtlas& atlas, size_t j, size_t k) {
    return jacobian_det_of(chart_transition(atlas, j, k));
}

// The bundle [E] of the exceptional divisor, from its defining functions
// f_i = z^i_i = z_i on chart i: g(i,j) = f_i/f_j = z_i/z_j = l_i/l_j in the
// homogeneous coordinates l_1..l_n of the P^{n-1} direction factor.
// Restricted to E this is the tautological bundle (degree -1); its dual is
// the hyperplane bundle.
inline MonomialCocycle exceptional_cocycle(const BlowupAtlas& atlas) {
    std::vector<std::string> vars;
    for (size_t i = 1; i <= atlas.n; ++i) vars.push_back("l" + std::to_string(i));
    MonomialCocycle c(atlas.n, vars);
    for (size_t i = 0; i < atlas.n; ++i)
        for (size_t j = 0; j < atlas.n; ++j) {
            if (i == j) continue;
            Exponents e(atlas.n, 0);
            e[i] = 1;
            e[j] = -1;
            c.set(i, j, UnitMonomial(1, std::move(e)));
        }
    return c;
}

struct CanonicalCheck {
    bool ok = true;
    // Residual constant of jacobian * [E]^exponent per ordered pair; the
    // lemma holds when every residual is a constant +-1. Keys are (j, k) for
    // blowup-chart pairs and (i, 0) for chart-i against a base chart.
    std::map<std::pair<size_t, size_t>, std::string> residuals;
};

// Checks K_blowup = pullback(K_base) (x) [E]^exponent at the level of
// transition functions: the canonical transitions (Jacobian determinants)
// times the [E] transitions to the given power must be constant +-1 on every
// chart intersection. The base canonical cocycle must be trivial (the C^n
// case); a nontrivial base enters only as an opaque pullback factor and
// cancels identically.
inline CanonicalCheck verify_canonical_lemma_detail(const BlowupAtlas& atlas,
                                                    const MonomialCocycle& base_canonical,
                                                    long exponent) {
    if (!base_canonical.is_trivial())
        throw InvalidChart("only the trivial base canonical cocycle is supported");
    CanonicalCheck out;
    std::vector<std::string> uv = atlas.chart_vars();
    std::vector<std::string> zv = atlas.base_vars();

    auto record = [&](size_t a, size_t b, const RationalFunc& e) {
        bool good = e.is_constant() &&
                    (e.constant_value() == 1 || e.constant_value() == -1);
        if (!good) out.ok = false;
        out.residuals[{a, b}] = e.is_constant() ? rat_str(e.constant_value()) : e.str();
    };

    // Blowup-chart pairs: [E] transition h_kj = z_k/z_j = u_k in chart-j coords.
    for (size_t j = 1; j <= atlas.n; ++j)
        for (size_t k = 1; k <= atlas.n; ++k) {
            if (j == k) continue;
            RationalFunc jac = jacobian_det(atlas, j, k);
            RationalFunc h = RationalFunc::variable(uv, "u" + std::to_string(k));
            record(k, j, jac * h.pow(exponent));
        }

    // Chart i against a base chart away from the origin: the transition is
    // z mapped to chart-i coordinates, with [E] transition h_i = z_i.
    for (size_t i = 1; i <= atlas.n; ++i) {
        RationalMapTuple f;  // f_i o f_alpha^{-1} in base coordinates
        RationalFunc zi = RationalFunc::variable(zv, "z" + std::to_string(i));
        for (size_t l = 1; l <= atlas.n; ++l) {
            if (l == i)
                f.push_back(zi);
            else
                f.push_back(RationalFunc::variable(zv, "z" + std::to_string(l)) / zi);
        }
        RationalFunc jac = jacobian_det_of(f);
        record(i, 0, jac * zi.pow(exponent));
    }
    return out;
}

inline bool verify_canonical_lemma(const BlowupAtlas& atlas,
                                   const MonomialCocycle& base_canonical) {
    return verify_canonical_lemma_detail(atlas, base_canonical,
                                         static_cast<long>(atlas.n) - 1)
        .ok;
}

inline MonomialCocycle trivial_base_canonical(const BlowupAtlas& atlas) {
    return MonomialCocycle(atlas.n, atlas.base_vars());
}

}  // namespace kodaira

#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kodaira/errors.hpp"
#include "kodaira/laurent.hpp"
#include "kodaira/scalar.hpp"

namespace kodaira {

// Nonzero rational multiple of a monomial in a fixed variable list.
struct UnitMonomial {
    ExactScalar coeff;
    Exponents exponents;

    UnitMonomial() : coeff(1) {}
    UnitMonomial(ExactScalar c, Exponents e) : coeff(std::move(c)), exponents(std::move(e)) {
        if (coeff == 0) throw DimensionMismatch("unit monomial with zero coefficient");
    }

    static UnitMonomial one(size_t nvars) {
        return UnitMonomial(1, Exponents(nvars, 0));
    }

    long total_degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0L);
    }

    UnitMonomial inverse() const {
        Exponents e(exponents.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = -exponents[i];
        return UnitMonomial(1 / coeff, std::move(e));
    }

    bool is_one() const {
        if (coeff != 1) return false;
        for (long e : exponents)
            if (e != 0) return false;
        return true;
    }

    friend UnitMonomial operator*(const UnitMonomial& a, const UnitMonomial& b) {
        if (a.exponents.size() != b.exponents.size())
            throw DimensionMismatch("unit monomials over different variable counts");
        Exponents e(a.exponents.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = a.exponents[i] + b.exponents[i];
        return UnitMonomial(a.coeff * b.coeff, std::move(e));
    }

    friend bool operator==(const UnitMonomial& a, const UnitMonomial& b) {
        return a.coeff == b.coeff && a.exponents == b.exponents;
    }

    LaurentPoly to_poly(const std::vector<std::string>& vars) const {
        return LaurentPoly::monomial(vars, exponents, coeff);
    }
};

// Line bundle presented by multiplicative transition monomials g(i,j) on the
// ordered chart pairs of a fixed cover.
class MonomialCocycle {
public:
    MonomialCocycle(size_t charts, std::vector<std::string> vars)
        : charts_(charts), vars_(std::move(vars)) {
        if (charts_ < 2) throw DimensionMismatch("cocycle needs at least two charts");
        for (size_t i = 0; i < charts_; ++i)
            for (size_t j = 0; j < charts_; ++j)
                if (i != j) g_[{i, j}] = UnitMonomial::one(vars_.size());
    }

    size_t charts() const { return charts_; }
    const std::vector<std::string>& variables() const { return vars_; }

    const UnitMonomial& g(size_t i, size_t j) const {
        auto it = g_.find({i, j});
        if (it == g_.end()) throw IndexOutOfRange("no transition for this chart pair");
        return it->second;
    }

    void set(size_t i, size_t j, UnitMonomial m) {
        if (i == j || i >= charts_ || j >= charts_)
            throw IndexOutOfRange("invalid chart pair");
        if (m.exponents.size() != vars_.size())
            throw DimensionMismatch("transition exponents over wrong variable count");
        g_[{i, j}] = std::move(m);
    }

    // Sets g(i,j) = m and g(j,i) = 1/m.
    void set_pair(size_t i, size_t j, const UnitMonomial& m) {
        set(i, j, m);
        set(j, i, m.inverse());
    }

    // g(i,j) g(j,i) = 1 on pairs and g(i,j) g(j,k) g(k,i) = 1 on triples.
    bool check() const {
        for (size_t i = 0; i < charts_; ++i)
            for (size_t j = i + 1; j < charts_; ++j)
                if (!(g(i, j) * g(j, i)).is_one()) return false;
        for (size_t i = 0; i < charts_; ++i)
            for (size_t j = 0; j < charts_; ++j)
                for (size_t k = 0; k < charts_; ++k) {
                    if (i == j || j == k || k == i) continue;
                    if (!(g(i, j) * g(j, k) * g(k, i)).is_one()) return false;
                }
        return true;
    }

    friend MonomialCocycle tensor(const MonomialCocycle& a, const MonomialCocycle& b) {
        if (a.charts_ != b.charts_ || a.vars_ != b.vars_)
            throw DimensionMismatch("tensor of cocycles over different covers");
        MonomialCocycle r = a;
        for (auto& [key, m] : r.g_) m = m * b.g_.at(key);
        return r;
    }

    friend MonomialCocycle dual(const MonomialCocycle& a) {
        MonomialCocycle r = a;
        for (auto& [key, m] : r.g_) m = m.inverse();
        return r;
    }

    MonomialCocycle pow(long k) const {
        MonomialCocycle base = k < 0 ? dual(*this) : *this;
        unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
        MonomialCocycle r(charts_, vars_);
        for (unsigned long t = 0; t < e; ++t) r = tensor(r, base);
        return r;
    }

    bool is_trivial() const {
        for (const auto& [key, m] : g_)
            if (!m.is_one()) return false;
        return true;
    }

    friend bool operator==(const MonomialCocycle& a, const MonomialCocycle& b) {
        return a.charts_ == b.charts_ && a.vars_ == b.vars_ && a.g_ == b.g_;
    }

    const std::map<std::pair<size_t, size_t>, UnitMonomial>& transitions() const {
        return g_;
    }

private:
    size_t charts_;
    std::vector<std::string> vars_;
    std::map<std::pair<size_t, size_t>, UnitMonomial> g_;
};

// O(d) on P^n: g(i,j) = (x_j / x_i)^d over homogeneous coordinates x_0..x_n.
inline MonomialCocycle standard_bundle(size_t n, long d) {
    if (n < 1) throw DimensionMismatch("projective dimension must be >= 1");
    std::vector<std::string> vars;
    for (size_t i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    MonomialCocycle c(n + 1, vars);
    for (size_t i = 0; i <= n; ++i)
        for (size_t j = 0; j <= n; ++j) {
            if (i == j) continue;
            Exponents e(n + 1, 0);
            e[j] = d;
            e[i] = -d;
            c.set(i, j, UnitMonomial(1, std::move(e)));
        }
    return c;
}

inline bool check_cocycle(const MonomialCocycle& c) { return c.check(); }

// The unique d with c coboundary-equivalent to standard_bundle(n, d) on the
// standard cover. Monomial units on a single chart U_i are nonzero constants
// (any nonconstant monomial vanishes somewhere on U_i), so equivalence means:
// every g(i,j) is a constant times (x_j/x_i)^d, with one d across all pairs.
// Constant cocycles on the full-simplex nerve are always coboundaries.
inline long equivalence_degree(const MonomialCocycle& c) {
    if (!c.check()) throw NotEquivalent("transition maps fail the cocycle conditions");
    size_t nv = c.variables().size();
    if (nv != c.charts())
        throw NotEquivalent("cocycle is not over a standard homogeneous-coordinate cover");
    bool have_d = false;
    long d = 0;
    for (size_t i = 0; i < c.charts(); ++i)
        for (size_t j = 0; j < c.charts(); ++j) {
            if (i == j) continue;
            const Exponents& e = c.g(i, j).exponents;
            long dij = e[j];
            if (e[i] != -dij) throw NotEquivalent("transition is not a power of x_j/x_i");
            for (size_t k = 0; k < nv; ++k)
                if (k != i && k != j && e[k] != 0)
                    throw NotEquivalent("transition involves a third coordinate");
            if (!have_d) {
                d = dij;
                have_d = true;
            } else if (dij != d) {
                throw NotEquivalent("inconsistent degree across chart pairs");
            }
        }
    return d;
}

}  // namespace kodaira

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "kodaira/errors.hpp"
#include "kodaira/scalar.hpp"

namespace kodaira {

using Exponents = std::vector<long>;

// Multivariate Laurent polynomial: exact rational coefficients, integer
// exponents. Terms are kept in a map ordered lexicographically by exponent
// vector, so iteration order (and hence every derived serialization) is
// deterministic. Zero coefficients are never stored.
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, ExactScalar>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(std::vector<std::string> vars, const ExactScalar& c) {
        LaurentPoly p(std::move(vars));
        if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
        return p;
    }

    static LaurentPoly monomial(std::vector<std::string> vars, Exponents e,
                                const ExactScalar& c) {
        LaurentPoly p(std::move(vars));
        if (e.size() != p.vars_.size())
            throw DimensionMismatch("exponent vector length != variable count");
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    static LaurentPoly variable(std::vector<std::string> vars, const std::string& name,
                                long power = 1) {
        Exponents e(vars.size(), 0);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw UnknownVariable(name);
        e[static_cast<size_t>(it - vars.begin())] = power;
        return monomial(std::move(vars), std::move(e), 1);
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t num_vars() const { return vars_.size(); }
    bool is_zero() const { return terms_.empty(); }

    size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw UnknownVariable(name);
        return static_cast<size_t>(it - vars_.begin());
    }

    void add_term(const Exponents& e, const ExactScalar& c) {
        if (e.size() != vars_.size())
            throw DimensionMismatch("exponent vector length != variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 &&
               std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                           [](long e) { return e == 0; });
    }

    ExactScalar constant_value() const {
        if (terms_.empty()) return ExactScalar(0);
        return terms_.begin()->second;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        check_same_vars(a, b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        check_same_vars(a, b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        check_same_vars(a, b);
        LaurentPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    LaurentPoly scaled(const ExactScalar& c) const {
        LaurentPoly r(vars_);
        if (c == 0) return r;
        for (const auto& [e, coeff] : terms_) r.terms_[e] = coeff * c;
        return r;
    }

    // Multiply by the monomial x^shift.
    LaurentPoly shifted(const Exponents& shift) const {
        if (shift.size() != vars_.size())
            throw DimensionMismatch("shift length != variable count");
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            Exponents e2(e.size());
            for (size_t i = 0; i < e.size(); ++i) e2[i] = e[i] + shift[i];
            r.terms_[std::move(e2)] = c;
        }
        return r;
    }

    LaurentPoly pow(unsigned long k) const {
        LaurentPoly r = constant(vars_, 1);
        LaurentPoly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    // Componentwise minimum of exponent vectors over all terms.
    Exponents min_exponents() const {
        if (terms_.empty()) return Exponents(vars_.size(), 0);
        Exponents m = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        return m;
    }

    Exponents max_exponents() const {
        if (terms_.empty()) return Exponents(vars_.size(), 0);
        Exponents m = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], e[i]);
        return m;
    }

    // Coefficient of the lexicographically greatest exponent vector.
    ExactScalar leading_coeff() const {
        if (terms_.empty()) return ExactScalar(0);
        return terms_.rbegin()->second;
    }

    // Formal partial derivative with respect to the i-th variable.
    LaurentPoly derivative(size_t i) const {
        if (i >= vars_.size()) throw UnknownVariable("index " + std::to_string(i));
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents e2 = e;
            e2[i] -= 1;
            r.add_term(e2, c * ExactScalar(e[i]));
        }
        return r;
    }

    bool is_homogeneous(long* degree_out = nullptr) const {
        if (terms_.empty()) {
            if (degree_out) *degree_out = 0;
            return true;
        }
        long d = std::accumulate(terms_.begin()->first.begin(),
                                 terms_.begin()->first.end(), 0L);
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0L) != d) return false;
        if (degree_out) *degree_out = d;
        return true;
    }

    // Re-expresses the polynomial over a superset of its variables.
    LaurentPoly with_variables(const std::vector<std::string>& newvars) const {
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(newvars.begin(), newvars.end(), vars_[i]);
            if (it == newvars.end()) throw UnknownVariable(vars_[i]);
            pos[i] = static_cast<size_t>(it - newvars.begin());
        }
        LaurentPoly r(newvars);
        for (const auto& [e, c] : terms_) {
            Exponents e2(newvars.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) e2[pos[i]] = e[i];
            r.terms_[std::move(e2)] = c;
        }
        return r;
    }

    // Evaluation over any field F constructible from ExactScalar, with
    // operator*, operator+, division for negative exponents, and F(1).
    template <class F>
    F eval(const std::vector<F>& point) const {
        if (point.size() != vars_.size())
            throw DimensionMismatch("evaluation point length != variable count");
        F acc = from_scalar<F>(ExactScalar(0));
        for (const auto& [e, c] : terms_) {
            F term = from_scalar<F>(ExactScalar(c));
            for (size_t i = 0; i < e.size(); ++i) {
                long k = e[i];
                if (k == 0) continue;
                if (k < 0 && point[i] == from_scalar<F>(ExactScalar(0)))
                    throw ZeroDenominator("negative power of zero in evaluation");
                F p = fpow(point[i], static_cast<unsigned long>(k < 0 ? -k : k));
                if (k > 0)
                    term = term * p;
                else
                    term = term / p;
            }
            acc = acc + term;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += rat_str(c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                out += "*" + vars_[i];
                if (e[i] != 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

private:
    static void check_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.vars_ != b.vars_)
            throw DimensionMismatch("operands over different variable lists");
    }

    template <class F>
    static F fpow(F base, unsigned long k) {
        F r = from_scalar<F>(ExactScalar(1));
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace kodaira

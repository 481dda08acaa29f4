#pragma once

#include <map>
#include <string>
#include <vector>

#include "kodaira/errors.hpp"
#include "kodaira/laurent.hpp"
#include "kodaira/univariate.hpp"

namespace kodaira {

// Quotient of Laurent polynomials in canonical form: in one variable the
// polynomial gcd is divided out; in several variables only monomial and
// scalar content are removed (equality goes through cross-multiplication,
// so incomplete reduction is harmless). The denominator's lexicographically
// leading coefficient is 1.
class RationalFunc {
public:
    RationalFunc() = default;

    RationalFunc(LaurentPoly num, LaurentPoly den) {
        if (num.variables() != den.variables())
            throw DimensionMismatch("num/den over different variable lists");
        num_ = std::move(num);
        den_ = std::move(den);
        normalize();
    }

    static RationalFunc from_poly(LaurentPoly p) {
        LaurentPoly one = LaurentPoly::constant(p.variables(), 1);
        return RationalFunc(std::move(p), std::move(one));
    }

    static RationalFunc constant(std::vector<std::string> vars, const ExactScalar& c) {
        return from_poly(LaurentPoly::constant(std::move(vars), c));
    }

    static RationalFunc variable(std::vector<std::string> vars, const std::string& name,
                                 long power = 1) {
        return from_poly(LaurentPoly::variable(std::move(vars), name, power));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const std::vector<std::string>& variables() const { return num_.variables(); }
    bool is_zero() const { return num_.is_zero(); }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    ExactScalar constant_value() const {
        return num_.constant_value() / den_.constant_value();
    }

    // Equality as functions: cross-multiplication.
    friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    RationalFunc operator-() const {
        RationalFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
        if (b.is_zero()) throw ZeroDenominator();
        return RationalFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunc inverse() const {
        if (is_zero()) throw ZeroDenominator("inverse of the zero function");
        return RationalFunc(den_, num_);
    }

    RationalFunc pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        RationalFunc base = *this;
        RationalFunc r = constant(variables(), 1);
        unsigned long e = static_cast<unsigned long>(k);
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Substitutes a RationalFunc for every variable. All binding values must
    // share one variable list, which becomes the result's.
    RationalFunc substitute(const std::map<std::string, RationalFunc>& binding) const {
        if (binding.empty()) throw DimensionMismatch("empty substitution binding");
        const std::vector<std::string>& tvars = binding.begin()->second.variables();
        std::vector<const RationalFunc*> images(num_.num_vars(), nullptr);
        for (size_t i = 0; i < num_.num_vars(); ++i) {
            auto it = binding.find(variables()[i]);
            if (it == binding.end()) throw UnknownVariable(variables()[i]);
            if (it->second.variables() != tvars)
                throw DimensionMismatch("bindings over different variable lists");
            images[i] = &it->second;
        }
        RationalFunc en = eval_poly(num_, images, tvars);
        RationalFunc ed = eval_poly(den_, images, tvars);
        if (ed.is_zero()) throw ZeroDenominator("substitution sends denominator to zero");
        return en / ed;
    }

    // Formal partial derivative by the quotient rule.
    RationalFunc formal_partial(const std::string& var) const {
        size_t i = num_.var_index(var);
        return formal_partial(i);
    }

    RationalFunc formal_partial(size_t i) const {
        return RationalFunc(num_.derivative(i) * den_ - num_ * den_.derivative(i),
                            den_ * den_);
    }

    template <class F>
    F eval(const std::vector<F>& point) const {
        F d = den_.template eval<F>(point);
        if (d == from_scalar<F>(ExactScalar(0)))
            throw ZeroDenominator("evaluation at a pole");
        return num_.template eval<F>(point) / d;
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    static RationalFunc eval_poly(const LaurentPoly& p,
                                  const std::vector<const RationalFunc*>& images,
                                  const std::vector<std::string>& tvars) {
        RationalFunc acc = constant(tvars, 0);
        for (const auto& [e, c] : p.terms()) {
            RationalFunc term = constant(tvars, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) term = term * images[i]->pow(e[i]);
            acc = acc + term;
        }
        return acc;
    }

    void normalize() {
        if (den_.is_zero()) throw ZeroDenominator();
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(num_.variables(), 1);
            return;
        }
        if (num_.num_vars() == 1) {
            long sn = 0, sd = 0;
            uni::Dense dn = uni::from_laurent(num_, &sn);
            uni::Dense dd = uni::from_laurent(den_, &sd);
            uni::Dense g = uni::gcd(dn, dd);
            if (uni::degree(g) > 0) {
                dn = uni::divmod(dn, g).first;
                dd = uni::divmod(dd, g).first;
            }
            const std::string v = num_.variables()[0];
            num_ = uni::to_laurent(dn, v, sn - sd);
            den_ = uni::to_laurent(dd, v, 0);
        } else {
            Exponents mn = num_.min_exponents();
            Exponents md = den_.min_exponents();
            Exponents neg_mn(mn.size()), neg_md(md.size()), back(mn.size());
            for (size_t i = 0; i < mn.size(); ++i) {
                neg_mn[i] = -mn[i];
                neg_md[i] = -md[i];
                back[i] = mn[i] - md[i];
            }
            num_ = num_.shifted(neg_mn).shifted(back);
            den_ = den_.shifted(neg_md);
        }
        ExactScalar lc = den_.leading_coeff();
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace kodaira

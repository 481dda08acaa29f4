#pragma once

#include <string>

#include "kodaira/errors.hpp"
#include "kodaira/scalar.hpp"

namespace kodaira {

// Gaussian rational a + b*i with exact rational a, b.
struct GaussRat {
    ExactScalar re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(ExactScalar r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussRat(ExactScalar r, ExactScalar i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat conj() const { return {re, -im}; }

    // |z|^2, a nonnegative rational.
    ExactScalar norm() const { return re * re + im * im; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussRat operator-() const { return {-re, -im}; }

    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        ExactScalar n = b.norm();
        if (n == 0) throw ZeroDenominator("division by zero Gaussian rational");
        GaussRat c = a * b.conj();
        return {c.re / n, c.im / n};
    }

    std::string str() const {
        if (im == 0) return rat_str(re);
        return rat_str(re) + (im > 0 ? "+" : "") + rat_str(im) + "i";
    }
};

}  // namespace kodaira

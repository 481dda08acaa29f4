#pragma once

#include <stdexcept>
#include <string>

namespace kodaira {

struct ZeroDenominator : std::domain_error {
    explicit ZeroDenominator(const std::string& what = "denominator is the zero polynomial")
        : std::domain_error(what) {}
};

struct UnknownVariable : std::invalid_argument {
    explicit UnknownVariable(const std::string& name)
        : std::invalid_argument("unknown variable: " + name) {}
};

struct ZeroFunction : std::domain_error {
    ZeroFunction() : std::domain_error("the zero function has no order") {}
};

struct NonSplitPolynomial : std::domain_error {
    explicit NonSplitPolynomial(const std::string& what)
        : std::domain_error(what) {}
};

struct DegreeMismatch : std::invalid_argument {
    explicit DegreeMismatch(const std::string& what)
        : std::invalid_argument(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what)
        : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what)
        : std::out_of_range(what) {}
};

struct InvalidChart : std::invalid_argument {
    explicit InvalidChart(const std::string& what)
        : std::invalid_argument(what) {}
};

struct NotEquivalent : std::domain_error {
    explicit NotEquivalent(const std::string& what)
        : std::domain_error(what) {}
};

struct ZeroMetric : std::domain_error {
    ZeroMetric() : std::domain_error("metric expression is identically zero") {}
};

struct PoleAtSample : std::domain_error {
    explicit PoleAtSample(const std::string& what)
        : std::domain_error(what) {}
};

struct EmptyBasis : std::invalid_argument {
    EmptyBasis() : std::invalid_argument("section basis is empty") {}
};

struct BasePointEvaluation : std::domain_error {
    explicit BasePointEvaluation(const std::string& what)
        : std::domain_error(what) {}
};

struct EqualPoints : std::invalid_argument {
    EqualPoints() : std::invalid_argument("the two evaluation points coincide") {}
};

struct SchemaError : std::invalid_argument {
    explicit SchemaError(const std::string& what)
        : std::invalid_argument(what) {}
};

}  // namespace kodaira

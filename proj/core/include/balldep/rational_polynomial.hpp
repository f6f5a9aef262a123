#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace balldep {

/// "num/den" with a positive denominator; integers print as "n/1".
std::string fraction_string(const mpq_class& q);
/// Inverse of fraction_string; also accepts a bare integer.
mpq_class parse_fraction(const std::string& text);

/// Dense univariate polynomial over Q. coefficients()[n] multiplies x^n.
/// The representation is canonical: no trailing zero coefficient, and the
/// zero polynomial has no coefficients at all.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<mpq_class> coefficients);
    RationalPolynomial(std::initializer_list<mpq_class> coefficients);

    static RationalPolynomial constant(const mpq_class& c);
    static RationalPolynomial monomial(const mpq_class& c, std::size_t power);

    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^n, zero past the degree.
    mpq_class coefficient(std::size_t n) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; 0 for the zero polynomial.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    mpq_class evaluate(const mpq_class& x) const;
    double evaluate(double x) const;
    RationalPolynomial derivative() const;
    /// Multiplies by x^k.
    RationalPolynomial shifted(std::size_t k) const;

    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const mpq_class& scalar);

    friend RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) { return lhs += rhs; }
    friend RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) { return lhs -= rhs; }
    friend RationalPolynomial operator*(RationalPolynomial lhs, const mpq_class& s) { return lhs *= s; }
    friend RationalPolynomial operator*(const mpq_class& s, RationalPolynomial rhs) { return rhs *= s; }
    friend RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend bool operator==(const RationalPolynomial& lhs, const RationalPolynomial& rhs);

    /// Human-readable form, e.g. "2/3 + 1/3*z^1".
    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

}  // namespace balldep

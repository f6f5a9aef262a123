#include "balldep/rational_polynomial.hpp"

#include <algorithm>

#include "balldep/errors.hpp"

namespace balldep {

std::string fraction_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_fraction(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw ArgumentError("not a fraction: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<mpq_class> coefficients)
    : coeffs_(coefficients) {
    trim();
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c) {
    return RationalPolynomial(std::vector<mpq_class>{c});
}

RationalPolynomial RationalPolynomial::monomial(const mpq_class& c, std::size_t power) {
    std::vector<mpq_class> v(power + 1);
    v[power] = c;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::coefficient(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : mpq_class(0);
}

mpq_class RationalPolynomial::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double RationalPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->get_d();
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpq_class> d(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = coeffs_[n] * static_cast<unsigned long>(n);
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<mpq_class> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return RationalPolynomial(std::move(v));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<mpq_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t a = 0; a < lhs.coeffs_.size(); ++a) {
        if (sgn(lhs.coeffs_[a]) == 0) continue;
        for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) {
            out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
        }
    }
    return RationalPolynomial(std::move(out));
}

bool operator==(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (sgn(coeffs_[n]) == 0) continue;
        if (!out.empty()) out += sgn(coeffs_[n]) > 0 ? " + " : " - ";
        else if (sgn(coeffs_[n]) < 0) out += "-";
        mpq_class mag = abs(coeffs_[n]);
        out += mag.get_str();
        if (n > 0) out += "*" + var + "^" + std::to_string(n);
    }
    return out;
}

}  // namespace balldep

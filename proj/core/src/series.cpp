#include "balldep/series.hpp"

#include "balldep/errors.hpp"

namespace balldep {

std::vector<mpq_class> series_coefficients(const RationalFunctionSeries& f, std::size_t count) {
    const auto& den = f.denominator.coefficients();
    if (den.empty() || sgn(den[0]) == 0) {
        throw DomainError("series expansion needs denominator(0) != 0");
    }
    const mpq_class lead_inv = 1 / den[0];
    std::vector<mpq_class> q(count);
    for (std::size_t n = 0; n < count; ++n) {
        mpq_class acc = f.numerator.coefficient(n);
        for (std::size_t j = 1; j < den.size() && j <= n; ++j) acc -= den[j] * q[n - j];
        q[n] = acc * lead_inv;
    }
    return q;
}

RationalFunctionSeries make_series(long multiplier, std::size_t shift,
                                   const std::vector<std::vector<long long>>& factors,
                                   const std::string& scale, std::size_t pole_order) {
    RationalPolynomial num = RationalPolynomial::monomial(mpq_class(multiplier), shift);
    for (const auto& f : factors) {
        std::vector<mpq_class> c;
        c.reserve(f.size());
        for (const auto v : f) c.emplace_back(mpz_class(std::to_string(v)));
        num = num * RationalPolynomial(std::move(c));
    }
    RationalPolynomial den = RationalPolynomial::constant(mpq_class(mpz_class(scale)));
    const RationalPolynomial one_minus_x{mpq_class(1), mpq_class(-1)};
    for (std::size_t p = 0; p < pole_order; ++p) den = den * one_minus_x;
    return RationalFunctionSeries{std::move(num), std::move(den)};
}

std::optional<ReferenceSeries> mean_generating_function(std::size_t gap) {
    switch (gap) {
        case 1:
            // the coefficients 2/3, 2/3, 4/5, ... of E(D_{1,K+1}) start at x^3
            return ReferenceSeries{1, make_series(2, 3, {{5, -5, 1}}, "15", 2),
                                   "15(1-x)^2 E_1 = 2(x^2-5x+5)",
                                   "the right-hand side needs the factor x^3; checked as 2x^3(x^2-5x+5)/(15(1-x)^2)"};
        case 2:
            return ReferenceSeries{2, make_series(1, 4, {{6, -6, 1}}, "9", 2), "9(1-x)^2 E_2 = x^4(x^2-6x+6)", ""};
        case 3:
            return ReferenceSeries{3, make_series(2, 3, {{35, -70, 56, -21, 3}}, "105", 2),
                                   "105(1-x)^2 E_3 = 2x^3(3x^4-21x^3+56x^2-70x+35)", ""};
        case 4:
            return ReferenceSeries{4, make_series(1, 4, {{3, -3, 1}, {5, -5, 1}}, "45", 2),
                                   "45(1-x)^2 E_4 = x^4(x^2-3x+3)(x^2-5x+5)", ""};
        case 5:
            return ReferenceSeries{5, make_series(2, 5, {{189, -378, 279, -90, 10}}, "2835", 2),
                                   "2835(1-x)^2 E_5 = 2x^5(10x^4-90x^3+279x^2-378x+189)", ""};
        case 6:
            return ReferenceSeries{6, make_series(1, 6, {{70, -140, 100, -30, 3}}, "1575", 2),
                                   "1575(1-x)^2 E_6 = x^6(3x^4-30x^3+100x^2-140x+70)", ""};
        case 7:
            return ReferenceSeries{7, make_series(2, 7, {{198, -396, 275, -77, 7}}, "31185", 2),
                                   "31185(1-x)^2 E_7 = 2x^7(7x^4-77x^3+275x^2-396x+198)", ""};
        default:
            return std::nullopt;
    }
}

std::optional<ReferenceSeries> factorial_generating_function(std::size_t gap) {
    switch (gap) {
        case 1:
            return ReferenceSeries{
                1, make_series(2, 3, {{4725, -14175, 19845, -16380, 8595, -2880, 580, -58}}, "14175", 3),
                "14175(1-x)^3 F_1 = 2x^3(4725-14175x+19845x^2-16380x^3+8595x^4-2880x^5+580x^6-58x^7)", ""};
        case 2:
            return ReferenceSeries{2, make_series(2, 5, {{15, -15, 6, -1}, {3, -3, 1}, {3, -3, 1}}, "405", 3),
                                   "405(1-x)^3 F_2 = 2x^5(15-15x+6x^2-x^3)(3-3x+x^2)^2", ""};
        case 3:
            return ReferenceSeries{
                3,
                make_series(2, 7, {{1711710, -5135130, 6786780, -5118113, 2380287, -682864, 111636, -7974}},
                            "14189175", 3),
                "14189175(1-x)^3 F_3 = 2x^7(1711710-5135130x+6786780x^2-5118113x^3+2380287x^4-682864x^5"
                "+111636x^6-7974x^7)",
                ""};
        case 4:
            return ReferenceSeries{
                4, make_series(2, 9, {{15525, -46575, 60255, -43695, 19200, -5100, 752, -47}}, "637875", 3),
                "637875(1-x)^3 F_4 = 2x^9(15525-46575x+60255x^2-43695x^3+19200x^4-5100x^5+752x^6-47x^7)", ""};
        case 5:
            return ReferenceSeries{
                5,
                make_series(4, 11,
                            {{157260285, -471780855, 598855005, -418392270, 173906073, -42827760, 5728788,
                              -318266}},
                            "97692469875", 3),
                "97692469875(1-x)^3 F_5 = 4x^11(157260285-471780855x+598855005x^2-418392270x^3"
                "+173906073x^4-42827760x^5+5728788x^6-318266x^7)",
                "(1-x)^4 would make E(D(D-1)) grow cubically in K; the pole has order 3"};
        case 6:
            return ReferenceSeries{
                6,
                make_series(2, 13, {{969150, -2907450, 3627930, -2446595, 963525, -220570, 26940, -1347}},
                            "3192564375", 3),
                "3192564375(1-x)^3 F_6 = 2x^13(969150-2907450x+3627930x^2-2446595x^3+963525x^4-220570x^5"
                "+26940x^6-1347x^7)",
                ""};
        case 7:
            return ReferenceSeries{
                7,
                make_series(2, 15,
                            {{9215899308LL, -27647697924LL, 33973625070LL, -22162777791LL, 8287091967LL,
                              -1769271504LL, 198572308LL, -9026014LL}},
                            "428772250281375", 3),
                "428772250281375(1-x)^3 F_7 = 2x^15(9215899308-27647697924x+33973625070x^2-22162777791x^3"
                "+8287091967x^4-1769271504x^5+198572308x^6-9026014x^7)",
                ""};
        default:
            return std::nullopt;
    }
}

}  // namespace balldep

#include "sylvester/exactnum/special.hpp"

#include <stdexcept>
#include <string>

namespace sylvester {

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

PiPolynomial gamma_half(long two_n)
{
    if (two_n <= 0)
        throw std::domain_error("gamma_half: argument must be positive, got " + std::to_string(two_n));
    if (two_n % 2 == 0)
        return Rational(factorial(static_cast<unsigned>(two_n / 2 - 1)));

    // Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi)
    auto m = static_cast<unsigned>(two_n / 2);
    Integer four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
    return PiPolynomial::monomial(make_rational(factorial(2 * m), four_m * factorial(m)), 1);
}

PiPolynomial kappa(long d)
{
    if (d <= 0)
        throw std::domain_error("kappa: dimension must be positive, got " + std::to_string(d));
    return PiPolynomial::pi_power(static_cast<int>(d)) / gamma_half(d + 2);
}

PiPolynomial omega(long d)
{
    return PiPolynomial(d) * kappa(d);
}

}  // namespace sylvester

#pragma once

#include "sylvester/exactnum/pi_polynomial.hpp"

namespace sylvester {

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Gamma(two_n / 2). Integer arguments give (two_n/2 - 1)!, half-integers
/// a rational multiple of sqrt(pi). Throws std::domain_error for two_n <= 0.
PiPolynomial gamma_half(long two_n);

/// Volume of the unit d-ball, pi^(d/2) / Gamma(1 + d/2).
PiPolynomial kappa(long d);

/// Surface area of the unit sphere in R^d, d * kappa(d).
PiPolynomial omega(long d);

}  // namespace sylvester

#pragma once

// Exact values of the form sum_h c_h * pi^(h/2) with rational c_h.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace sylvester {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds a canonical rational from numerator and denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// num/den in canonical form. Prefer this over Rational(num, den), which
/// does not reduce.
Rational ratio(long num, long den);

/// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);

/// Element of Q[sqrt(pi), 1/sqrt(pi)].
///
/// The key of each term is the half-power h, so a term contributes
/// coef * pi^(h/2).  Zero coefficients are never stored, which makes the
/// representation unique and equality structural.
class PiPolynomial {
public:
    using TermMap = std::map<int, Rational>;

    PiPolynomial() = default;
    PiPolynomial(const Rational& value);  // NOLINT: a rational is a PiPolynomial
    PiPolynomial(long value);             // NOLINT

    static PiPolynomial monomial(const Rational& coef, int half_power);
    /// pi^(half_power / 2)
    static PiPolynomial pi_power(int half_power);

    const TermMap& terms() const { return terms_; }
    Rational coefficient(int half_power) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    /// The rational value if the only term (if any) has h = 0.
    std::optional<Rational> as_rational() const;

    /// Inverse of a single-term value. Throws std::domain_error otherwise.
    PiPolynomial inverse() const;
    PiPolynomial pow(unsigned exponent) const;

    PiPolynomial operator-() const;
    PiPolynomial& operator+=(const PiPolynomial& rhs);
    PiPolynomial& operator-=(const PiPolynomial& rhs);
    PiPolynomial& operator*=(const PiPolynomial& rhs);
    /// Division is only defined by single-term divisors.
    PiPolynomial& operator/=(const PiPolynomial& rhs);

    friend PiPolynomial operator+(PiPolynomial lhs, const PiPolynomial& rhs) { return lhs += rhs; }
    friend PiPolynomial operator-(PiPolynomial lhs, const PiPolynomial& rhs) { return lhs -= rhs; }
    friend PiPolynomial operator*(PiPolynomial lhs, const PiPolynomial& rhs) { return lhs *= rhs; }
    friend PiPolynomial operator/(PiPolynomial lhs, const PiPolynomial& rhs) { return lhs /= rhs; }

    friend bool operator==(const PiPolynomial& a, const PiPolynomial& b) { return a.terms_ == b.terms_; }

    /// Human-readable form, e.g. "13/720 - 1/15015*pi^2".
    std::string to_string() const;

private:
    void add_term(int half_power, const Rational& coef);

    TermMap terms_;
};

/// {"terms": [{"h": int, "num": string, "den": string}, ...]} sorted by h.
nlohmann::json to_json(const PiPolynomial& value);
PiPolynomial pi_polynomial_from_json(const nlohmann::json& j);

}  // namespace sylvester

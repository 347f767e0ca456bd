#include "sylvester/exactnum/decimal.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace sylvester {
namespace {

class Mpfr {
public:
    explicit Mpfr(long bits) { mpfr_init2(v_, bits); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    Rational to_rational() const
    {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

private:
    mpfr_t v_;
};

long digits_to_bits(int digits)
{
    // log2(10) < 3.33
    return static_cast<long>(digits) * 333 / 100 + 32;
}

Rational pow10(long e)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(1) / Rational(p) : Rational(p);
}

// Largest e with 10^e <= q, for q > 0.
long decimal_exponent(const Rational& q)
{
    long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 10));
    while (pow10(e) > q)
        --e;
    while (pow10(e + 1) <= q)
        ++e;
    return e;
}

Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

struct Truncation {
    long exponent;
    Integer mantissa;  // digits significant digits of |value|
};

Truncation truncate(const Rational& magnitude, int digits)
{
    long e = decimal_exponent(magnitude);
    return {e, floor_of(magnitude * pow10(digits - 1 - e))};
}

std::string format(bool negative, const Truncation& t, int digits)
{
    std::string m = t.mantissa.get_str();
    long scale = digits - 1 - t.exponent;  // value = m * 10^-scale
    std::string out;
    if (scale <= 0) {
        out = m + std::string(static_cast<size_t>(-scale), '0');
    } else {
        if (static_cast<long>(m.size()) <= scale)
            m.insert(0, static_cast<size_t>(scale - static_cast<long>(m.size()) + 1), '0');
        out = m.substr(0, m.size() - static_cast<size_t>(scale)) + "." +
              m.substr(m.size() - static_cast<size_t>(scale));
    }
    return negative ? "-" + out : out;
}

// Doubles the working precision up to cap; 0 once cap has been tried.
int next_precision(int working, int cap)
{
    return working >= cap ? 0 : std::min(2 * working, cap);
}

// Bracket of pi^(h/2) for integer h at the given precision.
std::pair<Rational, Rational> pi_half_power(int h, long bits)
{
    Mpfr lo(bits), hi(bits);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    unsigned long n = static_cast<unsigned long>(h < 0 ? -h : h);
    mpfr_pow_ui(lo.get(), lo.get(), n, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), hi.get(), n, MPFR_RNDU);
    if (h < 0) {
        Mpfr inv_lo(bits), inv_hi(bits);
        mpfr_ui_div(inv_lo.get(), 1, hi.get(), MPFR_RNDD);
        mpfr_ui_div(inv_hi.get(), 1, lo.get(), MPFR_RNDU);
        return {inv_lo.to_rational(), inv_hi.to_rational()};
    }
    return {lo.to_rational(), hi.to_rational()};
}

}  // namespace

RationalBracket enclose(const PiPolynomial& value, long bits)
{
    RationalBracket b{Rational(0), Rational(0)};
    for (const auto& [h, c] : value.terms()) {
        if (h == 0) {
            b.low += c;
            b.high += c;
            continue;
        }
        auto [plo, phi] = pi_half_power(h, bits);
        if (c > 0) {
            b.low += c * plo;
            b.high += c * phi;
        } else {
            b.low += c * phi;
            b.high += c * plo;
        }
    }
    return b;
}

DecimalString to_decimal(const PiPolynomial& value, int digits)
{
    if (digits < 1)
        throw std::domain_error("to_decimal: digits must be positive");
    if (value.is_zero())
        return {"0." + std::string(static_cast<size_t>(digits), '0'), "0"};

    int cap = std::max(kMaxComparisonDigits, 4 * digits);
    for (int working = std::max(digits + 10, kDefaultComparisonDigits); working > 0;
         working = next_precision(working, cap)) {
        RationalBracket b = enclose(value, digits_to_bits(working));
        if (sgn(b.low) != sgn(b.high) || sgn(b.low) == 0)
            continue;
        bool negative = b.low < 0;
        Truncation lo = truncate(abs(b.low), digits);
        Truncation hi = truncate(abs(b.high), digits);
        if (lo.exponent != hi.exponent || lo.mantissa != hi.mantissa)
            continue;
        return {format(negative, lo, digits), "1e" + std::to_string(lo.exponent - digits + 1)};
    }
    throw std::runtime_error("to_decimal: could not resolve " + value.to_string() + " to " +
                             std::to_string(digits) + " digits");
}

int sign(const PiPolynomial& value, int start_digits)
{
    if (value.is_zero())
        return 0;
    if (auto r = value.as_rational())
        return sgn(*r);
    for (int working = std::min(start_digits, kMaxComparisonDigits); working > 0;
         working = next_precision(working, kMaxComparisonDigits)) {
        RationalBracket b = enclose(value, digits_to_bits(working));
        if (b.low > 0)
            return 1;
        if (b.high < 0)
            return -1;
    }
    throw std::runtime_error("sign: undecided at precision cap for " + value.to_string());
}

std::strong_ordering compare(const PiPolynomial& a, const PiPolynomial& b)
{
    int s = sign(a - b);
    if (s < 0)
        return std::strong_ordering::less;
    if (s > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double to_double(const PiPolynomial& value)
{
    return std::strtod(to_decimal(value, 30).text.c_str(), nullptr);
}

}  // namespace sylvester

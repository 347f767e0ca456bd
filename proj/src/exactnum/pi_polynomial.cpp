#include "sylvester/exactnum/pi_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace sylvester {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational ratio(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

PiPolynomial::PiPolynomial(const Rational& value)
{
    add_term(0, value);
}

PiPolynomial::PiPolynomial(long value) : PiPolynomial(Rational(value)) {}

PiPolynomial PiPolynomial::monomial(const Rational& coef, int half_power)
{
    PiPolynomial p;
    p.add_term(half_power, coef);
    return p;
}

PiPolynomial PiPolynomial::pi_power(int half_power)
{
    return monomial(Rational(1), half_power);
}

Rational PiPolynomial::coefficient(int half_power) const
{
    auto it = terms_.find(half_power);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> PiPolynomial::as_rational() const
{
    if (terms_.empty())
        return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == 0)
        return terms_.begin()->second;
    return std::nullopt;
}

void PiPolynomial::add_term(int half_power, const Rational& coef)
{
    if (coef == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(half_power, coef);
    if (inserted) {
        it->second.canonicalize();
        return;
    }
    it->second += coef;
    if (it->second == 0)
        terms_.erase(it);
}

PiPolynomial PiPolynomial::inverse() const
{
    if (!is_monomial())
        throw std::domain_error("only single-term values can be inverted, got " + to_string());
    const auto& [h, c] = *terms_.begin();
    return monomial(1 / c, -h);
}

PiPolynomial PiPolynomial::pow(unsigned exponent) const
{
    PiPolynomial result(1L);
    PiPolynomial base = *this;
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

PiPolynomial PiPolynomial::operator-() const
{
    PiPolynomial p = *this;
    for (auto& [h, c] : p.terms_)
        c = -c;
    return p;
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& rhs)
{
    for (const auto& [h, c] : rhs.terms_)
        add_term(h, c);
    return *this;
}

PiPolynomial& PiPolynomial::operator-=(const PiPolynomial& rhs)
{
    for (const auto& [h, c] : rhs.terms_)
        add_term(h, -c);
    return *this;
}

PiPolynomial& PiPolynomial::operator*=(const PiPolynomial& rhs)
{
    PiPolynomial product;
    for (const auto& [ha, ca] : terms_)
        for (const auto& [hb, cb] : rhs.terms_)
            product.add_term(ha + hb, ca * cb);
    terms_ = std::move(product.terms_);
    return *this;
}

PiPolynomial& PiPolynomial::operator/=(const PiPolynomial& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    return *this *= rhs.inverse();
}

std::string PiPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [h, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (h == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str() << "*";
        out << "pi";
        if (h % 2 == 0) {
            if (h != 2)
                out << "^" << h / 2;
        } else {
            out << "^(" << h << "/2)";
        }
    }
    return out.str();
}

nlohmann::json to_json(const PiPolynomial& value)
{
    auto terms = nlohmann::json::array();
    for (const auto& [h, c] : value.terms())
        terms.push_back({{"h", h}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return {{"terms", terms}};
}

PiPolynomial pi_polynomial_from_json(const nlohmann::json& j)
{
    PiPolynomial result;
    for (const auto& term : j.at("terms")) {
        Rational c = make_rational(Integer(term.at("num").get<std::string>()),
                                   Integer(term.at("den").get<std::string>()));
        result += PiPolynomial::monomial(c, term.at("h").get<int>());
    }
    return result;
}

}  // namespace sylvester

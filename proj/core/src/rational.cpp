#include "archimedes/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace archimedes {

namespace {

mpq_class canonical(mpq_class q) {
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = canonical(mpq_class(num, den));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = canonical(mpq_class(num, den));
}

Rational::Rational(const mpq_class& q) : v_(canonical(q)) {}

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        mpz_class n, d;
        if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
            throw std::invalid_argument("malformed rational literal: " + text);
        if (d == 0) throw std::invalid_argument("rational with zero denominator: " + text);
        return Rational(n, d);
    }

    // Decimal / scientific form: split mantissa and exponent, scale exactly.
    std::string mantissa = text;
    long exponent = 0;
    const auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        mantissa = text.substr(0, epos);
        const std::string etext = text.substr(epos + 1);
        try {
            size_t used = 0;
            exponent = std::stol(etext, &used);
            if (used != etext.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed exponent in: " + text);
        }
    }

    const auto dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("malformed rational literal: " + text);

    mpz_class n;
    if (n.set_str(digits, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(n, scale) : Rational(n * scale, mpz_class(1));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (sign() == 0) throw std::invalid_argument("reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw std::invalid_argument("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    return is_integer() ? numerator().get_str() : numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

Rational dyadic_floor(const Rational& q, unsigned shift) {
    mpz_class scaled_num = q.numerator() << shift;
    mpz_class quotient;
    mpz_fdiv_q(quotient.get_mpz_t(), scaled_num.get_mpz_t(), q.denominator().get_mpz_t());
    return Rational(quotient, mpz_class(1) << shift);
}

Rational dyadic_ceil(const Rational& q, unsigned shift) {
    mpz_class scaled_num = q.numerator() << shift;
    mpz_class quotient;
    mpz_cdiv_q(quotient.get_mpz_t(), scaled_num.get_mpz_t(), q.denominator().get_mpz_t());
    return Rational(quotient, mpz_class(1) << shift);
}

Rational pow2(int e) {
    mpz_class p = mpz_class(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

}  // namespace archimedes

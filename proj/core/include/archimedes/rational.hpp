#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace archimedes {

// Exact arbitrary-precision rational. Always canonical: the denominator is
// positive and coprime with the numerator. Arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    // Accepts "p", "p/q", plain decimals ("3.25") and scientific decimals
    // ("1e-6", "2.5e3"), all parsed exactly.
    static Rational from_string(const std::string& text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    Rational abs() const;
    Rational reciprocal() const;

    bool is_integer() const { return v_.get_den() == 1; }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    // Nearest double, for diagnostics only; never used on certified paths.
    double to_double() const { return v_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }
Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

// floor(q * 2^shift) / 2^shift and the ceiling counterpart: the dyadic
// roundings used for interval endpoint trimming.
Rational dyadic_floor(const Rational& q, unsigned shift);
Rational dyadic_ceil(const Rational& q, unsigned shift);

// 2^e as an exact rational, e may be negative.
Rational pow2(int e);

}  // namespace archimedes

#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace cantor {

/// Exact rational number. Always stored normalized: positive denominator,
/// numerator and denominator coprime.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { normalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { normalize(); }
    explicit Rational(const mpq_class& v) : v_(v) { normalize(); }

    /// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
    /// malformed text or zero denominator.
    static Rational from_string(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    /// Serialized as "p/q", e.g. "0/1", "1/1", "5/8".
    std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return wrap(-a.v_); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& a) { return wrap(::abs(a.v_)); }

private:
    static Rational wrap(const mpq_class& v) {
        Rational r;
        r.v_ = v;
        return r;
    }
    void normalize();

    mpq_class v_;
};

/// base^exp for a nonnegative integer exponent.
mpz_class int_pow(unsigned long base, unsigned long exp);

/// base^exp as a Rational; exp may be negative.
Rational rational_pow(long base, long exp);
Rational rational_pow(const Rational& base, long exp);

Rational abs(const Rational& a);  // defined inline as a friend above

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace cantor

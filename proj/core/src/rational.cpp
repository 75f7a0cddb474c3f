#include "cantor/rational.hpp"

namespace cantor {

void Rational::normalize() {
    if (sgn(v_.get_den()) == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    return Rational::wrap(a.v_ / b.v_);
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) {
        throw std::invalid_argument("Rational: empty string");
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) {
        throw std::invalid_argument("Rational: malformed value '" + s + "'");
    }
    if (sgn(v.get_den()) == 0) {
        throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    }
    return Rational(v);
}

mpz_class int_pow(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Rational rational_pow(long base, long exp) {
    if (base <= 0) {
        throw std::domain_error("rational_pow: base must be positive");
    }
    mpz_class p = int_pow(static_cast<unsigned long>(base),
                          static_cast<unsigned long>(exp < 0 ? -exp : exp));
    return exp < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

Rational rational_pow(const Rational& base, long exp) {
    if (base.sign() <= 0) {
        throw std::domain_error("rational_pow: base must be positive");
    }
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
    return exp < 0 ? Rational(den, num) : Rational(num, den);
}

}  // namespace cantor

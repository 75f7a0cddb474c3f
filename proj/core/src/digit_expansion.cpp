#include "cantor/digit_expansion.hpp"

#include <map>
#include <stdexcept>

namespace cantor {

namespace {

void check_base(int base) {
    if (base != 2 && base != 3) {
        throw std::domain_error("digit expansion: base must be 2 or 3");
    }
}

void check_unit_range(const Rational& x) {
    if (x < Rational(0) || x > Rational(1)) {
        throw std::domain_error("digit expansion: value " + x.str() + " outside [0, 1]");
    }
}

// Plain long division of p/q in the given base. Digits are produced until the
// remainder either vanishes (terminating) or repeats; the first repeated
// remainder marks the exact start of the minimal period.
struct Division {
    std::vector<Digit> digits;
    std::size_t cycle_start = 0;  // index into digits; == digits.size() if terminating
    bool terminating = false;
};

Division long_division(const mpz_class& p, const mpz_class& q, int base) {
    Division out;
    std::map<mpz_class, std::size_t> seen;
    mpz_class r = p;
    while (r != 0) {
        auto it = seen.find(r);
        if (it != seen.end()) {
            out.cycle_start = it->second;
            return out;
        }
        seen.emplace(r, out.digits.size());
        r *= base;
        mpz_class d = r / q;
        r -= d * q;
        out.digits.push_back(static_cast<Digit>(d.get_ui()));
    }
    out.terminating = true;
    out.cycle_start = out.digits.size();
    return out;
}

DigitExpansion terminating_form(const Division& div, int base) {
    return DigitExpansion{base, div.digits, {}};
}

DigitExpansion repeating_form(const Division& div, int base) {
    DigitExpansion e{base, div.digits, {}};
    if (div.terminating) {
        // Rewrite ...d as ...(d-1) followed by the repeating base-1 tail.
        e.prefix.back() -= 1;
        e.tail.assign(1, static_cast<Digit>(base - 1));
    } else {
        e.tail.assign(div.digits.begin() + static_cast<std::ptrdiff_t>(div.cycle_start),
                      div.digits.end());
        e.prefix.resize(div.cycle_start);
    }
    return e;
}

}  // namespace

Digit DigitExpansion::digit_at(std::size_t k) const {
    if (k == 0) {
        throw std::domain_error("digit_at: positions are 1-based");
    }
    std::size_t i = k - 1;
    if (i < prefix.size()) {
        return prefix[i];
    }
    if (tail.empty()) {
        return 0;
    }
    return tail[(i - prefix.size()) % tail.size()];
}

bool DigitExpansion::contains_digit(Digit d) const {
    return first_position(d).has_value();
}

std::optional<std::size_t> DigitExpansion::first_position(Digit d) const {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (prefix[i] == d) {
            return i + 1;
        }
    }
    if (tail.empty()) {
        // Trailing zeros: digit 0 first appears right after the prefix.
        return d == 0 ? std::optional<std::size_t>(prefix.size() + 1) : std::nullopt;
    }
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (tail[i] == d) {
            return prefix.size() + i + 1;
        }
    }
    return std::nullopt;
}

std::string DigitExpansion::str() const {
    std::string s = "0.";
    for (Digit d : prefix) {
        s += static_cast<char>('0' + d);
    }
    if (!tail.empty()) {
        s += '(';
        for (Digit d : tail) {
            s += static_cast<char>('0' + d);
        }
        s += ')';
    }
    s += '_';
    s += static_cast<char>('0' + base);
    return s;
}

DigitExpansion expand(const Rational& x, int base) {
    check_base(base);
    check_unit_range(x);
    if (x.is_zero()) {
        return DigitExpansion{base, {}, {}};
    }
    if (x == Rational(1)) {
        return DigitExpansion{base, {}, {static_cast<Digit>(base - 1)}};
    }
    return repeating_form(long_division(x.num(), x.den(), base), base);
}

Rational value(const DigitExpansion& e) {
    check_base(e.base);
    mpz_class prefix_num = 0;
    for (Digit d : e.prefix) {
        if (d >= e.base) {
            throw std::domain_error("digit expansion: digit out of range for base");
        }
        prefix_num = prefix_num * e.base + d;
    }
    mpz_class shift = int_pow(static_cast<unsigned long>(e.base), e.prefix.size());
    if (e.tail.empty()) {
        return Rational(prefix_num, shift);
    }
    mpz_class tail_num = 0;
    for (Digit d : e.tail) {
        if (d >= e.base) {
            throw std::domain_error("digit expansion: digit out of range for base");
        }
        tail_num = tail_num * e.base + d;
    }
    mpz_class period = int_pow(static_cast<unsigned long>(e.base), e.tail.size()) - 1;
    return Rational(prefix_num * period + tail_num, shift * period);
}

DualRepresentations dual_representations(const Rational& x, int base) {
    check_base(base);
    check_unit_range(x);
    DualRepresentations out{expand(x, base), std::nullopt};
    if (x.is_zero() || x == Rational(1)) {
        return out;
    }
    mpz_class q = x.den();
    while (mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(base))) {
        q /= base;
    }
    if (q == 1) {
        out.terminating = terminating_form(long_division(x.num(), x.den(), base), base);
    }
    return out;
}

std::vector<Digit> truncate(const DigitExpansion& e, std::size_t k) {
    std::vector<Digit> out;
    out.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) {
        out.push_back(e.digit_at(i));
    }
    return out;
}

}  // namespace cantor

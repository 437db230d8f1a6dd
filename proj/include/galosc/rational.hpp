#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace galosc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace detail {

// Base-10 parse; cpp_int's string constructor treats a leading 0 as octal.
inline BigInt parse_decimal_digits(const std::string& s) {
    if (s.empty()) return 0;
    bool neg = s[0] == '-';
    size_t start = (neg || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    BigInt v = 0;
    for (size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

}  // namespace detail

/// Parses a decimal literal ("0.5", "-3", "7/4") into an exact rational.
inline Rational rational_from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = detail::parse_decimal_digits(text.substr(0, slash));
        BigInt den = detail::parse_decimal_digits(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(detail::parse_decimal_digits(text));
    BigInt whole = detail::parse_decimal_digits(text.substr(0, dot));
    std::string frac_text = text.substr(dot + 1);
    BigInt frac = detail::parse_decimal_digits(frac_text.empty() ? "0" : frac_text);
    BigInt den = 1;
    for (size_t i = 0; i < frac_text.size(); ++i) den *= 10;
    bool neg = !text.empty() && text[0] == '-';
    Rational out = Rational(whole < 0 ? -whole : whole) + Rational(frac, den);
    return neg ? -out : out;
}

/// Exact complex scalar with rational real and imaginary parts. This is the
/// coefficient field for every symbolic matrix entry; all identities checked
/// against it are literal equalities, never tolerance comparisons.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return {Rational(1)}; }
    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conjugated() const { return {re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n2 = b.re * b.re + b.im * b.im;
        if (n2 == 0) throw std::domain_error("division by zero GaussianRational");
        return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::string str() const {
        std::ostringstream os;
        if (im == 0) {
            os << re;
        } else if (re == 0) {
            os << im << "*i";
        } else {
            os << re << (im > 0 ? "+" : "") << im << "*i";
        }
        return os.str();
    }
};

}  // namespace galosc

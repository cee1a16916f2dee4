#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "mdim/errors.hpp"

namespace mdim {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational. Always in lowest terms with a positive
// denominator. Serializes as "p/q", or "p" when the denominator is 1; parsing
// additionally accepts decimal literals with a finite expansion ("2.5" -> 5/2).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {} // implicit: integers promote freely
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        v_ = Backend(num, den); // cpp_rational reduces to lowest terms
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    // Largest integer <= *this.
    BigInt floor() const {
        BigInt q = numerator() / denominator(); // truncates toward zero
        if (numerator() < 0 && q * denominator() != numerator()) --q;
        return q;
    }
    // Smallest integer >= *this.
    BigInt ceil() const {
        BigInt q = numerator() / denominator();
        if (numerator() > 0 && q * denominator() != numerator()) ++q;
        return q;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    // Accepts "p", "p/q", and finite decimals like "1.75", with optional sign.
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    using Backend = boost::multiprecision::cpp_rational;
    Backend v_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace detail

inline Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    // trim surrounding whitespace
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) throw parse_error("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw parse_error("bad rational literal: \"" + std::string(text) + "\"");

    auto slash = s.find('/');
    auto dot = s.find('.');
    BigInt num, den;
    if (slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!detail::all_digits(p) || !detail::all_digits(q))
            throw parse_error("bad rational literal: \"" + std::string(text) + "\"");
        num = BigInt(std::string(p));
        den = BigInt(std::string(q));
        if (den == 0) throw parse_error("zero denominator in \"" + std::string(text) + "\"");
    } else if (dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw parse_error("bad rational literal: \"" + std::string(text) + "\"");
        if ((!ip.empty() && !detail::all_digits(ip)) || (!fp.empty() && !detail::all_digits(fp)))
            throw parse_error("bad rational literal: \"" + std::string(text) + "\"");
        num = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
        den = 1;
        for (char c : fp) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else {
        if (!detail::all_digits(s))
            throw parse_error("bad rational literal: \"" + std::string(text) + "\"");
        num = BigInt(std::string(s));
        den = 1;
    }
    if (negative) num = -num;
    return Rational(num, den);
}

} // namespace mdim

#include "sched/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace sched {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(mpz_class(num), mpz_class(den));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        return make_rational(parse_integer(trim(s.substr(0, slash)), s),
                             parse_integer(trim(s.substr(slash + 1)), s));
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            int_part.remove_prefix(1);
        }
        if (int_part.empty() && frac_part.empty()) {
            throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
        }
        mpz_class whole = int_part.empty() ? mpz_class(0) : parse_integer(int_part, s);
        mpz_class frac = frac_part.empty() ? mpz_class(0) : parse_integer(frac_part, s);
        if (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+')) {
            throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        Rational q = make_rational(whole * scale + frac, scale);
        return negative ? Rational(-q) : q;
    }
    return Rational(parse_integer(s, s));
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_decimal(const Rational& q, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, q.get_d());
    return buf;
}

}  // namespace sched

#include "heisfree/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace heisfree {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

[[noreturn]] void parse_fail(const char* what, std::string_view text) {
    throw std::invalid_argument(std::string(what) + ": '" + std::string(text) + "'");
}

// Scans an unsigned rational "digits" or "digits/digits" starting at pos.
Rational scan_rational_body(const std::string& s, size_t& pos, std::string_view orig) {
    const size_t num_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == num_start) parse_fail("rational: expected digits", orig);
    std::string num = s.substr(num_start, pos - num_start);
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        const size_t den_start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_start) parse_fail("rational: expected denominator digits", orig);
        den = s.substr(den_start, pos - den_start);
    }
    Rational q(num + "/" + den);
    if (sgn(q.get_den()) == 0) parse_fail("rational: zero denominator", orig);
    q.canonicalize();
    return q;
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    const std::string s = strip_spaces(text);
    size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    Rational q = scan_rational_body(s, pos, text);
    if (pos != s.size()) parse_fail("rational: trailing characters", text);
    return sign < 0 ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const ExactScalar& x) {
    const bool has_a = sgn(x.a) != 0;
    const bool has_b = sgn(x.b) != 0;
    if (!has_a && !has_b) return "0";
    std::string out;
    if (has_a) out += x.a.get_str();
    if (has_b) {
        if (sgn(x.b) > 0) {
            if (has_a) out += "+";
        } else {
            out += "-";
        }
        out += Rational(abs(x.b)).get_str();
        out += "*sqrt2";
    }
    return out;
}

// Inverse of to_string; also accepts any signed sum of "p/q" and
// "p/q*sqrt2" terms (and "sqrt2" as shorthand for "1*sqrt2").
ExactScalar parse_exact_scalar(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) parse_fail("scalar: empty", text);
    Rational a(0), b(0);
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            parse_fail("scalar: expected '+' or '-'", text);
        }
        first = false;
        if (s.compare(pos, 5, "sqrt2") == 0) {
            pos += 5;
            b += sign;
            continue;
        }
        Rational coef = scan_rational_body(s, pos, text);
        if (sign < 0) coef = -coef;
        if (s.compare(pos, 6, "*sqrt2") == 0) {
            pos += 6;
            b += coef;
        } else {
            a += coef;
        }
    }
    return ExactScalar(a, b);
}

std::string to_string(const ExactComplex& z) {
    return "(" + to_string(z.re) + ")+(" + to_string(z.im) + ")i";
}

ExactComplex parse_exact_complex(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) parse_fail("complex: empty", text);
    if (s[0] != '(') {
        // bare real scalar
        return ExactComplex(parse_exact_scalar(s));
    }
    const size_t close1 = s.find(')');
    if (close1 == std::string::npos) parse_fail("complex: missing ')'", text);
    ExactScalar re = parse_exact_scalar(s.substr(1, close1 - 1));
    if (close1 + 1 == s.size()) return ExactComplex(re);  // "(re)"
    if (s.compare(close1, 3, ")+(") != 0) parse_fail("complex: expected ')+('", text);
    if (s.size() < close1 + 4 || s.back() != 'i' || s[s.size() - 2] != ')')
        parse_fail("complex: expected '(im)i'", text);
    ExactScalar im = parse_exact_scalar(s.substr(close1 + 3, s.size() - close1 - 5));
    return ExactComplex(re, im);
}

std::string to_string(const Quaternion& q) {
    std::string out = format_double(q.r0);
    const double coefs[3] = {q.r1, q.r2, q.r3};
    const char units[3] = {'i', 'j', 'k'};
    for (int n = 0; n < 3; ++n) {
        const double c = coefs[n];
        if (c < 0 || std::signbit(c)) {
            out += "-" + format_double(-c);
        } else {
            out += "+" + format_double(c);
        }
        out += units[n];
    }
    return out;
}

Quaternion parse_quaternion(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) parse_fail("quaternion: empty", text);
    double comps[4] = {0, 0, 0, 0};
    bool seen[4] = {false, false, false, false};
    size_t pos = 0;
    while (pos < s.size()) {
        const char* start = s.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(start, &end);
        if (end == start) parse_fail("quaternion: expected number", text);
        pos += static_cast<size_t>(end - start);
        int slot = 0;
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
            slot = s[pos] == 'i' ? 1 : (s[pos] == 'j' ? 2 : 3);
            ++pos;
        }
        if (seen[slot]) parse_fail("quaternion: duplicate component", text);
        seen[slot] = true;
        comps[slot] = v;
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            parse_fail("quaternion: expected '+' or '-'", text);
    }
    return {comps[0], comps[1], comps[2], comps[3]};
}

}  // namespace heisfree

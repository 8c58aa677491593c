#include "credence/rational.hpp"

#include "credence/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace credence {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view digits) {
    Integer value = 0;
    for (char c : digits) {
        value *= 10;
        value += c - '0';
    }
    return value;
}

Integer pow10(int n) {
    Integer p = 1;
    for (int i = 0; i < n; ++i) p *= 10;
    return p;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty number");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) throw ParseError("sign with no digits in '" + std::string(text) + "'");
    }

    Rational magnitude;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + std::string(text) + "'");
        Integer d = parse_integer(den);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        magnitude = Rational(parse_integer(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        Integer scaled = whole.empty() ? Integer(0) : parse_integer(whole);
        for (char c : frac) {
            scaled *= 10;
            scaled += c - '0';
        }
        magnitude = Rational(scaled, pow10(static_cast<int>(frac.size())));
    } else {
        if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
        magnitude = Rational(parse_integer(s));
    }
    return negative ? Rational(-magnitude) : magnitude;
}

std::string fraction_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational round_decimal(const Rational& r, int places) {
    const Integer scale = pow10(places);
    const Rational scaled = r * scale;
    const Integer num = boost::multiprecision::numerator(scaled);
    const Integer den = boost::multiprecision::denominator(scaled);
    // floor(|scaled|) plus a half-up carry, sign reattached
    Integer absnum = abs(num);
    Integer q = absnum / den;
    Integer rem = absnum % den;
    if (rem * 2 >= den) ++q;
    Rational rounded(q, scale);
    return num < 0 ? Rational(-rounded) : rounded;
}

Rational truncate_decimal(const Rational& r, int places) {
    const Integer scale = pow10(places);
    const Rational scaled = r * scale;
    Integer q = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    // Integer division truncates toward zero for cpp_int, which is what we want.
    return Rational(q, scale);
}

std::string decimal_string(const Rational& r, int places, DecimalRounding rounding) {
    const Rational fixed = rounding == DecimalRounding::HalfUp ? round_decimal(r, places)
                                                               : truncate_decimal(r, places);
    const Integer scale = pow10(places);
    Integer units = boost::multiprecision::numerator(Rational(fixed * scale));
    std::string sign = units < 0 ? "-" : "";
    Integer absunits = abs(units);
    Integer whole = absunits / scale;
    Integer frac = absunits % scale;
    if (places == 0) return sign + whole.str();
    std::string fracs = frac.str();
    fracs.insert(fracs.begin(), places - fracs.size(), '0');
    return sign + whole.str() + "." + fracs;
}

std::string significant_string(const Rational& r, int digits) {
    if (r == 0) return "0";
    Rational a = abs(r);
    // Smallest e with |r| < 10^e, i.e. the position of the leading digit.
    int e = 0;
    if (a >= 1) {
        Rational t = a;
        while (t >= 1) {
            t /= 10;
            ++e;
        }
    } else {
        Rational t = a;
        while (t < Rational(1, 10)) {
            t *= 10;
            --e;
        }
    }
    const int places = std::max(0, digits - e);
    std::string s = decimal_string(a, places, DecimalRounding::HalfUp);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return (r < 0 ? "-" : "") + s;
}

std::string published_style(const Rational& r, int places) {
    std::string s = decimal_string(r, places, DecimalRounding::Truncate);
    if (s.size() > 2 && s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s += '0';
    }
    if (s.rfind("0.", 0) == 0) s.erase(0, 1);
    return s;
}

} // namespace credence

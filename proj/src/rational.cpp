#include "stablereg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace stablereg {

Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("cannot parse rational '" + text + "'"); };
    if (text.empty()) bad();

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        try {
            long long n = std::stoll(text.substr(0, slash));
            long long d = std::stoll(text.substr(slash + 1));
            return Rational(n, d);
        } catch (const std::exception&) {
            bad();
        }
    }

    auto dot = text.find('.');
    if (dot == std::string::npos) {
        try {
            return Rational(std::stoll(text));
        } catch (const std::exception&) {
            bad();
        }
    }

    // Finite decimal, converted exactly.
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.size() > 18) bad();
    for (char c : whole)
        if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long num;
    try {
        num = std::stoll(whole) * den + std::stoll(frac);
    } catch (const std::exception&) {
        bad();
        return {};
    }
    return Rational(neg ? -num : num, den);
}

Rational pow_rational(const Rational& base, int exp) {
    if (exp < 0) return Rational(1) / pow_rational(base, -exp);
    Rational r(1);
    for (int i = 0; i < exp; ++i) r = r * base;
    return r;
}

}  // namespace stablereg

#include "pio/rational.hpp"

#include "pio/errors.hpp"

#include <cctype>

namespace pio {

Rational make_rational(Int num, Int den) {
    if (den == 0) throw ParseError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den); // cpp_rational keeps gcd(|num|, den) == 1
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto bad = [&](const char* why) {
        throw ParseError("bad rational '" + text + "': " + why);
    };

    std::string num = text;
    std::string den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }

    bool negative = false;
    if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
        negative = num[0] == '-';
        num.erase(0, 1);
    }
    if (!all_digits(num)) bad("numerator must be an integer");
    if (!all_digits(den)) bad("denominator must be a positive integer");

    Int d(den);
    if (d == 0) bad("zero denominator");
    Int n(num);
    return make_rational(negative ? -n : n, d);
}

std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) out += "/" + denominator(value).str();
    return out;
}

} // namespace pio

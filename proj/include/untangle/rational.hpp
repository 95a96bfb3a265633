#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace untangle {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& x) {
    if (x < 0) return -1;
    if (x > 0) return 1;
    return 0;
}

// Parses a decimal string ("-12", "3.25", "0.0005") into an exact rational.
// Scientific notation and fraction slashes are not part of the file formats.
inline std::optional<Rat> parse_decimal(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    BigInt whole = 0, frac = 0, scale = 1;
    bool any_digit = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        whole = whole * 10 + (text[pos] - '0');
        any_digit = true;
        ++pos;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            frac = frac * 10 + (text[pos] - '0');
            scale *= 10;
            any_digit = true;
            ++pos;
        }
    }
    if (!any_digit || pos != text.size()) return std::nullopt;
    Rat value = Rat(whole) + Rat(frac, scale);
    if (negative) value = -value;
    return value;
}

// Formats a rational whose denominator divides a power of ten as a minimal
// decimal string. Throws for values with no finite decimal expansion; all
// coordinates written by this library are generated on decimal grids.
inline std::string format_decimal(const Rat& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;
    int tens = 0;
    BigInt d = den;
    while (d % 2 == 0) { d /= 2; ++tens; }
    int fives = 0;
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) throw std::invalid_argument("rational has no finite decimal form");
    int digits = tens > fives ? tens : fives;
    BigInt scaled = num;
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= den;
    std::string s = scaled.str();
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    std::string out;
    if (negative) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        std::string tail = s.substr(s.size() - digits);
        while (!tail.empty() && tail.back() == '0') tail.pop_back();
        if (!tail.empty()) {
            out += '.';
            out += tail;
        }
    }
    if (out == "-0") out = "0";
    return out;
}

inline double to_double(const Rat& value) {
    return static_cast<double>(value);
}

}  // namespace untangle

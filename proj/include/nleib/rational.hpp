#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace nleib {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always kept canonical: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. All arithmetic re-canonicalizes.
using Rational = boost::multiprecision::cpp_rational;

/// num/den with sign normalization; den == 0 is rejected.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Parses an optionally signed integer "p" or a fraction "p/q" with q > 0.
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    };
    const auto slash = text.find('/');
    std::string num_part = text.substr(0, slash);
    std::size_t i = 0;
    if (i < num_part.size() && (num_part[i] == '+' || num_part[i] == '-')) ++i;
    if (i == num_part.size()) throw bad();
    for (; i < num_part.size(); ++i)
        if (num_part[i] < '0' || num_part[i] > '9') throw bad();
    if (num_part[0] == '+') num_part.erase(0, 1);

    if (slash == std::string::npos) return Rational(BigInt(num_part));

    const std::string den_part = text.substr(slash + 1);
    if (den_part.empty()) throw bad();
    for (char c : den_part)
        if (c < '0' || c > '9') throw bad();
    BigInt den(den_part);
    if (den <= 0) throw std::invalid_argument("parse_rational: denominator must be positive in '" + text + "'");
    return Rational(BigInt(num_part), den);
}

}  // namespace nleib

// Exact arbitrary-precision rationals used for all character arithmetic.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace realchar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& z) { return z.str(); }

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace realchar

#pragma once

// Exact big-integer / rational arithmetic used by the counting formulas.
// The proportion formulas overflow 64-bit integers well before q = 9, so all
// counts are cpp_int and all ratios are eagerly reduced cpp_rational values.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mrd33 {

using ExactCount = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

inline ExactCount pow_int(long long base, unsigned exp) {
    ExactCount r = 1;
    ExactCount b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

// Exact division; the counting identities only ever divide evenly.
inline ExactCount div_exact(const ExactCount& num, const ExactCount& den, const char* what) {
    if (den == 0 || num % den != 0)
        throw std::logic_error(std::string("non-exact division in ") + what);
    return num / den;
}

inline std::string to_decimal(const ExactCount& n) { return n.str(); }

}  // namespace mrd33

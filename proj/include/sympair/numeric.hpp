#pragma once

#include <gmpxx.h>

#include <string>

namespace sympair {

// All arithmetic in this library is exact: arbitrary-precision integers for
// multiplicities and exact rationals for series coefficients. There is no
// floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

// "3", "1/2", "-7/4"; never a decimal point.
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace sympair

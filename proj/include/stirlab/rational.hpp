#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace stirlab {

// Exact scalars. Every coefficient in the library is an mpq_class; integer
// coefficients are the denominator-1 case and GMP keeps them canonical.
using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an enumeration guard would be exceeded; carries the estimate.
struct GuardError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int t) {
    if (t < 0 || t > n) return 0;
    Int r = 1;
    for (int i = 0; i < t; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Rat rat_pow(const Rat& base, int e) {
    if (e < 0) throw Error("rat_pow: negative exponent");
    Rat r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

} // namespace stirlab

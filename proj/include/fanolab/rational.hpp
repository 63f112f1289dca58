#pragma once

// Exact arithmetic: GMP integers and rationals, plus the "p/q" string form
// used by every file format in this project.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fanolab {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Round toward -infinity; exact.
Int floor_div(const Int& a, const Int& b);

// "p/q" (or plain "p") with arbitrary precision; rejects anything else.
Rat parse_rational(const std::string& s);

// Canonical string: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rat& q);

std::int64_t to_i64(const Int& z);

} // namespace fanolab

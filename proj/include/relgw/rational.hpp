#ifndef RELGW_RATIONAL_HPP
#define RELGW_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace relgw
{

// Exact rationals everywhere; there is no floating point in this library.
using Rational = mpq_class;

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &r);

// Parses "p", "-p" or "p/q". Throws parse_error on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// p/q in canonical form.
inline Rational fraction(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational &r)
{
    return sgn(r) == 0;
}

} // namespace relgw

#endif

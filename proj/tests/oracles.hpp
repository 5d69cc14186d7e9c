#ifndef RELGW_TEST_ORACLES_HPP
#define RELGW_TEST_ORACLES_HPP

#include <relgw/cohomology.hpp>
#include <relgw/insertions.hpp>

namespace oracle
{

using relgw::BasisIndex;
using relgw::CohClass;
using relgw::CohRing;
using relgw::Rational;

// Monomial of a basis label as a class on D (restricting when the label sits at contact order 0).
inline CohClass on_divisor(int n, BasisIndex b)
{
    CohClass c = CohClass::monomial(CohRing(b.i == 0 ? n : n - 1), b.k);
    return b.i == 0 ? relgw::restrict_to_divisor(c) : c;
}

// The four-case tri-linear display, evaluated on basis labels with the cohomology module only.
inline Rational A(int n, BasisIndex x, BasisIndex y, BasisIndex z)
{
    if (x.i + y.i + z.i != 0) {
        return 0;
    }
    if (x.i == 0 && y.i == 0 && z.i == 0) {
        CohRing X(n);
        return relgw::integrate(relgw::cup(relgw::cup(CohClass::monomial(X, x.k), CohClass::monomial(X, y.k)),
                                           CohClass::monomial(X, z.k)));
    }
    int negatives = (x.i < 0) + (y.i < 0) + (z.i < 0);
    CohClass v = relgw::cup(relgw::cup(on_divisor(n, x), on_divisor(n, y)), on_divisor(n, z));
    if (negatives == 2) {
        if (n == 1) {
            return 0;
        }
        v = relgw::cup(v, CohClass::monomial(CohRing(n - 1), 1));
    }
    return relgw::integrate(v);
}

} // namespace oracle

#endif

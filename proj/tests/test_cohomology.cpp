#include <doctest.h>

#include <relgw/cohomology.hpp>
#include <relgw/errors.hpp>

using namespace relgw;

namespace
{

CohClass H(int dim, int a, const Rational &c = 1)
{
    return CohClass::monomial(CohRing(dim), a, c);
}

} // namespace

TEST_CASE("rings have monomial bases")
{
    CHECK(make_ring(0).rank() == 1);
    CHECK(make_ring(1).rank() == 2);
    CHECK(make_ring(2).rank() == 3);
    CHECK_THROWS_AS(make_ring(-1), domain_error);
}

TEST_CASE("cup product truncates")
{
    CHECK(cup(H(2, 1), H(2, 1)) == H(2, 2));
    CHECK(cup(H(2, 2), H(2, 1)).is_zero());
    CohClass one_plus_h = H(1, 0) + H(1, 1);
    CHECK(cup(one_plus_h, one_plus_h) == H(1, 0) + H(1, 1, 2));
    CHECK_THROWS_AS(cup(H(1, 1), H(2, 1)), ring_mismatch);
}

TEST_CASE("integration reads the top coefficient")
{
    CHECK(integrate(H(2, 2)) == 1);
    CHECK(integrate(H(2, 1)) == 0);
    CHECK(integrate(H(1, 1, 3)) == 3);
}

TEST_CASE("restriction and gysin")
{
    CHECK(restrict_to_divisor(H(2, 1)) == H(1, 1));
    CHECK(restrict_to_divisor(H(2, 2)).is_zero());
    CHECK(restrict_to_divisor(H(3, 0) + H(3, 1)) == H(2, 0) + H(2, 1));
    CHECK(gysin(H(1, 0)) == H(2, 1));
    CHECK(gysin(H(1, 1)) == H(2, 2));
    CHECK(gysin(H(2, 2)) == H(3, 3));
}

TEST_CASE("projection formula, exhaustive for n <= 4")
{
    for (int n = 1; n <= 4; ++n) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b <= n; ++b) {
                Rational lhs = integrate(cup(gysin(H(n - 1, a)), H(n, b)));
                Rational rhs = integrate(cup(H(n - 1, a), restrict_to_divisor(H(n, b))));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("restriction is a ring homomorphism")
{
    for (int n = 1; n <= 4; ++n) {
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; b <= n; ++b) {
                CohClass x = H(n, a, a + 1) + H(n, 0, -2);
                CohClass y = H(n, b, fraction(1, 3)) + H(n, n);
                CHECK(restrict_to_divisor(cup(x, y)) == cup(restrict_to_divisor(x), restrict_to_divisor(y)));
            }
        }
    }
}

TEST_CASE("Gram matrix is anti-diagonal")
{
    for (int m = 0; m <= 5; ++m) {
        CohRing r(m);
        for (int a = 0; a <= m; ++a) {
            for (int b = 0; b <= m; ++b) {
                Rational g = integrate(cup(H(m, a), H(m, b)));
                CHECK(g == (a + b == m ? 1 : 0));
                CHECK(r.pairing(a, b) == g);
            }
            CHECK(r.dual_index(a) == m - a);
        }
    }
}

TEST_CASE("log tangent first Chern class from the Euler and residue sequences")
{
    for (int n = 1; n <= 5; ++n) {
        CohClass tangent = H(n, 1, n + 1);
        CohClass divisor = gysin(CohClass::unit(CohRing(n - 1)));
        CHECK(c1_log_tangent(n) == tangent - divisor);
        CHECK(c1_log_tangent(n) == H(n, 1, n));
    }
    CHECK_THROWS_AS(c1_log_tangent(0), domain_error);
}

TEST_CASE("Hodge type of monomials")
{
    CHECK(hodge_p(H(3, 2)) == 2);
    CHECK(hodge_p(H(2, 0)) == 0);
    CHECK(hodge_p(H(1, 1)) == 1);
    CHECK_THROWS_AS(hodge_p(H(2, 0) + H(2, 1)), domain_error);
}

TEST_CASE("formatting")
{
    CHECK(format_class(H(2, 0), 'H') == "1");
    CHECK(format_class(H(2, 1, 3), 'H') == "3*H");
    CHECK(format_class(H(2, 2) + H(2, 1, -1), 'H') == "H^2 - H");
}

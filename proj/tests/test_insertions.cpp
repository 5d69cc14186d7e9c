#include <doctest.h>

#include "oracles.hpp"

#include <relgw/errors.hpp>
#include <relgw/insertions.hpp>

#include <cstdlib>
#include <optional>
#include <random>

using namespace relgw;

namespace
{

InsClass T(const InsContext &ctx, int i, int k, const Rational &c = 1)
{
    return InsClass::basis(ctx, i, k, c);
}

InsClass P(const InsContext &ctx, const char *text)
{
    return parse_insertion(text, ctx);
}

} // namespace

TEST_CASE("embedding")
{
    InsContext ctx = make_context(2, 4);
    CHECK(embed(ctx, CohClass::monomial(CohRing(2), 1), 0) == T(ctx, 0, 1));
    CHECK(embed(ctx, CohClass::unit(CohRing(1)), -2) == T(ctx, -2, 0));
    CHECK_THROWS_AS(embed(ctx, CohClass::monomial(CohRing(1), 1), 5), window_overflow);
    CHECK_THROWS_AS(embed(ctx, CohClass::monomial(CohRing(2), 1), 1), ring_mismatch);
    CHECK_THROWS_AS(embed(ctx, CohClass::monomial(CohRing(1), 1), 0), ring_mismatch);
}

TEST_CASE("pairing examples")
{
    InsContext ctx = make_context(2, 4);
    CHECK(pairing(T(ctx, 0, 1), T(ctx, 0, 1)) == 1);
    CHECK(pairing(T(ctx, 0, 1), T(ctx, 0, 0)) == 0);
    CHECK(pairing(T(ctx, 1, 0), T(ctx, -1, 1)) == 1);
    CHECK(pairing(T(ctx, 1, 0), T(ctx, 2, 0)) == 0);
    InsContext one = make_context(1, 3);
    CHECK(pairing(T(one, 1, 0), T(one, -1, 0)) == 1);
}

TEST_CASE("dual basis examples")
{
    CHECK(dual_basis_element(make_context(2, 4), 0, 0) == T(make_context(2, 4), 0, 2));
    CHECK(dual_basis_element(make_context(2, 4), 3, 1) == T(make_context(2, 4), -3, 0));
    CHECK(dual_basis_element(make_context(1, 4), 1, 0) == T(make_context(1, 4), -1, 0));
    CHECK_THROWS_AS(dual_basis_element(make_context(2, 2), 3, 0), window_overflow);
}

TEST_CASE("tri-linear form examples")
{
    InsContext ctx = make_context(2, 4);
    CHECK(trilinear_A(T(ctx, 1, 1), T(ctx, -2, 0), T(ctx, 1, 0)) == 1);
    CHECK(trilinear_A(T(ctx, -1, 0), T(ctx, -1, 0), T(ctx, 2, 0)) == 1);
    CHECK(trilinear_A(T(ctx, 1, 0), T(ctx, 1, 0), T(ctx, 1, 0)) == 0);
}

TEST_CASE("tri-linear form agrees with the case display on every basis triple")
{
    for (int n = 1; n <= 3; ++n) {
        InsContext ctx = make_context(n, 3);
        auto basis = window_basis(ctx);
        for (auto x : basis) {
            for (auto y : basis) {
                for (auto z : basis) {
                    CHECK(trilinear_A(T(ctx, x.i, x.k), T(ctx, y.i, y.k), T(ctx, z.i, z.k)) ==
                          oracle::A(n, x, y, z));
                }
            }
        }
    }
}

TEST_CASE("product examples")
{
    InsContext ctx = make_context(2, 4);
    CHECK(product(T(ctx, 1, 0), T(ctx, -1, 0)) == T(ctx, 0, 1));
    CHECK(product(T(ctx, -1, 0), T(ctx, -1, 0)) == T(ctx, -2, 1));
    CHECK(product(T(ctx, 1, 1), T(ctx, 2, 0)) == T(ctx, 3, 1));
    CHECK(product_via_A(T(ctx, 1, 0), T(ctx, -1, 0)) == T(ctx, 0, 1));
    CHECK(product_via_A(T(ctx, -1, 0), T(ctx, -1, 0)) == T(ctx, -2, 1));
    CHECK(product_via_A(T(ctx, 0, 1), T(ctx, 0, 2)).is_zero());
    CHECK_THROWS_AS(product(T(make_context(2, 2), 1, 0), T(make_context(2, 2), 2, 0)), window_overflow);
}

TEST_CASE("ring axioms, exhaustive for n <= 3 and W <= 4")
{
    for (int n = 1; n <= 3; ++n) {
        for (int w = 1; w <= 4; ++w) {
            InsContext ctx = make_context(n, w);
            auto basis = window_basis(ctx);
            InsClass one = T(ctx, 0, 0);
            auto mult = [&](const InsClass &a, const InsClass &b) -> std::optional<InsClass> {
                try {
                    return product(a, b);
                } catch (const window_overflow &) {
                    return std::nullopt;
                }
            };
            for (auto x : basis) {
                InsClass a = T(ctx, x.i, x.k);
                CHECK(product(one, a) == a);
                CHECK(product(a, one) == a);
                for (auto y : basis) {
                    InsClass b = T(ctx, y.i, y.k);
                    auto ab = mult(a, b);
                    if (!ab) {
                        CHECK(std::abs(x.i + y.i) > w);
                        continue;
                    }
                    CHECK(*ab == product(b, a));
                    CHECK(*ab == product_via_A(a, b));
                    if (!ab->is_zero()) {
                        CHECK(bidegree(*ab) == bidegree(x) + bidegree(y));
                    }
                    for (auto z : basis) {
                        InsClass c = T(ctx, z.i, z.k);
                        CHECK(pairing(*ab, c) == trilinear_A(a, b, c));
                        auto bc = mult(b, c);
                        if (!bc) {
                            continue;
                        }
                        auto l = mult(*ab, c);
                        auto r = mult(a, *bc);
                        if (l && r) {
                            CHECK(*l == *r);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("Gram identity for the dual basis")
{
    for (int n = 1; n <= 3; ++n) {
        InsContext ctx = make_context(n, 4);
        for (auto b : window_basis(ctx)) {
            for (int k2 = 0; k2 < rank_at(ctx, b.i); ++k2) {
                Rational v = pairing(T(ctx, b.i, b.k), dual_basis_element(ctx, b.i, k2));
                CHECK(v == (b.k == k2 ? 1 : 0));
            }
            CHECK(dual_basis_element(ctx, b.i, b.k) == T(ctx, dual_label(n, b).i, dual_label(n, b).k));
        }
    }
}

TEST_CASE("bidegree")
{
    InsContext ctx = make_context(2, 4);
    CHECK(bidegree(T(ctx, 0, 1)) == Bidegree{0, 1});
    CHECK(bidegree(T(ctx, -1, 0)) == Bidegree{-1, 1});
    CHECK(bidegree(T(ctx, 2, 1)) == Bidegree{2, 1});
    CHECK(bidegree(T(ctx, 2, 1, 5)) == Bidegree{2, 1});
    CHECK_THROWS_AS(bidegree(T(ctx, 0, 1) + T(ctx, 1, 0)), domain_error);
    CHECK_THROWS_AS(bidegree(InsClass(ctx)), domain_error);
}

TEST_CASE("parser examples")
{
    InsContext ctx = make_context(2, 4);
    CHECK(P(ctx, "H^1@0") == T(ctx, 0, 1));
    CHECK(P(ctx, "2*h^1@-3 + 1@1") == T(ctx, -3, 1, 2) + T(ctx, 1, 0));
    CHECK(P(ctx, "1/2*1@0") == T(ctx, 0, 0, fraction(1, 2)));
    CHECK_THROWS_AS(P(ctx, "H^1@@0"), parse_error);
    CHECK_THROWS_AS(P(ctx, "h^1@0"), parse_error);
    CHECK_THROWS_AS(P(ctx, "H^1@2"), parse_error);
    CHECK_THROWS_AS(P(ctx, "1@9"), window_overflow);
    try {
        P(ctx, "H^1@@0");
    } catch (const parse_error &e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("format and parse round trip on random classes")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        InsContext ctx = make_context(n, 4);
        auto basis = window_basis(ctx);
        InsClass c(ctx);
        int terms = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < terms; ++j) {
            auto b = basis[rng() % basis.size()];
            long p = static_cast<long>(rng() % 11) - 5;
            long q = 1 + static_cast<long>(rng() % 4);
            c += T(ctx, b.i, b.k, fraction(p, q));
        }
        if (c.is_zero()) {
            continue;
        }
        CHECK(P(ctx, format_expr(c).c_str()) == c);
    }
}

TEST_CASE("bracket formatting")
{
    InsContext ctx = make_context(3, 4);
    CHECK(format_bracket(T(ctx, 0, 1)) == "[H]@0");
    CHECK(format_bracket(T(ctx, -3, 2, 2) + T(ctx, 1, 0)) == "2*[h^2]@-3 + [1]@1");
}

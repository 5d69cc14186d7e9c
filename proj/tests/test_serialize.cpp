#include <doctest.h>

#include <relgw/errors.hpp>
#include <relgw/serialize.hpp>

#include <random>

using namespace relgw;

TEST_CASE("rationals")
{
    CHECK(to_json(fraction(-6, 4)) == Json("-3/2"));
    CHECK(to_json(Rational(5)) == Json("5"));
    std::mt19937 rng(11);
    for (int j = 0; j < 500; ++j) {
        Rational r = fraction(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 97));
        CHECK(parse_rational(to_json(r).get<std::string>()) == r);
    }
}

TEST_CASE("classes and q-series")
{
    InsContext ctx = make_context(2, 2);
    InsClass c = InsClass::basis(ctx, 0, 1, 3) + InsClass::basis(ctx, -1, 0, fraction(1, 2));
    Json j = to_json(c);
    REQUIRE(j.size() == 2);
    CHECK(j[0] == Json({{"i", -1}, {"k", 0}, {"coef", "1/2"}}));
    CHECK(j[1] == Json({{"i", 0}, {"k", 1}, {"coef", "3"}}));

    QSeriesClass s = quantum_product_small(InsClass::basis(ctx, 0, 1), InsClass::basis(ctx, 0, 2), 2);
    Json q = to_json(s);
    REQUIRE(q.size() == 1);
    CHECK(q[0]["q"] == 1);
    CHECK(q[0]["class"] == to_json(InsClass::basis(ctx, -1, 0)));
}

TEST_CASE("graph JSON round trip")
{
    for (int d = 1; d <= 3; ++d) {
        for (const auto &mu : std::vector<std::vector<int>>{{d}, {1, d}, {d, -1}, {1, 1, d - 2}}) {
            int sum = 0;
            for (int w : mu) {
                sum += w;
            }
            if (sum != d || std::count(mu.begin(), mu.end(), 0) != 0) {
                continue;
            }
            for (int legs = 0; legs <= 1; ++legs) {
                for (const auto &g : enumerate(make_toptype(legs, d, mu), 2)) {
                    Json j = to_json(g);
                    BipartiteGraph back = graph_from_json(j);
                    CHECK(to_json(back) == j);
                    CHECK(canonical_form(back) == canonical_form(g));
                    CHECK(graph_from_json(Json::parse(j.dump())).edges == g.edges);
                }
            }
        }
    }
}

TEST_CASE("malformed graph JSON")
{
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), parse_error);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": [{"side": "left", "degree": 0, "legs": [], "roots": []}], "edges": []})")),
                    parse_error);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": [{"side": "zero", "degree": "x", "legs": [], "roots": []}], "edges": []})")),
                    parse_error);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": [], "edges": [[1]]})")), parse_error);
    CHECK_NOTHROW(graph_from_json(Json::parse(R"({"vertices": [], "edges": []})")));
}

TEST_CASE("structure table and verification report")
{
    StructureTable t = solve_structure_constants(1, 1, 1);
    Json j = to_json(t);
    CHECK(j["n"] == 1);
    CHECK(j["W"] == 1);
    CHECK(j["Qmax"] == 1);
    CHECK(j["entries"].size() == t.entries().size());
    for (const auto &e : j["entries"]) {
        CHECK(e.contains("lhs"));
        CHECK(e.contains("rhs"));
        CHECK(e["status"].is_string());
        if (e["status"] != "determined") {
            CHECK(e["coeffs"].empty());
        }
    }
    Json r = to_json(verify_against_oracle(t));
    CHECK(r["mismatches"] == 0);
    CHECK(r["entries"] == t.entries().size());
}

TEST_CASE("operators and reports")
{
    DiffOperator op;
    op.add({-1, {{0, {0, 1}}, {0, {0, 0}}}, {}}, fraction(1, 2));
    op.add({0, {}, {{1, {0, 0}}}}, -1);
    Json j = to_json(op);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["hbar"] == -1);
    CHECK(j[0]["coef"] == "1/2");
    CHECK(j[0]["vars"][0] == Json({{"l", 0}, {"i", 0}, {"k", 0}}));
    CHECK(j[0]["vars"][1] == Json({{"l", 0}, {"i", 0}, {"k", 1}}));
    CHECK(j[1]["derivs"][0] == Json({{"l", 1}, {"i", 0}, {"k", 0}}));

    Json b = to_json(check_bracket(-1, 1, make_zwindow(make_context(2, 2), -6, 6)));
    CHECK(b["factor"] == "2");
    CHECK(b["exact"] == true);

    ResidualReport rep;
    rep.tested = 4;
    rep.nonzero.push_back({1, {{0, {1, 0}}}, fraction(-2, 3)});
    Json r = to_json(rep);
    CHECK(r["tested"] == 4);
    CHECK(r["untestable"] == 0);
    CHECK(r["nonzero"][0]["q"] == 1);
    CHECK(r["nonzero"][0]["value"] == "-2/3");
}

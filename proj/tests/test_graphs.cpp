#include <doctest.h>

#include "brute_graphs.hpp"

#include <relgw/errors.hpp>
#include <relgw/graphs.hpp>

#include <relgw/rational.hpp>

#include <random>
#include <set>

using namespace relgw;

namespace
{

bool has_violation(const BipartiteGraph &g, const std::string &cond)
{
    for (const auto &v : validate(g)) {
        if (v.condition == cond) {
            return true;
        }
    }
    return false;
}

// One zero vertex with a 0-root of weight w0 and node roots of the given weights, each joined to its own inf vertex.
BipartiteGraph star(int w0, const std::vector<int> &node_weights)
{
    BipartiteGraph g;
    ZeroVertex z;
    z.zero_roots.push_back({w0, 1});
    int slot = 0;
    int sum = w0;
    for (int w : node_weights) {
        z.inf_nodes.push_back({-w, slot});
        InfVertex x;
        x.degree = w;
        x.node_roots.push_back({w, slot + 1});
        g.inf.push_back(x);
        g.edges.push_back({slot, slot + 1});
        slot += 2;
        sum -= w;
    }
    z.degree = sum;
    g.zero.push_back(z);
    return g;
}

// Random relabeling of vertex order and slot numbers.
BipartiteGraph shuffle(const BipartiteGraph &g, std::mt19937 &rng)
{
    BipartiteGraph h = g;
    std::shuffle(h.zero.begin(), h.zero.end(), rng);
    std::shuffle(h.inf.begin(), h.inf.end(), rng);
    std::map<int, int> rename;
    int next = 100 + static_cast<int>(rng() % 50);
    auto fresh = [&](int s) {
        if (!rename.count(s)) {
            rename[s] = next;
            next += 1 + static_cast<int>(rng() % 3);
        }
        return rename[s];
    };
    for (auto &z : h.zero) {
        std::shuffle(z.inf_nodes.begin(), z.inf_nodes.end(), rng);
        for (auto &r : z.inf_nodes) {
            r.slot = fresh(r.slot);
        }
    }
    for (auto &x : h.inf) {
        std::shuffle(x.node_roots.begin(), x.node_roots.end(), rng);
        for (auto &r : x.node_roots) {
            r.slot = fresh(r.slot);
        }
    }
    for (auto &e : h.edges) {
        e.zero_slot = fresh(e.zero_slot);
        e.inf_slot = fresh(e.inf_slot);
    }
    std::shuffle(h.edges.begin(), h.edges.end(), rng);
    return h;
}

} // namespace

TEST_CASE("validate examples")
{
    BipartiteGraph single;
    InfVertex x;
    x.degree = 1;
    x.mark_roots.push_back({1, 1});
    single.inf.push_back(x);
    CHECK(validate(single).empty());

    BipartiteGraph bad = star(3, {3});
    bad.zero[0].inf_nodes[0].weight = -2;
    bad.zero[0].degree = 1;
    CHECK(has_violation(bad, "d"));

    BipartiteGraph unstable;
    ZeroVertex z;
    z.zero_roots.push_back({1, 1});
    z.inf_marks.push_back({-1, 2});
    unstable.zero.push_back(z);
    CHECK(has_violation(unstable, "e"));
}

TEST_CASE("validate catches structural defects")
{
    BipartiteGraph g = star(2, {1, 1});
    CHECK(validate(g).empty());
    BipartiteGraph dangling = g;
    dangling.edges.pop_back();
    CHECK(has_violation(dangling, "a"));
    BipartiteGraph unbalanced = g;
    unbalanced.inf[0].degree = 2;
    CHECK(has_violation(unbalanced, "c"));
    BipartiteGraph no_root;
    ZeroVertex z;
    z.degree = 1;
    z.zero_roots.push_back({1, 1});
    no_root.zero.push_back(z);
    CHECK(has_violation(no_root, "rubber"));
    BipartiteGraph sign = g;
    sign.zero[0].zero_roots[0].weight = -2;
    CHECK(has_violation(sign, "sign"));
    BipartiteGraph labels = g;
    labels.zero[0].zero_roots[0].label = 5;
    CHECK(has_violation(labels, "markings"));
    BipartiteGraph cycle;
    ZeroVertex c;
    c.zero_roots.push_back({2, 1});
    c.inf_nodes = {{-1, 0}, {-1, 2}};
    InfVertex w;
    w.degree = 2;
    w.node_roots = {{1, 1}, {1, 3}};
    cycle.zero.push_back(c);
    cycle.inf.push_back(w);
    cycle.edges = {{0, 1}, {2, 3}};
    CHECK(has_violation(cycle, "acyclic"));
    CHECK(validate(g, 1).empty());
    CHECK(!validate(star(3, {1, 1}), 1).empty());
    CHECK(validate(star(3, {1, 1}), 2).empty());
}

TEST_CASE("topological type examples")
{
    BipartiteGraph g = star(3, {1, 1});
    g.zero[0].inf_marks.push_back({-1, 2});
    g.zero[0].degree = 0;
    REQUIRE(validate(g).empty());
    TopType t = topological_type(g);
    CHECK(t.degree == 2);
    CHECK(t.n_legs == 0);
    CHECK(t.rho == 2);
    CHECK(t.mu == std::vector<int>{3, -1});
    CHECK(t.rho_minus() == 1);

    BipartiteGraph pos;
    InfVertex x;
    x.degree = 3;
    x.mark_roots = {{1, 1}, {2, 2}};
    pos.inf.push_back(x);
    CHECK(topological_type(pos).mu == std::vector<int>{1, 2});
    CHECK(topological_type(pos).rho_minus() == 0);

    BipartiteGraph split = pos;
    InfVertex y;
    y.degree = 1;
    y.mark_roots = {{1, 3}};
    split.inf.push_back(y);
    CHECK_THROWS_AS(topological_type(split), domain_error);
}

TEST_CASE("enumeration examples")
{
    auto one = enumerate(make_toptype(0, 1, {1}), 2);
    REQUIRE(one.size() == 1);
    CHECK(one[0].zero.empty());
    CHECK(one[0].inf.size() == 1);
    CHECK(brute::generate(make_toptype(0, 1, {1}), 2).size() == 1);

    auto legs = enumerate(make_toptype(3, 0, {}), 3);
    REQUIRE(legs.size() == 1);
    CHECK(legs[0].inf.size() == 1);
    CHECK(legs[0].inf[0].degree == 0);
    CHECK(legs[0].inf[0].legs.size() == 3);

    CHECK(enumerate(make_toptype(0, 0, {1, -1}), 2).empty());
    CHECK(brute::generate(make_toptype(0, 0, {1, -1}), 2).empty());

    CHECK_THROWS_AS(make_toptype(0, 1, {1, 1}), domain_error);
    CHECK_THROWS_AS(make_toptype(0, 1, {1, 0}), domain_error);
}

TEST_CASE("automorphism examples")
{
    BipartiteGraph sym = star(2, {1, 1});
    REQUIRE(validate(sym).empty());
    CHECK(automorphism_order(sym) == 2);
    CHECK(tree_automorphism_order(sym) == 2);

    BipartiteGraph pinned = star(3, {1, 2});
    CHECK(automorphism_order(pinned) == 1);

    for (int k = 1; k <= 4; ++k) {
        BipartiteGraph par;
        ZeroVertex z;
        z.zero_roots.push_back({k, 1});
        InfVertex x;
        x.degree = k;
        for (int j = 0; j < k; ++j) {
            z.inf_nodes.push_back({-1, 2 * j});
            x.node_roots.push_back({1, 2 * j + 1});
            par.edges.push_back({2 * j, 2 * j + 1});
        }
        par.zero.push_back(z);
        par.inf.push_back(x);
        CHECK(automorphism_order(par) == brute::factorial(k));
    }
}

TEST_CASE("virtual dimension examples")
{
    CHECK(virtual_dim(make_toptype(0, 1, {1}), 2) == 2);
    CHECK(virtual_dim(make_toptype(3, 0, {}), 1) == 1);
    CHECK(virtual_dim(make_toptype(1, 2, {3, -1}), 3) == 8);
}

TEST_CASE("enumeration against brute force, d <= 2, rho <= 3, n <= 2")
{
    std::mt19937 rng(7);
    int types = 0;
    for (int d = 0; d <= 2; ++d) {
        for (const auto &mu : brute::weight_vectors(d, 3, 3)) {
            for (int legs = 0; legs <= 2; ++legs) {
                TopType t = make_toptype(legs, d, mu);
                auto listed = enumerate(t, 2);
                auto classes = brute::generate(t, 2);
                ++types;
                CAPTURE(d);
                CAPTURE(legs);
                CAPTURE(mu.size());
                REQUIRE(listed.size() == classes.size());
                std::set<std::string> seen;
                std::map<std::pair<int, int>, Rational> orbit_sum;
                std::map<std::pair<int, int>, long long> labeled;
                for (const auto &g : listed) {
                    CHECK(validate(g).empty());
                    CHECK(topological_type(g) == t);
                    CHECK(g.edges.size() + 1 == g.zero.size() + g.inf.size());
                    std::string sig = brute::signature(brute::from_graph(g));
                    CHECK(seen.insert(sig).second);
                    REQUIRE(classes.count(sig) == 1);
                    long long aut = automorphism_order(g);
                    CHECK(aut == classes.at(sig).aut);
                    CHECK(tree_automorphism_order(g) == aut);
                    BipartiteGraph h = shuffle(g, rng);
                    CHECK(canonical_form(h) == canonical_form(g));
                    CHECK(automorphism_order(h) == aut);
                    std::pair<int, int> shape{static_cast<int>(g.zero.size()), static_cast<int>(g.inf.size())};
                    orbit_sum[shape] += fraction(1, static_cast<long>(aut));
                    labeled[shape] += classes.at(sig).labeled_copies;
                }
                for (const auto &[shape, s] : orbit_sum) {
                    Rational expect(static_cast<long>(labeled[shape]));
                    expect /= static_cast<long>(brute::factorial(shape.first) * brute::factorial(shape.second));
                    CHECK(s == expect);
                }
            }
        }
    }
    CHECK(types > 30);
}

TEST_CASE("distinct enumeration outputs have distinct canonical forms")
{
    auto gs = enumerate(make_toptype(1, 2, {2, 1, -1}), 2);
    std::set<std::string> forms;
    for (const auto &g : gs) {
        forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == gs.size());
    for (std::size_t j = 1; j < gs.size(); ++j) {
        CHECK(canonical_form(gs[j - 1]) < canonical_form(gs[j]));
    }
}

TEST_CASE("a point as divisor forces type-0 degrees to vanish")
{
    for (int d = 0; d <= 2; ++d) {
        for (const auto &mu : brute::weight_vectors(d, 3, 2)) {
            TopType t = make_toptype(1, d, mu);
            auto listed = enumerate(t, 1);
            CHECK(listed.size() == brute::generate(t, 1).size());
            for (const auto &g : listed) {
                CHECK(validate(g, 1).empty());
                for (const auto &z : g.zero) {
                    CHECK(z.degree == 0);
                }
            }
        }
    }
}

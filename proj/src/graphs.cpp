#include <relgw/errors.hpp>
#include <relgw/graphs.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace relgw
{

int TopType::rho_plus() const
{
    return static_cast<int>(std::count_if(mu.begin(), mu.end(), [](int w) { return w > 0; }));
}

int TopType::rho_minus() const
{
    return static_cast<int>(std::count_if(mu.begin(), mu.end(), [](int w) { return w < 0; }));
}

TopType make_toptype(int n_legs, int degree, const std::vector<int> &mu)
{
    if (n_legs < 0 || degree < 0) {
        throw domain_error("leg count and degree must be nonnegative");
    }
    if (std::find(mu.begin(), mu.end(), 0) != mu.end()) {
        throw domain_error("contact orders must be nonzero");
    }
    if (std::accumulate(mu.begin(), mu.end(), 0) != degree) {
        throw domain_error("sum of contact orders must equal the degree");
    }
    return TopType{0, n_legs, degree, static_cast<int>(mu.size()), mu};
}

int virtual_dim(const TopType &t, int n_amb)
{
    return n_amb - 3 + t.degree * n_amb + t.n_legs + t.rho_plus();
}

namespace
{

struct SlotInfo {
    bool zero_side;
    int vertex;
    int weight;
};

struct Indexed {
    std::map<int, SlotInfo> slots;
    std::vector<std::string> duplicate_slots;
};

Indexed index_slots(const BipartiteGraph &g)
{
    Indexed idx;
    auto put = [&](int slot, SlotInfo info) {
        if (!idx.slots.emplace(slot, info).second) {
            idx.duplicate_slots.push_back("slot " + std::to_string(slot) + " used twice");
        }
    };
    for (std::size_t v = 0; v < g.zero.size(); ++v) {
        for (const auto &r : g.zero[v].inf_nodes) {
            put(r.slot, {true, static_cast<int>(v), r.weight});
        }
    }
    for (std::size_t v = 0; v < g.inf.size(); ++v) {
        for (const auto &r : g.inf[v].node_roots) {
            put(r.slot, {false, static_cast<int>(v), r.weight});
        }
    }
    return idx;
}

// Edges as (zero vertex, inf vertex, |weight|), skipping malformed ones.
struct PlainEdge {
    int z;
    int i;
    int w;
    friend auto operator<=>(const PlainEdge &, const PlainEdge &) = default;
};

std::vector<PlainEdge> plain_edges(const BipartiteGraph &g, const Indexed &idx)
{
    std::vector<PlainEdge> out;
    for (const auto &e : g.edges) {
        auto a = idx.slots.find(e.zero_slot);
        auto b = idx.slots.find(e.inf_slot);
        if (a == idx.slots.end() || b == idx.slots.end() || !a->second.zero_side || b->second.zero_side) {
            continue;
        }
        out.push_back({a->second.vertex, b->second.vertex, b->second.weight});
    }
    return out;
}

int find_root(std::vector<int> &parent, int x)
{
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

template <class T> int sum_weights(const std::vector<T> &roots)
{
    int s = 0;
    for (const auto &r : roots) {
        s += r.weight;
    }
    return s;
}

} // namespace

std::vector<Violation> validate(const BipartiteGraph &g, int n_amb)
{
    std::vector<Violation> out;
    const Indexed idx = index_slots(g);
    for (const auto &d : idx.duplicate_slots) {
        out.push_back({"structure", d});
    }

    // Signs of weights.
    for (std::size_t v = 0; v < g.zero.size(); ++v) {
        const auto &z = g.zero[v];
        const std::string name = "zero vertex " + std::to_string(v);
        for (const auto &r : z.zero_roots) {
            if (r.weight <= 0) {
                out.push_back({"sign", name + ": 0-root with nonpositive weight"});
            }
        }
        for (const auto &r : z.inf_marks) {
            if (r.weight >= 0) {
                out.push_back({"sign", name + ": infinity-root with nonnegative weight"});
            }
        }
        for (const auto &r : z.inf_nodes) {
            if (r.weight >= 0) {
                out.push_back({"sign", name + ": infinity-root with nonnegative weight"});
            }
        }
    }
    for (std::size_t v = 0; v < g.inf.size(); ++v) {
        const auto &x = g.inf[v];
        for (const auto &r : x.node_roots) {
            if (r.weight <= 0) {
                out.push_back({"sign", "inf vertex " + std::to_string(v) + ": root with nonpositive weight"});
            }
        }
        for (const auto &r : x.mark_roots) {
            if (r.weight <= 0) {
                out.push_back({"sign", "inf vertex " + std::to_string(v) + ": root with nonpositive weight"});
            }
        }
    }

    // (a) every node root in exactly one edge.
    std::map<int, int> uses;
    for (const auto &e : g.edges) {
        auto a = idx.slots.find(e.zero_slot);
        auto b = idx.slots.find(e.inf_slot);
        if (a == idx.slots.end() || b == idx.slots.end()) {
            out.push_back({"structure", "edge refers to an unknown slot"});
            continue;
        }
        if (!a->second.zero_side || b->second.zero_side) {
            out.push_back({"structure", "edge must join a type-0 root to a type-infinity root"});
            continue;
        }
        ++uses[e.zero_slot];
        ++uses[e.inf_slot];
        // (d)
        if (a->second.weight + b->second.weight != 0) {
            out.push_back({"d", "edge weights " + std::to_string(a->second.weight) + " and " +
                                    std::to_string(b->second.weight) + " do not sum to 0"});
        }
    }
    for (const auto &[slot, info] : idx.slots) {
        (void)info;
        auto it = uses.find(slot);
        if (it == uses.end() || it->second != 1) {
            out.push_back({"a", "node root at slot " + std::to_string(slot) + " is not in exactly one edge"});
        }
    }

    // (c) balancing, and degrees.
    for (std::size_t v = 0; v < g.zero.size(); ++v) {
        const auto &z = g.zero[v];
        const int s = sum_weights(z.zero_roots) + sum_weights(z.inf_marks) + sum_weights(z.inf_nodes);
        const std::string name = "zero vertex " + std::to_string(v);
        if (z.degree < 0) {
            out.push_back({"c", name + ": negative degree"});
        }
        if (n_amb == 1 && z.degree != 0) {
            out.push_back({"c", name + ": degree in a point must be 0"});
        }
        const int expected = n_amb == 1 ? 0 : z.degree;
        if (s != expected) {
            out.push_back({"c", name + ": root weights sum to " + std::to_string(s) + ", expected " +
                                    std::to_string(expected)});
        }
        if (z.rho_inf() == 0) {
            out.push_back({"rubber", name + ": no infinity-root"});
        }
        if (z.degree == 0 && z.half_edges() <= 2) {
            out.push_back({"e", name + " is unstable"});
        }
    }
    for (std::size_t v = 0; v < g.inf.size(); ++v) {
        const auto &x = g.inf[v];
        const int s = sum_weights(x.node_roots) + sum_weights(x.mark_roots);
        const std::string name = "inf vertex " + std::to_string(v);
        if (x.degree < 0) {
            out.push_back({"c", name + ": negative degree"});
        }
        if (s != x.degree) {
            out.push_back({"c", name + ": root weights sum to " + std::to_string(s) + ", expected " +
                                    std::to_string(x.degree)});
        }
        if (x.degree == 0 && x.half_edges() <= 2) {
            out.push_back({"e", name + " is unstable"});
        }
    }

    // Marking bijection: legs are 1..n, roots of marking type n+1..n+rho.
    std::vector<int> legs;
    std::vector<int> marks;
    for (const auto &z : g.zero) {
        legs.insert(legs.end(), z.legs.begin(), z.legs.end());
        for (const auto &r : z.zero_roots) {
            marks.push_back(r.label);
        }
        for (const auto &r : z.inf_marks) {
            marks.push_back(r.label);
        }
    }
    for (const auto &x : g.inf) {
        legs.insert(legs.end(), x.legs.begin(), x.legs.end());
        for (const auto &r : x.mark_roots) {
            marks.push_back(r.label);
        }
    }
    std::sort(legs.begin(), legs.end());
    std::sort(marks.begin(), marks.end());
    for (std::size_t k = 0; k < legs.size(); ++k) {
        if (legs[k] != static_cast<int>(k) + 1) {
            out.push_back({"markings", "legs must carry labels 1..n"});
            break;
        }
    }
    for (std::size_t k = 0; k < marks.size(); ++k) {
        if (marks[k] != static_cast<int>(legs.size() + k) + 1) {
            out.push_back({"markings", "marking-type roots must carry labels n+1..n+rho"});
            break;
        }
    }

    // Connectedness and acyclicity of the underlying multigraph.
    const int nz = static_cast<int>(g.zero.size());
    const int nv = nz + static_cast<int>(g.inf.size());
    if (nv == 0) {
        out.push_back({"connected", "graph has no vertices"});
        return out;
    }
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    const auto pe = plain_edges(g, idx);
    for (const auto &e : pe) {
        const int a = find_root(parent, e.z);
        const int b = find_root(parent, nz + e.i);
        parent[static_cast<std::size_t>(a)] = b;
    }
    std::set<int> comps;
    for (int v = 0; v < nv; ++v) {
        comps.insert(find_root(parent, v));
    }
    if (comps.size() != 1) {
        out.push_back({"connected", "graph has " + std::to_string(comps.size()) + " components"});
    } else if (static_cast<int>(g.edges.size()) != nv - 1) {
        out.push_back({"acyclic", "h^1 of the graph is " + std::to_string(g.edges.size() - (nv - 1))});
    }
    return out;
}

TopType topological_type(const BipartiteGraph &g, int n_amb)
{
    const auto v = validate(g, n_amb);
    if (!v.empty()) {
        throw domain_error("topological type of an invalid graph: (" + v.front().condition + ") " + v.front().detail);
    }
    TopType t;
    std::map<int, int> by_label;
    for (const auto &z : g.zero) {
        t.n_legs += static_cast<int>(z.legs.size());
        t.degree += z.degree;
        for (const auto &r : z.zero_roots) {
            by_label[r.label] = r.weight;
        }
        for (const auto &r : z.inf_marks) {
            by_label[r.label] = r.weight;
        }
    }
    for (const auto &x : g.inf) {
        t.n_legs += static_cast<int>(x.legs.size());
        t.degree += x.degree;
        for (const auto &r : x.mark_roots) {
            by_label[r.label] = r.weight;
        }
    }
    for (const auto &[label, w] : by_label) {
        (void)label;
        t.mu.push_back(w);
    }
    t.rho = static_cast<int>(t.mu.size());
    return t;
}

namespace
{

std::string vertex_label(const BipartiteGraph &g, int v)
{
    const int nz = static_cast<int>(g.zero.size());
    std::ostringstream os;
    auto list = [&](const char *tag, std::vector<std::string> items) {
        std::sort(items.begin(), items.end());
        os << tag << '[';
        for (std::size_t k = 0; k < items.size(); ++k) {
            os << (k ? "," : "") << items[k];
        }
        os << ']';
    };
    auto roots = [](const std::vector<MarkRoot> &rs) {
        std::vector<std::string> s;
        for (const auto &r : rs) {
            s.push_back(std::to_string(r.weight) + ":" + std::to_string(r.label));
        }
        return s;
    };
    auto legs = [](const std::vector<int> &ls) {
        std::vector<std::string> s;
        for (int l : ls) {
            s.push_back(std::to_string(l));
        }
        return s;
    };
    if (v < nz) {
        const auto &z = g.zero[static_cast<std::size_t>(v)];
        os << 'Z' << z.degree;
        list("L", legs(z.legs));
        list("R", roots(z.zero_roots));
        list("M", roots(z.inf_marks));
    } else {
        const auto &x = g.inf[static_cast<std::size_t>(v - nz)];
        os << 'I' << x.degree;
        list("L", legs(x.legs));
        list("M", roots(x.mark_roots));
    }
    return os.str();
}

struct Tree {
    std::vector<std::string> labels;
    std::vector<std::vector<std::pair<int, int>>> adj; // (neighbour, weight)
};

Tree as_tree(const BipartiteGraph &g)
{
    for (const auto &v : validate(g)) {
        if (v.condition == "connected" || v.condition == "acyclic" || v.condition == "structure") {
            throw domain_error("canonical form needs a tree: " + v.detail);
        }
    }
    const int nz = static_cast<int>(g.zero.size());
    const int nv = nz + static_cast<int>(g.inf.size());
    Tree t;
    t.adj.resize(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        t.labels.push_back(vertex_label(g, v));
    }
    for (const auto &e : plain_edges(g, index_slots(g))) {
        t.adj[static_cast<std::size_t>(e.z)].push_back({nz + e.i, e.w});
        t.adj[static_cast<std::size_t>(nz + e.i)].push_back({e.z, e.w});
    }
    return t;
}

std::vector<int> centers(const Tree &t)
{
    const int nv = static_cast<int>(t.adj.size());
    std::vector<int> deg(static_cast<std::size_t>(nv));
    std::vector<int> layer;
    for (int v = 0; v < nv; ++v) {
        deg[static_cast<std::size_t>(v)] = static_cast<int>(t.adj[static_cast<std::size_t>(v)].size());
        if (deg[static_cast<std::size_t>(v)] <= 1) {
            layer.push_back(v);
        }
    }
    int remaining = nv;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            for (auto [u, w] : t.adj[static_cast<std::size_t>(v)]) {
                (void)w;
                if (--deg[static_cast<std::size_t>(u)] == 1) {
                    next.push_back(u);
                }
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string encode(const Tree &t, int v, int parent)
{
    std::vector<std::string> kids;
    for (auto [u, w] : t.adj[static_cast<std::size_t>(v)]) {
        if (u != parent) {
            kids.push_back(std::to_string(w) + encode(t, u, v));
        }
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + t.labels[static_cast<std::size_t>(v)];
    for (const auto &k : kids) {
        s += k;
    }
    return s + ")";
}

long long rooted_aut(const Tree &t, int v, int parent)
{
    long long r = 1;
    std::map<std::string, int> groups;
    for (auto [u, w] : t.adj[static_cast<std::size_t>(v)]) {
        if (u != parent) {
            r *= rooted_aut(t, u, v);
            ++groups[std::to_string(w) + encode(t, u, v)];
        }
    }
    for (const auto &[code, m] : groups) {
        (void)code;
        for (int k = 2; k <= m; ++k) {
            r *= k;
        }
    }
    return r;
}

} // namespace

std::string canonical_form(const BipartiteGraph &g)
{
    const Tree t = as_tree(g);
    std::string best;
    for (int c : centers(t)) {
        std::string s = encode(t, c, -1);
        if (best.empty() || s < best) {
            best = s;
        }
    }
    return best;
}

long long tree_automorphism_order(const BipartiteGraph &g)
{
    const Tree t = as_tree(g);
    const auto cs = centers(t);
    long long r = rooted_aut(t, cs.front(), -1);
    if (cs.size() == 2 && encode(t, cs[0], cs[1]) == encode(t, cs[1], cs[0])) {
        r *= 2;
    }
    return r;
}

long long automorphism_order(const BipartiteGraph &g)
{
    const int nz = static_cast<int>(g.zero.size());
    const int ni = static_cast<int>(g.inf.size());
    std::vector<std::string> labels;
    for (int v = 0; v < nz + ni; ++v) {
        labels.push_back(vertex_label(g, v));
    }
    auto edges = plain_edges(g, index_slots(g));
    std::sort(edges.begin(), edges.end());

    long long parallel = 1;
    for (std::size_t a = 0; a < edges.size();) {
        std::size_t b = a;
        while (b < edges.size() && edges[b] == edges[a]) {
            ++b;
        }
        for (std::size_t k = 2; k <= b - a; ++k) {
            parallel *= static_cast<long long>(k);
        }
        a = b;
    }

    std::vector<int> pz(static_cast<std::size_t>(nz));
    std::vector<int> pi(static_cast<std::size_t>(ni));
    std::iota(pz.begin(), pz.end(), 0);
    long long count = 0;
    do {
        bool ok_z = true;
        for (int v = 0; v < nz && ok_z; ++v) {
            ok_z = labels[static_cast<std::size_t>(pz[static_cast<std::size_t>(v)])] == labels[static_cast<std::size_t>(v)];
        }
        if (!ok_z) {
            continue;
        }
        std::iota(pi.begin(), pi.end(), 0);
        do {
            bool ok = true;
            for (int v = 0; v < ni && ok; ++v) {
                ok = labels[static_cast<std::size_t>(nz + pi[static_cast<std::size_t>(v)])] ==
                     labels[static_cast<std::size_t>(nz + v)];
            }
            if (!ok) {
                continue;
            }
            std::vector<PlainEdge> mapped;
            for (const auto &e : edges) {
                mapped.push_back({pz[static_cast<std::size_t>(e.z)], pi[static_cast<std::size_t>(e.i)], e.w});
            }
            std::sort(mapped.begin(), mapped.end());
            if (mapped == edges) {
                ++count;
            }
        } while (std::next_permutation(pi.begin(), pi.end()));
    } while (std::next_permutation(pz.begin(), pz.end()));
    return count * parallel;
}

namespace
{

// Spanning trees of the complete bipartite graph K_{a,b}, as lists of (zero, inf) pairs.
std::vector<std::vector<std::pair<int, int>>> bipartite_trees(int a, int b)
{
    std::vector<std::pair<int, int>> all;
    for (int z = 0; z < a; ++z) {
        for (int i = 0; i < b; ++i) {
            all.push_back({z, i});
        }
    }
    const int need = a + b - 1;
    std::vector<std::vector<std::pair<int, int>>> out;
    if (need < 0) {
        return out;
    }
    std::vector<std::pair<int, int>> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == need) {
            std::vector<int> parent(static_cast<std::size_t>(a + b));
            std::iota(parent.begin(), parent.end(), 0);
            for (auto [z, i] : cur) {
                const int x = find_root(parent, z);
                const int y = find_root(parent, a + i);
                if (x == y) {
                    return;
                }
                parent[static_cast<std::size_t>(x)] = y;
            }
            out.push_back(cur);
            return;
        }
        for (std::size_t k = start; k < all.size(); ++k) {
            cur.push_back(all[k]);
            rec(k + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

void weight_vectors(int count, int budget, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (static_cast<int>(cur.size()) == count) {
        out.push_back(cur);
        return;
    }
    for (int w = 1; w <= budget; ++w) {
        cur.push_back(w);
        weight_vectors(count, budget - w, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<BipartiteGraph> enumerate(const TopType &t, int n_amb)
{
    if (std::accumulate(t.mu.begin(), t.mu.end(), 0) != t.degree || t.degree < 0) {
        return {};
    }
    const int d = t.degree;
    const int n_legs = t.n_legs;
    const int rho = static_cast<int>(t.mu.size());
    std::map<std::string, BipartiteGraph> found;

    for (int b = 0; b <= std::max(d, 1); ++b) {
        for (int a = 0; a <= d + 1; ++a) {
            if (a + b == 0 || (b == 0 && a != 1) || (a == 0 && b != 1)) {
                continue;
            }
            const int n_edges = a + b - 1;
            if (b > 0 && n_edges > d) {
                continue;
            }
            for (const auto &tree : bipartite_trees(a, b)) {
                std::vector<std::vector<int>> weights;
                std::vector<int> cur;
                weight_vectors(n_edges, d, cur, weights);
                for (const auto &ws : weights) {
                    BipartiteGraph base;
                    base.zero.resize(static_cast<std::size_t>(a));
                    base.inf.resize(static_cast<std::size_t>(b));
                    for (int e = 0; e < n_edges; ++e) {
                        const auto [z, i] = tree[static_cast<std::size_t>(e)];
                        const int w = ws[static_cast<std::size_t>(e)];
                        base.zero[static_cast<std::size_t>(z)].inf_nodes.push_back({-w, 2 * e});
                        base.inf[static_cast<std::size_t>(i)].node_roots.push_back({w, 2 * e + 1});
                        base.edges.push_back({2 * e, 2 * e + 1});
                    }
                    // Place legs then contact-order markings; each choice is a vertex (zeros first).
                    const int slots = n_legs + rho;
                    std::vector<int> choice(static_cast<std::size_t>(slots), 0);
                    std::function<void(int)> place = [&](int k) {
                        if (k == slots) {
                            BipartiteGraph g = base;
                            for (int l = 0; l < n_legs; ++l) {
                                const int v = choice[static_cast<std::size_t>(l)];
                                if (v < a) {
                                    g.zero[static_cast<std::size_t>(v)].legs.push_back(l + 1);
                                } else {
                                    g.inf[static_cast<std::size_t>(v - a)].legs.push_back(l + 1);
                                }
                            }
                            for (int r = 0; r < rho; ++r) {
                                const int v = choice[static_cast<std::size_t>(n_legs + r)];
                                const MarkRoot root{t.mu[static_cast<std::size_t>(r)], n_legs + r + 1};
                                if (v >= a) {
                                    g.inf[static_cast<std::size_t>(v - a)].mark_roots.push_back(root);
                                } else if (root.weight > 0) {
                                    g.zero[static_cast<std::size_t>(v)].zero_roots.push_back(root);
                                } else {
                                    g.zero[static_cast<std::size_t>(v)].inf_marks.push_back(root);
                                }
                            }
                            for (auto &z : g.zero) {
                                z.degree = sum_weights(z.zero_roots) + sum_weights(z.inf_marks) +
                                           sum_weights(z.inf_nodes);
                                if (z.degree < 0 || (n_amb == 1 && z.degree != 0)) {
                                    return;
                                }
                            }
                            for (auto &x : g.inf) {
                                x.degree = sum_weights(x.node_roots) + sum_weights(x.mark_roots);
                            }
                            if (!validate(g, n_amb).empty()) {
                                return;
                            }
                            found.try_emplace(canonical_form(g), std::move(g));
                            return;
                        }
                        const bool negative = k >= n_legs && t.mu[static_cast<std::size_t>(k - n_legs)] < 0;
                        const int limit = negative ? a : a + b;
                        for (int v = 0; v < limit; ++v) {
                            choice[static_cast<std::size_t>(k)] = v;
                            place(k + 1);
                        }
                    };
                    place(0);
                }
            }
        }
    }
    std::vector<BipartiteGraph> out;
    for (auto &[code, g] : found) {
        (void)code;
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace relgw

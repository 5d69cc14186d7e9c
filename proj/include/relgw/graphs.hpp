#ifndef RELGW_GRAPHS_HPP
#define RELGW_GRAPHS_HPP

#include <string>
#include <vector>

namespace relgw
{

// Root carrying a marking label (legs come first, roots follow).
struct MarkRoot {
    int weight = 0;
    int label = 0;
    friend auto operator<=>(const MarkRoot &, const MarkRoot &) = default;
};

// Root of node type, identified by a slot that edges refer to.
struct NodeRoot {
    int weight = 0;
    int slot = 0;
    friend auto operator<=>(const NodeRoot &, const NodeRoot &) = default;
};

// Graph of type 0: one vertex (genus 0) over the rubber side.
struct ZeroVertex {
    int degree = 0;                    // beta_0 in H_2(D)
    std::vector<int> legs;             // marking labels
    std::vector<MarkRoot> zero_roots;  // weight > 0
    std::vector<MarkRoot> inf_marks;   // weight < 0
    std::vector<NodeRoot> inf_nodes;   // weight < 0

    int rho_inf() const
    {
        return static_cast<int>(inf_marks.size() + inf_nodes.size());
    }
    int rho_minus() const
    {
        return static_cast<int>(inf_marks.size());
    }
    int half_edges() const
    {
        return static_cast<int>(legs.size() + zero_roots.size() + inf_marks.size() + inf_nodes.size());
    }
};

// One vertex (genus 0) of the graph of type infinity.
struct InfVertex {
    int degree = 0;                   // beta_v in H_2(X)
    std::vector<int> legs;
    std::vector<NodeRoot> node_roots; // weight > 0
    std::vector<MarkRoot> mark_roots; // weight > 0

    int half_edges() const
    {
        return static_cast<int>(legs.size() + node_roots.size() + mark_roots.size());
    }
};

struct Edge {
    int zero_slot = 0;
    int inf_slot = 0;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

struct BipartiteGraph {
    std::vector<ZeroVertex> zero;
    std::vector<InfVertex> inf;
    std::vector<Edge> edges;
};

// Rubber-side data used by localization graphs; carried as plain records only.
struct RubberVertex {
    int degree = 0;
    std::vector<int> legs;
    std::vector<MarkRoot> zero_roots;
    std::vector<MarkRoot> inf_roots;
};

struct LocalizationGraph {
    std::vector<ZeroVertex> zero;
    std::vector<RubberVertex> rubber;
    std::vector<Edge> edges;
};

struct TopType {
    int g = 0;
    int n_legs = 0;
    int degree = 0;
    int rho = 0;
    std::vector<int> mu;

    int rho_plus() const;
    int rho_minus() const;
    friend bool operator==(const TopType &, const TopType &) = default;
};

// Builds a TopType with rho = |mu|. Throws domain_error if sum(mu) != degree, a weight is 0, or counts are negative.
TopType make_toptype(int n_legs, int degree, const std::vector<int> &mu);

struct Violation {
    std::string condition; // "a", "c", "d", "e", "markings", "sign", "rubber", "connected", "acyclic", "structure"
    std::string detail;
};

// Conditions (a)-(e), marking bijection, sign conventions, connectedness and acyclicity.
// n_amb = 1 additionally forces type-0 degrees to vanish.
std::vector<Violation> validate(const BipartiteGraph &g, int n_amb = 2);

// Throws domain_error on an invalid graph.
TopType topological_type(const BipartiteGraph &g, int n_amb = 2);

// Iso-class representatives of connected genus-0 admissible bipartite graphs of type t,
// ordered by canonical form.
std::vector<BipartiteGraph> enumerate(const TopType &t, int n_amb);

// Brute force over side-, degree- and marking-preserving vertex bijections, times the
// permutations of parallel edges. Works for multigraphs.
long long automorphism_order(const BipartiteGraph &g);

// Canonical string of a valid (tree-shaped) graph; equal iff isomorphic.
std::string canonical_form(const BipartiteGraph &g);

// |Aut| read off the canonical rooted tree; agrees with automorphism_order on trees.
long long tree_automorphism_order(const BipartiteGraph &g);

int virtual_dim(const TopType &t, int n_amb);

} // namespace relgw

#endif

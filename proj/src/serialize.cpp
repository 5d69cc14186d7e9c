#include <relgw/errors.hpp>
#include <relgw/serialize.hpp>

namespace relgw
{

Json to_json(const Rational &r)
{
    return to_string(r);
}

Json to_json(const InsClass &c)
{
    Json out = Json::array();
    for (const auto &[b, x] : c.terms()) {
        out.push_back({{"i", b.i}, {"k", b.k}, {"coef", to_string(x)}});
    }
    return out;
}

Json to_json(const QSeriesClass &s)
{
    Json out = Json::array();
    for (const auto &[m, c] : s.parts) {
        if (!c.is_zero()) {
            out.push_back({{"q", m}, {"class", to_json(c)}});
        }
    }
    return out;
}

Json to_json(const Poly &p)
{
    Json out = Json::array();
    for (const auto &[m, c] : p.terms()) {
        Json powers = Json::object();
        for (const auto &[s, e] : m) {
            powers[s] = e;
        }
        out.push_back({{"coef", to_string(c)}, {"powers", powers}});
    }
    return out;
}

namespace
{

Json mark_roots(const std::vector<MarkRoot> &roots)
{
    Json out = Json::array();
    for (const auto &r : roots) {
        out.push_back({{"weight", r.weight}, {"kind", "mark"}, {"label", r.label}});
    }
    return out;
}

Json node_roots(const std::vector<NodeRoot> &roots)
{
    Json out = Json::array();
    for (const auto &r : roots) {
        out.push_back({{"weight", r.weight}, {"kind", "node"}, {"slot", r.slot}});
    }
    return out;
}

void append(Json &a, const Json &b)
{
    for (const auto &x : b) {
        a.push_back(x);
    }
}

} // namespace

Json to_json(const BipartiteGraph &g)
{
    Json vertices = Json::array();
    for (const auto &z : g.zero) {
        Json roots = mark_roots(z.zero_roots);
        append(roots, mark_roots(z.inf_marks));
        append(roots, node_roots(z.inf_nodes));
        vertices.push_back({{"side", "zero"}, {"degree", z.degree}, {"legs", z.legs}, {"roots", roots}});
    }
    for (const auto &w : g.inf) {
        Json roots = node_roots(w.node_roots);
        append(roots, mark_roots(w.mark_roots));
        vertices.push_back({{"side", "inf"}, {"degree", w.degree}, {"legs", w.legs}, {"roots", roots}});
    }
    Json edges = Json::array();
    for (const auto &e : g.edges) {
        edges.push_back(Json::array({e.zero_slot, e.inf_slot}));
    }
    return {{"vertices", vertices}, {"edges", edges}};
}

BipartiteGraph graph_from_json(const Json &j)
{
    BipartiteGraph g;
    try {
        for (const auto &v : j.at("vertices")) {
            const std::string side = v.at("side").get<std::string>();
            const int degree = v.at("degree").get<int>();
            const auto legs = v.at("legs").get<std::vector<int>>();
            if (side == "zero") {
                ZeroVertex z;
                z.degree = degree;
                z.legs = legs;
                for (const auto &r : v.at("roots")) {
                    const int w = r.at("weight").get<int>();
                    if (r.at("kind").get<std::string>() == "node") {
                        z.inf_nodes.push_back({w, r.at("slot").get<int>()});
                    } else if (w > 0) {
                        z.zero_roots.push_back({w, r.at("label").get<int>()});
                    } else {
                        z.inf_marks.push_back({w, r.at("label").get<int>()});
                    }
                }
                g.zero.push_back(z);
            } else if (side == "inf") {
                InfVertex x;
                x.degree = degree;
                x.legs = legs;
                for (const auto &r : v.at("roots")) {
                    const int w = r.at("weight").get<int>();
                    if (r.at("kind").get<std::string>() == "node") {
                        x.node_roots.push_back({w, r.at("slot").get<int>()});
                    } else {
                        x.mark_roots.push_back({w, r.at("label").get<int>()});
                    }
                }
                g.inf.push_back(x);
            } else {
                throw parse_error("vertex side must be \"zero\" or \"inf\"", 0);
            }
        }
        for (const auto &e : j.at("edges")) {
            g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        }
    } catch (const nlohmann::json::exception &e) {
        throw parse_error(std::string("malformed graph JSON: ") + e.what(), 0);
    }
    return g;
}

Json to_json(const StructureTable &t)
{
    Json entries = Json::array();
    for (const auto &e : t.entries()) {
        Json row = {{"lhs", {e.lhs.i, e.lhs.k}}, {"rhs", {e.rhs.i, e.rhs.k}}, {"q", e.q}};
        Json coeffs = Json::object();
        if (e.status == EntryStatus::determined) {
            for (const auto &[b, x] : e.value.terms()) {
                coeffs[format_basis(t.context(), b)] = to_string(x);
            }
        }
        row["coeffs"] = coeffs;
        row["status"] = to_string(e.status);
        entries.push_back(row);
    }
    return {{"n", t.context().n}, {"W", t.context().window}, {"Qmax", t.qmax()}, {"entries", entries}};
}

Json to_json(const VerifyReport &r)
{
    return {{"entries", r.entries}, {"determined", r.determined}, {"mismatches", r.mismatches}, {"details", r.details}};
}

Json to_json(const TVar &v)
{
    return {{"l", v.l}, {"i", v.b.i}, {"k", v.b.k}};
}

Json to_json(const DiffOperator &op)
{
    Json out = Json::array();
    for (const auto &[t, c] : op.terms()) {
        Json vars = Json::array(), derivs = Json::array();
        for (const auto &v : t.vars) {
            vars.push_back(to_json(v));
        }
        for (const auto &v : t.derivs) {
            derivs.push_back(to_json(v));
        }
        out.push_back({{"hbar", t.hbar}, {"coef", to_string(c)}, {"vars", vars}, {"derivs", derivs}});
    }
    return out;
}

Json to_json(const BracketReport &r)
{
    return {{"m", r.m}, {"k", r.k}, {"factor", to_string(r.factor)}, {"columns", r.columns}, {"exact", r.exact}};
}

Json to_json(const ResidualReport &r)
{
    Json nonzero = Json::array();
    for (const auto &c : r.nonzero) {
        Json vars = Json::array();
        for (const auto &v : c.vars) {
            vars.push_back(to_json(v));
        }
        nonzero.push_back({{"q", c.beta}, {"vars", vars}, {"value", to_string(c.value)}});
    }
    return {{"tested", r.tested}, {"untestable", r.untestable}, {"nonzero", nonzero}};
}

} // namespace relgw

#include <relgw/cycleclasses.hpp>
#include <relgw/errors.hpp>

namespace relgw
{

std::string sym_Psi()
{
    return "Psi";
}
std::string sym_PsiInf(int zero_vertex)
{
    return "PsiInf(z" + std::to_string(zero_vertex) + ")";
}
std::string sym_psi_node(int slot)
{
    return "psi(s" + std::to_string(slot) + ")";
}
std::string sym_psi_mark(int label)
{
    return "psi(m" + std::to_string(label) + ")";
}
std::string sym_evD_node(int slot)
{
    return "evD(s" + std::to_string(slot) + ")";
}
std::string sym_evD_mark(int label)
{
    return "evD(m" + std::to_string(label) + ")";
}

namespace
{

const ZeroVertex &vertex(const BipartiteGraph &g, int v)
{
    if (v < 0 || v >= static_cast<int>(g.zero.size())) {
        throw domain_error("no type-0 vertex with index " + std::to_string(v));
    }
    return g.zero[static_cast<std::size_t>(v)];
}

Poly root_factor(int d, const std::string &psi, const std::string &evd, int n_amb)
{
    Poly p = Poly(Rational(d)) * Poly::symbol(psi);
    if (n_amb >= 2) {
        p -= Poly::symbol(evd);
    }
    return p;
}

} // namespace

std::vector<Poly> infinity_root_factors(const BipartiteGraph &g, int v, int n_amb)
{
    const ZeroVertex &z = vertex(g, v);
    std::vector<Poly> out;
    for (const auto &r : z.inf_marks) {
        out.push_back(root_factor(-r.weight, sym_psi_mark(r.label), sym_evD_mark(r.label), n_amb));
    }
    for (const auto &r : z.inf_nodes) {
        out.push_back(root_factor(-r.weight, sym_psi_node(r.slot), sym_evD_node(r.slot), n_amb));
    }
    return out;
}

Poly sigma_k(const BipartiteGraph &g, int v, int k, int n_amb)
{
    const auto a = infinity_root_factors(g, v, n_amb);
    if (k < 0) {
        throw domain_error("sigma_k needs k >= 0");
    }
    // e_j of a_1..a_m by the usual recurrence.
    std::vector<Poly> e(static_cast<std::size_t>(k) + 1);
    e[0] = Poly(Rational(1));
    for (const auto &x : a) {
        for (int j = k; j >= 1; --j) {
            e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * x;
        }
    }
    return e[static_cast<std::size_t>(k)];
}

Poly c_l(const BipartiteGraph &g, int v, int l, int n_amb)
{
    if (l < 0) {
        throw domain_error("c(l) needs l >= 0");
    }
    const Poly psi_inf = Poly::symbol(sym_PsiInf(v));
    Poly r;
    for (int k = 0; k <= l; ++k) {
        Poly term = psi_inf.pow(l - k) * sigma_k(g, v, k, n_amb);
        if (k % 2) {
            r -= term;
        } else {
            r += term;
        }
    }
    return r;
}

SymLaurent C_type0(const BipartiteGraph &g, int v, int depth, int n_amb)
{
    const ZeroVertex &z = vertex(g, v);
    const int rho_inf = z.rho_inf();

    SymLaurent num;
    num.lead = rho_inf - 1;
    num.floor = num.lead - depth;
    for (int l = 0; l <= depth; ++l) {
        Poly c = c_l(g, v, l, n_amb);
        if (!c.is_zero()) {
            num.coeffs[rho_inf - 1 - l] = c;
        }
    }

    SymLaurent r = num;
    // 1 / ((t + evD)/d - psi) = d t^{-1} sum_j (d psi - evD)^j t^{-j}.
    for (const auto &root : z.inf_nodes) {
        const int d = -root.weight;
        const Poly a = root_factor(d, sym_psi_node(root.slot), sym_evD_node(root.slot), n_amb);
        SymLaurent f;
        f.lead = -1;
        f.floor = -1 - depth;
        for (int j = 0; j <= depth; ++j) {
            f.coeffs[-1 - j] = Poly(Rational(d)) * a.pow(j);
        }
        r = r * f;
    }
    return r;
}

SymLaurent C_typeInf(int depth)
{
    SymLaurent r;
    r.lead = 0;
    r.floor = -depth;
    const Poly minus_psi = -Poly::symbol(sym_Psi());
    for (int j = 0; j <= depth; ++j) {
        r.coeffs[-j] = minus_psi.pow(j);
    }
    return r;
}

Poly C_G(const BipartiteGraph &g, int n_amb)
{
    int total_lead = 0;
    for (const auto &z : g.zero) {
        total_lead += z.rho_minus() - 1;
    }
    if (total_lead < 0) {
        return Poly();
    }
    const int depth = total_lead;
    SymLaurent prod = g.inf.empty() ? laurent_constant(Poly(Rational(1))) : C_typeInf(depth);
    for (int v = 0; v < static_cast<int>(g.zero.size()); ++v) {
        prod = prod * C_type0(g, v, depth, n_amb);
    }
    return prod.at(0);
}

} // namespace relgw

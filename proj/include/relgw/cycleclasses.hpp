#ifndef RELGW_CYCLECLASSES_HPP
#define RELGW_CYCLECLASSES_HPP

#include <relgw/graphs.hpp>
#include <relgw/symbolic.hpp>

#include <string>

namespace relgw
{

// Symbol names attached to a bipartite graph.
std::string sym_Psi();
std::string sym_PsiInf(int zero_vertex);
std::string sym_psi_node(int slot);
std::string sym_psi_mark(int label);
std::string sym_evD_node(int slot);
std::string sym_evD_mark(int label);

// d_e psi_e - ev_e^*D for every infinity-root of zero vertex v (marks first, then nodes).
// evD vanishes when n_amb = 1.
std::vector<Poly> infinity_root_factors(const BipartiteGraph &g, int v, int n_amb = 2);

Poly sigma_k(const BipartiteGraph &g, int v, int k, int n_amb = 2);
Poly c_l(const BipartiteGraph &g, int v, int l, int n_amb = 2);

// Expansion at t = infinity of C_{Gamma^0_v}(t), from its leading power rho_-(v) - 1 down depth further steps.
SymLaurent C_type0(const BipartiteGraph &g, int v, int depth, int n_amb = 2);
// t / (t + Psi) = sum_j (-Psi)^j t^{-j}, j <= depth.
SymLaurent C_typeInf(int depth);

// Constant term in t of the product of all vertex factors.
Poly C_G(const BipartiteGraph &g, int n_amb = 2);

} // namespace relgw

#endif

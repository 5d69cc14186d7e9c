#ifndef RELGW_INVARIANTS_HPP
#define RELGW_INVARIANTS_HPP

#include <relgw/insertions.hpp>
#include <relgw/solver.hpp>

#include <map>
#include <optional>
#include <vector>

namespace relgw
{

// psi^a [alpha]_i.
struct Insertion {
    int psi = 0;
    InsClass cls;
};

// psi^a T_{i,k}; the label need not lie inside the window.
struct BasisInsertion {
    int psi = 0;
    BasisIndex b;
    friend auto operator<=>(const BasisInsertion &, const BasisInsertion &) = default;
};

// Query interface for I_beta; nullopt means "unsupported".
class InvariantProvider
{
public:
    virtual ~InvariantProvider() = default;
    virtual const InsContext &context() const = 0;
    virtual std::optional<Rational> basis_invariant(int beta, const std::vector<BasisInsertion> &ins) const = 0;

    // Multilinear extension over the terms of each insertion.
    std::optional<Rational> evaluate(int beta, const std::vector<Insertion> &ins) const;
};

// Tangency sum(i) = beta and the dimension constraint sum(psi + deg2) = n - 3 + beta n + #insertions.
bool passes_selection_rules(int n, int beta, const std::vector<BasisInsertion> &ins);

// Three-point invariants from a structure table (beta = 0 from the trilinear form), closed under
// the string, dilaton and divisor equations. Everything else is unsupported.
class SmallProvider : public InvariantProvider
{
public:
    explicit SmallProvider(StructureTable table);

    const InsContext &context() const override
    {
        return m_table.context();
    }
    std::optional<Rational> basis_invariant(int beta, const std::vector<BasisInsertion> &ins) const override;

private:
    std::optional<Rational> three_point(int beta, const std::vector<BasisInsertion> &ins) const;

    StructureTable m_table;
    mutable std::map<std::pair<int, std::vector<BasisInsertion>>, std::optional<Rational>> m_memo;
};

Rational degree_zero_three_point(const InsClass &a, const InsClass &b, const InsClass &c);

// One term coef * I_beta(insertions) of a rewritten query.
struct Rewrite {
    Rational coef;
    int beta = 0;
    std::vector<Insertion> insertions;
};

// The distinguished insertion is ins[0]; throws domain_error when it has the wrong shape.
std::vector<Rewrite> string_reduce(int beta, const std::vector<Insertion> &ins);
std::vector<Rewrite> divisor_reduce(int beta, const std::vector<Insertion> &ins);
std::vector<Rewrite> dilaton_reduce(int beta, const std::vector<Insertion> &ins);

// Left minus right side of the WDVV identity (at least four insertions); nullopt if a needed query is unsupported.
std::optional<Rational> check_wdvv(const InvariantProvider &p, int beta, const std::vector<Insertion> &ins);
// I_beta(psi^{a+1} x1, x2, x3, ...) minus the splitting sum; ins[0] must carry psi >= 1.
std::optional<Rational> check_trr(const InvariantProvider &p, int beta, const std::vector<Insertion> &ins);

} // namespace relgw

#endif

#ifndef RELGW_GIVENTAL_HPP
#define RELGW_GIVENTAL_HPP

#include <relgw/insertions.hpp>
#include <relgw/invariants.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace relgw
{

// Basis vector T_b z^e of the loop space.
struct ZKey {
    int e = 0;
    BasisIndex b;
    friend auto operator<=>(const ZKey &, const ZKey &) = default;
};
using ZVec = std::map<ZKey, Rational>;

void add_to(ZVec &v, const ZKey &k, const Rational &c);

// Contact orders |i| <= W and z-exponents in [zmin, zmax].
struct ZWindow {
    InsContext ctx;
    int zmin = -6;
    int zmax = 6;

    bool contains(const ZKey &k) const
    {
        return k.e >= zmin && k.e <= zmax && ctx.in_window(k.b.i);
    }
    std::vector<ZKey> basis() const;
};

// Requires zmin < 0 < zmax.
ZWindow make_zwindow(const InsContext &ctx, int zmin, int zmax);

// Truncated Laurent series in z with coefficients in the ring of insertions.
class ZSeries
{
public:
    explicit ZSeries(const ZWindow &win);
    static ZSeries monomial(const ZWindow &win, const InsClass &c, int e);
    static ZSeries from_vec(const ZWindow &win, const ZVec &v);

    const ZWindow &window() const noexcept
    {
        return m_win;
    }
    // Throws margin_error outside [zmin, zmax].
    void add(int e, const InsClass &c);
    InsClass at(int e) const;
    ZVec vec() const;

private:
    ZWindow m_win;
    std::map<int, InsClass> m_coeffs;
};

// Res_{z=0} (f(-z), g(z)) dz.
Rational omega(const ZSeries &f, const ZSeries &g);
Rational omega(int n, const ZVec &f, const ZVec &g);

// Linear endomorphism known exactly on the basis vectors of its domain.
class EndOp
{
public:
    explicit EndOp(const ZWindow &win);

    static EndOp identity(const ZWindow &win);
    // Multiplication by z^s.
    static EndOp zpow(const ZWindow &win, int s);
    // z d/dz.
    static EndOp euler(const ZWindow &win);
    // Hodge grading operator: n/2 - p on i >= 0, n/2 - p - 1 on i < 0.
    static EndOp mu(const ZWindow &win);
    // Cup product with c_1 = nH at i = 0 and nh at i != 0.
    static EndOp rho(const ZWindow &win);

    const ZWindow &window() const noexcept
    {
        return m_win;
    }
    const std::map<ZKey, ZVec> &columns() const noexcept
    {
        return m_cols;
    }
    bool in_domain(const ZKey &k) const
    {
        return m_cols.count(k) != 0;
    }
    std::set<ZKey> domain() const;
    const ZVec &column(const ZKey &k) const;
    void set_column(const ZKey &k, ZVec v);

    // Throws margin_error if f has a term outside the domain.
    ZSeries apply(const ZSeries &f) const;

    friend EndOp operator+(const EndOp &a, const EndOp &b);
    friend EndOp operator-(const EndOp &a, const EndOp &b);
    friend EndOp operator*(const Rational &s, const EndOp &a);

private:
    ZWindow m_win;
    std::map<ZKey, ZVec> m_cols;
};

// a o b, defined where b is defined and lands inside the domain of a.
EndOp compose(const EndOp &a, const EndOp &b);
EndOp commutator(const EndOp &a, const EndOp &b);
// True iff a and b agree on every column of the given set.
bool agree_on(const EndOp &a, const EndOp &b, const std::set<ZKey> &cols);

EndOp mu_op(const ZWindow &win);
EndOp rho_op(const ZWindow &win);
// l_{-1} = z^{-1}, l_0 = z d/dz + 1/2 + mu + rho/z, l_m = l_0 (z l_0)^m. The sign of mu is a parameter.
EndOp l_op(int m, const ZWindow &win, int mu_sign = 1);

struct BracketReport {
    int m = 0;
    int k = 0;
    Rational factor; // k - m
    std::size_t columns = 0;
    bool exact = false;
};

// Compares [l_m, l_k] with (k - m) l_{m+k} on the common domain. Throws margin_error if it is empty.
BracketReport check_bracket(int m, int k, const ZWindow &win);
// max |Omega(Af, g) + Omega(f, Ag)| over pairs of basis vectors in the domain of A.
Rational check_symplectic(const EndOp &a);

// Coordinate t_{l;i,k}.
struct TVar {
    int l = 0;
    BasisIndex b;
    friend auto operator<=>(const TVar &, const TVar &) = default;
};
std::string format_var(const TVar &v);

// q_{l;i,k} along T_{i,k} z^l, p_{l;i,k} along T_{-i}^k (-z)^{-1-l}.
struct PhaseCoord {
    bool momentum = false;
    TVar v;
    friend auto operator<=>(const PhaseCoord &, const PhaseCoord &) = default;
};
// Polynomial in Darboux coordinates keyed by sorted monomials.
using Hamiltonian = std::map<std::vector<PhaseCoord>, Rational>;

// h_A(f) = Omega(Af, f) / 2 restricted to levels l <= lmax and |i| <= cutoff.
Hamiltonian hamiltonian(const EndOp &a, int lmax, int cutoff);
Hamiltonian hamiltonian(const EndOp &a, int lmax);

// Term hbar^h * coef * prod(vars) * prod(d/dt derivs).
struct DiffTerm {
    int hbar = 0;
    std::vector<TVar> vars;
    std::vector<TVar> derivs;
    friend auto operator<=>(const DiffTerm &, const DiffTerm &) = default;
};

class DiffOperator
{
public:
    void add(DiffTerm t, const Rational &c);
    const std::map<DiffTerm, Rational> &terms() const noexcept
    {
        return m_terms;
    }

    DiffOperator &operator+=(const DiffOperator &o);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator &b)
    {
        return a += b;
    }
    friend DiffOperator operator-(const DiffOperator &a, const DiffOperator &b);
    friend DiffOperator operator*(const Rational &s, const DiffOperator &a);
    friend bool operator==(const DiffOperator &, const DiffOperator &) = default;

private:
    std::map<DiffTerm, Rational> m_terms;
};

// qq -> qq/hbar, qp -> q d/dq, pp -> hbar d d. With the dilaton shift q_{1;0,0} = t_{1;0,0} - 1.
// Throws domain_error on a monomial of degree other than two.
DiffOperator quantize(const Hamiltonian &h, bool dilaton_shift = true);

// The operators L_{-1} and L_0 as displayed in closed form, truncated at level lmax.
DiffOperator build_L(int m, const InsContext &ctx, int lmax);

std::string format_operator(const DiffOperator &op);

// The cocycle with C(pp, qq) = 1 + delta = -C(qq, pp).
Rational cocycle(const Hamiltonian &a, const Hamiltonian &b);
// C(h_{l_{-1}}, h_{l_1}) with variables restricted to |i| <= cutoff.
Rational anomaly(int n, int cutoff);

// Dilaton shift on the position: q(z) = t(z) - z.
ZSeries shifted_position(const ZWindow &win, const std::map<TVar, Rational> &t);
std::map<TVar, Rational> unshifted_coordinates(const ZSeries &q);

struct Truncation {
    int qmax = 2;
    int max_vars = 3;
    int lmax = 1;
};

using PotentialKey = std::pair<int, std::vector<TVar>>;

// Genus-zero potential: coefficient of q^beta prod t is I_beta / prod n_a!.
class PotentialSeries
{
public:
    PotentialSeries(const InsContext &ctx, Truncation tr);

    const InsContext &context() const noexcept
    {
        return m_ctx;
    }
    const Truncation &truncation() const noexcept
    {
        return m_tr;
    }
    bool within(int beta, const std::vector<TVar> &vars) const;
    // nullopt when outside the truncation or unsupported by the provider.
    std::optional<Rational> coefficient(int beta, const std::vector<TVar> &vars) const;
    void set(int beta, std::vector<TVar> vars, const Rational &c);
    void flag(int beta, std::vector<TVar> vars);

    const std::map<PotentialKey, Rational> &known() const noexcept
    {
        return m_known;
    }
    const std::set<PotentialKey> &flagged() const noexcept
    {
        return m_flagged;
    }

private:
    InsContext m_ctx;
    Truncation m_tr;
    std::map<PotentialKey, Rational> m_known;
    std::set<PotentialKey> m_flagged;
};

// Sorted multisets of window variables with at most max_size elements.
std::vector<std::vector<TVar>> variable_multisets(const InsContext &ctx, int lmax, int max_size);

PotentialSeries assemble_potential(const InvariantProvider &p, Truncation tr);

struct ResidualCoeff {
    int beta = 0;
    std::vector<TVar> vars;
    Rational value;
};

struct ResidualReport {
    std::size_t tested = 0;
    std::size_t untestable = 0;
    std::vector<ResidualCoeff> nonzero;
};

// hbar^{-1} part of exp(-F/hbar) L exp(F/hbar), coefficient by coefficient.
ResidualReport genus0_residual(const DiffOperator &op, const PotentialSeries &f);

} // namespace relgw

#endif

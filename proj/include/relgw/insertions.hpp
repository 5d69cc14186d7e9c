#ifndef RELGW_INSERTIONS_HPP
#define RELGW_INSERTIONS_HPP

#include <relgw/cohomology.hpp>
#include <relgw/rational.hpp>

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace relgw
{

// The pair (P^n, P^{n-1}) together with the largest representable |contact order|.
struct InsContext {
    int n = 2;
    int window = 4;

    CohRing ambient() const
    {
        return CohRing(n);
    }
    CohRing divisor() const
    {
        return CohRing(n - 1);
    }
    // Ring that hosts the component of contact order i.
    CohRing ring_at(int i) const
    {
        return i == 0 ? ambient() : divisor();
    }
    bool in_window(int i) const
    {
        return i >= -window && i <= window;
    }

    friend bool operator==(const InsContext &, const InsContext &) = default;
};

InsContext make_context(int n, int window);

// Basis label (i, k): the class [H^k]_0 when i == 0, [h^k]_i otherwise.
struct BasisIndex {
    int i = 0;
    int k = 0;
    friend auto operator<=>(const BasisIndex &, const BasisIndex &) = default;
};

// All basis labels with |i| <= window, ordered by (i, k).
std::vector<BasisIndex> window_basis(const InsContext &ctx);
// Rank of the cohomology ring at contact order i.
int rank_at(const InsContext &ctx, int i);

struct Bidegree {
    int deg1 = 0;
    int deg2 = 0;
    friend bool operator==(const Bidegree &, const Bidegree &) = default;
    friend Bidegree operator+(Bidegree a, const Bidegree &b)
    {
        return {a.deg1 + b.deg1, a.deg2 + b.deg2};
    }
};

// Element of the truncated ring of insertions: a sparse map from contact order to class.
class InsClass
{
public:
    explicit InsClass(const InsContext &ctx);

    static InsClass basis(const InsContext &ctx, int i, int k, const Rational &coef = 1);
    static InsClass basis(const InsContext &ctx, BasisIndex b, const Rational &coef = 1)
    {
        return basis(ctx, b.i, b.k, coef);
    }

    const InsContext &context() const noexcept
    {
        return m_ctx;
    }
    const std::map<int, CohClass> &components() const noexcept
    {
        return m_parts;
    }
    bool is_zero() const noexcept
    {
        return m_parts.empty();
    }
    // Coefficient of the basis label b.
    Rational coeff(BasisIndex b) const;
    // Nonzero (label, coefficient) pairs in basis order.
    std::vector<std::pair<BasisIndex, Rational>> terms() const;

    // Adds a class at contact order i. Throws window_overflow / ring_mismatch.
    void add_component(int i, const CohClass &c);

    InsClass &operator+=(const InsClass &other);
    InsClass &operator-=(const InsClass &other);
    InsClass &operator*=(const Rational &s);
    friend InsClass operator+(InsClass a, const InsClass &b)
    {
        return a += b;
    }
    friend InsClass operator-(InsClass a, const InsClass &b)
    {
        return a -= b;
    }
    friend InsClass operator*(const Rational &s, InsClass a)
    {
        return a *= s;
    }
    friend bool operator==(const InsClass &, const InsClass &) = default;

private:
    void check_same_context(const InsClass &other) const;

    InsContext m_ctx;
    std::map<int, CohClass> m_parts;
};

// [a]_i. Throws window_overflow if |i| > W, ring_mismatch if a lives on the wrong ring.
InsClass embed(const InsContext &ctx, const CohClass &a, int i);

// Pairing: integrals over X or D on opposite contact orders, zero otherwise.
Rational pairing(const InsClass &a, const InsClass &b);

// The class at contact order -i dual to the basis label (i, k).
InsClass dual_basis_element(const InsContext &ctx, int i, int k);

// Label of T_{-i}^k, the dual of the basis label (i, k).
BasisIndex dual_label(int n, BasisIndex b);

// Tri-linear form A (degree-zero three-point function).
Rational trilinear_A(const InsClass &a, const InsClass &b, const InsClass &c);

// Classical product via the explicit case table.
InsClass product(const InsClass &a, const InsClass &b);

// Classical product as sum_{l,k} A(a, b, T_{l,k}) T_{-l}^k, computed only through
// trilinear_A and dual_basis_element.
InsClass product_via_A(const InsClass &a, const InsClass &b);

// (deg1, deg2) of a homogeneous class. Throws domain_error for zero or mixed-degree input.
Bidegree bidegree(const InsClass &a);
Bidegree bidegree(BasisIndex b);

// Grammar:  expr := term ('+' term)* ; term := [coef '*'] base '@' int ;
//           base := 'H^'k | 'h^'k | '1' ; coef := integer | p/q
InsClass parse_insertion(std::string_view text, const InsContext &ctx);

// "[H]@0", "2*[h^2]@-3 + [1]@1".
std::string format_bracket(const InsClass &a);
// Same class in the input grammar, e.g. "2*h^1@-3 + 1@1".
std::string format_expr(const InsClass &a);
std::string format_basis(const InsContext &ctx, BasisIndex b);

} // namespace relgw

#endif

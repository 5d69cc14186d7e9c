#ifndef RELGW_SYMBOLIC_HPP
#define RELGW_SYMBOLIC_HPP

#include <relgw/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace relgw
{

// Exponent vector keyed by symbol name; zero exponents are never stored.
using Monomial = std::map<std::string, int>;

int total_degree(const Monomial &m);

// Sparse commutative polynomial over Q in named symbols, each of degree 1.
class Poly
{
public:
    Poly() = default;
    Poly(const Rational &c); // NOLINT: constants convert implicitly
    static Poly symbol(const std::string &name);

    const std::map<Monomial, Rational> &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    Rational coeff(const Monomial &m) const;
    // Total degrees of the terms present.
    std::vector<int> degrees() const;

    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    friend Poly operator+(Poly a, const Poly &b)
    {
        return a += b;
    }
    friend Poly operator-(Poly a, const Poly &b)
    {
        return a -= b;
    }
    friend Poly operator*(Poly a, const Poly &b)
    {
        return a *= b;
    }
    friend Poly operator-(Poly a)
    {
        return a *= Poly(Rational(-1));
    }
    friend bool operator==(const Poly &, const Poly &) = default;

    Poly pow(int e) const;
    // Replaces a symbol by a constant.
    Poly substitute(const std::string &name, const Rational &value) const;

private:
    void add_term(const Monomial &m, const Rational &c);

    std::map<Monomial, Rational> m_terms;
};

// "2*Psi*psi(s1)^2 - evD(m3) + 1", terms in monomial order.
std::string format_poly(const Poly &p);

// Laurent series in t, t -> infinity, with polynomial coefficients.
// Exponents above lead are zero; coefficients are exact for exponents >= floor and unknown below.
struct SymLaurent {
    std::map<int, Poly> coeffs;
    int lead = 0;
    int floor = 0;

    Poly at(int e) const;
};

SymLaurent operator*(const SymLaurent &a, const SymLaurent &b);
SymLaurent laurent_constant(const Poly &p);

} // namespace relgw

#endif

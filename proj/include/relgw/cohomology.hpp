#ifndef RELGW_COHOMOLOGY_HPP
#define RELGW_COHOMOLOGY_HPP

#include <relgw/rational.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace relgw
{

// Cohomology ring of the projective space P^m, with monomial basis 1, H, ..., H^m.
class CohRing
{
public:
    explicit CohRing(int dim);

    int dim() const noexcept
    {
        return m_dim;
    }
    int rank() const noexcept
    {
        return m_dim + 1;
    }

    // H^a * H^b = sum_c N_{ab}^c H^c.
    Rational structure_constant(int a, int b, int c) const;
    // Poincare pairing of basis monomials.
    Rational pairing(int a, int b) const;
    // Index of the Poincare dual of H^a.
    int dual_index(int a) const noexcept
    {
        return m_dim - a;
    }

    friend bool operator==(const CohRing &, const CohRing &) = default;

private:
    int m_dim;
};

CohRing make_ring(int m);

// Element of H^*(P^m; Q), dense in the monomial basis.
class CohClass
{
public:
    explicit CohClass(const CohRing &ring);
    CohClass(const CohRing &ring, std::vector<Rational> coeffs);

    static CohClass monomial(const CohRing &ring, int a, const Rational &coef = 1);
    static CohClass unit(const CohRing &ring)
    {
        return monomial(ring, 0);
    }

    CohRing ring() const noexcept
    {
        return CohRing(static_cast<int>(m_coeffs.size()) - 1);
    }
    int dim() const noexcept
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    const Rational &coeff(int a) const
    {
        return m_coeffs.at(static_cast<std::size_t>(a));
    }
    const std::vector<Rational> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    bool is_zero() const;
    // Index of the single nonzero coefficient, or -1 if the class is not a nonzero multiple of a monomial.
    int monomial_index() const;

    CohClass &operator+=(const CohClass &other);
    CohClass &operator-=(const CohClass &other);
    CohClass &operator*=(const Rational &s);

    friend CohClass operator+(CohClass a, const CohClass &b)
    {
        return a += b;
    }
    friend CohClass operator-(CohClass a, const CohClass &b)
    {
        return a -= b;
    }
    friend CohClass operator*(const Rational &s, CohClass a)
    {
        return a *= s;
    }
    friend bool operator==(const CohClass &, const CohClass &) = default;

private:
    std::vector<Rational> m_coeffs;
};

// Truncated polynomial product. Throws ring_mismatch.
CohClass cup(const CohClass &a, const CohClass &b);
// Coefficient of the top monomial.
Rational integrate(const CohClass &a);
// iota^*: H^*(P^n) -> H^*(P^{n-1}), H^a -> h^a.
CohClass restrict_to_divisor(const CohClass &a);
// iota_!: H^*(P^{n-1}) -> H^*(P^n), h^a -> H^{a+1}.
CohClass gysin(const CohClass &a);
// c_1(T_X(-log D)) = (n+1)H - H for the hyperplane pair.
CohClass c1_log_tangent(int n);
// Hodge type p of a monomial class (H^a is of type (a,a)). Throws domain_error otherwise.
int hodge_p(const CohClass &a);

// "1", "3H", "H^2 + 1/2*H", with the given generator letter.
std::string format_class(const CohClass &a, char generator);

} // namespace relgw

#endif

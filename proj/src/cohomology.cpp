#include <relgw/cohomology.hpp>
#include <relgw/errors.hpp>

#include <sstream>
#include <utility>

namespace relgw
{

CohRing::CohRing(int dim) : m_dim(dim)
{
    if (dim < 0) {
        throw domain_error("projective space dimension must be nonnegative");
    }
}

Rational CohRing::structure_constant(int a, int b, int c) const
{
    return (a + b == c && c <= m_dim) ? Rational(1) : Rational(0);
}

Rational CohRing::pairing(int a, int b) const
{
    return a + b == m_dim ? Rational(1) : Rational(0);
}

CohRing make_ring(int m)
{
    return CohRing(m);
}

CohClass::CohClass(const CohRing &ring) : m_coeffs(static_cast<std::size_t>(ring.rank())) {}

CohClass::CohClass(const CohRing &ring, std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs))
{
    if (m_coeffs.size() != static_cast<std::size_t>(ring.rank())) {
        throw ring_mismatch("coefficient vector does not match ring rank");
    }
}

CohClass CohClass::monomial(const CohRing &ring, int a, const Rational &coef)
{
    if (a < 0 || a > ring.dim()) {
        throw domain_error("monomial exponent outside [0, dim]");
    }
    CohClass c(ring);
    c.m_coeffs[static_cast<std::size_t>(a)] = coef;
    return c;
}

bool CohClass::is_zero() const
{
    for (const auto &c : m_coeffs) {
        if (!relgw::is_zero(c)) {
            return false;
        }
    }
    return true;
}

int CohClass::monomial_index() const
{
    int found = -1;
    for (std::size_t a = 0; a < m_coeffs.size(); ++a) {
        if (!relgw::is_zero(m_coeffs[a])) {
            if (found >= 0) {
                return -1;
            }
            found = static_cast<int>(a);
        }
    }
    return found;
}

CohClass &CohClass::operator+=(const CohClass &other)
{
    if (other.m_coeffs.size() != m_coeffs.size()) {
        throw ring_mismatch("adding classes from different rings");
    }
    for (std::size_t a = 0; a < m_coeffs.size(); ++a) {
        m_coeffs[a] += other.m_coeffs[a];
    }
    return *this;
}

CohClass &CohClass::operator-=(const CohClass &other)
{
    if (other.m_coeffs.size() != m_coeffs.size()) {
        throw ring_mismatch("subtracting classes from different rings");
    }
    for (std::size_t a = 0; a < m_coeffs.size(); ++a) {
        m_coeffs[a] -= other.m_coeffs[a];
    }
    return *this;
}

CohClass &CohClass::operator*=(const Rational &s)
{
    for (auto &c : m_coeffs) {
        c *= s;
    }
    return *this;
}

CohClass cup(const CohClass &a, const CohClass &b)
{
    if (a.dim() != b.dim()) {
        throw ring_mismatch("cup product of classes from different rings");
    }
    const int m = a.dim();
    std::vector<Rational> out(static_cast<std::size_t>(m + 1));
    for (int i = 0; i <= m; ++i) {
        if (is_zero(a.coeff(i))) {
            continue;
        }
        for (int j = 0; i + j <= m; ++j) {
            out[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return CohClass(a.ring(), std::move(out));
}

Rational integrate(const CohClass &a)
{
    return a.coeff(a.dim());
}

CohClass restrict_to_divisor(const CohClass &a)
{
    if (a.dim() < 1) {
        throw domain_error("restriction needs an ambient space of dimension >= 1");
    }
    const CohRing d(a.dim() - 1);
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end() - 1);
    return CohClass(d, std::move(out));
}

CohClass gysin(const CohClass &a)
{
    const CohRing x(a.dim() + 1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(x.rank()));
    out.emplace_back(0);
    out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
    return CohClass(x, std::move(out));
}

CohClass c1_log_tangent(int n)
{
    if (n < 1) {
        throw domain_error("ambient dimension must be >= 1");
    }
    const CohRing x(n);
    // Euler sequence gives c_1(T P^n) = (n+1)H; the log twist removes [D] = H.
    return CohClass::monomial(x, 1, n);
}

int hodge_p(const CohClass &a)
{
    const int idx = a.monomial_index();
    if (idx < 0) {
        throw domain_error("Hodge type requested for a non-monomial class");
    }
    return idx;
}

std::string format_class(const CohClass &a, char generator)
{
    std::ostringstream os;
    bool first = true;
    for (int k = a.dim(); k >= 0; --k) {
        const Rational &c = a.coeff(k);
        if (is_zero(c)) {
            continue;
        }
        Rational mag = abs(c);
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << '-';
        }
        first = false;
        if (k == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) {
            os << to_string(mag) << '*';
        }
        os << generator;
        if (k > 1) {
            os << '^' << k;
        }
    }
    if (first) {
        os << '0';
    }
    return os.str();
}

} // namespace relgw

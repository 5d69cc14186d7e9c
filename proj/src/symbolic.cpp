#include <relgw/errors.hpp>
#include <relgw/symbolic.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace relgw
{

int total_degree(const Monomial &m)
{
    int d = 0;
    for (const auto &[s, e] : m) {
        (void)s;
        d += e;
    }
    return d;
}

Poly::Poly(const Rational &c)
{
    add_term({}, c);
}

Poly Poly::symbol(const std::string &name)
{
    Poly p;
    p.add_term({{name, 1}}, 1);
    return p;
}

void Poly::add_term(const Monomial &m, const Rational &c)
{
    if (relgw::is_zero(c)) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (relgw::is_zero(it->second)) {
            m_terms.erase(it);
        }
    }
}

Rational Poly::coeff(const Monomial &m) const
{
    auto it = m_terms.find(m);
    return it == m_terms.end() ? Rational(0) : it->second;
}

std::vector<int> Poly::degrees() const
{
    std::vector<int> out;
    for (const auto &[m, c] : m_terms) {
        (void)c;
        out.push_back(total_degree(m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly &Poly::operator+=(const Poly &o)
{
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, c);
    }
    return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, -c);
    }
    return *this;
}

Poly &Poly::operator*=(const Poly &o)
{
    Poly r;
    for (const auto &[m1, c1] : m_terms) {
        for (const auto &[m2, c2] : o.m_terms) {
            Monomial m = m1;
            for (const auto &[s, e] : m2) {
                m[s] += e;
            }
            r.add_term(m, c1 * c2);
        }
    }
    *this = std::move(r);
    return *this;
}

Poly Poly::pow(int e) const
{
    if (e < 0) {
        throw domain_error("negative power of a polynomial");
    }
    Poly r(Rational(1));
    for (int k = 0; k < e; ++k) {
        r *= *this;
    }
    return r;
}

Poly Poly::substitute(const std::string &name, const Rational &value) const
{
    Poly r;
    for (const auto &[m, c] : m_terms) {
        Monomial rest = m;
        Rational k = c;
        auto it = rest.find(name);
        if (it != rest.end()) {
            for (int j = 0; j < it->second; ++j) {
                k *= value;
            }
            rest.erase(it);
        }
        r.add_term(rest, k);
    }
    return r;
}

std::string format_poly(const Poly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        const Rational mag = abs(c);
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << '-';
        }
        first = false;
        if (m.empty()) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) {
            os << to_string(mag) << '*';
        }
        bool first_sym = true;
        for (const auto &[s, e] : m) {
            os << (first_sym ? "" : "*") << s;
            if (e > 1) {
                os << '^' << e;
            }
            first_sym = false;
        }
    }
    return os.str();
}

Poly SymLaurent::at(int e) const
{
    if (e < floor) {
        throw margin_error("Laurent coefficient below the computed floor");
    }
    auto it = coeffs.find(e);
    return it == coeffs.end() ? Poly() : it->second;
}

SymLaurent operator*(const SymLaurent &a, const SymLaurent &b)
{
    SymLaurent r;
    r.lead = a.lead + b.lead;
    r.floor = std::max(a.floor + b.lead, a.lead + b.floor);
    for (const auto &[ea, pa] : a.coeffs) {
        for (const auto &[eb, pb] : b.coeffs) {
            if (ea + eb < r.floor) {
                continue;
            }
            r.coeffs[ea + eb] += pa * pb;
        }
    }
    for (auto it = r.coeffs.begin(); it != r.coeffs.end();) {
        it = it->second.is_zero() ? r.coeffs.erase(it) : std::next(it);
    }
    return r;
}

SymLaurent laurent_constant(const Poly &p)
{
    SymLaurent r;
    r.lead = 0;
    r.floor = std::numeric_limits<int>::min() / 4;
    if (!p.is_zero()) {
        r.coeffs[0] = p;
    }
    return r;
}

} // namespace relgw

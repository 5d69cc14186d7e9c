#include <relgw/errors.hpp>
#include <relgw/quantum.hpp>

#include <sstream>
#include <stdexcept>

namespace relgw
{

bool in_monoid(LatticePoint p)
{
    return p.b >= 1 || (p.b == 0 && p.a >= 0);
}

MonoidElem MonoidElem::point(LatticePoint p, const Rational &c)
{
    MonoidElem u;
    u.add(p, c);
    return u;
}

void MonoidElem::add(LatticePoint p, const Rational &c)
{
    if (!in_monoid(p)) {
        throw domain_error("lattice point outside the monoid");
    }
    if (is_zero(c)) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) {
            m_terms.erase(it);
        }
    }
}

MonoidElem &MonoidElem::operator+=(const MonoidElem &o)
{
    for (const auto &[p, c] : o.m_terms) {
        add(p, c);
    }
    return *this;
}

MonoidElem operator*(const MonoidElem &u, const MonoidElem &v)
{
    MonoidElem r;
    for (const auto &[p, c] : u.m_terms) {
        for (const auto &[s, d] : v.m_terms) {
            r.add({p.a + s.a, p.b + s.b}, c * d);
        }
    }
    return r;
}

LatticePoint dictionary_point(BasisIndex b)
{
    if (b.i < 0) {
        return {b.i, b.k + 1};
    }
    return {b.i, b.k};
}

MonoidElem ins_to_monoid(const InsClass &c)
{
    MonoidElem u;
    for (const auto &[b, coef] : c.terms()) {
        u.add(dictionary_point(b), coef);
    }
    return u;
}

namespace
{

std::optional<BasisIndex> dictionary_label(LatticePoint p, int n)
{
    if (p.a == 0 && p.b >= 0 && p.b <= n) {
        return BasisIndex{0, p.b};
    }
    if (p.a > 0 && p.b >= 0 && p.b <= n - 1) {
        return BasisIndex{p.a, p.b};
    }
    if (p.a < 0 && p.b >= 1 && p.b <= n) {
        return BasisIndex{p.a, p.b - 1};
    }
    return std::nullopt;
}

} // namespace

QDecomposition decompose_point(LatticePoint p, int n)
{
    if (!in_monoid(p)) {
        throw domain_error("lattice point outside the monoid");
    }
    std::optional<QDecomposition> found;
    for (int m = 0; p.b - m * n >= 0; ++m) {
        const LatticePoint r{p.a - m, p.b - m * n};
        if (!in_monoid(r)) {
            continue;
        }
        if (auto lab = dictionary_label(r, n)) {
            if (found) {
                throw std::logic_error("q-shift decomposition is not unique");
            }
            found = QDecomposition{m, *lab};
        }
    }
    if (!found) {
        throw domain_error("lattice point has no q-shift decomposition");
    }
    return *found;
}

InsClass QSeriesClass::at(int m) const
{
    auto it = parts.find(m);
    return it == parts.end() ? InsClass(ctx) : it->second;
}

QSeriesClass monoid_to_qseries(const MonoidElem &u, const InsContext &ctx, int qmax)
{
    QSeriesClass s{ctx, qmax, {}};
    for (const auto &[p, c] : u.terms()) {
        const QDecomposition d = decompose_point(p, ctx.n);
        if (d.m > qmax) {
            continue;
        }
        auto [it, inserted] = s.parts.try_emplace(d.m, ctx);
        (void)inserted;
        it->second += InsClass::basis(ctx, d.basis, c);
        if (it->second.is_zero()) {
            s.parts.erase(it);
        }
    }
    return s;
}

QSeriesClass quantum_product_small(const InsClass &u, const InsClass &v, int qmax)
{
    if (!(u.context() == v.context())) {
        throw ring_mismatch("quantum product of classes from different contexts");
    }
    return monoid_to_qseries(ins_to_monoid(u) * ins_to_monoid(v), u.context(), qmax);
}

InsClass classical_limit(const QSeriesClass &s)
{
    return s.at(0);
}

std::string format_qseries(const QSeriesClass &s)
{
    if (s.parts.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : s.parts) {
        if (!first) {
            os << " + ";
        }
        first = false;
        const std::string body = format_expr(c);
        if (m == 0) {
            os << body;
            continue;
        }
        os << 'q';
        if (m > 1) {
            os << '^' << m;
        }
        os << " * ";
        if (c.terms().size() > 1) {
            os << '(' << body << ')';
        } else {
            os << body;
        }
    }
    return os.str();
}

} // namespace relgw

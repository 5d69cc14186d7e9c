#include <relgw/errors.hpp>
#include <relgw/givental.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace relgw
{

std::string format_var(const TVar &v)
{
    return "t[" + std::to_string(v.l) + ";" + std::to_string(v.b.i) + "," + std::to_string(v.b.k) + "]";
}

namespace
{

struct Coordinate {
    PhaseCoord coord;
    Rational scale;
};

std::vector<PhaseCoord> sorted_pair(const PhaseCoord &a, const PhaseCoord &b)
{
    return a < b ? std::vector<PhaseCoord>{a, b} : std::vector<PhaseCoord>{b, a};
}

void add_monomial(Hamiltonian &h, std::vector<PhaseCoord> m, const Rational &c)
{
    if (is_zero(c)) {
        return;
    }
    auto [it, inserted] = h.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) {
            h.erase(it);
        }
    }
}

} // namespace

Hamiltonian hamiltonian(const EndOp &a, int lmax, int cutoff)
{
    const InsContext &ctx = a.window().ctx;
    int n = ctx.n;
    std::map<ZKey, Coordinate> coords;
    for (int l = 0; l <= lmax; ++l) {
        for (const auto &b : window_basis(ctx)) {
            if (std::abs(b.i) > cutoff) {
                continue;
            }
            coords[{l, b}] = {{false, {l, b}}, Rational(1)};
            coords[{-1 - l, dual_label(n, b)}] = {{true, {l, b}}, Rational(l % 2 == 0 ? -1 : 1)};
        }
    }
    Hamiltonian h;
    for (const auto &[key, alpha] : coords) {
        for (const auto &[k, c] : a.column(key)) {
            auto it = coords.find({-1 - k.e, dual_label(n, k.b)});
            if (it == coords.end()) {
                continue;
            }
            Rational w = alpha.scale * c * it->second.scale / 2;
            if (k.e % 2 != 0) {
                w = -w;
            }
            add_monomial(h, sorted_pair(alpha.coord, it->second.coord), w);
        }
    }
    return h;
}

Hamiltonian hamiltonian(const EndOp &a, int lmax)
{
    return hamiltonian(a, lmax, a.window().ctx.window);
}

void DiffOperator::add(DiffTerm t, const Rational &c)
{
    if (is_zero(c)) {
        return;
    }
    std::sort(t.vars.begin(), t.vars.end());
    std::sort(t.derivs.begin(), t.derivs.end());
    auto [it, inserted] = m_terms.try_emplace(std::move(t), c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) {
            m_terms.erase(it);
        }
    }
}

DiffOperator &DiffOperator::operator+=(const DiffOperator &o)
{
    for (const auto &[t, c] : o.m_terms) {
        add(t, c);
    }
    return *this;
}

DiffOperator operator*(const Rational &s, const DiffOperator &a)
{
    DiffOperator r;
    for (const auto &[t, c] : a.m_terms) {
        r.add(t, s * c);
    }
    return r;
}

DiffOperator operator-(const DiffOperator &a, const DiffOperator &b)
{
    return a + Rational(-1) * b;
}

namespace
{

const TVar dilaton_var{1, {0, 0}};

// q_v = t_v - shift(v) as a list of (monomial, coefficient).
std::vector<std::pair<std::vector<TVar>, Rational>> position(const TVar &v, bool dilaton_shift)
{
    std::vector<std::pair<std::vector<TVar>, Rational>> out{{{v}, Rational(1)}};
    if (dilaton_shift && v == dilaton_var) {
        out.push_back({{}, Rational(-1)});
    }
    return out;
}

} // namespace

DiffOperator quantize(const Hamiltonian &h, bool dilaton_shift)
{
    DiffOperator op;
    for (const auto &[m, c] : h) {
        if (m.size() != 2) {
            throw domain_error("quantization needs a quadratic Hamiltonian");
        }
        const PhaseCoord &x = m[0];
        const PhaseCoord &y = m[1];
        if (!x.momentum && !y.momentum) {
            for (const auto &[mx, cx] : position(x.v, dilaton_shift)) {
                for (const auto &[my, cy] : position(y.v, dilaton_shift)) {
                    std::vector<TVar> vars = mx;
                    vars.insert(vars.end(), my.begin(), my.end());
                    op.add({-1, vars, {}}, c * cx * cy);
                }
            }
        } else if (x.momentum && y.momentum) {
            op.add({1, {}, {x.v, y.v}}, c);
        } else {
            const PhaseCoord &q = x.momentum ? y : x;
            const PhaseCoord &p = x.momentum ? x : y;
            for (const auto &[mq, cq] : position(q.v, dilaton_shift)) {
                op.add({0, mq, {p.v}}, c * cq);
            }
        }
    }
    return op;
}

DiffOperator build_L(int m, const InsContext &ctx, int lmax)
{
    if (m != -1 && m != 0) {
        throw domain_error("closed forms exist for L_{-1} and L_0 only");
    }
    if (lmax < 1) {
        throw domain_error("build_L needs lmax >= 1");
    }
    int n = ctx.n;
    auto basis = window_basis(ctx);
    DiffOperator op;
    if (m == -1) {
        op.add({0, {}, {{0, {0, 0}}}}, -1);
        for (int l = 0; l + 1 <= lmax; ++l) {
            for (const auto &b : basis) {
                op.add({0, {{l + 1, b}}, {{l, b}}}, 1);
            }
        }
        for (const auto &b : basis) {
            op.add({-1, {{0, b}, {0, dual_label(n, b)}}, {}}, fraction(1, 2));
        }
        return op;
    }
    op.add({0, {}, {dilaton_var}}, fraction(n - 3, 2));
    for (int l = 0; l <= lmax; ++l) {
        for (const auto &b : basis) {
            Rational mu = fraction(n, 2);
            mu -= b.k;
            if (b.i < 0) {
                mu -= 1;
            }
            op.add({0, {{l, b}}, {{l, b}}}, -mu + l + fraction(1, 2));
        }
    }
    op.add({0, {}, {{0, {0, 1}}}}, -n);
    for (const auto &b : basis) {
        int top = b.i == 0 ? n : n - 1;
        if (b.k + 1 > top) {
            continue;
        }
        BasisIndex up{b.i, b.k + 1};
        for (int l = 0; l + 1 <= lmax; ++l) {
            op.add({0, {{l + 1, b}}, {{l, up}}}, n);
        }
        op.add({-1, {{0, b}, {0, dual_label(n, up)}}, {}}, fraction(n, 2));
    }
    return op;
}

std::string format_operator(const DiffOperator &op)
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[t, c] : op.terms()) {
        os << (first ? "" : "\n") << to_string(c);
        first = false;
        if (t.hbar != 0) {
            os << " hbar^" << t.hbar;
        }
        for (const auto &v : t.vars) {
            os << " " << format_var(v);
        }
        for (const auto &v : t.derivs) {
            os << " d/d" << format_var(v);
        }
    }
    return first ? "0" : os.str();
}

Rational cocycle(const Hamiltonian &a, const Hamiltonian &b)
{
    auto paired = [](const std::vector<PhaseCoord> &m, bool momentum) {
        std::vector<PhaseCoord> r = m;
        for (auto &x : r) {
            x.momentum = momentum;
        }
        std::sort(r.begin(), r.end());
        return r;
    };
    Rational total = 0;
    for (const auto &[m, c] : a) {
        if (m.size() != 2 || m[0].momentum != m[1].momentum) {
            continue;
        }
        bool pp = m[0].momentum;
        auto it = b.find(paired(m, !pp));
        if (it == b.end()) {
            continue;
        }
        Rational w = c * it->second * (m[0].v == m[1].v ? 2 : 1);
        total += pp ? w : Rational(-w);
    }
    return total;
}

Rational anomaly(int n, int cutoff)
{
    if (cutoff < 1) {
        throw domain_error("anomaly cutoff must be at least 1");
    }
    ZWindow win = make_zwindow(make_context(n, cutoff), -6, 6);
    return cocycle(hamiltonian(l_op(-1, win), 0), hamiltonian(l_op(1, win), 0));
}

ZSeries shifted_position(const ZWindow &win, const std::map<TVar, Rational> &t)
{
    ZSeries q(win);
    q.add(1, InsClass::basis(win.ctx, {0, 0}, -1));
    for (const auto &[v, c] : t) {
        q.add(v.l, InsClass::basis(win.ctx, v.b, c));
    }
    return q;
}

std::map<TVar, Rational> unshifted_coordinates(const ZSeries &q)
{
    std::map<TVar, Rational> t{{dilaton_var, Rational(1)}};
    for (const auto &[k, c] : q.vec()) {
        if (k.e < 0) {
            continue;
        }
        Rational &v = t[{k.e, k.b}];
        v += c;
        if (is_zero(v)) {
            t.erase({k.e, k.b});
        }
    }
    return t;
}

} // namespace relgw

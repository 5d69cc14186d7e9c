#include <relgw/errors.hpp>
#include <relgw/givental.hpp>

#include <algorithm>
#include <stdexcept>

namespace relgw
{

void add_to(ZVec &v, const ZKey &k, const Rational &c)
{
    if (is_zero(c)) {
        return;
    }
    auto [it, inserted] = v.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) {
            v.erase(it);
        }
    }
}

std::vector<ZKey> ZWindow::basis() const
{
    std::vector<ZKey> out;
    auto labels = window_basis(ctx);
    for (int e = zmin; e <= zmax; ++e) {
        for (const auto &b : labels) {
            out.push_back({e, b});
        }
    }
    return out;
}

ZWindow make_zwindow(const InsContext &ctx, int zmin, int zmax)
{
    if (!(zmin < 0 && zmax > 0)) {
        throw domain_error("z-window must satisfy zmin < 0 < zmax");
    }
    return {ctx, zmin, zmax};
}

ZSeries::ZSeries(const ZWindow &win) : m_win(win)
{
}

ZSeries ZSeries::monomial(const ZWindow &win, const InsClass &c, int e)
{
    ZSeries s(win);
    s.add(e, c);
    return s;
}

ZSeries ZSeries::from_vec(const ZWindow &win, const ZVec &v)
{
    ZSeries s(win);
    for (const auto &[k, c] : v) {
        s.add(k.e, InsClass::basis(win.ctx, k.b, c));
    }
    return s;
}

void ZSeries::add(int e, const InsClass &c)
{
    if (c.context() != m_win.ctx) {
        throw ring_mismatch("z-series coefficient from a different context");
    }
    if (e < m_win.zmin || e > m_win.zmax) {
        throw margin_error("z-exponent " + std::to_string(e) + " outside the z-window");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_coeffs.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_coeffs.erase(it);
        }
    }
}

InsClass ZSeries::at(int e) const
{
    auto it = m_coeffs.find(e);
    return it == m_coeffs.end() ? InsClass(m_win.ctx) : it->second;
}

ZVec ZSeries::vec() const
{
    ZVec v;
    for (const auto &[e, c] : m_coeffs) {
        for (const auto &[b, x] : c.terms()) {
            add_to(v, {e, b}, x);
        }
    }
    return v;
}

Rational omega(int n, const ZVec &f, const ZVec &g)
{
    Rational total = 0;
    for (const auto &[k, c] : f) {
        auto it = g.find({-1 - k.e, dual_label(n, k.b)});
        if (it == g.end()) {
            continue;
        }
        Rational term = c * it->second;
        total += (k.e % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

Rational omega(const ZSeries &f, const ZSeries &g)
{
    if (f.window().ctx != g.window().ctx) {
        throw ring_mismatch("omega of series from different contexts");
    }
    return omega(f.window().ctx.n, f.vec(), g.vec());
}

EndOp::EndOp(const ZWindow &win) : m_win(win)
{
}

namespace
{

int top_degree(const InsContext &ctx, int i)
{
    return i == 0 ? ctx.n : ctx.n - 1;
}

Rational mu_value(int n, BasisIndex b)
{
    Rational v = fraction(n, 2);
    v -= b.k;
    if (b.i < 0) {
        v -= 1;
    }
    return v;
}

} // namespace

EndOp EndOp::identity(const ZWindow &win)
{
    return zpow(win, 0);
}

EndOp EndOp::zpow(const ZWindow &win, int s)
{
    EndOp op(win);
    for (const auto &k : win.basis()) {
        ZKey image{k.e + s, k.b};
        if (win.contains(image)) {
            op.m_cols[k] = ZVec{{image, Rational(1)}};
        }
    }
    return op;
}

EndOp EndOp::euler(const ZWindow &win)
{
    EndOp op(win);
    for (const auto &k : win.basis()) {
        ZVec v;
        add_to(v, k, Rational(k.e));
        op.m_cols[k] = v;
    }
    return op;
}

EndOp EndOp::mu(const ZWindow &win)
{
    EndOp op(win);
    for (const auto &k : win.basis()) {
        ZVec v;
        add_to(v, k, mu_value(win.ctx.n, k.b));
        op.m_cols[k] = v;
    }
    return op;
}

EndOp EndOp::rho(const ZWindow &win)
{
    EndOp op(win);
    for (const auto &k : win.basis()) {
        ZVec v;
        if (k.b.k + 1 <= top_degree(win.ctx, k.b.i)) {
            add_to(v, {k.e, {k.b.i, k.b.k + 1}}, Rational(win.ctx.n));
        }
        op.m_cols[k] = v;
    }
    return op;
}

std::set<ZKey> EndOp::domain() const
{
    std::set<ZKey> d;
    for (const auto &[k, v] : m_cols) {
        d.insert(k);
    }
    return d;
}

const ZVec &EndOp::column(const ZKey &k) const
{
    auto it = m_cols.find(k);
    if (it == m_cols.end()) {
        throw margin_error("basis vector outside the operator domain");
    }
    return it->second;
}

void EndOp::set_column(const ZKey &k, ZVec v)
{
    m_cols[k] = std::move(v);
}

ZSeries EndOp::apply(const ZSeries &f) const
{
    ZVec out;
    for (const auto &[k, c] : f.vec()) {
        for (const auto &[kk, x] : column(k)) {
            add_to(out, kk, c * x);
        }
    }
    return ZSeries::from_vec(m_win, out);
}

EndOp operator+(const EndOp &a, const EndOp &b)
{
    EndOp r(a.m_win);
    for (const auto &[k, v] : a.m_cols) {
        auto it = b.m_cols.find(k);
        if (it == b.m_cols.end()) {
            continue;
        }
        ZVec s = v;
        for (const auto &[kk, x] : it->second) {
            add_to(s, kk, x);
        }
        r.m_cols[k] = s;
    }
    return r;
}

EndOp operator*(const Rational &s, const EndOp &a)
{
    EndOp r(a.m_win);
    for (const auto &[k, v] : a.m_cols) {
        ZVec w;
        for (const auto &[kk, x] : v) {
            add_to(w, kk, s * x);
        }
        r.m_cols[k] = w;
    }
    return r;
}

EndOp operator-(const EndOp &a, const EndOp &b)
{
    return a + Rational(-1) * b;
}

EndOp compose(const EndOp &a, const EndOp &b)
{
    EndOp r(b.window());
    for (const auto &[k, v] : b.columns()) {
        bool ok = std::all_of(v.begin(), v.end(), [&](const auto &kv) { return a.in_domain(kv.first); });
        if (!ok) {
            continue;
        }
        ZVec w;
        for (const auto &[kk, x] : v) {
            for (const auto &[k2, y] : a.column(kk)) {
                add_to(w, k2, x * y);
            }
        }
        r.set_column(k, w);
    }
    return r;
}

EndOp commutator(const EndOp &a, const EndOp &b)
{
    return compose(a, b) - compose(b, a);
}

bool agree_on(const EndOp &a, const EndOp &b, const std::set<ZKey> &cols)
{
    for (const auto &k : cols) {
        if (a.column(k) != b.column(k)) {
            return false;
        }
    }
    return true;
}

EndOp mu_op(const ZWindow &win)
{
    return EndOp::mu(win);
}

EndOp rho_op(const ZWindow &win)
{
    return EndOp::rho(win);
}

EndOp l_op(int m, const ZWindow &win, int mu_sign)
{
    if (m < -1) {
        throw domain_error("l_m is defined for m >= -1");
    }
    if (m == -1) {
        return EndOp::zpow(win, -1);
    }
    EndOp l0 = EndOp::euler(win) + fraction(1, 2) * EndOp::identity(win) + Rational(mu_sign) * EndOp::mu(win) +
               compose(EndOp::rho(win), EndOp::zpow(win, -1));
    EndOp zl0 = compose(EndOp::zpow(win, 1), l0);
    EndOp r = l0;
    for (int j = 0; j < m; ++j) {
        r = compose(r, zl0);
    }
    return r;
}

BracketReport check_bracket(int m, int k, const ZWindow &win)
{
    BracketReport rep;
    rep.m = m;
    rep.k = k;
    rep.factor = k - m;
    EndOp lhs = commutator(l_op(m, win), l_op(k, win));
    EndOp rhs(win);
    if (m == k) {
        for (const auto &c : lhs.domain()) {
            rhs.set_column(c, {});
        }
    } else {
        rhs = rep.factor * l_op(m + k, win);
    }
    std::set<ZKey> common;
    for (const auto &c : lhs.domain()) {
        if (rhs.in_domain(c)) {
            common.insert(c);
        }
    }
    if (common.empty()) {
        throw margin_error("no basis vector survives both sides of the bracket");
    }
    rep.columns = common.size();
    rep.exact = agree_on(lhs, rhs, common);
    return rep;
}

Rational check_symplectic(const EndOp &a)
{
    int n = a.window().ctx.n;
    Rational worst = 0;
    const auto &cols = a.columns();
    for (const auto &[f, af] : cols) {
        // Omega(Af, g) + Omega(f, Ag) can only be nonzero when g pairs with some term of Af.
        std::set<ZKey> partners;
        for (const auto &[k, c] : af) {
            partners.insert({-1 - k.e, dual_label(n, k.b)});
        }
        for (const auto &[g, ag] : cols) {
            bool relevant = partners.count(g) != 0;
            if (!relevant) {
                for (const auto &[k, c] : ag) {
                    if (k == ZKey{-1 - f.e, dual_label(n, f.b)}) {
                        relevant = true;
                        break;
                    }
                }
            }
            if (!relevant) {
                continue;
            }
            Rational r = omega(n, af, ZVec{{g, Rational(1)}}) + omega(n, ZVec{{f, Rational(1)}}, ag);
            worst = std::max(worst, Rational(abs(r)));
        }
    }
    return worst;
}

} // namespace relgw

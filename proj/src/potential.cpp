#include <relgw/errors.hpp>
#include <relgw/givental.hpp>

#include <algorithm>
#include <functional>

namespace relgw
{

PotentialSeries::PotentialSeries(const InsContext &ctx, Truncation tr) : m_ctx(ctx), m_tr(tr)
{
}

bool PotentialSeries::within(int beta, const std::vector<TVar> &vars) const
{
    if (beta < 0 || beta > m_tr.qmax || static_cast<int>(vars.size()) > m_tr.max_vars) {
        return false;
    }
    return std::all_of(vars.begin(), vars.end(),
                       [&](const TVar &v) { return v.l >= 0 && v.l <= m_tr.lmax && m_ctx.in_window(v.b.i); });
}

namespace
{

std::vector<BasisInsertion> as_insertions(const std::vector<TVar> &vars)
{
    std::vector<BasisInsertion> ins;
    for (const auto &v : vars) {
        ins.push_back({v.l, v.b});
    }
    return ins;
}

Rational symmetry_factor(const std::vector<TVar> &sorted)
{
    mpz_class f = 1;
    std::size_t run = 0;
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        run = (j > 0 && sorted[j] == sorted[j - 1]) ? run + 1 : 1;
        f *= static_cast<unsigned long>(run);
    }
    return Rational(f);
}

} // namespace

std::optional<Rational> PotentialSeries::coefficient(int beta, const std::vector<TVar> &vars) const
{
    std::vector<TVar> key = vars;
    std::sort(key.begin(), key.end());
    if (beta < 0 || !passes_selection_rules(m_ctx.n, beta, as_insertions(key))) {
        return Rational(0);
    }
    if (!within(beta, key)) {
        return std::nullopt;
    }
    PotentialKey k{beta, key};
    if (m_flagged.count(k) != 0) {
        return std::nullopt;
    }
    auto it = m_known.find(k);
    return it == m_known.end() ? Rational(0) : it->second;
}

void PotentialSeries::set(int beta, std::vector<TVar> vars, const Rational &c)
{
    std::sort(vars.begin(), vars.end());
    PotentialKey k{beta, std::move(vars)};
    m_flagged.erase(k);
    if (is_zero(c)) {
        m_known.erase(k);
    } else {
        m_known[k] = c;
    }
}

void PotentialSeries::flag(int beta, std::vector<TVar> vars)
{
    std::sort(vars.begin(), vars.end());
    PotentialKey k{beta, std::move(vars)};
    m_known.erase(k);
    m_flagged.insert(k);
}

std::vector<std::vector<TVar>> variable_multisets(const InsContext &ctx, int lmax, int max_size)
{
    std::vector<TVar> vars;
    for (int l = 0; l <= lmax; ++l) {
        for (const auto &b : window_basis(ctx)) {
            vars.push_back({l, b});
        }
    }
    std::sort(vars.begin(), vars.end());
    std::vector<std::vector<TVar>> out;
    std::vector<TVar> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_size) {
            return;
        }
        for (std::size_t j = from; j < vars.size(); ++j) {
            cur.push_back(vars[j]);
            rec(j);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

PotentialSeries assemble_potential(const InvariantProvider &p, Truncation tr)
{
    PotentialSeries f(p.context(), tr);
    int n = p.context().n;
    for (const auto &vars : variable_multisets(p.context(), tr.lmax, tr.max_vars)) {
        auto ins = as_insertions(vars);
        for (int beta = 0; beta <= tr.qmax; ++beta) {
            if (!passes_selection_rules(n, beta, ins)) {
                continue;
            }
            auto v = p.basis_invariant(beta, ins);
            if (!v) {
                f.flag(beta, vars);
            } else if (!is_zero(*v)) {
                f.set(beta, vars, *v / symmetry_factor(vars));
            }
        }
    }
    return f;
}

namespace
{

// Removes sub from the sorted multiset m; false if sub is not contained in m.
bool subtract(const std::vector<TVar> &m, const std::vector<TVar> &sub, std::vector<TVar> &rest)
{
    rest.clear();
    std::size_t j = 0;
    for (const auto &v : m) {
        if (j < sub.size() && sub[j] == v) {
            ++j;
        } else {
            rest.push_back(v);
        }
    }
    return j == sub.size();
}

std::vector<TVar> merged(const std::vector<TVar> &a, const std::vector<TVar> &b)
{
    std::vector<TVar> r = a;
    r.insert(r.end(), b.begin(), b.end());
    std::sort(r.begin(), r.end());
    return r;
}

// Coefficient of q^beta t^rest in the derivative of F along the sorted multiset block.
std::optional<Rational> derivative_coefficient(const PotentialSeries &f, int beta, const std::vector<TVar> &rest,
                                               const std::vector<TVar> &block)
{
    std::vector<TVar> full = merged(rest, block);
    auto c = f.coefficient(beta, full);
    if (!c || is_zero(*c)) {
        return c;
    }
    Rational r = *c;
    for (std::size_t j = 0; j < block.size(); ++j) {
        if (j > 0 && block[j] == block[j - 1]) {
            continue;
        }
        long in_rest = std::count(rest.begin(), rest.end(), block[j]);
        long in_block = std::count(block.begin(), block.end(), block[j]);
        for (long x = in_rest + 1; x <= in_rest + in_block; ++x) {
            r *= x;
        }
    }
    return r;
}

// Sub-multisets of a sorted multiset, each listed once.
std::vector<std::vector<TVar>> sub_multisets(const std::vector<TVar> &m)
{
    std::vector<std::vector<TVar>> out{{}};
    std::size_t j = 0;
    while (j < m.size()) {
        std::size_t e = j;
        while (e < m.size() && m[e] == m[j]) {
            ++e;
        }
        std::vector<std::vector<TVar>> next;
        for (const auto &s : out) {
            for (std::size_t c = 0; c <= e - j; ++c) {
                auto t = s;
                t.insert(t.end(), c, m[j]);
                next.push_back(t);
            }
        }
        out = std::move(next);
        j = e;
    }
    return out;
}

// Coefficient of q^beta t^rest in the product of the derivatives of F along each block.
std::optional<Rational> product_coefficient(const PotentialSeries &f, int beta, const std::vector<TVar> &rest,
                                            const std::vector<std::vector<TVar>> &blocks, std::size_t from)
{
    if (from == blocks.size()) {
        return (beta == 0 && rest.empty()) ? Rational(1) : Rational(0);
    }
    if (from + 1 == blocks.size()) {
        return derivative_coefficient(f, beta, rest, blocks[from]);
    }
    Rational total = 0;
    for (const auto &part : sub_multisets(rest)) {
        std::vector<TVar> other;
        subtract(rest, part, other);
        for (int b1 = 0; b1 <= beta; ++b1) {
            auto x = derivative_coefficient(f, b1, part, blocks[from]);
            if (!x) {
                return std::nullopt;
            }
            if (is_zero(*x)) {
                continue;
            }
            auto y = product_coefficient(f, beta - b1, other, blocks, from + 1);
            if (!y) {
                return std::nullopt;
            }
            total += *x * *y;
        }
    }
    return total;
}

// Set partitions of a list of derivative variables.
void partitions(const std::vector<TVar> &d, std::size_t j, std::vector<std::vector<TVar>> &cur,
                std::vector<std::vector<std::vector<TVar>>> &out)
{
    if (j == d.size()) {
        auto p = cur;
        for (auto &b : p) {
            std::sort(b.begin(), b.end());
        }
        out.push_back(p);
        return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(d[j]);
        partitions(d, j + 1, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({d[j]});
    partitions(d, j + 1, cur, out);
    cur.pop_back();
}

} // namespace

ResidualReport genus0_residual(const DiffOperator &op, const PotentialSeries &f)
{
    ResidualReport rep;
    const Truncation &tr = f.truncation();
    std::vector<std::pair<std::vector<std::vector<std::vector<TVar>>>, const DiffTerm *>> plan;
    std::vector<Rational> coefs;
    for (const auto &[t, c] : op.terms()) {
        std::vector<std::vector<std::vector<TVar>>> all, keep;
        std::vector<std::vector<TVar>> cur;
        partitions(t.derivs, 0, cur, all);
        for (auto &p : all) {
            if (static_cast<int>(p.size()) == t.hbar + 1) {
                keep.push_back(std::move(p));
            }
        }
        if (!keep.empty()) {
            plan.push_back({std::move(keep), &t});
            coefs.push_back(c);
        }
    }
    std::vector<TVar> rest;
    for (const auto &m : variable_multisets(f.context(), tr.lmax, tr.max_vars)) {
        for (int beta = 0; beta <= tr.qmax; ++beta) {
            Rational total = 0;
            bool ok = true;
            for (std::size_t j = 0; j < plan.size() && ok; ++j) {
                if (!subtract(m, plan[j].second->vars, rest)) {
                    continue;
                }
                for (const auto &blocks : plan[j].first) {
                    auto x = product_coefficient(f, beta, rest, blocks, 0);
                    if (!x) {
                        ok = false;
                        break;
                    }
                    total += coefs[j] * *x;
                }
            }
            if (!ok) {
                ++rep.untestable;
                continue;
            }
            ++rep.tested;
            if (!is_zero(total)) {
                rep.nonzero.push_back({beta, m, total});
            }
        }
    }
    return rep;
}

} // namespace relgw

#include <relgw/errors.hpp>
#include <relgw/invariants.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace relgw
{

namespace
{

int top_exponent(int n, int i)
{
    return i == 0 ? n : n - 1;
}

using Expansion = std::vector<std::pair<Rational, std::vector<BasisInsertion>>>;

Expansion expand(const std::vector<Insertion> &ins)
{
    Expansion out{{Rational(1), {}}};
    for (const auto &x : ins) {
        Expansion next;
        for (const auto &[coef, list] : out) {
            for (const auto &[b, c] : x.cls.terms()) {
                auto l = list;
                l.push_back({x.psi, b});
                next.push_back({coef * c, std::move(l)});
            }
        }
        out = std::move(next);
    }
    return out;
}

// [H]_0 * T_{i,k} as a label, or nothing when it vanishes.
std::optional<BasisIndex> times_hyperplane(int n, BasisIndex b)
{
    if (b.k + 1 > top_exponent(n, b.i)) {
        return std::nullopt;
    }
    return BasisIndex{b.i, b.k + 1};
}

std::vector<BasisInsertion> without(const std::vector<BasisInsertion> &ins, std::size_t j)
{
    auto r = ins;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
    return r;
}

} // namespace

std::optional<Rational> InvariantProvider::evaluate(int beta, const std::vector<Insertion> &ins) const
{
    Rational total = 0;
    for (const auto &[coef, list] : expand(ins)) {
        const auto v = basis_invariant(beta, list);
        if (!v) {
            return std::nullopt;
        }
        total += coef * *v;
    }
    return total;
}

bool passes_selection_rules(int n, int beta, const std::vector<BasisInsertion> &ins)
{
    int tangency = 0;
    int degree = 0;
    for (const auto &x : ins) {
        tangency += x.b.i;
        degree += x.psi + bidegree(x.b).deg2;
    }
    const int dim = n - 3 + beta * n + static_cast<int>(ins.size());
    return tangency == beta && degree == dim;
}

SmallProvider::SmallProvider(StructureTable table) : m_table(std::move(table)) {}

std::optional<Rational> SmallProvider::three_point(int beta, const std::vector<BasisInsertion> &ins) const
{
    const int n = context().n;
    if (beta == 0) {
        int w = 1;
        for (const auto &x : ins) {
            w = std::max(w, std::abs(x.b.i));
        }
        const InsContext wide{n, w};
        return trilinear_A(InsClass::basis(wide, ins[0].b), InsClass::basis(wide, ins[1].b),
                           InsClass::basis(wide, ins[2].b));
    }
    for (int c = 0; c < 3; ++c) {
        const BasisIndex a = ins[static_cast<std::size_t>((c + 1) % 3)].b;
        const BasisIndex b = ins[static_cast<std::size_t>((c + 2) % 3)].b;
        const TableEntry *e = m_table.find(a, b, beta);
        if (e && e->status == EntryStatus::determined) {
            return e->value.coeff(dual_label(n, ins[static_cast<std::size_t>(c)].b));
        }
    }
    return std::nullopt;
}

std::optional<Rational> SmallProvider::basis_invariant(int beta, const std::vector<BasisInsertion> &in) const
{
    const int n = context().n;
    if (beta < 0) {
        return Rational(0);
    }
    for (const auto &x : in) {
        if (x.psi < 0) {
            return Rational(0);
        }
        if (x.b.k < 0 || x.b.k > top_exponent(n, x.b.i)) {
            throw domain_error("basis label outside the cohomology ring");
        }
    }
    if (!passes_selection_rules(n, beta, in)) {
        return Rational(0);
    }
    const std::size_t N = in.size();
    if (beta == 0 && N <= 2) {
        return Rational(0);
    }
    auto ins = in;
    std::sort(ins.begin(), ins.end());
    const auto key = std::make_pair(beta, ins);
    if (auto it = m_memo.find(key); it != m_memo.end()) {
        return it->second;
    }

    const bool all_primary = std::all_of(ins.begin(), ins.end(), [](const BasisInsertion &x) { return x.psi == 0; });
    const bool rest_stable = beta > 0 || N - 1 >= 3;
    std::optional<Rational> result;
    bool decided = false;

    if (N == 3 && all_primary) {
        result = three_point(beta, ins);
        decided = true;
    }
    // Divisor equation read backwards: I_beta(x) = I_beta([H]_0, ..., [H]_0, x) / beta^(3 - N).
    if (!decided && beta > 0 && N <= 2 && all_primary) {
        auto more = ins;
        Rational scale = 1;
        while (more.size() < 3) {
            more.push_back({0, {0, 1}});
            scale *= beta;
        }
        std::sort(more.begin(), more.end());
        if (const auto v = three_point(beta, more)) {
            result = *v / scale;
        }
        decided = true;
    }
    // String equation.
    for (std::size_t j = 0; j < N && !decided && rest_stable; ++j) {
        if (ins[j].psi != 0 || !(ins[j].b == BasisIndex{0, 0})) {
            continue;
        }
        const auto rest = without(ins, j);
        Rational s = 0;
        bool ok = true;
        for (std::size_t l = 0; l < rest.size() && ok; ++l) {
            if (rest[l].psi == 0) {
                continue;
            }
            auto lowered = rest;
            --lowered[l].psi;
            const auto v = basis_invariant(beta, lowered);
            ok = v.has_value();
            if (ok) {
                s += *v;
            }
        }
        result = ok ? std::optional<Rational>(s) : std::nullopt;
        decided = true;
    }
    // Dilaton equation.
    for (std::size_t j = 0; j < N && !decided && rest_stable; ++j) {
        if (ins[j].psi != 1 || !(ins[j].b == BasisIndex{0, 0})) {
            continue;
        }
        const int coef = static_cast<int>(N - 1) - 2;
        if (coef == 0) {
            result = Rational(0);
        } else if (const auto v = basis_invariant(beta, without(ins, j))) {
            result = coef * *v;
        }
        decided = true;
    }
    // Divisor equation with omega = H.
    for (std::size_t j = 0; j < N && !decided && rest_stable; ++j) {
        if (ins[j].psi != 0 || !(ins[j].b == BasisIndex{0, 1})) {
            continue;
        }
        const auto rest = without(ins, j);
        Rational s = 0;
        bool ok = true;
        if (beta != 0) {
            const auto v = basis_invariant(beta, rest);
            ok = v.has_value();
            if (ok) {
                s += beta * *v;
            }
        }
        for (std::size_t l = 0; l < rest.size() && ok; ++l) {
            if (rest[l].psi == 0) {
                continue;
            }
            const auto h = times_hyperplane(n, rest[l].b);
            if (!h) {
                continue;
            }
            auto lowered = rest;
            --lowered[l].psi;
            lowered[l].b = *h;
            const auto v = basis_invariant(beta, lowered);
            ok = v.has_value();
            if (ok) {
                s += *v;
            }
        }
        result = ok ? std::optional<Rational>(s) : std::nullopt;
        decided = true;
    }
    m_memo.emplace(key, result);
    return result;
}

Rational degree_zero_three_point(const InsClass &a, const InsClass &b, const InsClass &c)
{
    return trilinear_A(a, b, c);
}

namespace
{

std::vector<Insertion> rest_of(const std::vector<Insertion> &ins)
{
    return std::vector<Insertion>(ins.begin() + 1, ins.end());
}

void require_nonempty(const std::vector<Insertion> &ins)
{
    if (ins.empty()) {
        throw domain_error("rewrite needs a distinguished insertion");
    }
}

} // namespace

std::vector<Rewrite> string_reduce(int beta, const std::vector<Insertion> &ins)
{
    require_nonempty(ins);
    const InsContext &ctx = ins[0].cls.context();
    if (ins[0].psi != 0 || !(ins[0].cls == InsClass::basis(ctx, 0, 0))) {
        throw domain_error("string equation needs [1]_0 as the distinguished insertion");
    }
    const auto rest = rest_of(ins);
    std::vector<Rewrite> out;
    for (std::size_t j = 0; j < rest.size(); ++j) {
        if (rest[j].psi == 0) {
            continue;
        }
        auto lowered = rest;
        --lowered[j].psi;
        out.push_back({1, beta, std::move(lowered)});
    }
    return out;
}

std::vector<Rewrite> divisor_reduce(int beta, const std::vector<Insertion> &ins)
{
    require_nonempty(ins);
    const auto &omega = ins[0].cls;
    const auto ts = omega.terms();
    if (ins[0].psi != 0 || ts.size() != 1 || !(ts.front().first == BasisIndex{0, 1})) {
        throw domain_error("divisor equation needs a multiple of [H]_0 as the distinguished insertion");
    }
    const Rational degree = ts.front().second * beta;
    const auto rest = rest_of(ins);
    std::vector<Rewrite> out;
    if (!is_zero(degree)) {
        out.push_back({degree, beta, rest});
    }
    for (std::size_t j = 0; j < rest.size(); ++j) {
        if (rest[j].psi == 0) {
            continue;
        }
        auto lowered = rest;
        --lowered[j].psi;
        lowered[j].cls = product(omega, rest[j].cls);
        if (lowered[j].cls.is_zero()) {
            continue;
        }
        out.push_back({1, beta, std::move(lowered)});
    }
    return out;
}

std::vector<Rewrite> dilaton_reduce(int beta, const std::vector<Insertion> &ins)
{
    require_nonempty(ins);
    const InsContext &ctx = ins[0].cls.context();
    if (ins[0].psi != 1 || !(ins[0].cls == InsClass::basis(ctx, 0, 0))) {
        throw domain_error("dilaton equation needs psi [1]_0 as the distinguished insertion");
    }
    const auto rest = rest_of(ins);
    const int coef = static_cast<int>(rest.size()) - 2;
    if (coef == 0) {
        return {};
    }
    return {{coef, beta, rest}};
}

namespace
{

// sum over beta1 + beta2 = beta, S1 u S2 = free and the basis T_{i,k} of
// I_beta1(left, S1, T_{i,k}) I_beta2(T_{-i}^k, right, S2), with i forced by tangency.
std::optional<Rational> splitting_sum(const InvariantProvider &p, int beta, const std::vector<BasisInsertion> &left,
                                      const std::vector<BasisInsertion> &right,
                                      const std::vector<BasisInsertion> &free)
{
    const int n = p.context().n;
    Rational total = 0;
    const std::size_t subsets = std::size_t{1} << free.size();
    for (int b1 = 0; b1 <= beta; ++b1) {
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            auto first = left;
            auto second = std::vector<BasisInsertion>{};
            second.push_back({});
            second.insert(second.end(), right.begin(), right.end());
            for (std::size_t j = 0; j < free.size(); ++j) {
                ((mask >> j) & 1 ? first : second).push_back(free[j]);
            }
            int used = 0;
            for (const auto &x : first) {
                used += x.b.i;
            }
            const int i = b1 - used;
            first.push_back({});
            for (int k = 0; k <= top_exponent(n, i); ++k) {
                first.back() = {0, {i, k}};
                second.front() = {0, dual_label(n, {i, k})};
                const auto f1 = p.basis_invariant(b1, first);
                if (f1 && is_zero(*f1)) {
                    continue;
                }
                const auto f2 = p.basis_invariant(beta - b1, second);
                if (f2 && is_zero(*f2)) {
                    continue;
                }
                if (!f1 || !f2) {
                    return std::nullopt;
                }
                total += *f1 * *f2;
            }
        }
    }
    return total;
}

} // namespace

std::optional<Rational> check_wdvv(const InvariantProvider &p, int beta, const std::vector<Insertion> &ins)
{
    if (ins.size() < 4) {
        throw domain_error("WDVV needs at least four insertions");
    }
    Rational total = 0;
    for (const auto &[coef, x] : expand(ins)) {
        const std::vector<BasisInsertion> free(x.begin() + 4, x.end());
        const auto lhs = splitting_sum(p, beta, {x[0], x[1]}, {x[2], x[3]}, free);
        if (!lhs) {
            return std::nullopt;
        }
        const auto rhs = splitting_sum(p, beta, {x[0], x[2]}, {x[1], x[3]}, free);
        if (!rhs) {
            return std::nullopt;
        }
        total += coef * (*lhs - *rhs);
    }
    return total;
}

std::optional<Rational> check_trr(const InvariantProvider &p, int beta, const std::vector<Insertion> &ins)
{
    if (ins.size() < 3) {
        throw domain_error("TRR needs at least three insertions");
    }
    if (ins[0].psi < 1) {
        throw domain_error("TRR needs a descendant power >= 1 on the first insertion");
    }
    Rational total = 0;
    for (const auto &[coef, x] : expand(ins)) {
        const auto lhs = p.basis_invariant(beta, x);
        if (!lhs) {
            return std::nullopt;
        }
        BasisInsertion lowered = x[0];
        --lowered.psi;
        const std::vector<BasisInsertion> free(x.begin() + 3, x.end());
        const auto rhs = splitting_sum(p, beta, {lowered}, {x[1], x[2]}, free);
        if (!rhs) {
            return std::nullopt;
        }
        total += coef * (*lhs - *rhs);
    }
    return total;
}

} // namespace relgw

#include <relgw/errors.hpp>
#include <relgw/quantum.hpp>
#include <relgw/solver.hpp>

#include <stdexcept>

namespace relgw
{

std::optional<BasisIndex> product_candidate(const InsContext &ctx, BasisIndex a, BasisIndex b, int m)
{
    const Bidegree d = bidegree(a) + bidegree(b);
    const int i = d.deg1 - m;
    const int p = d.deg2 - m * ctx.n;
    const int k = i < 0 ? p - 1 : p;
    const int top = i == 0 ? ctx.n : ctx.n - 1;
    if (k < 0 || k > top) {
        return std::nullopt;
    }
    return BasisIndex{i, k};
}

std::string to_string(EntryStatus s)
{
    switch (s) {
    case EntryStatus::determined:
        return "determined";
    case EntryStatus::undetermined:
        return "undetermined";
    case EntryStatus::out_of_window:
        return "out_of_window";
    }
    return "unknown";
}

StructureTable::StructureTable(const InsContext &ctx, int qmax) : m_ctx(ctx), m_qmax(qmax) {}

StructureTable::Key StructureTable::key(BasisIndex a, BasisIndex b, int q)
{
    return b < a ? Key{b, a, q} : Key{a, b, q};
}

const TableEntry *StructureTable::find(BasisIndex a, BasisIndex b, int q) const
{
    auto it = m_entries.find(key(a, b, q));
    return it == m_entries.end() ? nullptr : &it->second;
}

void StructureTable::set(BasisIndex a, BasisIndex b, int q, EntryStatus status, InsClass value)
{
    const Key k = key(a, b, q);
    m_entries.insert_or_assign(k, TableEntry{std::get<0>(k), std::get<1>(k), q, status, std::move(value)});
}

std::vector<TableEntry> StructureTable::entries() const
{
    std::vector<TableEntry> out;
    const auto basis = window_basis(m_ctx);
    for (const auto &a : basis) {
        for (const auto &b : basis) {
            for (int q = 0; q <= m_qmax; ++q) {
                if (const TableEntry *e = find(a, b, q)) {
                    TableEntry copy = *e;
                    copy.lhs = a;
                    copy.rhs = b;
                    out.push_back(std::move(copy));
                }
            }
        }
    }
    return out;
}

namespace
{

using Row = std::map<int, Rational>;

// Incremental Gauss-Jordan elimination; the stored rows stay fully reduced.
class SparseSystem
{
public:
    void add(Row row, Rational rhs)
    {
        for (auto it = row.begin(); it != row.end();) {
            it = is_zero(it->second) ? row.erase(it) : std::next(it);
        }
        std::vector<int> hits;
        for (const auto &[col, c] : row) {
            (void)c;
            if (m_rows.count(col)) {
                hits.push_back(col);
            }
        }
        for (int col : hits) {
            auto it = row.find(col);
            if (it == row.end()) {
                continue;
            }
            const Rational f = it->second;
            const auto &[prow, prhs] = m_rows.at(col);
            for (const auto &[c2, v] : prow) {
                Rational &slot = row[c2];
                slot -= f * v;
                if (is_zero(slot)) {
                    row.erase(c2);
                }
            }
            rhs -= f * prhs;
        }
        if (row.empty()) {
            if (!is_zero(rhs)) {
                throw std::logic_error("structure-constant constraints are inconsistent");
            }
            return;
        }
        const int pivot = row.begin()->first;
        const Rational inv = 1 / row.begin()->second;
        for (auto &[c, v] : row) {
            (void)c;
            v *= inv;
        }
        rhs *= inv;
        for (auto &[pcol, entry] : m_rows) {
            (void)pcol;
            auto &[prow, prhs] = entry;
            auto it = prow.find(pivot);
            if (it == prow.end()) {
                continue;
            }
            const Rational f = it->second;
            for (const auto &[c2, v] : row) {
                Rational &slot = prow[c2];
                slot -= f * v;
                if (is_zero(slot)) {
                    prow.erase(c2);
                }
            }
            prhs -= f * rhs;
        }
        m_rows.emplace(pivot, std::make_pair(std::move(row), rhs));
    }

    std::optional<Rational> value(int col) const
    {
        auto it = m_rows.find(col);
        if (it == m_rows.end() || it->second.first.size() != 1) {
            return std::nullopt;
        }
        return it->second.second;
    }

private:
    std::map<int, std::pair<Row, Rational>> m_rows;
};

struct Val {
    enum Kind { zero, value, unknown, column } kind = zero;
    Rational v;
    int col = -1;
};

using PairKey = std::pair<BasisIndex, BasisIndex>;

PairKey pair_key(BasisIndex a, BasisIndex b)
{
    return b < a ? PairKey{b, a} : PairKey{a, b};
}

} // namespace

StructureTable solve_structure_constants(int n, int window, int qmax)
{
    const InsContext ctx = make_context(n, window);
    if (qmax < 0) {
        throw domain_error("qmax must be nonnegative");
    }
    const InsContext wide{n, 3 * window};
    const auto basis = window_basis(ctx);
    StructureTable table(ctx, qmax);

    // Scalars x(a, b, m) multiplying the candidate label; classical ones first.
    std::map<std::tuple<BasisIndex, BasisIndex, int>, Rational> solved;
    for (std::size_t p = 0; p < basis.size(); ++p) {
        for (std::size_t r = p; r < basis.size(); ++r) {
            const BasisIndex a = basis[p];
            const BasisIndex b = basis[r];
            const InsClass prod = product(InsClass::basis(wide, a), InsClass::basis(wide, b));
            const auto c = product_candidate(ctx, a, b, 0);
            if (!c) {
                if (!prod.is_zero()) {
                    throw std::logic_error("classical product is not bihomogeneous");
                }
                table.set(a, b, 0, EntryStatus::determined, InsClass(ctx));
                continue;
            }
            solved[{a, b, 0}] = prod.coeff(*c);
            if (!ctx.in_window(c->i)) {
                table.set(a, b, 0, EntryStatus::out_of_window, InsClass(ctx));
            } else {
                table.set(a, b, 0, EntryStatus::determined, InsClass::basis(ctx, *c, prod.coeff(*c)));
            }
        }
    }

    for (int M = 1; M <= qmax; ++M) {
        std::map<PairKey, int> cols;
        std::vector<PairKey> col_pairs;
        auto get = [&](BasisIndex a, BasisIndex b, int m) -> Val {
            const auto c = product_candidate(ctx, a, b, m);
            if (!c) {
                return {Val::zero, 0, -1};
            }
            const PairKey k = pair_key(a, b);
            if (m == 0) {
                const Rational &v = solved.at({k.first, k.second, 0});
                return is_zero(v) ? Val{Val::zero, 0, -1} : Val{Val::value, v, -1};
            }
            if (!ctx.in_window(c->i)) {
                return {Val::unknown, 0, -1};
            }
            if (m < M) {
                auto it = solved.find({k.first, k.second, m});
                if (it == solved.end()) {
                    return {Val::unknown, 0, -1};
                }
                return is_zero(it->second) ? Val{Val::zero, 0, -1} : Val{Val::value, it->second, -1};
            }
            auto [it, inserted] = cols.try_emplace(k, static_cast<int>(col_pairs.size()));
            if (inserted) {
                col_pairs.push_back(k);
            }
            return {Val::column, 0, it->second};
        };

        // sign * sum_{m1} x(X,Y,m1) x(D,Z,M-m1), D the candidate of (X,Y,m1).
        auto side = [&](BasisIndex x, BasisIndex y, BasisIndex z, int sign, Row &row, Rational &cst) {
            for (int m1 = 0; m1 <= M; ++m1) {
                const Val xa = get(x, y, m1);
                if (xa.kind == Val::zero) {
                    continue;
                }
                const BasisIndex d = *product_candidate(ctx, x, y, m1);
                if (!ctx.in_window(d.i)) {
                    return false;
                }
                const Val xb = get(d, z, M - m1);
                if (xb.kind == Val::zero) {
                    continue;
                }
                if (xa.kind == Val::unknown || xb.kind == Val::unknown) {
                    return false;
                }
                if (xa.kind == Val::column) {
                    row[xa.col] += sign * xb.v;
                } else if (xb.kind == Val::column) {
                    row[xb.col] += sign * xa.v;
                } else {
                    cst += sign * xa.v * xb.v;
                }
            }
            return true;
        };

        SparseSystem sys;
        const BasisIndex unit{0, 0};
        for (const auto &b : basis) {
            const Val v = get(unit, b, M);
            if (v.kind == Val::column) {
                sys.add({{v.col, 1}}, 0);
            }
        }
        if (M == 1) {
            const Val v = get({1, 0}, {0, n}, 1);
            if (v.kind == Val::column) {
                sys.add({{v.col, 1}}, 1);
            }
        }
        for (const auto &a : basis) {
            for (const auto &b : basis) {
                for (const auto &c : basis) {
                    Row row;
                    Rational cst = 0;
                    if (!side(a, b, c, 1, row, cst) || !side(b, c, a, -1, row, cst)) {
                        continue;
                    }
                    sys.add(std::move(row), -cst);
                }
            }
        }

        for (std::size_t p = 0; p < basis.size(); ++p) {
            for (std::size_t r = p; r < basis.size(); ++r) {
                const BasisIndex a = basis[p];
                const BasisIndex b = basis[r];
                const auto c = product_candidate(ctx, a, b, M);
                if (!c) {
                    solved[{a, b, M}] = 0;
                    table.set(a, b, M, EntryStatus::determined, InsClass(ctx));
                    continue;
                }
                if (!ctx.in_window(c->i)) {
                    table.set(a, b, M, EntryStatus::out_of_window, InsClass(ctx));
                    continue;
                }
                std::optional<Rational> v;
                auto it = cols.find(pair_key(a, b));
                if (it != cols.end()) {
                    v = sys.value(it->second);
                }
                if (v) {
                    solved[{a, b, M}] = *v;
                    table.set(a, b, M, EntryStatus::determined, InsClass::basis(ctx, *c, *v));
                } else {
                    table.set(a, b, M, EntryStatus::undetermined, InsClass(ctx));
                }
            }
        }
    }
    return table;
}

VerifyReport verify_against_oracle(const StructureTable &t)
{
    VerifyReport r;
    const InsContext &ctx = t.context();
    for (const auto &e : t.entries()) {
        ++r.entries;
        if (e.status != EntryStatus::determined) {
            continue;
        }
        ++r.determined;
        const LatticePoint pa = dictionary_point(e.lhs);
        const LatticePoint pb = dictionary_point(e.rhs);
        const QDecomposition d = decompose_point({pa.a + pb.a, pa.b + pb.b}, ctx.n);
        InsClass expected(ctx);
        bool ok = true;
        if (d.m == e.q) {
            if (!ctx.in_window(d.basis.i)) {
                ok = false;
            } else {
                expected = InsClass::basis(ctx, d.basis);
            }
        }
        if (ok && !(expected == e.value)) {
            ok = false;
        }
        if (!ok) {
            ++r.mismatches;
            r.details.push_back(format_basis(ctx, e.lhs) + " * " + format_basis(ctx, e.rhs) + " at q^" +
                                std::to_string(e.q) + ": solver " + format_bracket(e.value));
        }
    }
    return r;
}

} // namespace relgw

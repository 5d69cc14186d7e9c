#ifndef RELGW_SOLVER_HPP
#define RELGW_SOLVER_HPP

#include <relgw/insertions.hpp>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace relgw
{

// Bidegree-forced basis label for the q^m part of a * b, if the bidegree is realised at all.
std::optional<BasisIndex> product_candidate(const InsContext &ctx, BasisIndex a, BasisIndex b, int m);

enum class EntryStatus { determined, undetermined, out_of_window };
std::string to_string(EntryStatus s);

struct TableEntry {
    BasisIndex lhs;
    BasisIndex rhs;
    int q = 0;
    EntryStatus status = EntryStatus::undetermined;
    InsClass value; // meaningful only when determined
};

class StructureTable
{
public:
    StructureTable(const InsContext &ctx, int qmax);

    const InsContext &context() const noexcept
    {
        return m_ctx;
    }
    int qmax() const noexcept
    {
        return m_qmax;
    }
    // Symmetric lookup; nullptr when a label is outside the window or q is outside [0, qmax].
    const TableEntry *find(BasisIndex a, BasisIndex b, int q) const;
    // Every ordered pair of window labels and every q in [0, qmax].
    std::vector<TableEntry> entries() const;

    void set(BasisIndex a, BasisIndex b, int q, EntryStatus status, InsClass value);

private:
    using Key = std::tuple<BasisIndex, BasisIndex, int>;
    static Key key(BasisIndex a, BasisIndex b, int q);

    InsContext m_ctx;
    int m_qmax;
    std::map<Key, TableEntry> m_entries;
};

// Unknown q-corrections to basis products, pinned by bidegree, commutativity, the identity axiom,
// the seed [1]_1 * [H^n]_0 = q [1]_0 and associativity, processed by increasing q-degree.
// Throws std::logic_error if the constraint system is inconsistent.
StructureTable solve_structure_constants(int n, int window, int qmax);

struct VerifyReport {
    int entries = 0;
    int determined = 0;
    int mismatches = 0;
    std::vector<std::string> details;
};

// Compares every determined entry with the monoid-algebra product.
VerifyReport verify_against_oracle(const StructureTable &t);

} // namespace relgw

#endif

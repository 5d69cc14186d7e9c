#ifndef RELGW_QUANTUM_HPP
#define RELGW_QUANTUM_HPP

#include <relgw/insertions.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace relgw
{

// Lattice point of the monoid P = {b >= 1} u {b = 0, a >= 0} in Z^2; x = (1,0), y = (0,1).
struct LatticePoint {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const LatticePoint &, const LatticePoint &) = default;
};

bool in_monoid(LatticePoint p);

// Element of the monoid algebra C[P].
class MonoidElem
{
public:
    MonoidElem() = default;
    static MonoidElem point(LatticePoint p, const Rational &c = 1);

    const std::map<LatticePoint, Rational> &terms() const noexcept
    {
        return m_terms;
    }
    void add(LatticePoint p, const Rational &c);

    MonoidElem &operator+=(const MonoidElem &o);
    friend MonoidElem operator*(const MonoidElem &u, const MonoidElem &v);
    friend bool operator==(const MonoidElem &, const MonoidElem &) = default;

private:
    std::map<LatticePoint, Rational> m_terms;
};

// [H^a]_0 -> y^a, [h^a]_i -> y^a x^i (i > 0), [h^a]_{-i} -> y^{a+1} / x^i.
LatticePoint dictionary_point(BasisIndex b);
MonoidElem ins_to_monoid(const InsClass &c);

// The unique m >= 0 with p - m(1,n) a dictionary point, together with that basis label.
struct QDecomposition {
    int m = 0;
    BasisIndex basis;
};
QDecomposition decompose_point(LatticePoint p, int n);

// Power series in q with coefficients in the insertion ring, truncated above qmax.
struct QSeriesClass {
    InsContext ctx;
    int qmax = 0;
    std::map<int, InsClass> parts;

    InsClass at(int m) const;
    friend bool operator==(const QSeriesClass &, const QSeriesClass &) = default;
};

// Throws window_overflow if a component with q-power <= qmax leaves the window.
QSeriesClass monoid_to_qseries(const MonoidElem &u, const InsContext &ctx, int qmax);
QSeriesClass quantum_product_small(const InsClass &u, const InsClass &v, int qmax);
InsClass classical_limit(const QSeriesClass &s);

// "q * 1@0", "h^1@1 + q^2 * (1@0 + 2*h^1@-1)".
std::string format_qseries(const QSeriesClass &s);

} // namespace relgw

#endif

#include <relgw/errors.hpp>
#include <relgw/insertions.hpp>

#include <cctype>
#include <sstream>

namespace relgw
{

InsContext make_context(int n, int window)
{
    if (n < 1) {
        throw domain_error("ambient dimension must be >= 1");
    }
    if (window < 1) {
        throw domain_error("window must be >= 1");
    }
    return InsContext{n, window};
}

int rank_at(const InsContext &ctx, int i)
{
    return i == 0 ? ctx.n + 1 : ctx.n;
}

std::vector<BasisIndex> window_basis(const InsContext &ctx)
{
    std::vector<BasisIndex> out;
    for (int i = -ctx.window; i <= ctx.window; ++i) {
        for (int k = 0; k < rank_at(ctx, i); ++k) {
            out.push_back({i, k});
        }
    }
    return out;
}

InsClass::InsClass(const InsContext &ctx) : m_ctx(ctx) {}

InsClass InsClass::basis(const InsContext &ctx, int i, int k, const Rational &coef)
{
    return embed(ctx, CohClass::monomial(ctx.ring_at(i), k, coef), i);
}

Rational InsClass::coeff(BasisIndex b) const
{
    auto it = m_parts.find(b.i);
    if (it == m_parts.end() || b.k < 0 || b.k > it->second.dim()) {
        return 0;
    }
    return it->second.coeff(b.k);
}

std::vector<std::pair<BasisIndex, Rational>> InsClass::terms() const
{
    std::vector<std::pair<BasisIndex, Rational>> out;
    for (const auto &[i, c] : m_parts) {
        for (int k = 0; k <= c.dim(); ++k) {
            if (!relgw::is_zero(c.coeff(k))) {
                out.push_back({{i, k}, c.coeff(k)});
            }
        }
    }
    return out;
}

void InsClass::add_component(int i, const CohClass &c)
{
    if (c.is_zero()) {
        return;
    }
    if (!m_ctx.in_window(i)) {
        throw window_overflow("contact order " + std::to_string(i) + " outside window " +
                              std::to_string(m_ctx.window));
    }
    if (c.dim() != m_ctx.ring_at(i).dim()) {
        throw ring_mismatch("class at contact order " + std::to_string(i) + " lives on the wrong ring");
    }
    auto [it, inserted] = m_parts.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_parts.erase(it);
        }
    }
}

void InsClass::check_same_context(const InsClass &other) const
{
    if (!(m_ctx == other.m_ctx)) {
        throw ring_mismatch("insertion classes from different contexts");
    }
}

InsClass &InsClass::operator+=(const InsClass &other)
{
    check_same_context(other);
    for (const auto &[i, c] : other.m_parts) {
        add_component(i, c);
    }
    return *this;
}

InsClass &InsClass::operator-=(const InsClass &other)
{
    check_same_context(other);
    for (const auto &[i, c] : other.m_parts) {
        add_component(i, Rational(-1) * c);
    }
    return *this;
}

InsClass &InsClass::operator*=(const Rational &s)
{
    if (relgw::is_zero(s)) {
        m_parts.clear();
        return *this;
    }
    for (auto &[i, c] : m_parts) {
        c *= s;
    }
    return *this;
}

InsClass embed(const InsContext &ctx, const CohClass &a, int i)
{
    InsClass r(ctx);
    r.add_component(i, a);
    return r;
}

Rational pairing(const InsClass &a, const InsClass &b)
{
    if (!(a.context() == b.context())) {
        throw ring_mismatch("pairing of classes from different contexts");
    }
    Rational s = 0;
    for (const auto &[i, c] : a.components()) {
        auto it = b.components().find(-i);
        if (it != b.components().end()) {
            s += integrate(cup(c, it->second));
        }
    }
    return s;
}

InsClass dual_basis_element(const InsContext &ctx, int i, int k)
{
    if (!ctx.in_window(i)) {
        throw window_overflow("dual of a class outside the window");
    }
    const int top = i == 0 ? ctx.n : ctx.n - 1;
    if (k < 0 || k > top) {
        throw domain_error("basis index outside the ring");
    }
    return InsClass::basis(ctx, -i, top - k);
}

BasisIndex dual_label(int n, BasisIndex b)
{
    if (b.i == 0) {
        return {0, n - b.k};
    }
    return {-b.i, n - 1 - b.k};
}

namespace
{

Rational trilinear_component(const InsContext &ctx, int i, const CohClass &a, int j, const CohClass &b, int l,
                             const CohClass &c)
{
    if (i + j + l != 0) {
        return 0;
    }
    if (i == 0 && j == 0 && l == 0) {
        return integrate(cup(cup(a, b), c));
    }
    auto on_d = [](int idx, const CohClass &x) { return idx == 0 ? restrict_to_divisor(x) : x; };
    CohClass prod = cup(cup(on_d(i, a), on_d(j, b)), on_d(l, c));
    const int negatives = (i < 0) + (j < 0) + (l < 0);
    if (negatives == 2) {
        prod = cup(prod, CohClass::monomial(ctx.divisor(), ctx.n >= 2 ? 1 : 0, ctx.n >= 2 ? 1 : 0));
    }
    return integrate(prod);
}

// Case table on a pair of homogeneous components; returns (index, class).
std::pair<int, CohClass> product_component(const InsContext &ctx, int i, const CohClass &a, int j,
                                           const CohClass &b)
{
    const CohClass d_class = CohClass::monomial(ctx.divisor(), ctx.n >= 2 ? 1 : 0, ctx.n >= 2 ? 1 : 0);
    if (i == 0 && j == 0) {
        return {0, cup(a, b)};
    }
    if (i == 0) {
        return {j, cup(restrict_to_divisor(a), b)};
    }
    if (j == 0) {
        return {i, cup(a, restrict_to_divisor(b))};
    }
    if (i + j == 0) {
        return {0, gysin(cup(a, b))};
    }
    if (i > 0 && j > 0) {
        return {i + j, cup(a, b)};
    }
    if (i < 0 && j < 0) {
        return {i + j, cup(d_class, cup(a, b))};
    }
    // Mixed signs.
    if (i + j < 0) {
        return {i + j, cup(a, b)};
    }
    return {i + j, cup(d_class, cup(a, b))};
}

} // namespace

Rational trilinear_A(const InsClass &a, const InsClass &b, const InsClass &c)
{
    if (!(a.context() == b.context()) || !(a.context() == c.context())) {
        throw ring_mismatch("trilinear form on classes from different contexts");
    }
    Rational s = 0;
    for (const auto &[i, x] : a.components()) {
        for (const auto &[j, y] : b.components()) {
            auto it = c.components().find(-i - j);
            if (it != c.components().end()) {
                s += trilinear_component(a.context(), i, x, j, y, it->first, it->second);
            }
        }
    }
    return s;
}

InsClass product(const InsClass &a, const InsClass &b)
{
    if (!(a.context() == b.context())) {
        throw ring_mismatch("product of classes from different contexts");
    }
    InsClass r(a.context());
    for (const auto &[i, x] : a.components()) {
        for (const auto &[j, y] : b.components()) {
            auto [idx, c] = product_component(a.context(), i, x, j, y);
            r.add_component(idx, c);
        }
    }
    return r;
}

InsClass product_via_A(const InsClass &a, const InsClass &b)
{
    if (!(a.context() == b.context())) {
        throw ring_mismatch("product of classes from different contexts");
    }
    const InsContext &ctx = a.context();
    // Evaluate A against test classes on a doubled window, then insist the result fits.
    const InsContext wide{ctx.n, 2 * ctx.window};
    auto widen = [&](const InsClass &x) {
        InsClass w(wide);
        for (const auto &[i, c] : x.components()) {
            w.add_component(i, c);
        }
        return w;
    };
    const InsClass wa = widen(a);
    const InsClass wb = widen(b);
    InsClass r(ctx);
    for (const BasisIndex &t : window_basis(wide)) {
        const Rational v = trilinear_A(wa, wb, InsClass::basis(wide, t));
        if (relgw::is_zero(v)) {
            continue;
        }
        const InsClass dual = dual_basis_element(wide, t.i, t.k);
        for (const auto &[i, c] : dual.components()) {
            r.add_component(i, v * c);
        }
    }
    return r;
}

Bidegree bidegree(BasisIndex b)
{
    return {b.i, b.i < 0 ? b.k + 1 : b.k};
}

Bidegree bidegree(const InsClass &a)
{
    const auto ts = a.terms();
    if (ts.empty()) {
        throw domain_error("bidegree of the zero class");
    }
    const Bidegree first = bidegree(ts.front().first);
    for (const auto &[b, c] : ts) {
        if (!(bidegree(b) == first)) {
            throw domain_error("bidegree of an inhomogeneous class");
        }
    }
    return first;
}

namespace
{

class ExprParser
{
public:
    ExprParser(std::string_view text, const InsContext &ctx) : m_text(text), m_ctx(ctx) {}

    InsClass parse()
    {
        InsClass r(m_ctx);
        r += term();
        skip();
        while (m_pos < m_text.size()) {
            expect('+');
            r += term();
            skip();
        }
        return r;
    }

private:
    void skip()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }
    bool peek(char c)
    {
        skip();
        return m_pos < m_text.size() && m_text[m_pos] == c;
    }
    void expect(char c)
    {
        if (!peek(c)) {
            throw parse_error(std::string("expected '") + c + "'", m_pos);
        }
        ++m_pos;
    }
    bool digit_at(std::size_t p) const
    {
        return p < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[p]));
    }
    // Optional sign followed by digits.
    std::string integer_text()
    {
        skip();
        const std::size_t start = m_pos;
        if (m_pos < m_text.size() && (m_text[m_pos] == '-' || m_text[m_pos] == '+')) {
            ++m_pos;
        }
        if (!digit_at(m_pos)) {
            throw parse_error("expected integer", m_pos);
        }
        while (digit_at(m_pos)) {
            ++m_pos;
        }
        return std::string(m_text.substr(start, m_pos - start));
    }
    int small_int()
    {
        const std::size_t start = m_pos;
        const std::string s = integer_text();
        if (s.size() > 9) {
            throw parse_error("integer too large", start);
        }
        return std::stoi(s);
    }

    InsClass term()
    {
        skip();
        const std::size_t start = m_pos;
        Rational coef = 1;
        int exponent = 0;
        char base = '1';
        if (peek('H') || peek('h')) {
            base = m_text[m_pos++];
            expect('^');
            skip();
            if (!digit_at(m_pos)) {
                throw parse_error("expected exponent", m_pos);
            }
            exponent = small_int();
        } else {
            std::string num = integer_text();
            if (peek('/')) {
                ++m_pos;
                skip();
                if (!digit_at(m_pos)) {
                    throw parse_error("expected denominator", m_pos);
                }
                num += '/' + integer_text();
            }
            const bool unit_base = num == "1" || num == "-1" || num == "+1";
            if (peek('*')) {
                ++m_pos;
                coef = parse_rational(num);
                skip();
                if (peek('H') || peek('h')) {
                    base = m_text[m_pos++];
                    expect('^');
                    skip();
                    if (!digit_at(m_pos)) {
                        throw parse_error("expected exponent", m_pos);
                    }
                    exponent = small_int();
                } else {
                    const std::size_t one = m_pos;
                    if (integer_text() != "1") {
                        throw parse_error("expected base 'H^k', 'h^k' or '1'", one);
                    }
                }
            } else if (unit_base && peek('@')) {
                coef = num == "-1" ? -1 : 1;
            } else {
                throw parse_error("expected '*' or '@'", m_pos);
            }
        }
        expect('@');
        const std::size_t idx_pos = m_pos;
        const int i = small_int();
        if (base == 'H' && i != 0) {
            throw parse_error("'H' is only legal at contact order 0", idx_pos);
        }
        if (base == 'h' && i == 0) {
            throw parse_error("'h' is only legal at nonzero contact order", idx_pos);
        }
        const int top = i == 0 ? m_ctx.n : m_ctx.n - 1;
        if (exponent > top) {
            throw parse_error("exponent exceeds the dimension of the ring", start);
        }
        return InsClass::basis(m_ctx, i, exponent, coef);
    }

    std::string_view m_text;
    const InsContext &m_ctx;
    std::size_t m_pos = 0;
};

std::string monomial_text(const InsContext &ctx, BasisIndex b, bool grammar)
{
    (void)ctx;
    if (b.k == 0) {
        return "1";
    }
    std::string s(1, b.i == 0 ? 'H' : 'h');
    if (grammar || b.k > 1) {
        s += '^' + std::to_string(b.k);
    }
    return s;
}

} // namespace

InsClass parse_insertion(std::string_view text, const InsContext &ctx)
{
    return ExprParser(text, ctx).parse();
}

std::string format_basis(const InsContext &ctx, BasisIndex b)
{
    return "[" + monomial_text(ctx, b, false) + "]@" + std::to_string(b.i);
}

std::string format_bracket(const InsClass &a)
{
    const auto ts = a.terms();
    if (ts.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[b, c] : ts) {
        const Rational mag = abs(c);
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << '-';
        }
        first = false;
        if (mag != 1) {
            os << to_string(mag) << '*';
        }
        os << format_basis(a.context(), b);
    }
    return os.str();
}

std::string format_expr(const InsClass &a)
{
    const auto ts = a.terms();
    if (ts.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[b, c] : ts) {
        if (!first) {
            os << " + ";
        }
        first = false;
        if (c != 1) {
            os << to_string(c) << '*';
        }
        os << monomial_text(a.context(), b, true) << '@' << b.i;
    }
    return os.str();
}

} // namespace relgw

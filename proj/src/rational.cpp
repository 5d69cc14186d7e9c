#include <relgw/errors.hpp>
#include <relgw/rational.hpp>

#include <cctype>
#include <string>

namespace relgw
{

std::string to_string(const Rational &r)
{
    return r.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::size_t pos = 0;
    auto digits = [&](std::size_t start) {
        std::size_t p = start;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            ++p;
        }
        if (p == start) {
            throw parse_error("expected digits", start);
        }
        return p;
    };
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        ++pos;
    }
    std::size_t end = digits(pos);
    std::string num(text.substr(0, end));
    if (num.front() == '+') {
        num.erase(0, 1);
    }
    Rational r(mpz_class(num), 1);
    if (end < text.size()) {
        if (text[end] != '/') {
            throw parse_error("unexpected character in rational", end);
        }
        std::size_t dend = digits(end + 1);
        if (dend != text.size()) {
            throw parse_error("trailing characters after rational", dend);
        }
        mpz_class den(std::string(text.substr(end + 1, dend - end - 1)));
        if (den == 0) {
            throw parse_error("zero denominator", end + 1);
        }
        r = Rational(mpz_class(num), den);
        r.canonicalize();
    }
    return r;
}

} // namespace relgw

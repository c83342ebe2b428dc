#include "hoalg/scalar.hpp"

#include <cctype>

namespace hoalg {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string strip_plus(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw Error("not a rational number: '" + std::string(text) + "'");
    mpz_class n(strip_plus(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw Error("zero denominator in '" + std::string(text) + "'");
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_str();
}

}  // namespace hoalg

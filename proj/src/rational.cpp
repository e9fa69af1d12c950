#include "jackps/rational.hpp"

#include <cctype>

namespace jackps {

namespace {

bool is_integer_token(const std::string& s)
{
    if (s.empty())
        return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw InvalidInputError("not a rational: '" + text + "'");
        return Rat(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw InvalidInputError("not a rational: '" + text + "'");
    BigInt d(den);
    if (d == 0)
        throw InvalidInputError("zero denominator in '" + text + "'");
    return Rat(BigInt(num), d);
}

std::string rational_str(const Rat& value)
{
    if (denominator(value) == 1)
        return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

BigInt factorial(int n)
{
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Rat binomial_rat(const Rat& c, int m)
{
    Rat r = 1;
    for (int i = 0; i < m; ++i)
        r *= (c - i);
    return r / Rat(factorial(m));
}

BigInt binomial_int(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

} // namespace jackps

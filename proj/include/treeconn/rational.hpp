#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treeconn {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of(const Rational& r)
{
    std::int64_t p = r.numerator(), q = r.denominator();  // q > 0
    std::int64_t d = p / q;
    if (p % q != 0 && p < 0) --d;
    return d;
}

inline std::int64_t ceil_of(const Rational& r)
{
    std::int64_t p = r.numerator(), q = r.denominator();
    std::int64_t d = p / q;
    if (p % q != 0 && p > 0) ++d;
    return d;
}

inline std::string to_string(const Rational& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p", "p/q" and "-p/q".
inline Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t p = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(p);
        }
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        std::int64_t p = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        std::int64_t q = std::stoll(b, &used);
        if (used != b.size() || q == 0) throw std::invalid_argument(text);
        return Rational(p, q);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

}  // namespace treeconn

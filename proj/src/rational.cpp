#include "subpoly/rational.hpp"

#include <cctype>

namespace subpoly {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' &&
            c != '+' && c != '.')
            throw std::invalid_argument("bad character in rational literal: '" + s + "'");
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal: sign + integer part + fractional part
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad decimal literal: '" + s + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
        if (head.empty()) head = "0";
        Int num(head);
        Int den = 1;
        for (char c : tail) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        Rat r(num, den);
        return neg ? Rat(-r) : r;
    }
    try {
        Rat r(s);
        // GMP accepts "n/0" without canonicalizing; arithmetic on it is undefined.
        if (denominator(r) == 0)
            throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

double rat_double(const Rat& r) { return static_cast<double>(r); }

Rat rat_pow(const Rat& base, long long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0 to negative power");
        return 1 / rat_pow(base, -exp);
    }
    Rat acc = 1, b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Int int_pow(const Int& base, long long exp) {
    if (exp < 0) throw std::domain_error("int_pow: negative exponent");
    Int acc = 1, b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (long long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return acc;
}

Int factorial(long long n) {
    Int acc = 1;
    for (long long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

std::vector<Rat> parse_rat_list(const std::vector<std::string>& items) {
    std::vector<Rat> out;
    out.reserve(items.size());
    for (const auto& s : items) out.push_back(parse_rat(s));
    return out;
}

}  // namespace subpoly

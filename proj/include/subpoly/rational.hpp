#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subpoly {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Thrown when an input exceeds the documented size limits of an operation.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Accepts "p", "p/q" and plain decimals ("0.25", "-1.5e2" is not supported).
Rat parse_rat(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

Rat rat_pow(const Rat& base, long long exp);
Int int_pow(const Int& base, long long exp);

Int binomial(long long n, long long k);
Int factorial(long long n);

std::vector<Rat> parse_rat_list(const std::vector<std::string>& items);

}  // namespace subpoly

#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bfdeg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Closed-form counting runs up to here; the exponents reach 2^16.
inline constexpr int kMaxCountVars = 16;
// Complete enumeration of all 2^(2^n) functions stays feasible up to here.
inline constexpr int kMaxEnumVars = 4;

// Number of n-variable Boolean functions of algebraic degree exactly k:
// 1 for k = 0, else (2^C(n,k) - 1) * 2^(C(n,0)+...+C(n,k-1)).
// The zero function (degree minus infinity) is not counted by any k.
BigInt count_formula(int n_vars, int k);

// Tally of all 2^(2^n) functions by degree class. zero_function is the
// minus-infinity class and always equals 1; by_degree[k] counts degree k.
struct DegreeDistribution {
    int n = 0;
    BigInt zero_function;
    std::vector<BigInt> by_degree;

    BigInt total() const;
};

// Brute-force tally by evaluating the degree of every truth table.
// Only n <= kMaxEnumVars; serves as the oracle for count_formula.
DegreeDistribution enumerate_distribution(int n_vars);

// Exact fraction (d(n,n) + d(n,n-1)) / 2^(2^n) of functions with one of
// the two highest degrees.
BigRational high_degree_fraction(int n_vars);

}  // namespace bfdeg

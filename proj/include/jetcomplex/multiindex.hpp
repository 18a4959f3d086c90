// Multi-indices (monomial exponent vectors) and the fixed graded-lex
// enumeration every matrix in the project indexes against. Within one
// degree block the order is lexicographic descending on the exponent
// vector, so (d,0,...,0) ranks first and (0,...,0,d) last.
#pragma once

#include "jetcomplex/binomial.hpp"

#include <compare>
#include <vector>

namespace jetcomplex {

struct MultiIndex {
    std::vector<int> exp;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : exp(std::move(e)) {}
    static MultiIndex zero(int nvars) { return MultiIndex(std::vector<int>(static_cast<size_t>(nvars), 0)); }
    static MultiIndex unit(int nvars, int j);

    int nvars() const { return static_cast<int>(exp.size()); }
    int degree() const;
    int operator[](int j) const { return exp[static_cast<size_t>(j)]; }
    int& operator[](int j) { return exp[static_cast<size_t>(j)]; }

    MultiIndex plus(int j) const;   // exponent of x_j raised by one
    MultiIndex minus(int j) const;  // requires exp[j] > 0

    bool operator==(const MultiIndex& o) const = default;
};

// Iteration order used by Poly and by all monomial-indexed bases: degree
// first, then the per-degree enumeration position.
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Number of degree-d monomials in n variables: choose(d+n-1, n-1).
long monomial_count(int nvars, int degree);

// All degree-d monomials in canonical order.
std::vector<MultiIndex> enumerate_monomials(int nvars, int degree);

// Position of m within its degree block; inverse of monomial_unrank.
long monomial_rank(const MultiIndex& m);
MultiIndex monomial_unrank(int nvars, int degree, long rank);

}  // namespace jetcomplex

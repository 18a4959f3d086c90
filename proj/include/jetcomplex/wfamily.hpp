// The two-unknown family
//   d(phi^0)/d(z^{j0 0}) + d(phi^1)/d(z^{j 1}) = rhs^{j0,j},  (j0,j) in a
// doubly-injective pair set on [1,n] x [1,m]. The Cauchy-Fueter system is
// the n = m = t = 4 diagonal instance. Provides the closed-form tableau
// dimension and the second-order torsion conditions, one per 3-subset of
// the paired column indices.
#pragma once

#include "jetcomplex/jets.hpp"
#include "jetcomplex/symbol.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jetcomplex {

struct IndexSetI {
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> pairs;  // (j0, j), 1-based, input order kept

    int t() const { return static_cast<int>(pairs.size()); }
    // The bijection b: paired j |-> its j0. Throws when j is unpaired.
    int b(int j) const;
    std::vector<int> i0_sorted() const;
    std::vector<int> i1_sorted() const;

    // Validates ranges and both injectivity conditions.
    static IndexSetI make(int n, int m, std::vector<std::pair<int, int>> pairs);
};

struct WSystem {
    PDESystem base;  // t equations, 2 unknowns, n+m variables
    IndexSetI index_set;

    // z^{10}..z^{n0} then z^{11}..z^{m1}; matches the base system's columns.
    std::vector<std::string> variable_names() const;
    std::vector<std::string> equation_names() const;

    int var_block0(int j0) const { return j0 - 1; }                 // z^{j0 0}
    int var_block1(int j) const { return index_set.n + j - 1; }     // z^{j 1}
};

WSystem make_wsystem(int n, int m, const std::vector<std::pair<int, int>>& pairs);

// dim A^(q) = t*choose(q+m+n-t, m+n-t) + 2*choose(q+m+n-t, m+n-t-1).
long wdim_formula(int n, int m, int t, int q);

struct WTorsionCondition {
    int j = 0, jp = 0, k = 0;  // ascending triple from the paired column set
    std::vector<Poly> row;     // one degree-2 polynomial per equation
};

// One condition per 3-subset of the paired columns (empty when t < 3); the
// six-term alternating second-order expression in the right-hand sides.
std::vector<WTorsionCondition> wtorsion_conditions(const WSystem& w);

// The conditions stacked as a symbol matrix over the system's equations,
// graded like the output of compatibility_operator on the system's symbol.
SymbolMatrix wtorsion_symbol(const WSystem& w);

// The Cauchy-Fueter system: the diagonal W instance on 8 variables.
PDESystem cf_system();

}  // namespace jetcomplex

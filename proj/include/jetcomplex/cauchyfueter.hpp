// The R^8 Cauchy-Fueter complex, concretely: the first-order operator CF on
// pairs, the second-order torsion operator tor0 with values in the
// increasing-triple components of Lambda^3, the first-order tor1 with a
// two-component target, the jet-level exactness table, and the degree-7
// integer certificate that closes the complex. Variables are z^{i0}, z^{i1}
// for i = 0..3, stored at indices i and 4+i.
#pragma once

#include "jetcomplex/forms.hpp"
#include "jetcomplex/poly.hpp"
#include "jetcomplex/symbol.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace jetcomplex {

namespace cf {

constexpr int kVars = 8;

// variable index of z^{i b}
constexpr int zvar(int i, int b) { return b == 0 ? i : 4 + i; }

std::vector<std::string> variable_names();

struct CFPair {
    Poly phi0{kVars}, phi1{kVars};
};

using CFTuple = std::array<Poly, 4>;

// Phi_i = d(phi0)/dz^{i0} + d(phi1)/dz^{i1}
CFTuple cf_apply(const CFPair& p);

// Components on increasing triples of {0,1,2,3}, in the fixed order
// (0,1,2), (0,1,3), (0,2,3), (1,2,3); other index orders resolve through
// the antisymmetric extension.
struct Lambda3Field {
    std::array<Poly, 4> comps{Poly(kVars), Poly(kVars), Poly(kVars), Poly(kVars)};

    static int triple_index(int i, int th, int k);  // requires i < th < k
    Poly at(int i, int th, int k) const;            // antisymmetric extension
    bool is_zero() const;

    IndexedFamily as_family() const;
};

// The six-term second-order alternating expression per increasing triple.
Lambda3Field tor0_apply(const CFTuple& phi);

struct Lambda4Pair {
    Poly comp0{kVars}, comp1{kVars};
    bool is_zero() const { return comp0.is_zero() && comp1.is_zero(); }
};

// Component 0: the alternating first-order sum over the z^{.0} block with
// (i,theta,k,l) = (0,1,2,3); component 1: the same over z^{.1}.
Lambda4Pair tor1_apply(const Lambda3Field& phi);

// Total symbols of the three operators, graded so consecutive products are
// defined: cf rows total degree 1, tor0 rows 3 over columns at 1, tor1 rows
// 4 over columns at 3.
SymbolMatrix cf_symbol();
SymbolMatrix tor0_symbol();
SymbolMatrix tor1_symbol();

struct ExactnessOptionsCF {
    long modular_threshold = 2000;  // max(rows, cols) above which ranks go mod p
    int prime_trials = 2;
    std::uint64_t seed = 1;
};

struct ExactnessTable {
    int k = 0;
    std::array<long, 4> space_dims{};  // S^2_{k+4}, S^4_{k+3}, S^4_{k+1}, S^2_k
    std::array<long, 3> ranks{};       // CF, tor0, tor1 stages
    std::array<bool, 3> modular{};     // which ranks came from the mod-p path
    long ker_cf = 0;                   // space_dims[0] - ranks[0]
    long ker_cf_expected = 0;          // 4*choose(k+7,4) + 2*choose(k+7,3)
    bool exact_mid1 = false;           // at S^4_{k+3}
    bool exact_mid2 = false;           // at S^4_{k+1}
    bool tor1_surjective = false;
    long modular_threshold = 0;
    int prime_trials = 0;

    bool all_ok() const {
        return ker_cf == ker_cf_expected && exact_mid1 && exact_mid2 && tor1_surjective;
    }
};

// Jet-level exactness at level k (0 <= k <= 7). Sizes grow quickly; the
// modular path takes over past the threshold.
ExactnessTable exactness_dims(int k, const ExactnessOptionsCF& opts = {});

struct Degree7Certificate {
    std::array<Integer, 8> values{};  // P(0..7)
    Integer eighth_difference{0};     // 8th finite difference over k = 0..8
    bool all_zero = false;            // every value above is 0
    bool difference_zero = false;     // certifies deg P <= 7 at these points
    bool ok() const { return all_zero && difference_zero; }
};

// P(k) = dim S^4_{k+1} - dim S^4_{k+3} + dim S^2_{k+4}
//        - (4 choose(k+7,4) + 2 choose(k+7,3)) - dim S^2_k,
// evaluated with exact integers.
Degree7Certificate degree7_certificate();

}  // namespace cf

}  // namespace jetcomplex

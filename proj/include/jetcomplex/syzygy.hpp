// Graded syzygies of symbol matrices, computed degree by degree with plain
// linear algebra (no term orders): the degree-T slice of the syzygy module
// is the kernel of an explicit map between finite-dimensional spaces, and a
// minimal generator at T is a kernel element outside the span of variable
// multiples of the degree-(T-1) slice. Stacking the minimal generators of a
// symbol gives the compatibility (torsion) operator of the corresponding
// PDE system; iterating builds its complex.
#pragma once

#include "jetcomplex/symbol.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jetcomplex {

struct GradedSyzygyStage {
    struct Generator {
        std::vector<Poly> comps;  // one polynomial per input row; sum_m comps[m]*row_m = 0
        int total_degree = 0;     // degree of the products comps[m]*row_m
        int order = 0;            // max degree of a nonzero component
    };
    std::vector<Generator> generators;  // by total degree, then discovery order
    int max_total_degree = 0;           // highest product degree examined
    // Kernel dimension per examined total degree, before minimalization;
    // index 0 corresponds to the lowest examined degree.
    int first_total_degree = 0;
    std::vector<long> kernel_dims;

    long count_at_order(int d) const;
};

// Minimal syzygy generators of s with component degrees up to max_deg
// (relative to each row's own degree).
GradedSyzygyStage syzygy_generators(const SymbolMatrix& s, int max_deg);

// The stacked minimal generators as a new SymbolMatrix whose columns carry
// s's row grading; the associated PDE operator annihilates the image of the
// operator with symbol s. Empty (0-row) matrix when there are no syzygies.
SymbolMatrix compatibility_operator(const SymbolMatrix& s, int max_deg);
SymbolMatrix compatibility_operator(const PDESystem& sys, int max_deg);

struct ComplexChain {
    // operators[0] is the system's own symbol; operators[i+1] annihilates
    // the image of operators[i], with the product vanishing identically.
    std::vector<SymbolMatrix> operators;
    std::vector<int> orders;  // operator order per stage (max component degree)
    std::vector<long> sizes;  // component counts: beta, alpha, alpha_1, ...
    bool terminated = false;  // last stage had no syzygies up to the cutoff
    // Raised when the cutoff may hide generators: the chain hit max_len, or
    // the terminating search window was too shallow relative to the last
    // operator's order.
    bool possibly_incomplete = false;
    int max_deg = 0;
    std::vector<std::string> node_names;  // for reports: u, E, T1, T2, ...

    long length() const { return static_cast<long>(operators.size()); }
};

// Iterates compatibility_operator until a stage has no syzygies up to
// max_deg or max_len operators have been produced. Verifies
// op_{i+1} * op_i = 0 symbolically for every consecutive pair.
// terminated == false means the cutoff may hide further generators.
ComplexChain build_complex(const PDESystem& sys, int max_deg, int max_len);

struct ExactnessOptions {
    // Jet matrices whose max dimension exceeds this use the modular path.
    long modular_threshold = 2000;
    int prime_trials = 2;
    std::uint64_t seed = 1;
    // Hard guard: refuse matrices larger than this outright.
    long max_dim = 200000;
};

struct ExactnessSlot {
    int node = 0;        // middle node index within the chain (1-based)
    long dim = 0;        // dim of the middle jet space at this level
    long rank_in = 0;    // rank of the incoming jet matrix
    long rank_out = 0;   // rank of the outgoing jet matrix
    long kernel_out = 0; // dim - rank_out
    bool exact = false;  // kernel_out == rank_in
    bool modular_in = false, modular_out = false;
};

struct ExactnessReport {
    int level = 0;
    std::vector<ExactnessSlot> slots;
    long last_rank = 0;        // rank of the final operator
    long last_target_dim = 0;  // dim of the final node's jet space
    bool last_surjective = false;
    bool all_exact = false;
    long modular_threshold = 0;
    int prime_trials = 0;
};

// Jet-level exactness of the chain at level k: for each interior node,
// compares the kernel of the outgoing map with the rank of the incoming one.
ExactnessReport exactness_check(const ComplexChain& chain, int k,
                                const ExactnessOptions& opts = {});

// Degree of the jet space at chain node `node` when the check runs at level
// k (the last node sits at degree k itself).
int node_level_degree(const ComplexChain& chain, int node, int k);

}  // namespace jetcomplex

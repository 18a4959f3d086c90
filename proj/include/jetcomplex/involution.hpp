// Cartan's involution test and the staged-jet view of it. The test compares
// dim A^1 against dim A^0 + sum_j dim A^0_j in sampled generic coordinates;
// the staged view extends partial 1-jet sequences level by level. Verdicts
// are probabilistic over the coordinate samples and always carry the seeds
// that produced them.
#pragma once

#include "jetcomplex/jets.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace jetcomplex {

struct CartanTestResult {
    long lhs = 0;                      // dim A^1
    long rhs = 0;                      // dim A^0 + sum_{j=1}^{n-1} dim A^0_j
    bool equal = false;
    long dim_a0 = 0;
    std::vector<long> restricted;      // dim A^0_j for j = 1..n-1
};

// Runs the test in the coordinates x -> Tx. Throws std::logic_error if the
// Cartan inequality lhs <= rhs ever fails (it cannot, on correct counts).
CartanTestResult cartan_test(const PDESystem& sys, const CoordinateChange& t);

struct InvolutionReport {
    long lhs = 0;
    struct Sample {
        std::uint64_t seed = 0;
        long rhs = 0;
    };
    std::vector<Sample> rhs_samples;
    long rhs_min = 0;
    bool involutive = false;
    int samples = 0;
    std::uint64_t master_seed = 0;
};

// Minimizes rhs over `samples` random coordinate changes (entries uniform in
// [-9,9], resampled until invertible); involutive iff lhs == rhs_min.
InvolutionReport is_involutive(const PDESystem& sys, int samples, std::uint64_t seed);

// Staged partial 1-jets: level l holds the values (P^i_{lj})_{j >= l},
// flattened as beta * (n - l + 1) rationals, component-major.
struct RegularSequenceWitness {
    std::vector<std::vector<Rational>> levels;

    int level_count() const { return static_cast<int>(levels.size()); }
};

// Witness levels 1..k satisfy the staged relations: level 1 solves the
// symbol, each later level l solves the level-l linear relation against the
// earlier levels.
bool is_regular(const PDESystem& sys, const RegularSequenceWitness& w);

// Solves the level-l relation for (P^i_{lj})_{j >= l} given the (l-1)-regular
// witness w (which must have exactly l-1 levels). Returns the particular
// solution with zeros in the free positions, or nullopt when the level-l
// system is inconsistent ("none exists" is a value, not an error). l == 1
// returns a first kernel element of the symbol (zero when A^0 = 0).
std::optional<std::vector<Rational>> extend_regular(const PDESystem& sys,
                                                    const RegularSequenceWitness& w, int level);

// Samples a witness by extending greedily with randomized kernel offsets;
// reports the first level whose extension fails, or 0 when all n levels
// extend. Used by the Def 4.3 <-> Prop 4.4 cross-check.
int sample_witness_failure_level(const PDESystem& sys, std::uint64_t seed);

struct Lemma46Row {
    int j = 0;
    long dim_b0_j = 0;   // restricted tableau of B at q = 0
    long rhs = 0;        // dim S^beta_{2(n-j)} - dim A^1_j
    bool equal = false;
};

// The per-j dimension table of the heredity criterion; B's unknown count
// must equal A's equation count.
std::vector<Lemma46Row> lemma46_check(const PDESystem& a, const PDESystem& b);

}  // namespace jetcomplex

// Sparse matrices over Q with exact elimination.
//
// Ranks and kernels of jet-prolongation matrices drive every dimension count
// in the project, so the elimination here is fraction-free (rows are scaled
// to integer content, pivoting is Markowitz-style to limit fill) and there is
// a mod-p path for the sizes where rational elimination is not feasible.
#pragma once

#include "jetcomplex/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace jetcomplex {

// Sparse row-major matrix; only nonzero entries are stored, rows sorted by
// column index. Immutable use after assembly is the expected pattern.
class ExactMatrix {
  public:
    using Row = std::vector<std::pair<int, Rational>>;

    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);

    static ExactMatrix identity(int n);
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& dense);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long nnz() const;

    // Accumulates into (r, c); erases the entry if the sum is zero.
    void add(int r, int c, const Rational& v);
    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;

    const Row& row_entries(int r) const { return data_[static_cast<size_t>(r)]; }

    ExactMatrix transpose() const;

    // Rows of a on top of rows of b; column counts must agree.
    static ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

    bool operator==(const ExactMatrix& o) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Row> data_;
};

struct RrefResult {
    ExactMatrix reduced;          // canonical RREF, zero rows at the bottom
    long rank = 0;
    std::vector<int> pivot_cols;  // ascending
};

RrefResult rref(const ExactMatrix& m);

// Forward elimination only; cheaper than rref when only the rank is needed.
long rank(const ExactMatrix& m);

// Columns form a basis of the null space; cols() == cols(m) - rank(m).
// Basis vectors are the canonical RREF ones (1 at the free column, pivot
// entries filled in), ordered by free column.
ExactMatrix kernel_basis(const ExactMatrix& m);

// Square-matrix inverse via elimination on [m | I]; throws on singular input.
ExactMatrix inverse(const ExactMatrix& m);
bool is_invertible(const ExactMatrix& m);

// Particular solution of A x = b with zeros in the free positions, or
// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const ExactMatrix& a, const std::vector<Rational>& b);

struct ModularRankOptions {
    // Sampled primes lie in [min_prime, 2*min_prime); the default keeps them
    // near 2^62. Must exceed 2^20.
    std::uint64_t min_prime = (1ull << 61);
    int trials = 2;
    std::uint64_t seed = 1;
    // Attempts to find a prime not hit by an entry denominator before failing.
    int max_prime_attempts = 64;
};

struct ModularRankReport {
    long rank = 0;                       // max over trials; never exceeds rank over Q
    std::vector<std::uint64_t> primes;   // one per completed trial
    bool escalated = false;              // trials disagreed and an extra one ran
};

// Rank of m modulo independently sampled random primes. Each mod-p rank is a
// lower bound for the rational rank; disagreeing trials trigger one extra
// trial and the max is reported.
ModularRankReport rank_modp(const ExactMatrix& m, const ModularRankOptions& opts = {});

// Convenience form mirroring the (min_prime, trials) call shape.
long rank_modp(const ExactMatrix& m, std::uint64_t min_prime, int trials,
               std::uint64_t seed = 1);

}  // namespace jetcomplex

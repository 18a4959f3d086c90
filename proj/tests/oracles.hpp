// Test-only oracles, deliberately independent of the library's sparse
// elimination path: dense textbook Gauss-Jordan over Q, naive polynomial
// differentiation, and a tiny deterministic RNG for reproducible fixtures.
#pragma once

#include "jetcomplex/matrix.hpp"
#include "jetcomplex/rational.hpp"

#include <cstdint>
#include <vector>

namespace oracles {

using jetcomplex::ExactMatrix;
using jetcomplex::Rational;

using Dense = std::vector<std::vector<Rational>>;

inline Dense to_dense(const ExactMatrix& m) {
    Dense d(static_cast<size_t>(m.rows()), std::vector<Rational>(static_cast<size_t>(m.cols()), Rational(0)));
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row_entries(r)) d[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
    return d;
}

// Plain Gauss-Jordan with leftmost-column pivoting; returns the RREF in
// place and the pivot columns.
inline std::vector<int> dense_rref(Dense& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t sel = pr;
        while (sel < rows && a[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[pr], a[sel]);
        Rational inv = Rational(1) / a[pr][c];
        for (size_t j = c; j < cols; ++j) a[pr][j] = a[pr][j] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] - f * a[pr][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++pr;
    }
    return pivots;
}

inline long dense_rank(const ExactMatrix& m) {
    Dense d = to_dense(m);
    return static_cast<long>(dense_rref(d).size());
}

// xorshift-style generator, fixed across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return s_;
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  private:
    std::uint64_t s_;
};

}  // namespace oracles

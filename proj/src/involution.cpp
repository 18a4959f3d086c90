#include "jetcomplex/involution.hpp"

#include <random>
#include <stdexcept>

namespace jetcomplex {

CartanTestResult cartan_test(const PDESystem& sys, const CoordinateChange& t) {
    PDESystem moved = change_coordinates(sys, t);
    CartanTestResult res;
    res.lhs = tableau_dim(moved, 1);
    res.dim_a0 = tableau_dim(moved, 0);
    res.rhs = res.dim_a0;
    for (int j = 1; j <= sys.variables() - 1; ++j) {
        long d = restricted_tableau_dim(moved, j, 0);
        res.restricted.push_back(d);
        res.rhs += d;
    }
    if (res.lhs > res.rhs) throw std::logic_error("cartan_test: Cartan inequality violated");
    res.equal = res.lhs == res.rhs;
    return res;
}

InvolutionReport is_involutive(const PDESystem& sys, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("is_involutive: samples >= 1 required");
    InvolutionReport rep;
    rep.samples = samples;
    rep.master_seed = seed;
    rep.lhs = tableau_dim(sys, 1);

    std::mt19937_64 master(seed);
    for (int s = 0; s < samples; ++s) {
        std::uint64_t sub = master();
        CartanTestResult r = cartan_test(sys, CoordinateChange::random(sys.variables(), sub));
        rep.rhs_samples.push_back({sub, r.rhs});
        if (r.lhs != rep.lhs) throw std::logic_error("is_involutive: dim A^1 moved under coordinates");
    }
    rep.rhs_min = rep.rhs_samples[0].rhs;
    for (const auto& smp : rep.rhs_samples) rep.rhs_min = std::min(rep.rhs_min, smp.rhs);
    rep.involutive = rep.lhs == rep.rhs_min;
    return rep;
}

namespace {

// matrix of the level-l map x = (P^i_{lj})_{j>=l} |-> (sum_{j>=l} a^m_{ij} x)
ExactMatrix level_map(const PDESystem& sys, int level) {
    int n = sys.variables(), beta = sys.unknowns();
    int width = n - level + 1;
    ExactMatrix m(sys.equations(), beta * width);
    for (int e = 0; e < sys.equations(); ++e)
        for (int i = 0; i < beta; ++i)
            for (int j = level; j <= n; ++j)
                m.add(e, i * width + (j - level), sys.coeff(e, i, j - 1));
    return m;
}

// right-hand side of the level-l relation from the earlier levels:
// b^m = -sum_{j'=1}^{l-1} a^m_{i j'} P^i_{j' l}
std::vector<Rational> level_rhs(const PDESystem& sys, const RegularSequenceWitness& w, int level) {
    int n = sys.variables(), beta = sys.unknowns();
    std::vector<Rational> b(static_cast<size_t>(sys.equations()), Rational(0));
    for (int e = 0; e < sys.equations(); ++e)
        for (int jp = 1; jp <= level - 1; ++jp) {
            const auto& lev = w.levels[static_cast<size_t>(jp - 1)];
            int width = n - jp + 1;
            for (int i = 0; i < beta; ++i)
                b[static_cast<size_t>(e)] -=
                    sys.coeff(e, i, jp - 1) * lev[static_cast<size_t>(i * width + (level - jp))];
        }
    return b;
}

void check_witness_shape(const PDESystem& sys, const RegularSequenceWitness& w) {
    int n = sys.variables(), beta = sys.unknowns();
    if (w.level_count() > n) throw std::invalid_argument("witness has more levels than variables");
    for (int l = 1; l <= w.level_count(); ++l)
        if (static_cast<int>(w.levels[static_cast<size_t>(l - 1)].size()) != beta * (n - l + 1))
            throw std::invalid_argument("witness level " + std::to_string(l) + " has wrong size");
}

}  // namespace

bool is_regular(const PDESystem& sys, const RegularSequenceWitness& w) {
    check_witness_shape(sys, w);
    for (int l = 1; l <= w.level_count(); ++l) {
        ExactMatrix m = level_map(sys, l);
        std::vector<Rational> b = level_rhs(sys, w, l);
        const auto& x = w.levels[static_cast<size_t>(l - 1)];
        for (int e = 0; e < m.rows(); ++e) {
            Rational acc(0);
            for (const auto& [c, v] : m.row_entries(e)) acc += v * x[static_cast<size_t>(c)];
            if (acc != b[static_cast<size_t>(e)]) return false;
        }
    }
    return true;
}

std::optional<std::vector<Rational>> extend_regular(const PDESystem& sys,
                                                    const RegularSequenceWitness& w, int level) {
    int n = sys.variables(), beta = sys.unknowns();
    if (level < 1 || level > n) throw std::invalid_argument("extend_regular: level out of range");
    if (w.level_count() != level - 1)
        throw std::invalid_argument("extend_regular: witness must have exactly level-1 levels");
    if (!is_regular(sys, w))
        throw std::invalid_argument("extend_regular: witness is not (level-1)-regular");

    if (level == 1) {
        ExactMatrix k = kernel_basis(prolongation_matrix(sys, 0));
        std::vector<Rational> x(static_cast<size_t>(beta * n), Rational(0));
        if (k.cols() > 0)
            for (int r = 0; r < k.rows(); ++r) x[static_cast<size_t>(r)] = k.get(r, 0);
        return x;
    }
    return solve(level_map(sys, level), level_rhs(sys, w, level));
}

int sample_witness_failure_level(const PDESystem& sys, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-4, 4);
    int n = sys.variables();
    RegularSequenceWitness w;

    auto random_kernel_offset = [&](const ExactMatrix& m, std::vector<Rational>& x) {
        ExactMatrix k = kernel_basis(m);
        for (int c = 0; c < k.cols(); ++c) {
            Rational coef(dist(rng));
            if (coef.is_zero()) continue;
            for (int r = 0; r < k.rows(); ++r) {
                Rational v = k.get(r, c);
                if (!v.is_zero()) x[static_cast<size_t>(r)] += coef * v;
            }
        }
    };

    for (int l = 1; l <= n; ++l) {
        std::optional<std::vector<Rational>> ext;
        if (l == 1) {
            ext = std::vector<Rational>(static_cast<size_t>(sys.unknowns() * n), Rational(0));
            random_kernel_offset(prolongation_matrix(sys, 0), *ext);
        } else {
            ext = extend_regular(sys, w, l);
            if (!ext) return l;
            random_kernel_offset(level_map(sys, l), *ext);
        }
        w.levels.push_back(std::move(*ext));
    }
    return 0;
}

std::vector<Lemma46Row> lemma46_check(const PDESystem& a, const PDESystem& b) {
    if (b.unknowns() != a.equations())
        throw std::invalid_argument("lemma46_check: B's unknowns must match A's equations");
    if (b.variables() != a.variables())
        throw std::invalid_argument("lemma46_check: variable count mismatch");
    int n = a.variables();
    std::vector<Lemma46Row> rows;
    for (int j = 1; j <= n - 1; ++j) {
        Lemma46Row row;
        row.j = j;
        row.dim_b0_j = restricted_tableau_dim(b, j, 0);
        row.rhs = jet_dim(a.unknowns(), 2, n - j) - restricted_tableau_dim(a, j, 1);
        row.equal = row.dim_b0_j == row.rhs;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace jetcomplex

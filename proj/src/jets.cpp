#include "jetcomplex/jets.hpp"

#include <random>
#include <stdexcept>

namespace jetcomplex {

long jet_dim(int p, int k, int n) {
    if (p < 1 || n < 1 || k < 0) throw std::invalid_argument("jet_dim: need p >= 1, n >= 1, k >= 0");
    return p * monomial_count(n, k);
}

PDESystem::PDESystem(int equations, int unknowns, int variables, std::string label)
    : alpha_(equations),
      beta_(unknowns),
      nvars_(variables),
      a_(static_cast<size_t>(equations) * static_cast<size_t>(unknowns) * static_cast<size_t>(variables),
         Rational(0)),
      label_(std::move(label)) {
    if (equations < 0 || unknowns < 1 || variables < 1)
        throw std::invalid_argument("PDESystem: need unknowns >= 1, variables >= 1");
}

size_t PDESystem::index(int m, int i, int j) const {
    if (m < 0 || m >= alpha_ || i < 0 || i >= beta_ || j < 0 || j >= nvars_)
        throw std::out_of_range("PDESystem: coefficient index");
    return (static_cast<size_t>(m) * static_cast<size_t>(beta_) + static_cast<size_t>(i)) *
               static_cast<size_t>(nvars_) +
           static_cast<size_t>(j);
}

void PDESystem::validate() const {
    for (int m = 0; m < alpha_; ++m) {
        bool nonzero = false;
        for (int i = 0; i < beta_ && !nonzero; ++i)
            for (int j = 0; j < nvars_ && !nonzero; ++j) nonzero = !coeff(m, i, j).is_zero();
        if (!nonzero)
            throw std::invalid_argument("PDESystem: equation " + std::to_string(m + 1) +
                                        " is identically zero");
    }
}

CoordinateChange CoordinateChange::identity(int n) { return {ExactMatrix::identity(n)}; }

CoordinateChange CoordinateChange::random(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    while (true) {
        ExactMatrix t(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) t.set(r, c, Rational(dist(rng)));
        if (is_invertible(t)) return {std::move(t)};
    }
}

ExactMatrix prolongation_matrix(const PDESystem& sys, int k) {
    if (k < 0) throw std::invalid_argument("prolongation_matrix: k >= 0 required");
    int n = sys.variables(), alpha = sys.equations(), beta = sys.unknowns();
    long rows_per_comp = monomial_count(n, k);
    long cols_per_comp = monomial_count(n, k + 1);
    ExactMatrix mat(static_cast<int>(alpha * rows_per_comp), static_cast<int>(beta * cols_per_comp));

    auto source = enumerate_monomials(n, k + 1);
    for (long lc = 0; lc < static_cast<long>(source.size()); ++lc) {
        const MultiIndex& L = source[static_cast<size_t>(lc)];
        for (int j = 0; j < n; ++j) {
            if (L[j] == 0) continue;
            long kr = monomial_rank(L.minus(j));
            for (int i = 0; i < beta; ++i) {
                long col = i * cols_per_comp + lc;
                for (int m = 0; m < alpha; ++m) {
                    const Rational& a = sys.coeff(m, i, j);
                    if (a.is_zero()) continue;
                    mat.add(static_cast<int>(m * rows_per_comp + kr), static_cast<int>(col),
                            Rational(L[j]) * a);
                }
            }
        }
    }
    return mat;
}

long tableau_dim(const PDESystem& sys, int q) {
    ExactMatrix p = prolongation_matrix(sys, q);
    return p.cols() - rank(p);
}

PDESystem restrict_system(const PDESystem& sys, int cut_j) {
    if (cut_j < 0 || cut_j > sys.variables() - 1)
        throw std::invalid_argument("restrict_system: cut index out of range");
    PDESystem sub(sys.equations(), sys.unknowns(), sys.variables() - cut_j, sys.label());
    for (int m = 0; m < sys.equations(); ++m)
        for (int i = 0; i < sys.unknowns(); ++i)
            for (int j = cut_j; j < sys.variables(); ++j)
                sub.set_coeff(m, i, j - cut_j, sys.coeff(m, i, j));
    return sub;
}

long restricted_tableau_dim(const PDESystem& sys, int cut_j, int q) {
    return tableau_dim(restrict_system(sys, cut_j), q);
}

PDESystem change_coordinates(const PDESystem& sys, const CoordinateChange& t) {
    int n = sys.variables();
    if (t.matrix.rows() != n || t.matrix.cols() != n)
        throw std::invalid_argument("change_coordinates: matrix size mismatch");
    ExactMatrix tinv = inverse(t.matrix);  // throws on singular input
    PDESystem out(sys.equations(), sys.unknowns(), n, sys.label());
    // a'_{ij} = sum_l a_{il} (T^{-1})_{jl}
    for (int m = 0; m < sys.equations(); ++m)
        for (int i = 0; i < sys.unknowns(); ++i)
            for (int j = 0; j < n; ++j) {
                Rational acc(0);
                for (const auto& [l, v] : tinv.row_entries(j)) acc += sys.coeff(m, i, l) * v;
                out.set_coeff(m, i, j, acc);
            }
    return out;
}

}  // namespace jetcomplex

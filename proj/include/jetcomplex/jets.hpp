// Jet spaces, first-order constant-coefficient PDE systems and their
// prolongations. A system is the coefficient tensor a^m_{ij} of
//   sum_{i,j} a^m_{ij} dP^i/dx_j = 0,   m = 1..alpha,
// and the degree-k prolongation is the induced linear map from homogeneous
// degree-(k+1) jets of the unknowns to degree-k jets of the equations.
// Kernel dimensions of those maps are the tableau dimensions that the
// involution test and the dimension formulas are about.
#pragma once

#include "jetcomplex/matrix.hpp"
#include "jetcomplex/multiindex.hpp"
#include "jetcomplex/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jetcomplex {

// dim S^p_{kn} = p * choose(k+n-1, n-1)
long jet_dim(int p, int k, int n);

struct JetSpace {
    int components = 0;
    int degree = 0;
    int variables = 0;
    long dim = 0;
    static JetSpace make(int p, int k, int n) { return {p, k, n, jet_dim(p, k, n)}; }
};

class PDESystem {
  public:
    PDESystem(int equations, int unknowns, int variables, std::string label = "");

    int equations() const { return alpha_; }
    int unknowns() const { return beta_; }
    int variables() const { return nvars_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    const Rational& coeff(int m, int i, int j) const { return a_[index(m, i, j)]; }
    void set_coeff(int m, int i, int j, const Rational& v) { a_[index(m, i, j)] = v; }

    // Enforces the well-formedness the parsers promise: at least one nonzero
    // coefficient in every equation row. Internal restrictions of a system
    // may legitimately carry zero rows and skip this.
    void validate() const;

    bool operator==(const PDESystem& o) const = default;

  private:
    size_t index(int m, int i, int j) const;
    int alpha_, beta_, nvars_;
    std::vector<Rational> a_;
    std::string label_;
};

struct CoordinateChange {
    ExactMatrix matrix;  // n x n, invertible

    static CoordinateChange identity(int n);
    // Entries uniform in [-9, 9], resampled until invertible. Deterministic
    // in the seed.
    static CoordinateChange random(int n, std::uint64_t seed);
};

// Matrix of S^beta_{(k+1)n} -> S^alpha_{kn}, jets P |-> (sum a^m_{ij} dP^i/dx_j).
// Rows and columns are component-major over the canonical monomial bases.
ExactMatrix prolongation_matrix(const PDESystem& sys, int k);

// dim A^q: homogeneous degree-(q+1) solutions of the symbol equations.
long tableau_dim(const PDESystem& sys, int q);

// Tableau of the system restricted to jets in the last n-j variables
// (derivative columns for x_1..x_j dropped, all equations kept).
long restricted_tableau_dim(const PDESystem& sys, int cut_j, int q);

// The restricted system itself, on n-cut_j variables. Equations whose
// coefficients all vanish after the cut become zero rows; they are kept so
// equation indices stay aligned.
PDESystem restrict_system(const PDESystem& sys, int cut_j);

// Coefficients transformed so solutions correspond under x -> Tx; applying
// T then T^{-1} restores the tensor exactly.
PDESystem change_coordinates(const PDESystem& sys, const CoordinateChange& t);

}  // namespace jetcomplex

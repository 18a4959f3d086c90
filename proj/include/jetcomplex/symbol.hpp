// Matrices of homogeneous polynomials: total symbols of constant-coefficient
// operators and the stages of a graded free resolution. Grading convention:
// column c carries a shift delta_c, row m a total degree D_m, and the (m,c)
// entry is zero or homogeneous of degree D_m - delta_c. For the symbol of a
// first-order system all shifts are 0 and all row degrees 1.
#pragma once

#include "jetcomplex/jets.hpp"
#include "jetcomplex/matrix.hpp"
#include "jetcomplex/poly.hpp"

#include <string>
#include <vector>

namespace jetcomplex {

class SymbolMatrix {
  public:
    SymbolMatrix() = default;
    SymbolMatrix(int rows, int cols, int nvars, std::vector<int> col_degrees,
                 std::vector<int> row_degrees);
    // Uniform grading: all column shifts 0, all rows of the given degree.
    SymbolMatrix(int rows, int cols, int nvars, int row_degree);

    // sigma^m_i(xi) = sum_j a^m_{ij} xi_j
    static SymbolMatrix from_system(const PDESystem& sys);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }
    const std::vector<int>& col_degrees() const { return col_degrees_; }
    const std::vector<int>& row_degrees() const { return row_degrees_; }

    const Poly& entry(int m, int c) const;
    // Enforces the grading: p must be zero or homogeneous of degree
    // row_degrees[m] - col_degrees[c].
    void set_entry(int m, int c, Poly p);

    // Numeric matrix at a covector point.
    ExactMatrix evaluate(const std::vector<Rational>& xi) const;

    // Jet-level matrix at top degree d: maps the direct sum of S_{d-delta_c}
    // over columns to the direct sum of S_{d-D_m} over rows, each entry
    // acting as the constant-coefficient differential operator its
    // polynomial denotes. Negative-degree blocks are empty.
    ExactMatrix jet_matrix(int d) const;

    // Offsets of the per-component blocks inside jet_matrix(d).
    std::vector<long> col_block_offsets(int d) const;
    std::vector<long> row_block_offsets(int d) const;

    bool is_zero() const;

  private:
    int rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<int> col_degrees_, row_degrees_;
    std::vector<Poly> entries_;
};

// Matrix product; b's row grading must match a's column grading. For
// constant-coefficient operators composition of operators is exactly the
// product of their symbols.
SymbolMatrix multiply(const SymbolMatrix& a, const SymbolMatrix& b);

// Rows of a flattened against the coordinate basis (column component,
// monomial); requires all rows of a to share one total degree.
ExactMatrix flatten_rows(const SymbolMatrix& a);

// Row-space equality in both directions, checked exactly over Q.
bool same_row_space(const SymbolMatrix& a, const SymbolMatrix& b);

// One row rendered as a differential condition on named components, e.g.
// "d/dx2 [E1] - d/dx1 [E2] = 0".
std::string render_operator_row(const SymbolMatrix& s, int m,
                                const std::vector<std::string>& var_names,
                                const std::vector<std::string>& comp_names);

}  // namespace jetcomplex

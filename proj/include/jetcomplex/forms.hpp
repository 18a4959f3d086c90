// Alternating forms with homogeneous polynomial coefficients, the exterior
// derivative (which differentiates coefficients, so it lowers coefficient
// degree while raising form degree), closedness, and the Euler-homotopy
// solve of du = f. Also the instance checker for the symmetrized-array
// lemma and the four-index torsion residuals.
#pragma once

#include "jetcomplex/poly.hpp"

#include <array>
#include <map>
#include <vector>

namespace jetcomplex {

class PolyForm {
  public:
    PolyForm() = default;
    PolyForm(int space_dim, int form_degree, int coeff_degree);

    int space_dim() const { return n_; }
    int form_degree() const { return r_; }
    int coeff_degree() const { return s_; }

    // idx must be strictly increasing; coef zero or homogeneous of degree s.
    void add_term(const std::vector<int>& idx, const Poly& coef);
    Poly coefficient(const std::vector<int>& idx) const;
    const std::map<std::vector<int>, Poly>& terms() const { return terms_; }
    bool is_zero() const;

    PolyForm& operator+=(const PolyForm& o);
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator*(const Rational& c, PolyForm f);
    friend PolyForm operator-(const PolyForm& f) { return Rational(-1) * f; }
    // Zero forms compare equal across coefficient degrees.
    bool equals(const PolyForm& o) const;
    friend bool operator==(const PolyForm& a, const PolyForm& b) { return a.equals(b); }

  private:
    int n_ = 0, r_ = 0, s_ = 0;
    std::map<std::vector<int>, Poly> terms_;
};

// d(P dX^I) = sum_l dP/dX^l dX^l ^ dX^I; the zero (r+1)-form when s = 0.
PolyForm ext_d(const PolyForm& f);

bool is_closed(const PolyForm& f);

// Contraction with the Euler field sum_i X^i d_i; an (r-1)-form with
// coefficient degree s+1.
PolyForm euler_contraction(const PolyForm& f);

// For closed homogeneous f with s + r > 0: u = iota_E f / (s+r) satisfies
// du = f exactly (verified before returning). Rejects non-closed input and
// the s + r = 0 corner.
PolyForm koszul_solve(const PolyForm& f);

// Numbers X^u_{(A) m (B)}: an upper index, a symmetric multiset A, one
// distinguished middle index, a symmetric multiset B. Entries are stored
// against sorted group keys, so within-group symmetry holds by
// construction; conflicting assignments to one canonical key are rejected.
// Absent entries read as zero.
class SymArray {
  public:
    void set(int upper, std::vector<int> group_a, int mid, std::vector<int> group_b,
             const Rational& v);
    Rational get(int upper, std::vector<int> group_a, int mid, std::vector<int> group_b) const;

  private:
    using Key = std::tuple<int, std::vector<int>, int, std::vector<int>>;
    std::map<Key, Rational> entries_;
};

enum class Lemma31Result {
    HypothesisNotSatisfied,
    ConclusionClosed,
    ConclusionNotClosed,
};

// Instance check of the symmetrization lemma on C^4. J supplies the fixed
// part of the first group: with l = |J|, the derived multi-indices are read
// as J' = J minus its last entry, J'' = J minus its last two, J''' = J minus
// its last three (so |J| >= 3 is required). Lambda is the second-group
// multiset. Evaluates the hypothesis identity between the two 3-forms; when
// it holds, builds the conclusion form and reports whether it is d-closed.
Lemma31Result lemma31_instance_check(const SymArray& x, const std::vector<int>& j_index,
                                     const std::vector<int>& lambda);

// Antisymmetric 3-index polynomial family on {0,1,2,3}: input may list any
// index triples; entries must be consistent under the antisymmetric
// extension (repeated indices force zero). Polynomials live in the 8
// variables z^{i0}, z^{i1} with z^{i0} at index i and z^{i1} at index 4+i.
using IndexedFamily = std::map<std::array<int, 3>, Poly>;

// The four-index alternating combinations
//   d(phi_{i theta k})/dz^{l b} - d(phi_{l theta k})/dz^{i b}
//   + d(phi_{l i k})/dz^{theta b} - d(phi_{l i theta})/dz^{k b}
// for the chosen variable block b (0 or 1). The result is antisymmetric in
// all four indices (asserted exactly); returned on increasing 4-tuples,
// which over {0,1,2,3} means the single component (0,1,2,3).
std::map<std::array<int, 4>, Poly> torsion_residuals(const IndexedFamily& phi, int direction);

}  // namespace jetcomplex

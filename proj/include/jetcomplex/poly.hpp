// Multivariate polynomials over Q, used for symbol rows, differential
// operators on jets and form coefficients. Term maps are ordered by the
// project-wide graded-lex order.
#pragma once

#include "jetcomplex/multiindex.hpp"
#include "jetcomplex/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace jetcomplex {

class Poly {
  public:
    using Terms = std::map<MultiIndex, Rational, GrlexLess>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int j);
    static Poly monomial(int nvars, const MultiIndex& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    long term_count() const { return static_cast<long>(terms_.size()); }

    void add_term(const MultiIndex& m, const Rational& c);
    Rational coefficient(const MultiIndex& m) const;

    int total_degree() const;  // -1 for the zero polynomial
    // True when every term has the same degree; the zero polynomial is
    // homogeneous of any degree.
    bool is_homogeneous() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, Poly p);

    bool operator==(const Poly& o) const = default;

    Poly derivative(int j) const;
    Poly multiply_by_variable(int j) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // e.g. "2*x1^2*x3 - 1/2*x2"; names indexed by variable.
    std::string str(const std::vector<std::string>& names) const;

  private:
    int nvars_ = 0;
    Terms terms_;
};

}  // namespace jetcomplex

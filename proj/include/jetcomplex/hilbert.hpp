// Hilbert-Poincare series: exact rational-function fit of a dimension
// sequence. The fit is a Pade-style search for the minimal linear
// recurrence, solved over Q; no floating point anywhere.
#pragma once

#include "jetcomplex/rational.hpp"

#include <string>
#include <vector>

namespace jetcomplex {

struct RationalSeries {
    // Coefficient lists, constant term first. Normalized: denominator has
    // integer coefficients with content 1 and positive constant term.
    std::vector<Integer> numerator;
    std::vector<Integer> denominator;
    long verified_terms = 0;

    // Taylor coefficients of numerator/denominator.
    std::vector<Rational> expand(long nterms) const;

    // Denominator split as (1-z)^k * rest.
    int unit_pole_order() const;
    std::vector<Integer> denominator_rest() const;

    std::string str() const;

    bool operator==(const RationalSeries& o) const {
        return numerator == o.numerator && denominator == o.denominator;
    }
};

// Fits dims with numerator/denominator, deg(denominator) <= max_den_degree.
// Pade-style search: smallest combined degree first, ties broken toward the
// smaller numerator. Every supplied term is reproduced exactly
// (verified_terms == dims.size()); supply at least 2*(max_den_degree+1)
// terms when the sequence's recurrence order is not known in advance.
// Throws std::runtime_error("no rational fit within bound") when nothing
// fits the degree bound.
RationalSeries hilbert_series(const std::vector<long>& dims, int max_den_degree);

}  // namespace jetcomplex

// Binomial coefficients and the six summation identities used by the
// dimension counts. Convention fixed once for the whole project:
// the classical C^a_b of the combinatorics literature is choose(b, a),
// i.e. "b choose a". Every other module speaks only choose().
#pragma once

#include "jetcomplex/rational.hpp"

#include <vector>

namespace jetcomplex {

// Pascal-triangle cache. Rows are built on demand and never mutated after
// publication, so lookups from concurrent readers are safe once built.
class BinomialTable {
  public:
    explicit BinomialTable(int initial_rows = 64);

    // "b choose a"; 0 outside 0 <= a <= b.
    const Integer& get(long b, long a);

    long rows_cached() const { return static_cast<long>(rows_.size()); }

  private:
    void extend(long b);
    std::vector<std::vector<Integer>> rows_;
    Integer zero_;
};

// Process-wide table behind a lock; cheap for the sizes this project needs.
Integer choose(long b, long a);

// Lemma identity checker: evaluates one of the six summation identities
// both by direct summation and by its closed form, returns whether the two
// agree. identity_id is 1..6; params are the identity's free integers:
//   1: (a, q)       sum_{s=0..q} C(a+s,a)            = C(a+q+1,a+1)
//   2: (a, p, q)    sum_{s=p..q} C(a+s,a)            = C(a+q+1,a+1) - C(a+p,a+1)
//   3: (a, b, q)    sum_{s=0..q} C(a+s,b)            = C(a+q+1,b+1) - C(a,b+1)
//   4: (a, q)       sum_{s=0..q} (s+1)C(a+s,a)       = (a+1)C(a+q+1,a+2) + C(a+q+1,a+1)
//   5: (a, b, q)    sum_{s=0..q} (s+1)C(a+s,b)       = (b+1)[C(a+q+1,b+2)-C(a,b+2)]
//                                                     + (b-a+1)[C(a+q+1,b+1)-C(a,b+1)]
//                   requires a >= b+2
//   6: (a, b, d)    sum_{s=0..d} C(a+s,a)C(b-s,b-d)  = C(a+b+1,a+b+1-d)
//                   requires d <= b
// Throws std::invalid_argument on a bad id, wrong arity, negative parameters
// or a violated side condition.
bool lemma23_check(int identity_id, const std::vector<long>& params);

}  // namespace jetcomplex

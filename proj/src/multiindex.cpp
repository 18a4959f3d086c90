#include "jetcomplex/multiindex.hpp"

#include <stdexcept>

namespace jetcomplex {

MultiIndex MultiIndex::unit(int nvars, int j) {
    MultiIndex m = zero(nvars);
    m[j] = 1;
    return m;
}

int MultiIndex::degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
}

MultiIndex MultiIndex::plus(int j) const {
    MultiIndex m = *this;
    ++m[j];
    return m;
}

MultiIndex MultiIndex::minus(int j) const {
    if (exp[static_cast<size_t>(j)] <= 0) throw std::invalid_argument("MultiIndex::minus: exponent is zero");
    MultiIndex m = *this;
    --m[j];
    return m;
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // within a degree, lexicographically larger exponent vectors come first
    return a.exp > b.exp;
}

namespace {

long to_long(const Integer& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("monomial count exceeds long");
    return v.get_si();
}

}  // namespace

long monomial_count(int nvars, int degree) {
    if (degree < 0) return 0;
    if (nvars == 0) return degree == 0 ? 1 : 0;
    return to_long(choose(degree + nvars - 1, nvars - 1));
}

std::vector<MultiIndex> enumerate_monomials(int nvars, int degree) {
    std::vector<MultiIndex> out;
    if (nvars < 0 || degree < 0) return out;
    out.reserve(static_cast<size_t>(monomial_count(nvars, degree)));
    MultiIndex cur = MultiIndex::zero(nvars);
    // recursive descent, first variable takes the largest share first
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back(cur);
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

long monomial_rank(const MultiIndex& m) {
    int n = m.nvars();
    int d = m.degree();
    long r = 0;
    for (int pos = 0; pos < n - 1; ++pos) {
        int e = m[pos];
        // monomials whose exponent at pos exceeds e, given d remaining:
        // sum_{v=e+1..d} count(n-pos-1, d-v), telescoped by the hockey stick
        if (e < d) r += monomial_count(n - pos, d - e - 1);
        d -= e;
    }
    return r;
}

MultiIndex monomial_unrank(int nvars, int degree, long rank) {
    MultiIndex m = MultiIndex::zero(nvars);
    int d = degree;
    for (int pos = 0; pos < nvars - 1; ++pos) {
        for (int v = d; v >= 0; --v) {
            long block = monomial_count(nvars - pos - 1, d - v);
            if (rank < block) {
                m[pos] = v;
                d -= v;
                break;
            }
            rank -= block;
        }
    }
    if (nvars > 0) m[nvars - 1] = d;
    return m;
}

}  // namespace jetcomplex

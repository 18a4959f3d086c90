#include "jetcomplex/wfamily.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetcomplex {

int IndexSetI::b(int j) const {
    for (const auto& [j0, jj] : pairs)
        if (jj == j) return j0;
    throw std::invalid_argument("IndexSetI::b: column index not paired");
}

std::vector<int> IndexSetI::i0_sorted() const {
    std::vector<int> v;
    for (const auto& [j0, j] : pairs) v.push_back(j0);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> IndexSetI::i1_sorted() const {
    std::vector<int> v;
    for (const auto& [j0, j] : pairs) v.push_back(j);
    std::sort(v.begin(), v.end());
    return v;
}

IndexSetI IndexSetI::make(int n, int m, std::vector<std::pair<int, int>> pairs) {
    if (n < 1 || m < 1) throw std::invalid_argument("IndexSetI: n, m >= 1 required");
    for (const auto& [j0, j] : pairs) {
        if (j0 < 1 || j0 > n) throw std::invalid_argument("IndexSetI: row index out of [1,n]");
        if (j < 1 || j > m) throw std::invalid_argument("IndexSetI: column index out of [1,m]");
    }
    for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t bb = a + 1; bb < pairs.size(); ++bb) {
            if (pairs[a].second == pairs[bb].second)
                throw std::invalid_argument(
                    "IndexSetI: pairs (" + std::to_string(pairs[a].first) + "," +
                    std::to_string(pairs[a].second) + ") and (" + std::to_string(pairs[bb].first) +
                    "," + std::to_string(pairs[bb].second) +
                    ") share a column index; subtracting the two equations expresses one "
                    "right-hand side through the other, so the second equation is redundant");
            if (pairs[a].first == pairs[bb].first)
                throw std::invalid_argument(
                    "IndexSetI: pairs (" + std::to_string(pairs[a].first) + "," +
                    std::to_string(pairs[a].second) + ") and (" + std::to_string(pairs[bb].first) +
                    "," + std::to_string(pairs[bb].second) +
                    ") share a row index; subtracting the two equations expresses one "
                    "right-hand side through the other, so the second equation is redundant");
        }
    IndexSetI s;
    s.n = n;
    s.m = m;
    s.pairs = std::move(pairs);
    return s;
}

std::vector<std::string> WSystem::variable_names() const {
    std::vector<std::string> names;
    for (int j0 = 1; j0 <= index_set.n; ++j0) names.push_back("z" + std::to_string(j0) + "0");
    for (int j = 1; j <= index_set.m; ++j) names.push_back("z" + std::to_string(j) + "1");
    return names;
}

std::vector<std::string> WSystem::equation_names() const {
    std::vector<std::string> names;
    for (const auto& [j0, j] : index_set.pairs)
        names.push_back("rhs" + std::to_string(j0) + "_" + std::to_string(j));
    return names;
}

WSystem make_wsystem(int n, int m, const std::vector<std::pair<int, int>>& pairs) {
    IndexSetI s = IndexSetI::make(n, m, pairs);
    PDESystem sys(s.t(), 2, n + m);
    for (int e = 0; e < s.t(); ++e) {
        auto [j0, j] = s.pairs[static_cast<size_t>(e)];
        sys.set_coeff(e, 0, j0 - 1, Rational(1));
        sys.set_coeff(e, 1, n + j - 1, Rational(1));
    }
    if (s.t() > 0) sys.validate();
    WSystem w{std::move(sys), std::move(s)};
    return w;
}

long wdim_formula(int n, int m, int t, int q) {
    if (t < 1 || t > std::min(n, m) || q < 0)
        throw std::invalid_argument("wdim_formula: need 1 <= t <= min(n,m) and q >= 0");
    long mm = m + n - t;
    Integer v = Integer(t) * choose(q + mm, mm) + 2 * choose(q + mm, mm - 1);
    return v.get_si();
}

std::vector<WTorsionCondition> wtorsion_conditions(const WSystem& w) {
    std::vector<WTorsionCondition> out;
    std::vector<int> cols = w.index_set.i1_sorted();
    int t = w.index_set.t();
    int nv = w.base.variables();

    // equation index by paired column
    auto eq_of = [&](int j) {
        for (int e = 0; e < t; ++e)
            if (w.index_set.pairs[static_cast<size_t>(e)].second == j) return e;
        throw std::logic_error("wtorsion_conditions: unpaired column");
    };
    auto xi0 = [&](int j0) { return Poly::variable(nv, w.var_block0(j0)); };
    auto xi1 = [&](int j) { return Poly::variable(nv, w.var_block1(j)); };

    for (size_t a = 0; a < cols.size(); ++a)
        for (size_t bb = a + 1; bb < cols.size(); ++bb)
            for (size_t c = bb + 1; c < cols.size(); ++c) {
                int j = cols[a], jp = cols[bb], k = cols[c];
                int j0 = w.index_set.b(j), jp0 = w.index_set.b(jp), k0 = w.index_set.b(k);
                WTorsionCondition cond;
                cond.j = j;
                cond.jp = jp;
                cond.k = k;
                cond.row.assign(static_cast<size_t>(t), Poly(nv));
                // (rhs^j_{k0 0, jp 1} - rhs^j_{jp0 0, k 1})
                cond.row[static_cast<size_t>(eq_of(j))] = xi0(k0) * xi1(jp) - xi0(jp0) * xi1(k);
                // + (rhs^jp_{j0 0, k 1} - rhs^jp_{k0 0, j 1})
                cond.row[static_cast<size_t>(eq_of(jp))] = xi0(j0) * xi1(k) - xi0(k0) * xi1(j);
                // + (rhs^k_{jp0 0, j 1} - rhs^k_{j0 0, jp 1})
                cond.row[static_cast<size_t>(eq_of(k))] = xi0(jp0) * xi1(j) - xi0(j0) * xi1(jp);
                out.push_back(std::move(cond));
            }
    return out;
}

SymbolMatrix wtorsion_symbol(const WSystem& w) {
    auto conds = wtorsion_conditions(w);
    int t = w.index_set.t();
    SymbolMatrix s(static_cast<int>(conds.size()), t, w.base.variables(),
                   std::vector<int>(static_cast<size_t>(t), 1),
                   std::vector<int>(conds.size(), 3));
    for (size_t r = 0; r < conds.size(); ++r)
        for (int c = 0; c < t; ++c) s.set_entry(static_cast<int>(r), c, conds[r].row[static_cast<size_t>(c)]);
    return s;
}

PDESystem cf_system() {
    WSystem w = make_wsystem(4, 4, {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    PDESystem sys = w.base;
    sys.set_label("cauchy-fueter");
    return sys;
}

}  // namespace jetcomplex

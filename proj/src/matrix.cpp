#include "jetcomplex/matrix.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>

namespace jetcomplex {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimensions");
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[static_cast<size_t>(i)].emplace_back(i, Rational(1));
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& dense) {
    int r = static_cast<int>(dense.size());
    int c = r == 0 ? 0 : static_cast<int>(dense[0].size());
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(dense[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("ExactMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) {
            const Rational& v = dense[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (!v.is_zero()) m.data_[static_cast<size_t>(i)].emplace_back(j, v);
        }
    }
    return m;
}

long ExactMatrix::nnz() const {
    long n = 0;
    for (const auto& row : data_) n += static_cast<long>(row.size());
    return n;
}

void ExactMatrix::add(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("ExactMatrix::add: index");
    if (v.is_zero()) return;
    auto& row = data_[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

void ExactMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("ExactMatrix::set: index");
    auto& row = data_[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, {c, v});
    }
}

Rational ExactMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("ExactMatrix::get: index");
    const auto& row = data_[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[static_cast<size_t>(r)])
            t.data_[static_cast<size_t>(c)].emplace_back(r, v);
    return t;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("ExactMatrix::vstack: column mismatch");
    ExactMatrix m(a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) m.data_[static_cast<size_t>(r)] = a.data_[static_cast<size_t>(r)];
    for (int r = 0; r < b.rows(); ++r)
        m.data_[static_cast<size_t>(a.rows() + r)] = b.data_[static_cast<size_t>(r)];
    return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

// ----------------------------------------------------------------------------
// Elimination engine. One code path for Q (rows scaled to coprime integers,
// cross-multiplication with gcd scaling) and for F_p (uint64 arithmetic).
// Pivots are selected Markowitz-style from a lazy min-heap of short rows.
// ----------------------------------------------------------------------------

namespace {

struct ZField {
    using Value = Integer;
    static bool is_zero(const Value& v) { return sgn(v) == 0; }
    // alpha*target_entry + beta*pivot_entry cancels the pivot column.
    void multipliers(const Value& pivval, const Value& tval, Value& alpha, Value& beta) const {
        Value g;
        mpz_gcd(g.get_mpz_t(), pivval.get_mpz_t(), tval.get_mpz_t());
        alpha = pivval / g;
        beta = -(tval / g);
    }
    Value combine(const Value& alpha, const Value& a, const Value& beta, const Value& b) const {
        return alpha * a + beta * b;
    }
    Value scale(const Value& alpha, const Value& a) const { return alpha * a; }
    // Strip the content so entries stay reduced.
    void normalize(std::vector<std::pair<int, Value>>& row) const {
        if (row.empty()) return;
        Value g = abs(row[0].second);
        for (size_t i = 1; i < row.size() && g != 1; ++i)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[i].second.get_mpz_t());
        if (g > 1)
            for (auto& e : row) e.second /= g;
    }
    // Fewer limbs preferred as pivot values.
    static long weight(const Value& v) { return static_cast<long>(mpz_size(v.get_mpz_t())); }
};

struct FpField {
    using Value = std::uint64_t;
    std::uint64_t p;
    static bool is_zero(Value v) { return v == 0; }
    Value mul(Value a, Value b) const {
        return static_cast<Value>(static_cast<unsigned __int128>(a) * b % p);
    }
    Value pow(Value a, Value e) const {
        Value r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Value inv(Value a) const { return pow(a, p - 2); }
    void multipliers(Value pivval, Value tval, Value& alpha, Value& beta) const {
        alpha = 1;
        beta = p - mul(tval, inv(pivval));
    }
    Value combine(Value alpha, Value a, Value beta, Value b) const {
        (void)alpha;
        return (a + static_cast<Value>(static_cast<unsigned __int128>(beta) * b % p)) % p;
    }
    Value scale(Value beta, Value b) const { return mul(beta, b); }
    void normalize(std::vector<std::pair<int, Value>>&) const {}
    static long weight(Value) { return 0; }
};

template <class F>
class Elimination {
  public:
    using Value = typename F::Value;
    using RowVec = std::vector<std::pair<int, Value>>;

    Elimination(F field, int nrows, int ncols)
        : f_(std::move(field)),
          nrows_(nrows),
          ncols_(ncols),
          rows_(static_cast<size_t>(nrows)),
          active_(static_cast<size_t>(nrows), 0),
          col_count_(static_cast<size_t>(ncols), 0),
          col_rows_(static_cast<size_t>(ncols)) {}

    void set_row(int r, RowVec entries) {
        rows_[static_cast<size_t>(r)] = std::move(entries);
        auto& row = rows_[static_cast<size_t>(r)];
        if (row.empty()) return;
        active_[static_cast<size_t>(r)] = 1;
        for (const auto& [c, v] : row) {
            ++col_count_[static_cast<size_t>(c)];
            col_rows_[static_cast<size_t>(c)].push_back(r);
        }
        heap_.push({static_cast<long>(row.size()), r});
    }

    void forward() {
        while (true) {
            auto [r, c] = pick_pivot();
            if (r < 0) break;
            retire(r);
            // Copy: eliminating from col_rows_[c] appends to it.
            std::vector<int> victims = col_rows_[static_cast<size_t>(c)];
            for (int s : victims) {
                if (s == r || !active_[static_cast<size_t>(s)]) continue;
                if (!row_has(s, c)) continue;  // stale registration
                combine_rows(s, r, c, /*track_counts=*/true);
                auto& row = rows_[static_cast<size_t>(s)];
                if (row.empty())
                    active_[static_cast<size_t>(s)] = 0;
                else
                    heap_.push({static_cast<long>(row.size()), s});
            }
            pivots_.emplace_back(r, c);
        }
    }

    // Clears every pivot column from the other pivot rows; afterwards each
    // pivot row meets pivot columns only at its own.
    void back_substitute() {
        std::vector<long> pivot_index(static_cast<size_t>(nrows_), -1);
        for (size_t i = 0; i < pivots_.size(); ++i)
            pivot_index[static_cast<size_t>(pivots_[i].first)] = static_cast<long>(i);
        for (size_t j = pivots_.size(); j-- > 0;) {
            auto [rj, cj] = pivots_[j];
            std::vector<int> holders = col_rows_[static_cast<size_t>(cj)];
            for (int s : holders) {
                long i = pivot_index[static_cast<size_t>(s)];
                if (s == rj || i < 0 || i > static_cast<long>(j)) continue;  // only earlier pivot rows
                if (!row_has(s, cj)) continue;                               // stale registration
                combine_rows(s, rj, cj, /*track_counts=*/false);
            }
        }
    }

    long rank() const { return static_cast<long>(pivots_.size()); }
    const std::vector<std::pair<int, int>>& pivots() const { return pivots_; }
    const RowVec& row(int r) const { return rows_[static_cast<size_t>(r)]; }

  private:
    bool row_has(int r, int c) const {
        const auto& row = rows_[static_cast<size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return it != row.end() && it->first == c;
    }

    const Value& value_at(int r, int c) const {
        const auto& row = rows_[static_cast<size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return it->second;
    }

    void retire(int r) {
        active_[static_cast<size_t>(r)] = 0;
        for (const auto& [c, v] : rows_[static_cast<size_t>(r)]) --col_count_[static_cast<size_t>(c)];
    }

    // Best (row, col) by Markowitz cost among a few shortest active rows.
    std::pair<int, int> pick_pivot() {
        constexpr int kCandidates = 8;
        std::vector<std::pair<long, int>> pool;
        while (static_cast<int>(pool.size()) < kCandidates && !heap_.empty()) {
            auto [len, r] = heap_.top();
            heap_.pop();
            if (!active_[static_cast<size_t>(r)]) continue;
            if (static_cast<long>(rows_[static_cast<size_t>(r)].size()) != len) continue;  // stale
            pool.push_back({len, r});
            if (len == 1) break;  // cost 0, cannot be beaten
        }
        if (pool.empty()) return {-1, -1};
        long best_cost = -1, best_weight = 0;
        int best_row = -1, best_col = -1;
        for (auto [len, r] : pool) {
            const auto& row = rows_[static_cast<size_t>(r)];
            for (const auto& [c, v] : row) {
                long cost = (len - 1) * (col_count_[static_cast<size_t>(c)] - 1);
                long w = F::weight(v);
                if (best_row < 0 || cost < best_cost ||
                    (cost == best_cost && (w < best_weight ||
                                           (w == best_weight && (c < best_col ||
                                                                 (c == best_col && r < best_row)))))) {
                    best_cost = cost;
                    best_weight = w;
                    best_row = r;
                    best_col = c;
                }
            }
        }
        for (auto [len, r] : pool)
            if (r != best_row) heap_.push({len, r});
        return {best_row, best_col};
    }

    void combine_rows(int target, int pivrow, int c, bool track_counts) {
        const Value& pivval = value_at(pivrow, c);
        const Value& tval = value_at(target, c);
        Value alpha, beta;
        f_.multipliers(pivval, tval, alpha, beta);

        const auto& prow = rows_[static_cast<size_t>(pivrow)];
        auto& trow = rows_[static_cast<size_t>(target)];
        RowVec out;
        out.reserve(trow.size() + prow.size());
        size_t i = 0, j = 0;
        while (i < trow.size() || j < prow.size()) {
            int tc = i < trow.size() ? trow[i].first : ncols_;
            int pc = j < prow.size() ? prow[j].first : ncols_;
            if (tc < pc) {
                Value v = f_.scale(alpha, trow[i].second);
                if (!F::is_zero(v)) out.emplace_back(tc, std::move(v));
                ++i;
            } else if (pc < tc) {
                Value v = f_.scale(beta, prow[j].second);
                if (!F::is_zero(v)) {
                    if (track_counts) ++col_count_[static_cast<size_t>(pc)];
                    col_rows_[static_cast<size_t>(pc)].push_back(target);
                    out.emplace_back(pc, std::move(v));
                }
                ++j;
            } else {
                Value v = f_.combine(alpha, trow[i].second, beta, prow[j].second);
                if (F::is_zero(v)) {
                    if (track_counts) --col_count_[static_cast<size_t>(tc)];
                } else {
                    out.emplace_back(tc, std::move(v));
                }
                ++i;
                ++j;
            }
        }
        f_.normalize(out);
        trow = std::move(out);
    }

    F f_;
    int nrows_, ncols_;
    std::vector<RowVec> rows_;
    std::vector<char> active_;
    std::vector<int> col_count_;
    std::vector<std::vector<int>> col_rows_;
    std::vector<std::pair<int, int>> pivots_;
    std::priority_queue<std::pair<long, int>, std::vector<std::pair<long, int>>,
                        std::greater<std::pair<long, int>>>
        heap_;
};

// Scales a rational row to coprime integers; the row span is unchanged.
std::vector<std::pair<int, Integer>> integerized(const ExactMatrix::Row& row) {
    Integer lcm = 1;
    for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
    std::vector<std::pair<int, Integer>> out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) out.emplace_back(c, v.num() * (lcm / v.den()));
    Integer g = 0;
    for (const auto& [c, v] : out) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : out) v /= g;
    return out;
}

Elimination<ZField> forward_eliminate_q(const ExactMatrix& m) {
    Elimination<ZField> elim(ZField{}, m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) elim.set_row(r, integerized(m.row_entries(r)));
    elim.forward();
    return elim;
}

// Textbook Gauss-Jordan with leftmost pivots on sparse rational rows.
// The Markowitz pass above picks pivots for sparsity, so its reduced rows
// span the row space but are not the canonical RREF; this pass is.
void canonical_reduce(std::vector<ExactMatrix::Row>& rows, std::vector<int>& pivot_cols) {
    auto find_col = [](const ExactMatrix::Row& row, int c) {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return it != row.end() && it->first == c ? it : row.end();
    };
    auto axpy = [](const ExactMatrix::Row& a, const Rational& coef, const ExactMatrix::Row& b) {
        ExactMatrix::Row out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            int ac = i < a.size() ? a[i].first : INT32_MAX;
            int bc = j < b.size() ? b[j].first : INT32_MAX;
            if (ac < bc) {
                out.push_back(a[i++]);
            } else if (bc < ac) {
                out.emplace_back(bc, coef * b[j++].second);
            } else {
                Rational v = a[i++].second + coef * b[j++].second;
                if (!v.is_zero()) out.emplace_back(ac, v);
            }
        }
        return out;
    };

    size_t used = 0;
    size_t n = rows.size();
    std::vector<int> lead(n);
    while (used < n) {
        int best = -1;
        size_t best_i = 0;
        for (size_t i = used; i < n; ++i) {
            if (rows[i].empty()) continue;
            if (best < 0 || rows[i][0].first < best) {
                best = rows[i][0].first;
                best_i = i;
            }
        }
        if (best < 0) break;
        std::swap(rows[used], rows[best_i]);
        Rational inv = Rational(1) / rows[used][0].second;
        for (auto& e : rows[used]) e.second *= inv;
        for (size_t j = 0; j < n; ++j) {
            if (j == used) continue;
            auto it = find_col(rows[j], best);
            if (it == rows[j].end()) continue;
            rows[j] = axpy(rows[j], -it->second, rows[used]);
        }
        pivot_cols.push_back(best);
        ++used;
    }
    rows.resize(used);
}

}  // namespace

long rank(const ExactMatrix& m) { return forward_eliminate_q(m).rank(); }

RrefResult rref(const ExactMatrix& m) {
    auto elim = forward_eliminate_q(m);
    elim.back_substitute();

    std::vector<ExactMatrix::Row> rows;
    rows.reserve(elim.pivots().size());
    for (const auto& [r, c] : elim.pivots()) {
        ExactMatrix::Row row;
        row.reserve(elim.row(r).size());
        for (const auto& [cc, vv] : elim.row(r)) row.emplace_back(cc, Rational(vv));
        rows.push_back(std::move(row));
    }

    RrefResult res;
    canonical_reduce(rows, res.pivot_cols);
    res.rank = static_cast<long>(res.pivot_cols.size());
    res.reduced = ExactMatrix(m.rows(), m.cols());
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i]) res.reduced.set(static_cast<int>(i), c, v);
    return res;
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<char> is_pivot(static_cast<size_t>(m.cols()), 0);
    for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    std::vector<long> free_index(static_cast<size_t>(m.cols()), -1);
    for (size_t i = 0; i < free_cols.size(); ++i)
        free_index[static_cast<size_t>(free_cols[i])] = static_cast<long>(i);

    ExactMatrix k(m.cols(), static_cast<int>(free_cols.size()));
    for (size_t i = 0; i < free_cols.size(); ++i) k.set(free_cols[i], static_cast<int>(i), Rational(1));
    for (long i = 0; i < r.rank; ++i) {
        int pc = r.pivot_cols[static_cast<size_t>(i)];
        for (const auto& [c, v] : r.reduced.row_entries(static_cast<int>(i))) {
            long fi = free_index[static_cast<size_t>(c)];
            if (fi >= 0) k.set(pc, static_cast<int>(fi), -v);
        }
    }
    return k;
}

bool is_invertible(const ExactMatrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<std::vector<Rational>> solve(const ExactMatrix& a, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    ExactMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (const auto& [c, v] : a.row_entries(r)) aug.set(r, c, v);
        aug.set(r, a.cols(), b[static_cast<size_t>(r)]);
    }
    RrefResult rr = rref(aug);
    for (int c : rr.pivot_cols)
        if (c == a.cols()) return std::nullopt;  // pivot in the rhs column: inconsistent
    std::vector<Rational> x(static_cast<size_t>(a.cols()), Rational(0));
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
        x[static_cast<size_t>(rr.pivot_cols[i])] = rr.reduced.get(static_cast<int>(i), a.cols());
    return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    int n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (const auto& [c, v] : m.row_entries(r)) aug.set(r, c, v);
        aug.set(r, n + r, Rational(1));
    }
    RrefResult rr = rref(aug);
    for (int i = 0; i < n; ++i)
        if (i >= static_cast<int>(rr.pivot_cols.size()) || rr.pivot_cols[static_cast<size_t>(i)] != i)
            throw std::invalid_argument("inverse: singular matrix");
    ExactMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (const auto& [c, v] : rr.reduced.row_entries(r))
            if (c >= n) inv.set(r, c - n, v);
    return inv;
}

// ----------------------------------------------------------------------------
// Modular rank
// ----------------------------------------------------------------------------

namespace {

bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto mulm = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto powm = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulm(r, a);
            a = mulm(a, a);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powm(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulm(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi - 1);
    while (true) {
        std::uint64_t c = dist(rng) | 1ull;
        if (c >= lo && miller_rabin(c)) return c;
    }
}

// Reduces m mod p; returns false if an entry denominator vanishes mod p.
bool reduce_mod(const ExactMatrix& m, std::uint64_t p, std::vector<std::vector<std::pair<int, std::uint64_t>>>& out) {
    FpField f{p};
    out.assign(static_cast<size_t>(m.rows()), {});
    for (int r = 0; r < m.rows(); ++r) {
        auto& row = out[static_cast<size_t>(r)];
        row.reserve(m.row_entries(r).size());
        for (const auto& [c, v] : m.row_entries(r)) {
            std::uint64_t den = mpz_fdiv_ui(v.den().get_mpz_t(), p);
            if (den == 0) return false;
            std::uint64_t num = mpz_fdiv_ui(v.num().get_mpz_t(), p);
            std::uint64_t e = f.mul(num, f.inv(den));
            if (e != 0) row.emplace_back(c, e);
        }
    }
    return true;
}

long rank_mod_prime(const ExactMatrix& m, std::uint64_t p, bool& valid) {
    std::vector<std::vector<std::pair<int, std::uint64_t>>> rows;
    valid = reduce_mod(m, p, rows);
    if (!valid) return 0;
    Elimination<FpField> elim(FpField{p}, m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) elim.set_row(r, std::move(rows[static_cast<size_t>(r)]));
    elim.forward();
    return elim.rank();
}

}  // namespace

ModularRankReport rank_modp(const ExactMatrix& m, const ModularRankOptions& opts) {
    if (opts.min_prime <= (1ull << 20)) throw std::invalid_argument("rank_modp: min_prime must exceed 2^20");
    if (opts.min_prime >= (1ull << 62)) throw std::invalid_argument("rank_modp: min_prime too large");
    if (opts.trials < 1) throw std::invalid_argument("rank_modp: trials must be >= 1");

    std::mt19937_64 rng(opts.seed);
    ModularRankReport rep;
    auto run_trial = [&]() {
        for (int attempt = 0; attempt < opts.max_prime_attempts; ++attempt) {
            std::uint64_t p = random_prime(rng, opts.min_prime, 2 * opts.min_prime);
            bool valid = false;
            long r = rank_mod_prime(m, p, valid);
            if (valid) {
                rep.primes.push_back(p);
                return r;
            }
        }
        throw std::runtime_error("rank_modp: no usable prime found (entry denominators kept vanishing)");
    };

    std::vector<long> ranks;
    for (int t = 0; t < opts.trials; ++t) ranks.push_back(run_trial());
    bool agree = std::all_of(ranks.begin(), ranks.end(), [&](long r) { return r == ranks[0]; });
    if (!agree) {
        rep.escalated = true;
        ranks.push_back(run_trial());
    }
    rep.rank = *std::max_element(ranks.begin(), ranks.end());
    return rep;
}

long rank_modp(const ExactMatrix& m, std::uint64_t min_prime, int trials, std::uint64_t seed) {
    ModularRankOptions opts;
    opts.min_prime = min_prime;
    opts.trials = trials;
    opts.seed = seed;
    return rank_modp(m, opts).rank;
}

}  // namespace jetcomplex

#include "jetcomplex/binomial.hpp"

#include <mutex>
#include <stdexcept>

namespace jetcomplex {

BinomialTable::BinomialTable(int initial_rows) : zero_(0) {
    rows_.reserve(static_cast<size_t>(initial_rows));
    extend(initial_rows - 1);
}

void BinomialTable::extend(long b) {
    while (static_cast<long>(rows_.size()) <= b) {
        size_t r = rows_.size();
        std::vector<Integer> row(r + 1);
        row[0] = 1;
        row[r] = 1;
        for (size_t a = 1; a < r; ++a) row[a] = rows_[r - 1][a - 1] + rows_[r - 1][a];
        rows_.push_back(std::move(row));
    }
}

const Integer& BinomialTable::get(long b, long a) {
    if (a < 0 || b < 0 || a > b) return zero_;
    extend(b);
    return rows_[static_cast<size_t>(b)][static_cast<size_t>(a)];
}

Integer choose(long b, long a) {
    static BinomialTable table;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return table.get(b, a);
}

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

bool lemma23_check(int identity_id, const std::vector<long>& params) {
    for (long p : params) require(p >= 0, "lemma23_check: parameters must be non-negative");
    Integer lhs = 0, rhs = 0;
    switch (identity_id) {
        case 1: {
            require(params.size() == 2, "lemma23_check: identity 1 takes (a, q)");
            long a = params[0], q = params[1];
            for (long s = 0; s <= q; ++s) lhs += choose(a + s, a);
            rhs = choose(a + q + 1, a + 1);
            break;
        }
        case 2: {
            require(params.size() == 3, "lemma23_check: identity 2 takes (a, p, q)");
            long a = params[0], p = params[1], q = params[2];
            require(p <= q, "lemma23_check: identity 2 requires p <= q");
            for (long s = p; s <= q; ++s) lhs += choose(a + s, a);
            rhs = choose(a + q + 1, a + 1) - choose(a + p, a + 1);
            break;
        }
        case 3: {
            require(params.size() == 3, "lemma23_check: identity 3 takes (a, b, q)");
            long a = params[0], b = params[1], q = params[2];
            for (long s = 0; s <= q; ++s) lhs += choose(a + s, b);
            rhs = choose(a + q + 1, b + 1) - choose(a, b + 1);
            break;
        }
        case 4: {
            require(params.size() == 2, "lemma23_check: identity 4 takes (a, q)");
            long a = params[0], q = params[1];
            for (long s = 0; s <= q; ++s) lhs += Integer(s + 1) * choose(a + s, a);
            rhs = Integer(a + 1) * choose(a + q + 1, a + 2) + choose(a + q + 1, a + 1);
            break;
        }
        case 5: {
            require(params.size() == 3, "lemma23_check: identity 5 takes (a, b, q)");
            long a = params[0], b = params[1], q = params[2];
            require(a >= b + 2, "lemma23_check: identity 5 requires a >= b+2");
            for (long s = 0; s <= q; ++s) lhs += Integer(s + 1) * choose(a + s, b);
            rhs = Integer(b + 1) * (choose(a + q + 1, b + 2) - choose(a, b + 2)) +
                  Integer(b - a + 1) * (choose(a + q + 1, b + 1) - choose(a, b + 1));
            break;
        }
        case 6: {
            require(params.size() == 3, "lemma23_check: identity 6 takes (a, b, d)");
            long a = params[0], b = params[1], d = params[2];
            require(d <= b, "lemma23_check: identity 6 requires d <= b");
            for (long s = 0; s <= d; ++s) lhs += choose(a + s, a) * choose(b - s, b - d);
            rhs = choose(a + b + 1, a + b + 1 - d);
            break;
        }
        default:
            throw std::invalid_argument("lemma23_check: identity_id must be 1..6");
    }
    return lhs == rhs;
}

}  // namespace jetcomplex

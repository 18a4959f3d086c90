#include "jetcomplex/hilbert.hpp"

#include "jetcomplex/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace jetcomplex {

std::vector<Rational> RationalSeries::expand(long nterms) const {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(nterms));
    Rational d0(denominator.empty() ? Integer(1) : denominator[0]);
    for (long k = 0; k < nterms; ++k) {
        Rational acc = k < static_cast<long>(numerator.size()) ? Rational(numerator[static_cast<size_t>(k)])
                                                               : Rational(0);
        for (size_t i = 1; i < denominator.size() && static_cast<long>(i) <= k; ++i)
            acc -= Rational(denominator[i]) * out[static_cast<size_t>(k - static_cast<long>(i))];
        out.push_back(acc / d0);
    }
    return out;
}

namespace {

// divides p by (1-z) when p(1) == 0; returns whether it divided
bool divide_unit_pole(std::vector<Integer>& p) {
    if (p.empty()) return false;
    Integer at1 = 0;
    for (const auto& c : p) at1 += c;
    if (at1 != 0) return false;
    // p(z) = (1-z) q(z): q_0 = p_0, q_k = p_k + q_{k-1}
    std::vector<Integer> q(p.size() > 0 ? p.size() - 1 : 0);
    Integer carry = 0;
    for (size_t k = 0; k + 1 < p.size(); ++k) {
        carry = p[k] + carry;
        q[k] = carry;
    }
    p = std::move(q);
    return true;
}

std::string poly_str(const std::vector<Integer>& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        Integer a = p[k];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || k == 0) os << a.get_str();
        if (k >= 1) {
            if (a != 1) os << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace

int RationalSeries::unit_pole_order() const {
    std::vector<Integer> d = denominator;
    int k = 0;
    while (divide_unit_pole(d)) ++k;
    return k;
}

std::vector<Integer> RationalSeries::denominator_rest() const {
    std::vector<Integer> d = denominator;
    while (divide_unit_pole(d)) {
    }
    return d;
}

std::string RationalSeries::str() const {
    std::ostringstream os;
    int pole = unit_pole_order();
    std::vector<Integer> rest = denominator_rest();
    bool den_trivial = pole == 0 && rest.size() == 1 && rest[0] == 1;
    if (den_trivial) return poly_str(numerator);
    os << "(" << poly_str(numerator) << ") / (";
    bool need_star = false;
    if (pole > 0) {
        os << "(1-z)";
        if (pole > 1) os << "^" << pole;
        need_star = true;
    }
    if (!(rest.size() == 1 && rest[0] == 1)) {
        if (need_star) os << " * ";
        os << "(" << poly_str(rest) << ")";
    }
    os << ")";
    return os.str();
}

RationalSeries hilbert_series(const std::vector<long>& dims, int max_den_degree) {
    long t = static_cast<long>(dims.size());
    if (max_den_degree < 0) throw std::invalid_argument("hilbert_series: negative degree bound");
    if (t < 2) throw std::invalid_argument("hilbert_series: need at least 2 terms");

    auto a = [&](long k) { return k >= 0 && k < t ? Rational(dims[static_cast<size_t>(k)]) : Rational(0); };

    bool all_zero = true;
    for (long d : dims) all_zero = all_zero && d == 0;
    if (all_zero) {
        RationalSeries zero;
        zero.denominator = {Integer(1)};
        zero.verified_terms = t;
        return zero;
    }

    // Minimal-recurrence search, proper fits (deg num < deg den) first with
    // the denominator order ascending; improper fits (transient head longer
    // than the recurrence) only as a fallback, by combined degree. Every
    // candidate keeps its fit equations k = s+1..t-1 nonempty.
    std::vector<std::pair<int, long>> order;
    for (int r = 0; r <= max_den_degree; ++r)
        for (long s = 0; s < r && s <= t - 2; ++s) order.push_back({r, s});
    for (long total = 0; total <= t - 2 + max_den_degree; ++total)
        for (int r = 0; r <= std::min<long>(total, max_den_degree); ++r) {
            long s = total - r;
            if (s >= r && s <= t - 2) order.push_back({r, s});
        }
    for (auto [r, s] : order) {
        {
            // d_0 = 1; solve sum_{i=0..r} d_i a_{k-i} = 0 for k = s+1..t-1
            long neq = t - 1 - s;
            ExactMatrix sys(static_cast<int>(neq), r);
            std::vector<Rational> rhs;
            for (long k = s + 1; k <= t - 1; ++k) {
                for (int i = 1; i <= r; ++i)
                    if (k - i >= 0) sys.set(static_cast<int>(k - s - 1), i - 1, a(k - i));
                rhs.push_back(-a(k));
            }
            auto sol = solve(sys, rhs);
            if (!sol) continue;

            std::vector<Rational> den;
            den.push_back(Rational(1));
            for (int i = 0; i < r; ++i) den.push_back((*sol)[static_cast<size_t>(i)]);
            // numerator = (den * f) truncated to degree s
            std::vector<Rational> num;
            for (long k = 0; k <= s; ++k) {
                Rational acc(0);
                for (long i = 0; i <= std::min<long>(r, k); ++i) acc += den[static_cast<size_t>(i)] * a(k - i);
                num.push_back(acc);
            }
            // scale to integers
            Integer lcm = 1;
            for (const auto& v : den) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
            for (const auto& v : num) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
            RationalSeries series;
            for (const auto& v : den) series.denominator.push_back(v.num() * (lcm / v.den()));
            for (const auto& v : num) series.numerator.push_back(v.num() * (lcm / v.den()));
            // normalize: denominator content 1, positive constant term
            Integer g = 0;
            for (const auto& c : series.denominator) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            for (const auto& c : series.numerator) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g > 1) {
                for (auto& c : series.denominator) c /= g;
                for (auto& c : series.numerator) c /= g;
            }
            if (series.denominator[0] < 0) {
                for (auto& c : series.denominator) c = -c;
                for (auto& c : series.numerator) c = -c;
            }
            while (!series.numerator.empty() && series.numerator.back() == 0) series.numerator.pop_back();
            while (series.denominator.size() > 1 && series.denominator.back() == 0)
                series.denominator.pop_back();

            // round trip: every supplied term must come back exactly
            std::vector<Rational> back = series.expand(t);
            bool ok = true;
            for (long k = 0; k < t && ok; ++k) ok = back[static_cast<size_t>(k)] == a(k);
            if (!ok) continue;
            series.verified_terms = t;
            return series;
        }
    }
    throw std::runtime_error("no rational fit within bound");
}

}  // namespace jetcomplex

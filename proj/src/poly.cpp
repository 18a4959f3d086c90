#include "jetcomplex/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace jetcomplex {

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(MultiIndex::zero(nvars), c);
    return p;
}

Poly Poly::variable(int nvars, int j) {
    Poly p(nvars);
    p.add_term(MultiIndex::unit(nvars, j), Rational(1));
    return p;
}

Poly Poly::monomial(int nvars, const MultiIndex& m, const Rational& c) {
    Poly p(nvars);
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const MultiIndex& m, const Rational& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("Poly::add_term: variable count mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Poly::coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d < 0)
            d = m.degree();
        else if (m.degree() != d)
            return false;
    }
    return true;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.nvars_ != nvars_ && !o.is_zero() && !is_zero())
        throw std::invalid_argument("Poly: variable count mismatch");
    if (is_zero() && !o.is_zero()) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.nvars_ != nvars_ && !o.is_zero() && !is_zero())
        throw std::invalid_argument("Poly: variable count mismatch");
    if (is_zero() && !o.is_zero()) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator-(const Poly& a) {
    Poly out(a.nvars_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            MultiIndex m = ma;
            for (int j = 0; j < m.nvars(); ++j) m[j] += mb[j];
            out.add_term(m, ca * cb);
        }
    return out;
}

Poly operator*(const Rational& c, Poly p) {
    if (c.is_zero()) return Poly(p.nvars_);
    for (auto& [m, v] : p.terms_) v *= c;
    return p;
}

Poly Poly::derivative(int j) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m[j];
        if (e == 0) continue;
        out.add_term(m.minus(j), Rational(e) * c);
    }
    return out;
}

Poly Poly::multiply_by_variable(int j) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m.plus(j), c);
    return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("Poly::evaluate: bad point");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int j = 0; j < nvars_; ++j)
            for (int e = 0; e < m[j]; ++e) t *= point[static_cast<size_t>(j)];
        acc += t;
    }
    return acc;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool unit = (a == Rational(1)) && m.degree() > 0;
        if (!unit) os << a.str();
        bool printed_var = false;
        for (int j = 0; j < nvars_; ++j) {
            if (m[j] == 0) continue;
            if (!unit || printed_var) os << "*";
            os << names[static_cast<size_t>(j)];
            if (m[j] > 1) os << "^" << m[j];
            printed_var = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace jetcomplex

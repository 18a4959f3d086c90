#include "jetcomplex/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetcomplex {

PolyForm::PolyForm(int space_dim, int form_degree, int coeff_degree)
    : n_(space_dim), r_(form_degree), s_(coeff_degree) {
    if (space_dim < 1 || form_degree < 0 || form_degree > space_dim || coeff_degree < 0)
        throw std::invalid_argument("PolyForm: bad shape");
}

void PolyForm::add_term(const std::vector<int>& idx, const Poly& coef) {
    if (static_cast<int>(idx.size()) != r_) throw std::invalid_argument("PolyForm: index arity != form degree");
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= n_) throw std::invalid_argument("PolyForm: index out of range");
        if (i + 1 < idx.size() && idx[i] >= idx[i + 1])
            throw std::invalid_argument("PolyForm: indices must be strictly increasing");
    }
    if (coef.is_zero()) return;
    if (coef.nvars() != n_) throw std::invalid_argument("PolyForm: coefficient variable count");
    if (!coef.is_homogeneous() || coef.total_degree() != s_)
        throw std::invalid_argument("PolyForm: coefficient not homogeneous of the declared degree");
    auto [it, inserted] = terms_.try_emplace(idx, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly PolyForm::coefficient(const std::vector<int>& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Poly(n_) : it->second;
}

bool PolyForm::is_zero() const {
    for (const auto& [k, v] : terms_)
        if (!v.is_zero()) return false;
    return true;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
    if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("PolyForm: shape mismatch");
    // the zero form is homogeneous of every coefficient degree
    if (s_ != o.s_) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            s_ = o.s_;
        } else {
            throw std::invalid_argument("PolyForm: coefficient degree mismatch");
        }
    }
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
}

bool PolyForm::equals(const PolyForm& o) const {
    if (n_ != o.n_ || r_ != o.r_) return false;
    if (is_zero() && o.is_zero()) return true;
    return s_ == o.s_ && terms_ == o.terms_;
}

PolyForm operator*(const Rational& c, PolyForm f) {
    if (c.is_zero()) return PolyForm(f.n_, f.r_, f.s_);
    for (auto& [k, v] : f.terms_) v = c * v;
    return f;
}

PolyForm ext_d(const PolyForm& f) {
    int n = f.space_dim(), r = f.form_degree(), s = f.coeff_degree();
    if (r + 1 > n) return PolyForm(n, std::min(r + 1, n), 0);  // top degree: d vanishes
    PolyForm out(n, r + 1, std::max(s - 1, 0));
    if (s == 0) return out;
    for (const auto& [idx, coef] : f.terms()) {
        for (int l = 0; l < n; ++l) {
            Poly dl = coef.derivative(l);
            if (dl.is_zero()) continue;
            // wedge dX^l into dX^idx
            if (std::find(idx.begin(), idx.end(), l) != idx.end()) continue;
            std::vector<int> nidx = idx;
            auto pos = std::lower_bound(nidx.begin(), nidx.end(), l);
            int sign = static_cast<int>(pos - nidx.begin()) % 2 == 0 ? 1 : -1;
            nidx.insert(pos, l);
            out.add_term(nidx, Rational(sign) * dl);
        }
    }
    return out;
}

bool is_closed(const PolyForm& f) {
    if (f.form_degree() == f.space_dim()) return true;  // top-degree forms
    return ext_d(f).is_zero();
}

PolyForm euler_contraction(const PolyForm& f) {
    int n = f.space_dim(), r = f.form_degree(), s = f.coeff_degree();
    if (r == 0) return PolyForm(n, 0, s);  // contraction kills 0-forms
    PolyForm out(n, r - 1, s + 1);
    for (const auto& [idx, coef] : f.terms()) {
        for (size_t k = 0; k < idx.size(); ++k) {
            std::vector<int> nidx;
            for (size_t i = 0; i < idx.size(); ++i)
                if (i != k) nidx.push_back(idx[i]);
            int sign = k % 2 == 0 ? 1 : -1;
            out.add_term(nidx, Rational(sign) * coef.multiply_by_variable(idx[k]));
        }
    }
    return out;
}

PolyForm koszul_solve(const PolyForm& f) {
    int r = f.form_degree(), s = f.coeff_degree();
    if (s + r == 0) throw std::invalid_argument("koszul_solve: s + r = 0 has no homotopy");
    if (!is_closed(f)) throw std::invalid_argument("koszul_solve: input form is not closed");
    PolyForm u = Rational(1, s + r) * euler_contraction(f);
    if (!(ext_d(u) == f)) throw std::logic_error("koszul_solve: homotopy identity failed");
    return u;
}

// ---------------------------------------------------------------------------

void SymArray::set(int upper, std::vector<int> group_a, int mid, std::vector<int> group_b,
                   const Rational& v) {
    std::sort(group_a.begin(), group_a.end());
    std::sort(group_b.begin(), group_b.end());
    Key key{upper, std::move(group_a), mid, std::move(group_b)};
    auto [it, inserted] = entries_.try_emplace(std::move(key), v);
    if (!inserted && it->second != v)
        throw std::invalid_argument("SymArray: conflicting values for one symmetry class");
}

Rational SymArray::get(int upper, std::vector<int> group_a, int mid, std::vector<int> group_b) const {
    std::sort(group_a.begin(), group_a.end());
    std::sort(group_b.begin(), group_b.end());
    auto it = entries_.find(Key{upper, std::move(group_a), mid, std::move(group_b)});
    return it == entries_.end() ? Rational(0) : it->second;
}

namespace {

std::vector<int> with(std::vector<int> base, int extra) {
    base.push_back(extra);
    return base;
}

}  // namespace

Lemma31Result lemma31_instance_check(const SymArray& x, const std::vector<int>& j_index,
                                     const std::vector<int>& lambda) {
    constexpr int kDim = 4;
    if (j_index.size() < 3)
        throw std::invalid_argument("lemma31_instance_check: J must have at least 3 entries");
    for (int v : j_index)
        if (v < 0 || v >= kDim) throw std::invalid_argument("lemma31_instance_check: J entry out of range");
    for (int v : lambda)
        if (v < 0 || v >= kDim)
            throw std::invalid_argument("lemma31_instance_check: Lambda entry out of range");

    int jl = j_index.back();
    std::vector<int> j2(j_index.begin(), j_index.end() - 2);   // J''
    std::vector<int> j3(j_index.begin(), j_index.end() - 3);   // J'''

    // hypothesis: for every increasing triple (a,b,c) the two bracket
    // coefficients agree (both forms carry the same monomial X^(Lambda))
    for (int a = 0; a < kDim; ++a)
        for (int b = a + 1; b < kDim; ++b)
            for (int c = b + 1; c < kDim; ++c) {
                Rational lhs = (x.get(c, with(j2, b), a, lambda) - x.get(a, with(j2, b), c, lambda)) -
                               (x.get(c, with(j2, a), b, lambda) - x.get(b, with(j2, a), c, lambda)) +
                               (x.get(a, with(j2, c), b, lambda) - x.get(b, with(j2, c), a, lambda));
                Rational rhs = (x.get(c, j2, b, with(lambda, a)) - x.get(b, j2, c, with(lambda, a))) -
                               (x.get(c, j2, a, with(lambda, b)) - x.get(a, j2, c, with(lambda, b))) +
                               (x.get(b, j2, a, with(lambda, c)) - x.get(a, j2, b, with(lambda, c)));
                if (lhs != rhs) return Lemma31Result::HypothesisNotSatisfied;
            }

    // conclusion form: coefficients bracket * X^(jl Lambda)
    std::vector<int> lam_ext = with(lambda, jl);
    MultiIndex mono = MultiIndex::zero(kDim);
    for (int v : lam_ext) ++mono[v];
    PolyForm conclusion(kDim, 3, static_cast<int>(lam_ext.size()));
    for (int a = 0; a < kDim; ++a)
        for (int b = a + 1; b < kDim; ++b)
            for (int c = b + 1; c < kDim; ++c) {
                Rational coef =
                    (x.get(c, j2, b, lam_ext) - x.get(b, j2, c, lam_ext)) -
                    (x.get(c, with(j3, b), a, lam_ext) - x.get(a, with(j3, b), c, lam_ext)) +
                    (x.get(b, with(j3, c), a, lam_ext) - x.get(a, with(j3, c), b, lam_ext));
                if (!coef.is_zero())
                    conclusion.add_term({a, b, c}, Poly::monomial(kDim, mono, coef));
            }
    return is_closed(conclusion) ? Lemma31Result::ConclusionClosed : Lemma31Result::ConclusionNotClosed;
}

// ---------------------------------------------------------------------------

namespace {

// sign of the permutation sorting idx; 0 on repeats
int sort_sign(std::array<int, 3>& idx) {
    int sign = 1;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            if (idx[a] == idx[b]) return 0;
            if (idx[a] > idx[b]) {
                std::swap(idx[a], idx[b]);
                sign = -sign;
            }
        }
    return sign;
}

}  // namespace

std::map<std::array<int, 4>, Poly> torsion_residuals(const IndexedFamily& phi, int direction) {
    if (direction != 0 && direction != 1)
        throw std::invalid_argument("torsion_residuals: direction must be 0 or 1");
    constexpr int kVars = 8;

    // canonical components from the input, validating antisymmetry
    std::map<std::array<int, 3>, Poly> canon;
    for (const auto& [idx, p] : phi) {
        for (int v : idx)
            if (v < 0 || v > 3) throw std::invalid_argument("torsion_residuals: index out of {0..3}");
        if (!p.is_zero() && p.nvars() != kVars)
            throw std::invalid_argument("torsion_residuals: polynomials must live in 8 variables");
        std::array<int, 3> sorted = idx;
        int sign = sort_sign(sorted);
        if (sign == 0) {
            if (!p.is_zero())
                throw std::invalid_argument("torsion_residuals: repeated indices carry a nonzero entry");
            continue;
        }
        Poly value = sign == 1 ? p : -p;
        auto [it, inserted] = canon.try_emplace(sorted, value);
        if (!inserted && !(it->second == value))
            throw std::invalid_argument("torsion_residuals: family not antisymmetric in (i,theta,k)");
    }
    auto at = [&](int i, int th, int k) -> Poly {
        std::array<int, 3> idx{i, th, k};
        int sign = sort_sign(idx);
        if (sign == 0) return Poly(kVars);
        auto it = canon.find(idx);
        if (it == canon.end()) return Poly(kVars);
        return sign == 1 ? it->second : -it->second;
    };
    auto dvar = [&](int l) { return direction == 0 ? l : 4 + l; };

    auto residual = [&](int i, int th, int k, int l) {
        Poly r = at(i, th, k).derivative(dvar(l));
        r -= at(l, th, k).derivative(dvar(i));
        r += at(l, i, k).derivative(dvar(th));
        r -= at(l, i, th).derivative(dvar(k));
        return r;
    };

    // full table, antisymmetry asserted exactly
    std::map<std::array<int, 4>, Poly> full;
    for (int i = 0; i < 4; ++i)
        for (int th = 0; th < 4; ++th)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) full[{i, th, k, l}] = residual(i, th, k, l);
    for (const auto& [idx, p] : full) {
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                std::array<int, 4> swapped = idx;
                std::swap(swapped[static_cast<size_t>(a)], swapped[static_cast<size_t>(b)]);
                if (!((full.at(swapped) + p).is_zero()))
                    throw std::logic_error("torsion_residuals: residual family not antisymmetric");
            }
    }

    std::map<std::array<int, 4>, Poly> out;
    for (const auto& [idx, p] : full)
        if (idx[0] < idx[1] && idx[1] < idx[2] && idx[2] < idx[3]) out.emplace(idx, p);
    return out;
}

}  // namespace jetcomplex

#include "jetcomplex/symbol.hpp"

#include <sstream>
#include <stdexcept>

namespace jetcomplex {

SymbolMatrix::SymbolMatrix(int rows, int cols, int nvars, std::vector<int> col_degrees,
                           std::vector<int> row_degrees)
    : rows_(rows),
      cols_(cols),
      nvars_(nvars),
      col_degrees_(std::move(col_degrees)),
      row_degrees_(std::move(row_degrees)),
      entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Poly(nvars)) {
    if (static_cast<int>(col_degrees_.size()) != cols || static_cast<int>(row_degrees_.size()) != rows)
        throw std::invalid_argument("SymbolMatrix: grading size mismatch");
}

SymbolMatrix::SymbolMatrix(int rows, int cols, int nvars, int row_degree)
    : SymbolMatrix(rows, cols, nvars, std::vector<int>(static_cast<size_t>(cols), 0),
                   std::vector<int>(static_cast<size_t>(rows), row_degree)) {}

SymbolMatrix SymbolMatrix::from_system(const PDESystem& sys) {
    SymbolMatrix s(sys.equations(), sys.unknowns(), sys.variables(), 1);
    for (int m = 0; m < sys.equations(); ++m)
        for (int i = 0; i < sys.unknowns(); ++i) {
            Poly p(sys.variables());
            for (int j = 0; j < sys.variables(); ++j)
                p.add_term(MultiIndex::unit(sys.variables(), j), sys.coeff(m, i, j));
            s.set_entry(m, i, std::move(p));
        }
    return s;
}

const Poly& SymbolMatrix::entry(int m, int c) const {
    if (m < 0 || m >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("SymbolMatrix::entry");
    return entries_[static_cast<size_t>(m) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

void SymbolMatrix::set_entry(int m, int c, Poly p) {
    if (m < 0 || m >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("SymbolMatrix::set_entry");
    if (!p.is_zero()) {
        int want = row_degrees_[static_cast<size_t>(m)] - col_degrees_[static_cast<size_t>(c)];
        if (!p.is_homogeneous() || p.total_degree() != want)
            throw std::invalid_argument("SymbolMatrix::set_entry: entry degree violates grading");
        if (p.nvars() != nvars_) throw std::invalid_argument("SymbolMatrix::set_entry: variable mismatch");
    }
    entries_[static_cast<size_t>(m) * static_cast<size_t>(cols_) + static_cast<size_t>(c)] =
        p.is_zero() ? Poly(nvars_) : std::move(p);
}

ExactMatrix SymbolMatrix::evaluate(const std::vector<Rational>& xi) const {
    ExactMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            const Poly& p = entry(r, c);
            if (!p.is_zero()) m.set(r, c, p.evaluate(xi));
        }
    return m;
}

std::vector<long> SymbolMatrix::col_block_offsets(int d) const {
    std::vector<long> off(static_cast<size_t>(cols_) + 1, 0);
    for (int c = 0; c < cols_; ++c)
        off[static_cast<size_t>(c) + 1] =
            off[static_cast<size_t>(c)] + monomial_count(nvars_, d - col_degrees_[static_cast<size_t>(c)]);
    return off;
}

std::vector<long> SymbolMatrix::row_block_offsets(int d) const {
    std::vector<long> off(static_cast<size_t>(rows_) + 1, 0);
    for (int m = 0; m < rows_; ++m)
        off[static_cast<size_t>(m) + 1] =
            off[static_cast<size_t>(m)] + monomial_count(nvars_, d - row_degrees_[static_cast<size_t>(m)]);
    return off;
}

ExactMatrix SymbolMatrix::jet_matrix(int d) const {
    auto coff = col_block_offsets(d);
    auto roff = row_block_offsets(d);
    ExactMatrix mat(static_cast<int>(roff.back()), static_cast<int>(coff.back()));

    for (int c = 0; c < cols_; ++c) {
        int dc = d - col_degrees_[static_cast<size_t>(c)];
        if (dc < 0) continue;
        auto source = enumerate_monomials(nvars_, dc);
        for (long lc = 0; lc < static_cast<long>(source.size()); ++lc) {
            const MultiIndex& L = source[static_cast<size_t>(lc)];
            long col = coff[static_cast<size_t>(c)] + lc;
            for (int m = 0; m < rows_; ++m) {
                const Poly& p = entry(m, c);
                if (p.is_zero()) continue;
                for (const auto& [gamma, coef] : p.terms()) {
                    // d^gamma x^L = prod falling(L_j, gamma_j) x^{L-gamma}
                    Rational factor(1);
                    MultiIndex k = L;
                    bool ok = true;
                    for (int j = 0; j < nvars_ && ok; ++j) {
                        for (int e = 0; e < gamma[j]; ++e) {
                            if (k[j] == 0) {
                                ok = false;
                                break;
                            }
                            factor *= Rational(k[j]);
                            --k[j];
                        }
                    }
                    if (!ok) continue;
                    long row = roff[static_cast<size_t>(m)] + monomial_rank(k);
                    mat.add(static_cast<int>(row), static_cast<int>(col), factor * coef);
                }
            }
        }
    }
    return mat;
}

bool SymbolMatrix::is_zero() const {
    for (const auto& p : entries_)
        if (!p.is_zero()) return false;
    return true;
}

SymbolMatrix multiply(const SymbolMatrix& a, const SymbolMatrix& b) {
    if (a.cols() != b.rows() || a.nvars() != b.nvars())
        throw std::invalid_argument("multiply: shape mismatch");
    if (a.col_degrees() != b.row_degrees())
        throw std::invalid_argument("multiply: grading mismatch between a's columns and b's rows");
    SymbolMatrix out(a.rows(), b.cols(), a.nvars(), b.col_degrees(), a.row_degrees());
    for (int m = 0; m < a.rows(); ++m)
        for (int c = 0; c < b.cols(); ++c) {
            Poly acc(a.nvars());
            for (int k = 0; k < a.cols(); ++k) {
                const Poly& x = a.entry(m, k);
                const Poly& y = b.entry(k, c);
                if (!x.is_zero() && !y.is_zero()) acc += x * y;
            }
            out.set_entry(m, c, std::move(acc));
        }
    return out;
}

ExactMatrix flatten_rows(const SymbolMatrix& a) {
    if (a.rows() == 0) return ExactMatrix(0, 0);
    int deg = a.row_degrees()[0];
    for (int m = 1; m < a.rows(); ++m)
        if (a.row_degrees()[static_cast<size_t>(m)] != deg)
            throw std::invalid_argument("flatten_rows: rows must share one total degree");
    std::vector<long> off(static_cast<size_t>(a.cols()) + 1, 0);
    for (int c = 0; c < a.cols(); ++c)
        off[static_cast<size_t>(c) + 1] =
            off[static_cast<size_t>(c)] +
            monomial_count(a.nvars(), deg - a.col_degrees()[static_cast<size_t>(c)]);
    ExactMatrix mat(a.rows(), static_cast<int>(off.back()));
    for (int m = 0; m < a.rows(); ++m)
        for (int c = 0; c < a.cols(); ++c)
            for (const auto& [mono, coef] : a.entry(m, c).terms())
                mat.add(m, static_cast<int>(off[static_cast<size_t>(c)] + monomial_rank(mono)), coef);
    return mat;
}

bool same_row_space(const SymbolMatrix& a, const SymbolMatrix& b) {
    if (a.cols() != b.cols() || a.nvars() != b.nvars()) return false;
    if (a.col_degrees() != b.col_degrees()) return false;
    if (a.rows() == 0 && b.rows() == 0) return true;
    if (a.rows() == 0 || b.rows() == 0) return a.is_zero() && b.is_zero();
    if (a.row_degrees()[0] != b.row_degrees()[0]) return false;
    ExactMatrix fa = flatten_rows(a);
    ExactMatrix fb = flatten_rows(b);
    long ra = rank(fa), rb = rank(fb);
    if (ra != rb) return false;
    return rank(ExactMatrix::vstack(fa, fb)) == ra;
}

std::string render_operator_row(const SymbolMatrix& s, int m,
                                const std::vector<std::string>& var_names,
                                const std::vector<std::string>& comp_names) {
    std::ostringstream os;
    bool first = true;
    for (int c = 0; c < s.cols(); ++c) {
        const Poly& p = s.entry(m, c);
        for (const auto& [gamma, coef] : p.terms()) {
            Rational a = coef;
            if (first) {
                if (a.sign() < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            first = false;
            if (a != Rational(1)) os << a.str() << "*";
            int order = gamma.degree();
            if (order == 0) {
                os << comp_names[static_cast<size_t>(c)];
                continue;
            }
            os << "d";
            if (order > 1) os << order;
            os << "/";
            for (int j = 0; j < s.nvars(); ++j) {
                if (gamma[j] == 0) continue;
                os << "d" << var_names[static_cast<size_t>(j)];
                if (gamma[j] > 1) os << "^" << gamma[j];
            }
            os << " [" << comp_names[static_cast<size_t>(c)] << "]";
        }
    }
    if (first) os << "0";
    os << " = 0";
    return os.str();
}

}  // namespace jetcomplex

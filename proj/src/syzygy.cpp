#include "jetcomplex/syzygy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jetcomplex {

namespace {

// Row basis with lead-column reduction; insert() reports whether the row
// enlarged the span. Used to pick minimal generators modulo variable
// multiples of lower-degree syzygies.
class IncrementalRowBasis {
  public:
    // row: sparse, sorted by column
    bool insert(ExactMatrix::Row row) {
        while (!row.empty()) {
            int lead = row[0].first;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                Rational inv = Rational(1) / row[0].second;
                for (auto& e : row) e.second *= inv;
                rows_.emplace(lead, std::move(row));
                return true;
            }
            row = axpy(row, -row[0].second, it->second);
        }
        return false;
    }

    long rank() const { return static_cast<long>(rows_.size()); }

  private:
    static ExactMatrix::Row axpy(const ExactMatrix::Row& a, const Rational& coef,
                                 const ExactMatrix::Row& b) {
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
    }

    std::map<int, ExactMatrix::Row> rows_;
};

struct DegreeLayout {
    std::vector<long> offsets;  // per component block, last = total dim
    std::vector<int> degrees;   // monomial degree per block, negative = empty

    static DegreeLayout make(int nvars, const std::vector<int>& shifts, int total_degree) {
        DegreeLayout l;
        l.offsets.assign(shifts.size() + 1, 0);
        l.degrees.resize(shifts.size());
        for (size_t i = 0; i < shifts.size(); ++i) {
            int d = total_degree - shifts[i];
            l.degrees[i] = d;
            l.offsets[i + 1] = l.offsets[i] + (d >= 0 ? monomial_count(nvars, d) : 0);
        }
        return l;
    }
    long dim() const { return offsets.back(); }
};

// sum_m g_m * row_m as the map (candidate coords at degree T) -> (target
// coords at degree T); kernel columns are the degree-T syzygies.
ExactMatrix syzygy_map(const SymbolMatrix& s, const DegreeLayout& cand, const DegreeLayout& target) {
    int n = s.nvars();
    ExactMatrix mat(static_cast<int>(target.dim()), static_cast<int>(cand.dim()));
    for (int m = 0; m < s.rows(); ++m) {
        int du = cand.degrees[static_cast<size_t>(m)];
        if (du < 0) continue;
        auto monos = enumerate_monomials(n, du);
        for (long u = 0; u < static_cast<long>(monos.size()); ++u) {
            long col = cand.offsets[static_cast<size_t>(m)] + u;
            for (int c = 0; c < s.cols(); ++c) {
                const Poly& p = s.entry(m, c);
                for (const auto& [gamma, coef] : p.terms()) {
                    MultiIndex t = monos[static_cast<size_t>(u)];
                    for (int j = 0; j < n; ++j) t[j] += gamma[j];
                    long row = target.offsets[static_cast<size_t>(c)] + monomial_rank(t);
                    mat.add(static_cast<int>(row), static_cast<int>(col), coef);
                }
            }
        }
    }
    return mat;
}

ExactMatrix::Row column_as_row(const ExactMatrix& m, int col) {
    ExactMatrix::Row out;
    for (int r = 0; r < m.rows(); ++r) {
        Rational v = m.get(r, col);
        if (!v.is_zero()) out.emplace_back(r, v);
    }
    return out;
}

// x_j * (degree-(T-1) candidate vector) as a degree-T candidate vector.
ExactMatrix::Row shifted_multiple(const ExactMatrix::Row& vec, int j, int nvars,
                                  const DegreeLayout& prev, const DegreeLayout& cur) {
    ExactMatrix::Row out;
    for (const auto& [idx, v] : vec) {
        // locate the block of idx
        size_t m = 0;
        while (prev.offsets[m + 1] <= idx) ++m;
        MultiIndex mono = monomial_unrank(nvars, prev.degrees[m], idx - prev.offsets[m]);
        long target = cur.offsets[m] + monomial_rank(mono.plus(j));
        out.emplace_back(static_cast<int>(target), v);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

long GradedSyzygyStage::count_at_order(int d) const {
    long c = 0;
    for (const auto& g : generators)
        if (g.order == d) ++c;
    return c;
}

GradedSyzygyStage syzygy_generators(const SymbolMatrix& s, int max_deg) {
    if (max_deg < 1) throw std::invalid_argument("syzygy_generators: max_deg >= 1 required");
    GradedSyzygyStage stage;
    if (s.rows() == 0) return stage;

    int n = s.nvars();
    int dmin = *std::min_element(s.row_degrees().begin(), s.row_degrees().end());
    int dmax = *std::max_element(s.row_degrees().begin(), s.row_degrees().end());
    stage.first_total_degree = dmin;
    stage.max_total_degree = dmax + max_deg;

    ExactMatrix prev_kernel;  // columns = full syzygy space one degree down
    DegreeLayout prev_cand;
    bool have_prev = false;

    for (int t = dmin; t <= stage.max_total_degree; ++t) {
        DegreeLayout cand = DegreeLayout::make(n, s.row_degrees(), t);
        DegreeLayout target = DegreeLayout::make(n, s.col_degrees(), t);
        ExactMatrix map = syzygy_map(s, cand, target);
        ExactMatrix ker = kernel_basis(map);
        stage.kernel_dims.push_back(ker.cols());

        IncrementalRowBasis basis;
        if (have_prev) {
            for (int v = 0; v < prev_kernel.cols(); ++v) {
                ExactMatrix::Row vec = column_as_row(prev_kernel, v);
                for (int j = 0; j < n; ++j) basis.insert(shifted_multiple(vec, j, n, prev_cand, cand));
            }
        }
        for (int v = 0; v < ker.cols(); ++v) {
            ExactMatrix::Row vec = column_as_row(ker, v);
            if (!basis.insert(vec)) continue;
            GradedSyzygyStage::Generator gen;
            gen.total_degree = t;
            gen.comps.assign(static_cast<size_t>(s.rows()), Poly(n));
            for (const auto& [idx, val] : vec) {
                size_t m = 0;
                while (cand.offsets[m + 1] <= idx) ++m;
                MultiIndex mono = monomial_unrank(n, cand.degrees[m], idx - cand.offsets[m]);
                gen.comps[m].add_term(mono, val);
            }
            gen.order = 0;
            for (size_t m = 0; m < gen.comps.size(); ++m)
                if (!gen.comps[m].is_zero())
                    gen.order = std::max(gen.order, t - s.row_degrees()[m]);
            // the defining identity, re-verified
            for (int c = 0; c < s.cols(); ++c) {
                Poly acc(n);
                for (int m = 0; m < s.rows(); ++m) {
                    if (gen.comps[static_cast<size_t>(m)].is_zero()) continue;
                    acc += gen.comps[static_cast<size_t>(m)] * s.entry(m, c);
                }
                if (!acc.is_zero()) throw std::logic_error("syzygy_generators: generator fails identity");
            }
            stage.generators.push_back(std::move(gen));
        }
        prev_kernel = std::move(ker);
        prev_cand = cand;
        have_prev = true;
    }
    return stage;
}

SymbolMatrix compatibility_operator(const SymbolMatrix& s, int max_deg) {
    GradedSyzygyStage stage = syzygy_generators(s, max_deg);
    std::vector<int> row_degrees;
    row_degrees.reserve(stage.generators.size());
    for (const auto& g : stage.generators) row_degrees.push_back(g.total_degree);
    SymbolMatrix op(static_cast<int>(stage.generators.size()), s.rows(), s.nvars(), s.row_degrees(),
                    row_degrees);
    for (size_t g = 0; g < stage.generators.size(); ++g)
        for (int c = 0; c < s.rows(); ++c)
            op.set_entry(static_cast<int>(g), c, stage.generators[g].comps[static_cast<size_t>(c)]);
    return op;
}

SymbolMatrix compatibility_operator(const PDESystem& sys, int max_deg) {
    return compatibility_operator(SymbolMatrix::from_system(sys), max_deg);
}

ComplexChain build_complex(const PDESystem& sys, int max_deg, int max_len) {
    if (max_len < 1) throw std::invalid_argument("build_complex: max_len >= 1 required");
    if (max_len > sys.variables() + 1)
        throw std::invalid_argument("build_complex: max_len exceeds the resolution length bound n+1");

    ComplexChain chain;
    chain.max_deg = max_deg;
    chain.operators.push_back(SymbolMatrix::from_system(sys));
    chain.orders.push_back(1);
    chain.sizes.push_back(sys.unknowns());
    chain.sizes.push_back(sys.equations());
    chain.node_names.push_back("u");
    chain.node_names.push_back("E");

    while (static_cast<int>(chain.operators.size()) < max_len) {
        const SymbolMatrix& last = chain.operators.back();
        SymbolMatrix op = compatibility_operator(last, max_deg);
        if (op.rows() == 0) {
            chain.terminated = true;
            break;
        }
        SymbolMatrix prod = multiply(op, last);
        if (!prod.is_zero()) throw std::logic_error("build_complex: op_{i+1} * op_i != 0");
        int order = 0;
        for (int m = 0; m < op.rows(); ++m) {
            for (int c = 0; c < op.cols(); ++c)
                if (!op.entry(m, c).is_zero())
                    order = std::max(order, op.entry(m, c).total_degree());
        }
        chain.orders.push_back(order);
        chain.sizes.push_back(op.rows());
        chain.node_names.push_back("T" + std::to_string(chain.operators.size()));
        chain.operators.push_back(std::move(op));
    }
    // A clean stop needs the empty stage plus a search window reaching past
    // the order where the next operator could first appear.
    chain.possibly_incomplete = !chain.terminated || chain.max_deg < chain.orders.back() + 1;
    return chain;
}

int node_level_degree(const ComplexChain& chain, int node, int k) {
    auto node_shift = [&](int i) -> int {
        if (i == 0) return 0;
        const auto& degs = chain.operators[static_cast<size_t>(i - 1)].row_degrees();
        if (degs.empty()) return 0;
        for (int d : degs)
            if (d != degs[0])
                throw std::invalid_argument("node_level_degree: mixed-degree stage has no single level");
        return degs[0];
    };
    int s_last = node_shift(static_cast<int>(chain.operators.size()));
    return k + s_last - node_shift(node);
}

ExactnessReport exactness_check(const ComplexChain& chain, int k, const ExactnessOptions& opts) {
    if (k < 0) throw std::invalid_argument("exactness_check: k >= 0 required");
    ExactnessReport rep;
    rep.level = k;
    rep.modular_threshold = opts.modular_threshold;
    rep.prime_trials = opts.prime_trials;

    // Every stage's jet_matrix is taken at the same absolute top degree: the
    // degree of node 0 at this level. Column shifts place each block right.
    int top = node_level_degree(chain, 0, k);
    std::vector<ExactMatrix> mats;
    std::vector<bool> modular;
    std::vector<long> ranks;
    for (size_t i = 0; i < chain.operators.size(); ++i) {
        ExactMatrix jm = chain.operators[i].jet_matrix(top);
        long dim = std::max(jm.rows(), jm.cols());
        if (dim > opts.max_dim)
            throw std::runtime_error("exactness_check: jet matrix exceeds the feasibility guard (" +
                                     std::to_string(dim) + " > " + std::to_string(opts.max_dim) + ")");
        bool use_mod = dim > opts.modular_threshold;
        ModularRankOptions mo;
        mo.trials = opts.prime_trials;
        mo.seed = opts.seed + static_cast<std::uint64_t>(i);
        ranks.push_back(use_mod ? rank_modp(jm, mo).rank : rank(jm));
        modular.push_back(use_mod);
        mats.push_back(std::move(jm));
    }

    rep.all_exact = true;
    for (size_t i = 0; i + 1 < chain.operators.size(); ++i) {
        ExactnessSlot slot;
        slot.node = static_cast<int>(i) + 1;
        slot.dim = mats[i].rows();  // target of op_i = source of op_{i+1}
        slot.rank_in = ranks[i];
        slot.rank_out = ranks[i + 1];
        slot.kernel_out = slot.dim - slot.rank_out;
        slot.exact = slot.kernel_out == slot.rank_in;
        slot.modular_in = modular[i];
        slot.modular_out = modular[i + 1];
        if (!slot.exact) rep.all_exact = false;
        rep.slots.push_back(slot);
    }
    rep.last_rank = ranks.back();
    rep.last_target_dim = mats.back().rows();
    rep.last_surjective = rep.last_rank == rep.last_target_dim;
    return rep;
}

}  // namespace jetcomplex

#include "jetcomplex/cli.hpp"

#include "jetcomplex/binomial.hpp"
#include "jetcomplex/cauchyfueter.hpp"
#include "jetcomplex/hilbert.hpp"
#include "jetcomplex/involution.hpp"
#include "jetcomplex/syzygy.hpp"
#include "jetcomplex/wfamily.hpp"

#include <sstream>

namespace jetcomplex {

namespace {

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os.str();
}

void describe_system(ReportDocument& rep, const ParsedSystem& input) {
    rep.begin_section("system");
    if (!input.system.label().empty()) rep.kv("label", input.system.label());
    rep.kv("equations", std::to_string(input.system.equations()));
    rep.kv("unknowns", std::to_string(input.system.unknowns()));
    rep.kv("variables", std::to_string(input.system.variables()));
}

}  // namespace

ReportDocument cmd_analyze(const ParsedSystem& input, const AnalyzeOptions& opts) {
    const PDESystem& sys = input.system;
    ReportDocument rep;
    rep.meta("command", "analyze");
    rep.meta("seed", std::to_string(opts.seed));
    rep.meta("samples", std::to_string(opts.samples));
    describe_system(rep, input);

    rep.begin_section("tableau dimensions");
    std::vector<long> dims;
    for (int q = 0; q <= opts.qmax; ++q) {
        dims.push_back(tableau_dim(sys, q));
        rep.kv("dim A^" + std::to_string(q), std::to_string(dims.back()));
    }

    InvolutionReport inv = is_involutive(sys, opts.samples, opts.seed);
    rep.begin_section("cartan test");
    rep.kv("dim A^1 (lhs)", std::to_string(inv.lhs));
    rep.kv("min over samples of dim A^0 + sum_j dim A^0_j (rhs)", std::to_string(inv.rhs_min));
    {
        std::ostringstream os;
        for (size_t i = 0; i < inv.rhs_samples.size(); ++i)
            os << (i ? ", " : "") << inv.rhs_samples[i].rhs;
        rep.kv("rhs per sample", os.str());
    }
    // the per-variable breakdown in the coordinates that achieved the min
    for (const auto& s : inv.rhs_samples) {
        if (s.rhs != inv.rhs_min) continue;
        CartanTestResult best = cartan_test(sys, CoordinateChange::random(sys.variables(), s.seed));
        rep.kv("dim A^0", std::to_string(best.dim_a0));
        rep.kv("dim A^0_j, j=1..n-1", join_longs(best.restricted));
        rep.kv("coordinate seed", std::to_string(s.seed));
        break;
    }
    std::ostringstream verdict;
    if (inv.involutive)
        verdict << "involutive (" << inv.lhs << " = " << inv.rhs_min << ")";
    else
        verdict << "not involutive (" << inv.lhs << " < " << inv.rhs_min << ")";
    rep.classification("involution", verdict.str());
    return rep;
}

ReportDocument cmd_complex(const ParsedSystem& input, const ComplexOptions& opts) {
    const PDESystem& sys = input.system;
    int max_len = opts.max_length > 0 ? opts.max_length : sys.variables() + 1;
    ReportDocument rep;
    rep.meta("command", "complex");
    rep.meta("max_degree", std::to_string(opts.max_degree));
    rep.meta("max_length", std::to_string(max_len));
    describe_system(rep, input);

    ComplexChain chain = build_complex(sys, opts.max_degree, max_len);
    rep.begin_section("chain");
    {
        std::ostringstream os;
        for (size_t i = 0; i < chain.sizes.size(); ++i) os << (i ? " -> " : "") << chain.sizes[i];
        rep.kv("component counts", os.str());
    }
    {
        std::ostringstream os;
        for (size_t i = 0; i < chain.orders.size(); ++i) os << (i ? ", " : "") << chain.orders[i];
        rep.kv("operator orders", os.str());
    }
    rep.kv("terminated", chain.terminated ? "yes" : "no");
    rep.verdict("consecutive products vanish", true, "checked symbolically during construction");
    if (chain.possibly_incomplete)
        rep.flag_cutoff("cutoff reached, chain possibly incomplete (max degree " +
                        std::to_string(opts.max_degree) + ")");

    // operator rows as PDE conditions in the user's names
    std::vector<std::string> comp_names = input.unknown_names;
    for (size_t i = 0; i < chain.operators.size(); ++i) {
        const SymbolMatrix& op = chain.operators[i];
        rep.begin_section("operator A" + std::to_string(i));
        std::vector<std::string> row_names;
        for (int r = 0; r < op.rows(); ++r) {
            std::string nm;
            if (i == 0)
                nm = r < static_cast<int>(input.equation_names.size()) ? input.equation_names[static_cast<size_t>(r)]
                                                                       : "E" + std::to_string(r + 1);
            else
                nm = "T" + std::to_string(i) + "_" + std::to_string(r + 1);
            row_names.push_back(nm);
            rep.line(nm + ": " + render_operator_row(op, r, input.variable_names, comp_names));
        }
        comp_names = row_names;
    }
    return rep;
}

ReportDocument cmd_hp(const ParsedSystem& input, const HpOptions& opts) {
    const PDESystem& sys = input.system;
    int n = sys.variables();
    int terms = opts.terms > 0 ? opts.terms : 2 * (n + 2);
    ReportDocument rep;
    rep.meta("command", "hp");
    rep.meta("terms", std::to_string(terms));
    describe_system(rep, input);

    rep.begin_section("dimension sequence");
    std::vector<long> dims;
    for (int q = 0; q < terms; ++q) dims.push_back(tableau_dim(sys, q));
    rep.kv("dim A^q, q=0.." + std::to_string(terms - 1), join_longs(dims));

    rep.begin_section("hilbert-poincare series");
    try {
        RationalSeries series = hilbert_series(dims, n + 1);
        rep.classification("series", series.str());
        rep.kv("verified terms", std::to_string(series.verified_terms));
        rep.verdict("resummation reproduces the dimension sequence", true,
                    std::to_string(series.verified_terms) + " terms");
    } catch (const std::runtime_error& e) {
        rep.line(e.what());
        rep.verdict("rational fit", false, e.what());
    }
    return rep;
}

ReportDocument cmd_verify_cf(const VerifyCfOptions& opts) {
    if (opts.kmax < 0 || opts.kmax > 7)
        throw ParseError("verify-cf: kmax must lie in 0..7 (the degree-7 certificate range)");
    ReportDocument rep;
    rep.meta("command", "verify-cf");
    rep.meta("kmax", std::to_string(opts.kmax));
    rep.meta("modular_threshold", std::to_string(opts.modular_threshold));
    rep.meta("prime_trials", std::to_string(opts.prime_trials));
    rep.meta("seed", std::to_string(opts.seed));

    for (int k = 0; k <= opts.kmax; ++k) {
        cf::ExactnessOptionsCF copts;
        copts.modular_threshold = opts.modular_threshold;
        copts.prime_trials = opts.prime_trials;
        copts.seed = opts.seed + static_cast<std::uint64_t>(1000 * k);
        cf::ExactnessTable t = cf::exactness_dims(k, copts);

        rep.begin_section("jet-level exactness at k = " + std::to_string(k));
        rep.kv("spaces S^2_{k+4}, S^4_{k+3}, S^4_{k+1}, S^2_k",
               join_longs({t.space_dims[0], t.space_dims[1], t.space_dims[2], t.space_dims[3]}));
        rep.kv("ranks CF, tor0, tor1", join_longs({t.ranks[0], t.ranks[1], t.ranks[2]}));
        std::string path;
        for (int i = 0; i < 3; ++i) path += std::string(i ? ", " : "") + (t.modular[static_cast<size_t>(i)] ? "mod-p" : "rational");
        rep.kv("rank path", path);
        rep.verdict("ker CF = 4 C(k+7,4) + 2 C(k+7,3)", t.ker_cf == t.ker_cf_expected,
                    std::to_string(t.ker_cf) + " vs " + std::to_string(t.ker_cf_expected));
        rep.verdict("exact at S^4_{k+3}", t.exact_mid1);
        rep.verdict("exact at S^4_{k+1}", t.exact_mid2);
        rep.verdict("tor1 surjective", t.tor1_surjective,
                    "rank " + std::to_string(t.ranks[2]) + " onto dim " + std::to_string(t.space_dims[3]));
    }

    cf::Degree7Certificate cert = cf::degree7_certificate();
    rep.begin_section("degree-7 certificate");
    {
        std::ostringstream os;
        for (int i = 0; i < 8; ++i) os << (i ? ", " : "") << cert.values[static_cast<size_t>(i)].get_str();
        rep.kv("P(0..7)", os.str());
    }
    rep.kv("8th finite difference", cert.eighth_difference.get_str());
    rep.verdict("P identically zero (8 zeros + degree bound)", cert.ok());
    return rep;
}

ReportDocument cmd_wfamily(const WfamilyOptions& opts) {
    ReportDocument rep;
    rep.meta("command", "wfamily");
    WSystem w = [&] {
        try {
            return make_wsystem(opts.n, opts.m, opts.pairs);
        } catch (const std::exception& ex) {
            throw ParseError(ex.what());
        }
    }();
    int t = w.index_set.t();

    rep.begin_section("index set");
    rep.kv("n", std::to_string(opts.n));
    rep.kv("m", std::to_string(opts.m));
    rep.kv("t", std::to_string(t));
    {
        std::ostringstream os;
        for (size_t i = 0; i < w.index_set.pairs.size(); ++i)
            os << (i ? ", " : "") << "(" << w.index_set.pairs[i].first << ","
               << w.index_set.pairs[i].second << ")";
        rep.kv("pairs", os.str());
    }

    rep.begin_section("tableau dimensions");
    bool formula_ok = true;
    for (int q = 0; q <= opts.qmax; ++q) {
        long formula = wdim_formula(opts.n, opts.m, t, q);
        long kernel = tableau_dim(w.base, q);
        if (formula != kernel) formula_ok = false;
        rep.kv("dim A^" + std::to_string(q),
               std::to_string(kernel) + " (closed form " + std::to_string(formula) + ")");
    }
    rep.verdict("closed-form dimension matches the kernel computation", formula_ok,
                "q = 0.." + std::to_string(opts.qmax));

    rep.begin_section("torsion conditions");
    auto conds = wtorsion_conditions(w);
    Integer expected = choose(t, 3);
    rep.kv("count", std::to_string(conds.size()));
    rep.verdict("count equals choose(t,3)", Integer(static_cast<long>(conds.size())) == expected,
                std::to_string(conds.size()) + " vs " + expected.get_str());
    if (!conds.empty()) {
        SymbolMatrix sym = wtorsion_symbol(w);
        auto vars = w.variable_names();
        auto eqs = w.equation_names();
        for (int r = 0; r < sym.rows(); ++r)
            rep.line("(" + std::to_string(conds[static_cast<size_t>(r)].j) + "," +
                     std::to_string(conds[static_cast<size_t>(r)].jp) + "," +
                     std::to_string(conds[static_cast<size_t>(r)].k) +
                     "): " + render_operator_row(sym, r, vars, eqs));
    }
    return rep;
}

}  // namespace jetcomplex

#include "jetcomplex/cauchyfueter.hpp"

#include "jetcomplex/binomial.hpp"
#include "jetcomplex/jets.hpp"
#include "jetcomplex/wfamily.hpp"

#include <stdexcept>

namespace jetcomplex {

namespace cf {

std::vector<std::string> variable_names() {
    std::vector<std::string> names;
    for (int i = 0; i < 4; ++i) names.push_back("z" + std::to_string(i) + "0");
    for (int i = 0; i < 4; ++i) names.push_back("z" + std::to_string(i) + "1");
    return names;
}

CFTuple cf_apply(const CFPair& p) {
    CFTuple out{Poly(kVars), Poly(kVars), Poly(kVars), Poly(kVars)};
    for (int i = 0; i < 4; ++i)
        out[static_cast<size_t>(i)] = p.phi0.derivative(zvar(i, 0)) + p.phi1.derivative(zvar(i, 1));
    return out;
}

int Lambda3Field::triple_index(int i, int th, int k) {
    if (!(0 <= i && i < th && th < k && k <= 3))
        throw std::invalid_argument("Lambda3Field: triple must be increasing in {0..3}");
    if (i == 0 && th == 1 && k == 2) return 0;
    if (i == 0 && th == 1 && k == 3) return 1;
    if (i == 0 && th == 2 && k == 3) return 2;
    return 3;  // (1,2,3)
}

Poly Lambda3Field::at(int i, int th, int k) const {
    std::array<int, 3> idx{i, th, k};
    int sign = 1;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            if (idx[a] == idx[b]) return Poly(kVars);
            if (idx[a] > idx[b]) {
                std::swap(idx[a], idx[b]);
                sign = -sign;
            }
        }
    const Poly& p = comps[static_cast<size_t>(triple_index(idx[0], idx[1], idx[2]))];
    return sign == 1 ? p : -p;
}

bool Lambda3Field::is_zero() const {
    for (const auto& p : comps)
        if (!p.is_zero()) return false;
    return true;
}

IndexedFamily Lambda3Field::as_family() const {
    IndexedFamily fam;
    fam[{0, 1, 2}] = comps[0];
    fam[{0, 1, 3}] = comps[1];
    fam[{0, 2, 3}] = comps[2];
    fam[{1, 2, 3}] = comps[3];
    return fam;
}

Lambda3Field tor0_apply(const CFTuple& phi) {
    Lambda3Field out;
    for (int i = 0; i < 4; ++i)
        for (int th = i + 1; th < 4; ++th)
            for (int k = th + 1; k < 4; ++k) {
                Poly v = phi[static_cast<size_t>(k)].derivative(zvar(i, 1)).derivative(zvar(th, 0));
                v -= phi[static_cast<size_t>(k)].derivative(zvar(i, 0)).derivative(zvar(th, 1));
                v += phi[static_cast<size_t>(i)].derivative(zvar(k, 0)).derivative(zvar(th, 1));
                v -= phi[static_cast<size_t>(i)].derivative(zvar(k, 1)).derivative(zvar(th, 0));
                v += phi[static_cast<size_t>(th)].derivative(zvar(i, 0)).derivative(zvar(k, 1));
                v -= phi[static_cast<size_t>(th)].derivative(zvar(i, 1)).derivative(zvar(k, 0));
                out.comps[static_cast<size_t>(Lambda3Field::triple_index(i, th, k))] = std::move(v);
            }
    return out;
}

Lambda4Pair tor1_apply(const Lambda3Field& phi) {
    Lambda4Pair out;
    for (int b = 0; b < 2; ++b) {
        // (i,theta,k,l) = (0,1,2,3) in the block-b variables
        Poly v = phi.at(0, 1, 2).derivative(zvar(3, b));
        v -= phi.at(3, 1, 2).derivative(zvar(0, b));
        v += phi.at(3, 0, 2).derivative(zvar(1, b));
        v -= phi.at(3, 0, 1).derivative(zvar(2, b));
        (b == 0 ? out.comp0 : out.comp1) = std::move(v);
    }
    return out;
}

SymbolMatrix cf_symbol() { return SymbolMatrix::from_system(cf_system()); }

SymbolMatrix tor0_symbol() {
    SymbolMatrix s(4, 4, kVars, std::vector<int>(4, 1), std::vector<int>(4, 3));
    auto xi = [](int i, int b) { return Poly::variable(kVars, zvar(i, b)); };
    for (int i = 0; i < 4; ++i)
        for (int th = i + 1; th < 4; ++th)
            for (int k = th + 1; k < 4; ++k) {
                int row = Lambda3Field::triple_index(i, th, k);
                s.set_entry(row, k, xi(i, 1) * xi(th, 0) - xi(i, 0) * xi(th, 1));
                s.set_entry(row, i, xi(k, 0) * xi(th, 1) - xi(k, 1) * xi(th, 0));
                s.set_entry(row, th, xi(i, 0) * xi(k, 1) - xi(i, 1) * xi(k, 0));
            }
    return s;
}

SymbolMatrix tor1_symbol() {
    SymbolMatrix s(2, 4, kVars, std::vector<int>(4, 3), std::vector<int>(2, 4));
    for (int b = 0; b < 2; ++b) {
        // signs of the antisymmetric reshuffles: phi_{312} = +phi_{123},
        // phi_{302} = +phi_{023}, phi_{301} = +phi_{013}
        s.set_entry(b, Lambda3Field::triple_index(0, 1, 2), Poly::variable(kVars, zvar(3, b)));
        s.set_entry(b, Lambda3Field::triple_index(1, 2, 3),
                    Rational(-1) * Poly::variable(kVars, zvar(0, b)));
        s.set_entry(b, Lambda3Field::triple_index(0, 2, 3), Poly::variable(kVars, zvar(1, b)));
        s.set_entry(b, Lambda3Field::triple_index(0, 1, 3),
                    Rational(-1) * Poly::variable(kVars, zvar(2, b)));
    }
    return s;
}

ExactnessTable exactness_dims(int k, const ExactnessOptionsCF& opts) {
    if (k < 0 || k > 7)
        throw std::invalid_argument("exactness_dims: k must lie in 0..7 (the certificate range)");
    ExactnessTable table;
    table.k = k;
    table.modular_threshold = opts.modular_threshold;
    table.prime_trials = opts.prime_trials;
    table.space_dims = {jet_dim(2, k + 4, 8), jet_dim(4, k + 3, 8), jet_dim(4, k + 1, 8),
                        jet_dim(2, k, 8)};

    const SymbolMatrix ops[3] = {cf_symbol(), tor0_symbol(), tor1_symbol()};
    int top = k + 4;
    for (int i = 0; i < 3; ++i) {
        ExactMatrix jm = ops[i].jet_matrix(top);
        bool use_mod = std::max(jm.rows(), jm.cols()) > opts.modular_threshold;
        if (use_mod) {
            ModularRankOptions mo;
            mo.trials = opts.prime_trials;
            mo.seed = opts.seed + static_cast<std::uint64_t>(i);
            table.ranks[static_cast<size_t>(i)] = rank_modp(jm, mo).rank;
        } else {
            table.ranks[static_cast<size_t>(i)] = rank(jm);
        }
        table.modular[static_cast<size_t>(i)] = use_mod;
    }

    table.ker_cf = table.space_dims[0] - table.ranks[0];
    Integer expected = Integer(4) * choose(k + 7, 4) + 2 * choose(k + 7, 3);
    table.ker_cf_expected = expected.get_si();
    table.exact_mid1 = table.space_dims[1] - table.ranks[1] == table.ranks[0];
    table.exact_mid2 = table.space_dims[2] - table.ranks[2] == table.ranks[1];
    table.tor1_surjective = table.ranks[2] == table.space_dims[3];
    return table;
}

Degree7Certificate degree7_certificate() {
    auto dim_s = [](int p, long k, int n) -> Integer {
        return Integer(p) * choose(k + n - 1, n - 1);
    };
    auto value = [&](long k) -> Integer {
        Integer v = dim_s(4, k + 1, 8) - dim_s(4, k + 3, 8) + dim_s(2, k + 4, 8);
        v -= Integer(4) * choose(k + 7, 4) + Integer(2) * choose(k + 7, 3);
        v -= dim_s(2, k, 8);
        return v;
    };
    Degree7Certificate cert;
    cert.all_zero = true;
    for (long k = 0; k <= 7; ++k) {
        cert.values[static_cast<size_t>(k)] = value(k);
        if (cert.values[static_cast<size_t>(k)] != 0) cert.all_zero = false;
    }
    // 8th finite difference at 0: sum_i (-1)^{8-i} choose(8,i) P(i); each
    // summand of P is a polynomial of degree <= 7 in k, so this vanishes.
    cert.eighth_difference = 0;
    for (long i = 0; i <= 8; ++i) {
        Integer term = choose(8, i) * value(i);
        cert.eighth_difference += ((8 - i) % 2 == 0) ? term : -term;
    }
    cert.difference_zero = cert.eighth_difference == 0;
    return cert;
}

}  // namespace cf

}  // namespace jetcomplex

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetcomplex/involution.hpp"
#include "jetcomplex/matrix.hpp"

#include <random>
#include "jetcomplex/syzygy.hpp"
#include "jetcomplex/wfamily.hpp"

using namespace jetcomplex;

namespace {

PDESystem single_generic_equation_2v() {
    PDESystem sys(1, 1, 2);
    sys.set_coeff(0, 0, 0, Rational(3));
    sys.set_coeff(0, 0, 1, Rational(-2));
    return sys;
}

PDESystem gradient2() {
    PDESystem sys(2, 1, 2);
    sys.set_coeff(0, 0, 0, Rational(1));
    sys.set_coeff(1, 0, 1, Rational(1));
    return sys;
}

PDESystem curl2() {
    // Q = (Q1, Q2) |-> dQ1/dx2 - dQ2/dx1
    PDESystem sys(1, 2, 2);
    sys.set_coeff(0, 0, 1, Rational(1));
    sys.set_coeff(0, 1, 0, Rational(-1));
    return sys;
}

}  // namespace

TEST_CASE("cartan test: single equation in 2 variables is involutive") {
    auto res = cartan_test(single_generic_equation_2v(), CoordinateChange::random(2, 5));
    CHECK(res.lhs == 1);
    CHECK(res.rhs == 1);
    CHECK(res.equal);
}

TEST_CASE("cartan test: one equation in 1 variable, degenerate") {
    PDESystem sys(1, 1, 1);
    sys.set_coeff(0, 0, 0, Rational(1));
    auto res = cartan_test(sys, CoordinateChange::identity(1));
    CHECK(res.lhs == 0);
    CHECK(res.rhs == 0);
    CHECK(res.equal);
}

TEST_CASE("cartan test: CF gives (40, 42) in generic coordinates") {
    PDESystem cf = cf_system();
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        auto res = cartan_test(cf, CoordinateChange::random(8, seed));
        CHECK(res.lhs == 40);
        CHECK(res.rhs == 42);
        CHECK(!res.equal);
        CHECK(res.dim_a0 == 12);
        CHECK(res.restricted == std::vector<long>{10, 8, 6, 4, 2, 0, 0});
    }
}

TEST_CASE("is_involutive: CF not involutive, verdict stable across seeds") {
    PDESystem cf = cf_system();
    auto rep = is_involutive(cf, 5, 20260809);
    CHECK(rep.lhs == 40);
    CHECK(rep.rhs_min == 42);
    CHECK(!rep.involutive);
    CHECK(rep.rhs_samples.size() == 5);
    for (const auto& s : rep.rhs_samples) CHECK(s.rhs >= 42);
}

TEST_CASE("is_involutive: single first-order equation is involutive") {
    auto rep = is_involutive(single_generic_equation_2v(), 5, 1);
    CHECK(rep.involutive);
    // the W-family t=1 instance, on 4 variables
    WSystem w = make_wsystem(2, 2, {{1, 1}});
    auto rep2 = is_involutive(w.base, 5, 2);
    CHECK(rep2.involutive);
}

TEST_CASE("is_involutive: empty system is trivially involutive") {
    PDESystem none(0, 2, 3);
    auto rep = is_involutive(none, 3, 9);
    CHECK(rep.involutive);
    CHECK(rep.lhs == jet_dim(2, 2, 3));
    CHECK_THROWS(is_involutive(none, 0, 1));
}

TEST_CASE("involution is stable under restriction to trailing variables") {
    // spec'd stability property, checked on involutive members of the corpus
    std::vector<PDESystem> corpus;
    corpus.push_back(single_generic_equation_2v());
    corpus.push_back(make_wsystem(2, 2, {{1, 1}}).base);
    corpus.push_back(make_wsystem(3, 3, {{1, 1}, {2, 2}}).base);
    for (const auto& sys : corpus) {
        auto rep = is_involutive(sys, 5, 77);
        REQUIRE(rep.involutive);
        PDESystem moved = change_coordinates(sys, CoordinateChange::random(sys.variables(), 78));
        for (int j = 1; j <= sys.variables() - 2; ++j) {
            PDESystem sub = restrict_system(moved, j);
            // drop equations that restricted to zero rows
            std::vector<int> live;
            for (int e = 0; e < sub.equations(); ++e) {
                bool nz = false;
                for (int i = 0; i < sub.unknowns() && !nz; ++i)
                    for (int v = 0; v < sub.variables() && !nz; ++v) nz = !sub.coeff(e, i, v).is_zero();
                if (nz) live.push_back(e);
            }
            PDESystem pruned(static_cast<int>(live.size()), sub.unknowns(), sub.variables());
            for (size_t e = 0; e < live.size(); ++e)
                for (int i = 0; i < sub.unknowns(); ++i)
                    for (int v = 0; v < sub.variables(); ++v)
                        pruned.set_coeff(static_cast<int>(e), i, v, sub.coeff(live[e], i, v));
            auto sub_rep = is_involutive(pruned, 5, 79 + static_cast<std::uint64_t>(j));
            CHECK(sub_rep.involutive);
        }
    }
}

TEST_CASE("regular sequences: extension exists for CF at level 2 from a generic start") {
    PDESystem cf = cf_system();
    RegularSequenceWitness w;
    auto level1 = extend_regular(cf, w, 1);
    REQUIRE(level1.has_value());
    w.levels.push_back(*level1);
    CHECK(is_regular(cf, w));
    auto level2 = extend_regular(cf, w, 2);
    CHECK(level2.has_value());
    w.levels.push_back(*level2);
    CHECK(is_regular(cf, w));
}

TEST_CASE("regular sequences: malformed witnesses are rejected") {
    PDESystem cf = cf_system();
    RegularSequenceWitness w;
    w.levels.push_back(std::vector<Rational>(3, Rational(0)));  // wrong size
    CHECK_THROWS(is_regular(cf, w));
    CHECK_THROWS(extend_regular(cf, w, 2));

    RegularSequenceWitness bad;
    bad.levels.push_back(std::vector<Rational>(16, Rational(1)));  // not in A^0
    CHECK(!is_regular(cf, bad));
    CHECK_THROWS(extend_regular(cf, bad, 2));
}

TEST_CASE("witness sampling agrees with the Cartan verdict") {
    // involutive systems: every sampled witness extends through all levels
    {
        PDESystem sys = make_wsystem(2, 2, {{1, 1}}).base;
        PDESystem moved = change_coordinates(sys, CoordinateChange::random(4, 101));
        for (std::uint64_t s = 0; s < 100; ++s) CHECK(sample_witness_failure_level(moved, 300 + s) == 0);
    }
    // CF (not involutive): the staged construction leaks at some level for
    // most random witnesses in generic coordinates
    {
        PDESystem cf = cf_system();
        PDESystem moved = change_coordinates(cf, CoordinateChange::random(8, 102));
        int failures = 0;
        for (std::uint64_t s = 0; s < 100; ++s)
            if (sample_witness_failure_level(moved, 500 + s) != 0) ++failures;
        CHECK(failures > 0);
    }
}

namespace {

// the level-l map and right-hand side of the staged relation, rebuilt from
// the definition (test-side duplicate, independent of the library path)
ExactMatrix witness_level_map(const PDESystem& sys, int level) {
    int n = sys.variables(), beta = sys.unknowns();
    int width = n - level + 1;
    ExactMatrix m(sys.equations(), beta * width);
    for (int e = 0; e < sys.equations(); ++e)
        for (int i = 0; i < beta; ++i)
            for (int j = level; j <= n; ++j) m.add(e, i * width + (j - level), sys.coeff(e, i, j - 1));
    return m;
}

std::vector<Rational> witness_level_rhs(const PDESystem& sys, const RegularSequenceWitness& w,
                                        int level) {
    int n = sys.variables(), beta = sys.unknowns();
    std::vector<Rational> b(static_cast<size_t>(sys.equations()), Rational(0));
    for (int e = 0; e < sys.equations(); ++e)
        for (int jp = 1; jp <= level - 1; ++jp) {
            int width = n - jp + 1;
            for (int i = 0; i < beta; ++i)
                b[static_cast<size_t>(e)] -= sys.coeff(e, i, jp - 1) *
                                             w.levels[static_cast<size_t>(jp - 1)]
                                                     [static_cast<size_t>(i * width + (level - jp))];
        }
    return b;
}

}  // namespace

TEST_CASE("engineered witness hitting the cokernel fails to extend") {
    // CF in generic coordinates leaks; locate a failing witness with the
    // sampler, then certify the failure via the kernel of the transpose:
    // some cokernel functional pairs nonzero with the level's rhs.
    PDESystem moved = change_coordinates(cf_system(), CoordinateChange::random(8, 103));
    int bad_level = 0;
    std::uint64_t bad_seed = 0;
    for (std::uint64_t s = 0; s < 200 && bad_level == 0; ++s) {
        bad_level = sample_witness_failure_level(moved, 900 + s);
        bad_seed = 900 + s;
    }
    REQUIRE(bad_level > 0);

    // replay the sampler's witness deterministically up to the failure
    std::mt19937_64 rng(bad_seed);
    std::uniform_int_distribution<int> dist(-4, 4);
    RegularSequenceWitness w;
    for (int l = 1; l < bad_level; ++l) {
        std::optional<std::vector<Rational>> ext;
        if (l == 1)
            ext = std::vector<Rational>(static_cast<size_t>(moved.unknowns() * moved.variables()),
                                        Rational(0));
        else
            ext = extend_regular(moved, w, l);
        REQUIRE(ext.has_value());
        ExactMatrix k = kernel_basis(l == 1 ? prolongation_matrix(moved, 0) : witness_level_map(moved, l));
        for (int c = 0; c < k.cols(); ++c) {
            Rational coef(dist(rng));
            if (coef.is_zero()) continue;
            for (int r = 0; r < k.rows(); ++r) {
                Rational v = k.get(r, c);
                if (!v.is_zero()) (*ext)[static_cast<size_t>(r)] += coef * v;
            }
        }
        w.levels.push_back(std::move(*ext));
    }
    REQUIRE(is_regular(moved, w));
    CHECK(!extend_regular(moved, w, bad_level).has_value());

    // cokernel certificate: a transpose-kernel vector pairs nonzero with rhs
    ExactMatrix lm = witness_level_map(moved, bad_level);
    std::vector<Rational> rhs = witness_level_rhs(moved, w, bad_level);
    ExactMatrix cok = kernel_basis(lm.transpose());
    bool certified = false;
    for (int c = 0; c < cok.cols() && !certified; ++c) {
        Rational pair(0);
        for (int r = 0; r < cok.rows(); ++r) pair += cok.get(r, c) * rhs[static_cast<size_t>(r)];
        certified = !pair.is_zero();
    }
    CHECK(certified);
}

TEST_CASE("lemma46: gradient/curl pair has an all-equal table") {
    auto rows = lemma46_check(gradient2(), curl2());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].j == 1);
    CHECK(rows[0].dim_b0_j == 1);
    CHECK(rows[0].rhs == 1);
    CHECK(rows[0].equal);
}

TEST_CASE("lemma46: CF with tor0 reports a table without an equality claim") {
    // A = CF is not involutive, so the lemma's hypothesis fails; the table
    // itself is still well-defined. tor0 as a first-order system does not
    // exist (it is second order), so pair CF with the degree-2 syzygy rows
    // read as a first-order system over the 4 torsion components is not
    // available; instead pair CF with a generic consumer of its 4 outputs.
    PDESystem consumer(1, 4, 8);
    for (int i = 0; i < 4; ++i) consumer.set_coeff(0, i, i, Rational(1));
    auto rows = lemma46_check(cf_system(), consumer);
    CHECK(rows.size() == 7);
    for (const auto& r : rows) CHECK(r.dim_b0_j >= 0);
    PDESystem wrong(1, 3, 8);
    wrong.set_coeff(0, 0, 0, Rational(1));
    CHECK_THROWS(lemma46_check(cf_system(), wrong));
}

TEST_CASE("cartan inequality holds on every sample") {
    std::vector<PDESystem> corpus;
    corpus.push_back(cf_system());
    corpus.push_back(gradient2());
    corpus.push_back(curl2());
    corpus.push_back(make_wsystem(3, 2, {{1, 1}, {2, 2}}).base);
    for (const auto& sys : corpus)
        for (std::uint64_t s = 1; s <= 10; ++s) {
            auto res = cartan_test(sys, CoordinateChange::random(sys.variables(), s));
            CHECK(res.lhs <= res.rhs);
        }
}

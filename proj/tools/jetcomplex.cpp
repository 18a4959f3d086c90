// jetcomplex: exact analysis of linear constant-coefficient first-order PDE
// systems on jet spaces. Subcommands: analyze, complex, hp, verify-cf,
// wfamily. Exit codes: 0 pass, 1 verdict failure, 2 input error, 3 cutoff
// flag raised under --strict.
#include "jetcomplex/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace jetcomplex;

int main(int argc, char** argv) {
    CLI::App app{"exact jet-space analysis of first-order constant-coefficient PDE systems"};
    app.require_subcommand(1);

    bool json_out = false;
    bool strict = false;
    app.add_flag("--json", json_out, "machine-readable report");
    app.add_flag("--strict", strict, "exit 3 when a cutoff flag was raised");

    std::string source;
    std::uint64_t seed = 1;
    int samples = 20;
    int qmax = 4;
    int max_degree = 4;
    int max_length = 0;
    int terms = 0;
    int kmax = 1;
    long modular_threshold = 2000;
    int prime_trials = 2;
    int wn = 0, wm = 0;
    std::string wpairs;

    CLI::App* analyze = app.add_subcommand("analyze", "tableau dimensions and the Cartan involution test");
    analyze->add_option("system", source, "system file or builtin alias")->required();
    analyze->add_option("--seed", seed, "sampling seed (default 1)");
    analyze->add_option("--samples", samples, "coordinate samples (default 20)");
    analyze->add_option("--qmax", qmax, "largest tableau degree reported (default 4)");

    CLI::App* complex_cmd = app.add_subcommand("complex", "compatibility-operator chain");
    complex_cmd->add_option("system", source, "system file or builtin alias")->required();
    complex_cmd->add_option("--max-degree", max_degree, "syzygy degree cutoff (default 4)");
    complex_cmd->add_option("--max-length", max_length, "chain length bound (default n+1)");

    CLI::App* hp = app.add_subcommand("hp", "Hilbert-Poincare series of the tableau dimensions");
    hp->add_option("system", source, "system file or builtin alias")->required();
    hp->add_option("--terms", terms, "terms to fit (default 2(n+2); fewer is an explicit override)");

    CLI::App* verify = app.add_subcommand("verify-cf", "jet-level Cauchy-Fueter exactness and the degree-7 certificate");
    verify->add_option("--kmax", kmax, "check levels k = 0..kmax, kmax <= 7 (default 1)");
    verify->add_option("--modular-threshold", modular_threshold,
                       "matrix dimension above which ranks go mod p (default 2000)");
    verify->add_option("--prime-trials", prime_trials, "independent mod-p trials (default 2)");
    verify->add_option("--seed", seed, "prime-sampling seed (default 1)");

    CLI::App* wfam = app.add_subcommand("wfamily", "two-unknown family: dimensions and torsion conditions");
    wfam->add_option("--n", wn, "first block size")->required();
    wfam->add_option("--m", wm, "second block size")->required();
    wfam->add_option("--pairs", wpairs, "pair set, e.g. \"(1,1);(2,2)\"")->required();
    wfam->add_option("--qmax", qmax, "largest tableau degree checked (default 4)");

    for (CLI::App* sub : {analyze, complex_cmd, hp, verify, wfam}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        ReportDocument rep;
        if (analyze->parsed()) {
            AnalyzeOptions opts{qmax, samples, seed};
            rep = cmd_analyze(parse_system_source(source), opts);
        } else if (complex_cmd->parsed()) {
            ComplexOptions opts{max_degree, max_length};
            rep = cmd_complex(parse_system_source(source), opts);
        } else if (hp->parsed()) {
            HpOptions opts{terms};
            rep = cmd_hp(parse_system_source(source), opts);
        } else if (verify->parsed()) {
            VerifyCfOptions opts{kmax, modular_threshold, prime_trials, seed};
            rep = cmd_verify_cf(opts);
        } else {
            WfamilyOptions opts;
            opts.n = wn;
            opts.m = wm;
            opts.pairs = parse_pair_list(wpairs);
            opts.qmax = qmax;
            rep = cmd_wfamily(opts);
        }
        std::cout << (json_out ? rep.to_json() : rep.to_text());
        if (!rep.all_passed()) return 1;
        if (strict && rep.cutoff_flagged()) return 3;
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

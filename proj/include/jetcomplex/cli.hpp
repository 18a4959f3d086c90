// Command implementations behind the jetcomplex executable; kept apart from
// argument parsing so they are directly testable.
#pragma once

#include "jetcomplex/report.hpp"
#include "jetcomplex/systemfile.hpp"

#include <cstdint>

namespace jetcomplex {

struct AnalyzeOptions {
    int qmax = 4;
    int samples = 20;
    std::uint64_t seed = 1;
};
ReportDocument cmd_analyze(const ParsedSystem& input, const AnalyzeOptions& opts);

struct ComplexOptions {
    int max_degree = 4;
    int max_length = 0;  // 0: the resolution bound n+1
};
ReportDocument cmd_complex(const ParsedSystem& input, const ComplexOptions& opts);

struct HpOptions {
    int terms = 0;  // 0: the recommended 2*(n+2)
};
ReportDocument cmd_hp(const ParsedSystem& input, const HpOptions& opts);

struct VerifyCfOptions {
    int kmax = 1;
    long modular_threshold = 2000;
    int prime_trials = 2;
    std::uint64_t seed = 1;
};
ReportDocument cmd_verify_cf(const VerifyCfOptions& opts);

struct WfamilyOptions {
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> pairs;
    int qmax = 4;
};
ReportDocument cmd_wfamily(const WfamilyOptions& opts);

}  // namespace jetcomplex

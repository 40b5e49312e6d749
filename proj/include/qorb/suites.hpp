#pragma once

#include <string>
#include <vector>

#include "qorb/report.hpp"

namespace qorb {

// Settings shared by the verification suites; -1 and empty mean the suite's
// own default.
struct RunConfig {
    std::string group;       // su2 | su3
    std::string preset;      // action preset
    std::string projector;   // projector preset for chern
    std::string golden;      // path of the CG golden file
    int cutoff = -1;
    int kbox = -1;
    int window = -1;
    std::vector<int> degrees;
    std::vector<int> lambdas;
    std::vector<double> qs;
    int samples = -1;
    unsigned seed = 20240607;
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown suite or a bad config; the
// report carries the elapsed time in data["seconds"].
Report run_suite(const std::string& name, const RunConfig& cfg = {});

// Default location of the shipped golden tables.
std::string default_golden_path();

}  // namespace qorb

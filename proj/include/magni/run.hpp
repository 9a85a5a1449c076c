#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "magni/io.hpp"
#include "magni/mag_homology.hpp"

namespace magni {

struct RunConfig {
    std::string command; // magnitude | magfun | mh | euler | ph | blurred | limits | approx
    std::string input_path;
    std::optional<int> n_max;       // doubles as dim_max, and as k for limits/approx
    std::optional<Rat> l_max;       // doubles as eps_max
    int prime = 2;
    ChainMode mode = ChainMode::normalized;
    int precision = 15;
    std::vector<Rat> t_values;      // magfun evaluation points; default {1}
    std::vector<Rat> sample_eps;    // approx samples; empty = derived from the space
    std::optional<PointMetric> metric; // set means the input is a point cloud
    long euclid_denominator = 1;
    long long max_generators = 500'000;
    long long max_cells = 500'000;
    std::string output_path;        // empty = standard output
    std::string dump_complex_path;  // ph/blurred: also write the filtered complex
};

// Dispatches to the module operation, writes the deterministic result to
// `out` (or the configured output file) and diagnostics to `err`. Returns the
// process exit status: 0 success, 1 usage, 2 parse, 3 validation, 4 resource
// cap, 5 failed internal check.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace magni

#include <CLI11.hpp>

#include <iostream>

#include "magni/run.hpp"

namespace {

// Numeric flags accept integers and fractions "p/q".
magni::Rat parse_rat_flag(const std::string& value, const std::string& flag) {
    auto r = magni::parse_rat(value);
    if (!r) throw CLI::ValidationError(flag, "expected an integer or fraction p/q, got '" + value + "'");
    return *r;
}

std::vector<magni::Rat> parse_rat_list(const std::string& value, const std::string& flag) {
    std::vector<magni::Rat> out;
    std::string tok;
    std::istringstream in(value);
    while (std::getline(in, tok, ',')) out.push_back(parse_rat_flag(tok, flag));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"magnipersist: exact magnitude, magnitude homology, and persistence "
                 "for finite metric spaces"};

    magni::RunConfig cfg;
    std::string l_max_str, t_str, eps_str, metric_str;
    int n_max = -1;

    app.add_option("--command", cfg.command,
                   "one of magnitude, magfun, mh, euler, ph, blurred, limits, approx")
        ->required();
    app.add_option("--input", cfg.input_path, "distance matrix (or point cloud with --metric)")
        ->required();
    app.add_option("--n-max,--dim-max", n_max,
                   "degree/dimension bound (also the degree k for limits/approx)");
    app.add_option("--l-max,--eps-max", l_max_str, "grade/scale bound, rational");
    app.add_option("--prime", cfg.prime, "field characteristic for barcodes (prime)");
    std::string mode_str = "normalized";
    app.add_option("--mode", mode_str, "normalized or unnormalized chains")
        ->check(CLI::IsMember({"normalized", "unnormalized"}));
    app.add_option("--precision", cfg.precision, "decimal digits for magfun");
    app.add_option("--t", t_str, "comma-separated rational t values for magfun");
    app.add_option("--sample-eps", eps_str, "comma-separated rational scales for approx");
    app.add_option("--metric", metric_str, "treat input as a point cloud: l1, linf, or euclid:D");
    app.add_option("--max-generators", cfg.max_generators, "generator cap for homology");
    app.add_option("--max-cells", cfg.max_cells, "cell cap for filtered complexes");
    app.add_option("--output", cfg.output_path, "output path (default: stdout)");
    app.add_option("--dump-complex", cfg.dump_complex_path,
                   "for ph/blurred: also write the filtered complex, one cell per line");

    CLI11_PARSE(app, argc, argv);

    try {
        if (n_max >= 0) cfg.n_max = n_max;
        if (!l_max_str.empty()) cfg.l_max = parse_rat_flag(l_max_str, "--l-max");
        if (!t_str.empty()) cfg.t_values = parse_rat_list(t_str, "--t");
        if (!eps_str.empty()) cfg.sample_eps = parse_rat_list(eps_str, "--sample-eps");
        cfg.mode = mode_str == "unnormalized" ? magni::ChainMode::unnormalized
                                              : magni::ChainMode::normalized;
        if (!metric_str.empty()) {
            if (metric_str == "l1") cfg.metric = magni::PointMetric::l1;
            else if (metric_str == "linf") cfg.metric = magni::PointMetric::linf;
            else if (metric_str.rfind("euclid:", 0) == 0) {
                cfg.metric = magni::PointMetric::euclid_snapped;
                cfg.euclid_denominator = std::stol(metric_str.substr(7));
            } else {
                std::cerr << "error[usage]: --metric must be l1, linf, or euclid:D\n";
                return 1;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error[usage]: " << e.what() << "\n";
        return 1;
    }

    return magni::run(cfg, std::cout, std::cerr);
}

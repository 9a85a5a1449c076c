#include "magni/run.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "magni/blurred.hpp"
#include "magni/errors.hpp"
#include "magni/limits.hpp"
#include "magni/magnitude.hpp"

namespace magni {

namespace {

std::vector<Flag> required_flags_for(const std::string& command, ChainMode mode) {
    std::vector<Flag> req{Flag::zero_diagonal, Flag::finite_distances};
    if (command == "mh" || command == "euler") {
        if (command == "euler" || mode == ChainMode::normalized) req.push_back(Flag::separated);
    } else if (command == "blurred") {
        req.push_back(Flag::separated);
        req.push_back(Flag::triangle_ok);
    } else if (command == "ph" || command == "limits" || command == "approx") {
        req.push_back(Flag::separated);
        req.push_back(Flag::triangle_ok);
        req.push_back(Flag::symmetric);
    }
    return req;
}

FiniteMetricSpace load_space(const RunConfig& cfg, std::ostream& err) {
    std::ifstream in(cfg.input_path);
    if (!in) throw UsageError("cannot open input file '" + cfg.input_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    auto required = required_flags_for(cfg.command, cfg.mode);

    if (cfg.metric) {
        std::vector<std::string> labels;
        auto points = parse_point_cloud(buf.str(), &labels);
        SnapResult snapped =
            snap_point_cloud(points, *cfg.metric, cfg.euclid_denominator, labels, required);
        if (!snapped.warning.empty()) err << "warning: " << snapped.warning << "\n";
        return snapped.space;
    }
    return parse_distance_matrix(buf.str(), required);
}

Rat diameter_or_zero(const FiniteMetricSpace& s) {
    ExtRat d = s.diameter();
    return d.is_inf() ? Rat(0) : d.finite();
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const FiniteMetricSpace space = load_space(cfg, err);

    if (cfg.command == "magnitude") {
        out << magnitude_rational(space).to_string() << "\n";
        return 0;
    }

    if (cfg.command == "magfun") {
        std::vector<Rat> ts = cfg.t_values.empty() ? std::vector<Rat>{Rat(1)} : cfg.t_values;
        for (const Rat& t : ts) {
            MagnitudeEval e = magnitude_function_eval(space, t, cfg.precision);
            out << to_string(t) << "\t" << e.decimal << "\n";
        }
        return 0;
    }

    if (cfg.command == "mh" || cfg.command == "euler") {
        if (!cfg.n_max || !cfg.l_max)
            throw UsageError(cfg.command + " requires --n-max and --l-max");
        MHOptions opts;
        opts.mode = cfg.mode;
        opts.max_generators = cfg.max_generators;
        if (cfg.command == "mh") {
            out << magnitude_homology(space, *cfg.n_max, *cfg.l_max, opts).to_tsv();
        } else {
            out << euler_check(space, *cfg.n_max, *cfg.l_max, opts).to_tsv();
        }
        return 0;
    }

    if (cfg.command == "ph" || cfg.command == "blurred") {
        int dim_max = cfg.n_max.value_or(2);
        Rat eps_max = cfg.l_max.value_or(cfg.command == "ph"
                                             ? diameter_or_zero(space)
                                             : diameter_or_zero(space) * dim_max);
        ComplexOptions opts;
        opts.max_cells = cfg.max_cells;
        FilteredComplex fc = cfg.command == "ph"
                                 ? build_vietoris_rips(space, dim_max, eps_max, opts)
                                 : build_enriched_nerve(space, dim_max, eps_max, opts);
        if (!cfg.dump_complex_path.empty()) {
            std::ofstream dump(cfg.dump_complex_path);
            if (!dump)
                throw UsageError("cannot open dump file '" + cfg.dump_complex_path + "'");
            dump << fc.to_text();
        }
        Barcode bc = reduce_persistence(fc, cfg.prime);
        out << "# complete below degree " << bc.complete_below_degree
            << "; higher degrees may be truncation artifacts\n";
        out << "# scale truncated at " << to_string(eps_max)
            << "; deaths shown as inf may occur beyond it\n";
        out << bc.to_tsv();
        return 0;
    }

    if (cfg.command == "limits") {
        int k_max = cfg.n_max.value_or(1);
        out << "delta_min\t" << to_string(space.min_positive_distance()) << "\n";
        for (int k = 0; k <= k_max; ++k) {
            out << "nerve\t" << k << "\t" << limit_homology(space, k, FiltrationKind::nerve, cfg.prime)
                << "\n";
            out << "rips\t" << k << "\t" << limit_homology(space, k, FiltrationKind::rips, cfg.prime)
                << "\n";
            out << "ordinary\t" << k << "\t" << ordinary_mh_limit(space, k).rank << "\n";
        }
        auto [blur, ord] = separation_witness(space, cfg.prime);
        out << "separation\t" << blur << "\t" << ord << "\n";
        return 0;
    }

    if (cfg.command == "approx") {
        int k = cfg.n_max.value_or(1);
        std::vector<Rat> samples = cfg.sample_eps;
        if (samples.empty()) {
            // Default: every distinct positive distance, half the smallest,
            // and twice the diameter.
            std::set<Rat> s;
            for (int i = 0; i < space.size(); ++i)
                for (int j = 0; j < space.size(); ++j) {
                    const ExtRat& d = space.dist(i, j);
                    if (!d.is_inf() && d.value > 0) s.insert(d.value);
                }
            if (!s.empty()) {
                s.insert(*s.begin() / 2);
                s.insert(diameter_or_zero(space) * 2);
            } else {
                s.insert(Rat(1)); // one-point space: any sample is vacuous
            }
            samples.assign(s.begin(), s.end());
        }
        ApproximationReport report = c_approximation_check(space, k, cfg.prime, samples);
        out << report.to_text();
        out << report.to_tsv();
        return 0;
    }

    throw UsageError("unknown command '" + cfg.command + "'");
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.prime < 2 || !is_prime(config.prime))
            throw ValidationError("NonPrimeCharacteristic: --prime must be a prime, got " +
                                  std::to_string(config.prime));
        if (config.max_generators <= 0 || config.max_cells <= 0)
            throw UsageError("resource caps must be positive");
        if (config.n_max && *config.n_max < 0) throw UsageError("--n-max must be non-negative");
        if (config.l_max && *config.l_max < 0) throw UsageError("--l-max must be non-negative");

        if (!config.output_path.empty()) {
            std::ofstream file(config.output_path);
            if (!file)
                throw UsageError("cannot open output file '" + config.output_path + "'");
            std::ostringstream buffer;
            int code = dispatch(config, buffer, err);
            file << buffer.str(); // only written when the computation succeeded
            return code;
        }
        std::ostringstream buffer;
        int code = dispatch(config, buffer, err);
        out << buffer.str();
        return code;
    } catch (const Error& e) {
        const char* names[] = {"", "usage", "parse", "validation", "resource", "internal"};
        err << "error[" << names[static_cast<int>(e.category())] << "]: " << e.what() << "\n";
        return static_cast<int>(e.category());
    } catch (const std::exception& e) {
        err << "error[usage]: " << e.what() << "\n";
        return 1;
    }
}

} // namespace magni

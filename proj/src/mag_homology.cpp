#include "magni/mag_homology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "magni/errors.hpp"

namespace magni {

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("MAGNIPERSIST_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < static_cast<long>(hw)) return static_cast<int>(v);
        if (v >= static_cast<long>(hw)) return static_cast<int>(hw);
        return 1;
    }
    return static_cast<int>(hw);
}

std::string MHTable::to_tsv() const {
    std::string out;
    for (const auto& [key, g] : groups) {
        out += std::to_string(key.second) + "\t" + to_string(key.first) + "\t" +
               std::to_string(g.rank) + "\t";
        for (size_t i = 0; i < g.torsion.size(); ++i) {
            if (i) out += ",";
            out += g.torsion[i].get_str();
        }
        out += "\n";
    }
    return out;
}

std::vector<Tuple> mh_generators(const FiniteMetricSpace& space, int n, const Rat& l,
                                 ChainMode mode) {
    if (n < 0 || l < 0) throw ValidationError("mh_generators: n and l must be non-negative");
    const int m = space.size();
    std::vector<Tuple> out;
    std::vector<int> pts;
    // Lexicographic DFS; lengths only grow, so prune above l.
    auto dfs = [&](auto&& self, const Rat& len) -> void {
        if (static_cast<int>(pts.size()) == n + 1) {
            if (len == l) out.push_back(Tuple{pts, len});
            return;
        }
        for (int j = 0; j < m; ++j) {
            if (pts.empty()) {
                if (n > 0 || l == 0) { // a singleton has length 0
                    pts.push_back(j);
                    self(self, Rat(0));
                    pts.pop_back();
                }
                continue;
            }
            if (mode == ChainMode::normalized && j == pts.back()) continue;
            const ExtRat& step = space.dist(pts.back(), j);
            if (step.is_inf()) continue;
            Rat next = len + step.value;
            if (next > l) continue;
            pts.push_back(j);
            self(self, next);
            pts.pop_back();
        }
    };
    dfs(dfs, Rat(0));
    return out;
}

IntMat mh_boundary(const FiniteMetricSpace& space, const std::vector<Tuple>& from_gens,
                   const std::vector<Tuple>& to_gens, ChainMode mode) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < to_gens.size(); ++i) index[to_gens[i].points] = static_cast<int>(i);

    IntMat b(to_gens.size(), std::vector<Int>(from_gens.size(), Int(0)));
    for (size_t col = 0; col < from_gens.size(); ++col) {
        const auto& pts = from_gens[col].points;
        const int n = static_cast<int>(pts.size()) - 1;
        for (int i = 0; i <= n; ++i) {
            bool survives;
            if (i == 0)
                survives = space.dist(pts[0], pts[1]) == ExtRat(0);
            else if (i == n)
                survives = space.dist(pts[n - 1], pts[n]) == ExtRat(0);
            else
                survives = space.dist(pts[i - 1], pts[i]) + space.dist(pts[i], pts[i + 1]) ==
                           space.dist(pts[i - 1], pts[i + 1]);
            if (!survives) continue;

            std::vector<int> face;
            face.reserve(pts.size() - 1);
            for (int j = 0; j <= n; ++j)
                if (j != i) face.push_back(pts[j]);
            if (mode == ChainMode::normalized) {
                bool degenerate = false;
                for (size_t j = 1; j < face.size(); ++j)
                    if (face[j] == face[j - 1]) degenerate = true;
                if (degenerate) continue;
            }
            auto it = index.find(face);
            if (it == index.end())
                throw InternalCheckError("ModeMismatch: length-preserving face missing from the "
                                         "target block");
            b[it->second][col] += (i % 2 == 0) ? 1 : -1;
        }
    }
    return b;
}

namespace {

// Runs fn(i) for i in [0, count) on up to `workers` threads.
void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

HomologyGroup group_from_boundaries(int c_n, const SmithNormalForm& snf_out,
                                    const SmithNormalForm& snf_in) {
    // H_n = ker d_n / im d_{n+1}: rank from the two boundary ranks, torsion
    // from the invariant factors of the incoming boundary.
    HomologyGroup g;
    g.rank = c_n - snf_out.rank() - snf_in.rank();
    for (const auto& d : snf_in.diagonal)
        if (d >= 2) g.torsion.push_back(d);
    return g;
}

} // namespace

MHTable magnitude_homology(const FiniteMetricSpace& space, int n_max, const Rat& l_max,
                           const MHOptions& opts) {
    if (n_max < 0 || l_max < 0)
        throw ValidationError("magnitude_homology: bounds must be non-negative");
    if (opts.mode == ChainMode::normalized && !space.flags().separated)
        throw ValidationError("NotSeparated: normalized magnitude homology requires a "
                              "separated space");

    MHTable table;
    table.n_max = n_max;
    table.l_max = l_max;
    table.spectrum = length_spectrum(space, n_max, l_max);

    std::vector<std::map<int, HomologyGroup>> per_grade(table.spectrum.size());
    parallel_for(static_cast<int>(table.spectrum.size()), worker_count(), [&](int gi) {
        const Rat& l = table.spectrum[gi];
        // Generators for degrees 0..n_max+1; the extra degree feeds im d_{n_max+1}.
        std::vector<std::vector<Tuple>> gens(n_max + 2);
        long long total = 0;
        for (int n = 0; n <= n_max + 1; ++n) {
            gens[n] = mh_generators(space, n, l, opts.mode);
            total += static_cast<long long>(gens[n].size());
            if (total > opts.max_generators)
                throw ResourceBoundError("magnitude homology generators at grade " + to_string(l),
                                         total, opts.max_generators);
        }
        std::vector<IntMat> boundary(n_max + 2); // boundary[n]: degree n -> n-1
        for (int n = 1; n <= n_max + 1; ++n)
            boundary[n] = mh_boundary(space, gens[n], gens[n - 1], opts.mode);

        for (int n = 1; n <= n_max; ++n) {
            if (gens[n + 1].empty() || gens[n - 1].empty()) continue;
            IntMat square = mat_mul(boundary[n], boundary[n + 1]);
            for (const auto& row : square)
                for (const auto& x : row)
                    if (x != 0)
                        throw InternalCheckError("boundary squared nonzero at grade " +
                                                 to_string(l) + ", degree " + std::to_string(n));
        }

        std::vector<SmithNormalForm> snf(n_max + 2);
        for (int n = 1; n <= n_max + 1; ++n)
            if (!gens[n].empty() && !gens[n - 1].empty()) snf[n] = smith_normal_form(boundary[n]);

        for (int n = 0; n <= n_max; ++n) {
            per_grade[gi][n] =
                group_from_boundaries(static_cast<int>(gens[n].size()), snf[n], snf[n + 1]);
        }
    });

    for (size_t gi = 0; gi < table.spectrum.size(); ++gi)
        for (auto& [n, g] : per_grade[gi]) table.groups[{table.spectrum[gi], n}] = std::move(g);
    return table;
}

std::string EulerReport::to_tsv() const {
    std::string out;
    for (const auto& r : rows)
        out += to_string(r.grade) + "\t" + r.chi.get_str() + "\t" + r.series_coeff.get_str() +
               "\t" + to_string(r.expansion_coeff) + "\t" + (r.ok ? "true" : "false") + "\n";
    return out;
}

EulerReport euler_check(const FiniteMetricSpace& space, int n_max, const Rat& l_max,
                        const MHOptions& opts) {
    ExtRat delta = space.min_positive_distance();
    if (!delta.is_inf() && Rat(n_max) * delta.finite() < l_max)
        throw ValidationError("InsufficientDegreeBound: n_max " + std::to_string(n_max) +
                              " cannot cover grades up to " + to_string(l_max) +
                              " with minimum step " + to_string(delta.finite()));

    MHTable table = magnitude_homology(space, n_max, l_max, opts);
    GradedSeries series = magnitude_series(space, l_max);
    RationalFunctionQ f = magnitude_rational(space);
    auto expansion = expand_power_series(f, l_max);
    std::map<Rat, Rat> exp_by_grade;
    for (auto& [g, c] : expansion) exp_by_grade[g] = c;

    EulerReport report;
    for (const Rat& l : table.spectrum) {
        if (l > l_max) continue;
        EulerRow row;
        row.grade = l;
        row.chi = 0;
        for (int n = 0; n <= table.n_max; ++n) {
            const HomologyGroup* g = table.find(n, l);
            if (!g) continue;
            if (n % 2 == 0) row.chi += g->rank;
            else row.chi -= g->rank;
        }
        row.series_coeff = series.coefficient(l);
        auto it = exp_by_grade.find(l);
        row.expansion_coeff = it == exp_by_grade.end() ? Rat(0) : it->second;
        row.ok = Rat(row.chi) == row.expansion_coeff && row.chi == row.series_coeff;
        report.all_ok = report.all_ok && row.ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace magni

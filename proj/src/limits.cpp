#include "magni/limits.hpp"

#include <algorithm>
#include <set>

#include "magni/errors.hpp"
#include "magni/mag_homology.hpp"

namespace magni {

int limit_homology(const FiniteMetricSpace& space, int k, FiltrationKind which, int p) {
    if (k < 0) throw ValidationError("limit_homology: k must be non-negative");
    space.require(Flag::separated);
    FilteredComplex fc = which == FiltrationKind::nerve
                             ? build_enriched_nerve(space, k + 1, Rat(0))
                             : build_vietoris_rips(space, k + 1, Rat(0));
    return sublevel_betti(fc, Rat(0), p, k)[k];
}

OrdinaryLimit ordinary_mh_limit(const FiniteMetricSpace& space, int k) {
    if (k < 0) throw ValidationError("ordinary_mh_limit: k must be non-negative");
    space.require(Flag::separated);

    OrdinaryLimit out;
    out.rank = 0;

    // Sample consecutive pairs l < l' from the length spectrum and confirm the
    // induced map is zero on every generator: it sends a tuple to itself only
    // if the tuple's length is exactly l', which contradicts having length
    // exactly l.
    const int reach = k + 2;
    Rat max_fin(0);
    for (int i = 0; i < space.size(); ++i)
        for (int j = 0; j < space.size(); ++j) {
            const ExtRat& d = space.dist(i, j);
            if (!d.is_inf() && d.value > max_fin) max_fin = d.value;
        }
    std::vector<Rat> spectrum = length_spectrum(space, reach, max_fin * reach);
    for (size_t i = 0; i + 1 < spectrum.size(); ++i) {
        ConnectingMapAudit audit;
        audit.from_grade = spectrum[i];
        audit.to_grade = spectrum[i + 1];
        for (int n = 0; n <= reach; ++n) {
            auto gens = mh_generators(space, n, spectrum[i], ChainMode::normalized);
            for (const auto& g : gens) {
                ++audit.generators_checked;
                if (g.length == spectrum[i + 1]) audit.map_is_zero = false;
            }
        }
        out.audits.push_back(std::move(audit));
    }
    for (const auto& a : out.audits)
        if (!a.map_is_zero)
            throw InternalCheckError("nonzero connecting map between grades " +
                                     to_string(a.from_grade) + " and " + to_string(a.to_grade));
    return out;
}

std::pair<int, int> separation_witness(const FiniteMetricSpace& space, int p) {
    int blurred = limit_homology(space, 0, FiltrationKind::nerve, p);
    OrdinaryLimit ordinary = ordinary_mh_limit(space, 0);
    return {blurred, ordinary.rank};
}

std::string ApproximationReport::to_text() const {
    std::string out;
    out += "c-approximation check: k = " + std::to_string(k) + ", c = " + std::to_string(c) +
           "\n";
    out += "stabilization delta_min = " + to_string(stabilization_delta) + "\n";
    out += "limit ranks: nerve = " + std::to_string(limit_nerve) +
           ", rips = " + std::to_string(limit_rips) +
           (isomorphic ? " (isomorphic)" : " (NOT isomorphic)") + "\n";
    out += std::string("diagram checks: ") + (all_pass ? "all pass" : "FAILURES PRESENT") + "\n";
    return out;
}

std::string ApproximationReport::to_tsv() const {
    std::string out;
    for (const auto& d : diagram_checks)
        out += d.diagram + "\t" + to_string(d.eps) + "\t" + (d.pass ? "pass" : "fail") + "\n";
    return out;
}

namespace {

std::set<std::vector<int>> cell_set(const FilteredComplex& fc, const Rat& eps) {
    std::set<std::vector<int>> out;
    for (const auto& c : fc.cells)
        if (c.filtration <= eps) out.insert(c.vertices);
    return out;
}

// Vertex set of a nerve tuple as a strictly increasing VR tuple.
std::vector<int> support(const std::vector<int>& tuple) {
    std::vector<int> s = tuple;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace

ApproximationReport c_approximation_check(const FiniteMetricSpace& space, int k, int p,
                                          const std::vector<Rat>& sample_eps) {
    if (k < 0) throw ValidationError("c_approximation_check: k must be non-negative");
    space.require(Flag::symmetric);
    space.require(Flag::separated);

    ApproximationReport report;
    report.k = k;
    report.c = k + 1;
    report.sampled_eps = sample_eps;
    report.stabilization_delta = space.min_positive_distance();
    const int c = k + 1;
    const int dim = k + 1; // truncation: homology in degree k needs cells up to k+1

    Rat eps_hi(0);
    for (const Rat& e : sample_eps) eps_hi = std::max(eps_hi, e);
    Rat big = eps_hi * c * c;

    FilteredComplex nerve = build_enriched_nerve(space, dim, big);
    FilteredComplex rips = build_vietoris_rips(space, dim, big);

    auto add_check = [&](const std::string& name, const Rat& eps, bool pass) {
        report.diagram_checks.push_back(DiagramCheck{name, eps, pass});
        report.all_pass = report.all_pass && pass;
    };

    for (const Rat& eps : sample_eps) {
        auto n_at = cell_set(nerve, eps);
        auto v_at = cell_set(rips, eps);
        auto v_at_c = cell_set(rips, eps * c);
        auto n_at_c = cell_set(nerve, eps * c);
        auto n_at_c2 = cell_set(nerve, eps * c * c);
        auto v_at_c2 = cell_set(rips, eps * c * c);

        // phi: N(eps) -> V(c eps), on cells: a tuple maps to its vertex set.
        bool phi_ok = true;
        for (const auto& t : n_at)
            if (!v_at_c.count(support(t))) phi_ok = false;
        add_check("phi:N(e)->V(ce)", eps, phi_ok);

        // psi: V(eps) -> N(c eps): an ordered simplex with at most k+1 steps
        // has length <= (k+1) eps.
        bool psi_ok = true;
        for (const auto& t : v_at)
            if (!n_at_c.count(t)) psi_ok = false;
        add_check("psi:V(e)->N(ce)", eps, psi_ok);

        // Triangle (psi D_c) phi = N eta_{c^2}: N(eps) -> V(c eps) -> N(c^2 eps)
        // must land inside N(c^2 eps) and agree with the inclusion.
        bool tri1 = true;
        for (const auto& t : n_at) {
            if (!v_at_c.count(support(t)) || !n_at_c2.count(support(t)) || !n_at_c2.count(t))
                tri1 = false;
        }
        add_check("triangle:N->V->N", eps, tri1);

        // Triangle (phi D_c) psi = V eta_{c^2}.
        bool tri2 = true;
        for (const auto& t : v_at) {
            if (!n_at_c.count(t) || !v_at_c2.count(support(t)) || !v_at_c2.count(t)) tri2 = false;
        }
        add_check("triangle:V->N->V", eps, tri2);
    }

    // Naturality squares between consecutive sampled scales: all maps are
    // inclusions, so commutativity is the containment of cell sets.
    std::vector<Rat> sorted_eps = sample_eps;
    std::sort(sorted_eps.begin(), sorted_eps.end());
    for (size_t i = 0; i + 1 < sorted_eps.size(); ++i) {
        const Rat& a = sorted_eps[i];
        const Rat& b = sorted_eps[i + 1];
        bool sq1 = true, sq2 = true;
        auto n_a = cell_set(nerve, a), n_b = cell_set(nerve, b);
        auto v_ca = cell_set(rips, a * c), v_cb = cell_set(rips, b * c);
        auto v_a = cell_set(rips, a), v_b = cell_set(rips, b);
        auto n_ca = cell_set(nerve, a * c), n_cb = cell_set(nerve, b * c);
        for (const auto& t : n_a)
            if (!n_b.count(t) || !v_ca.count(support(t)) || !v_cb.count(support(t))) sq1 = false;
        for (const auto& t : v_a)
            if (!v_b.count(t) || !n_ca.count(t) || !n_cb.count(t)) sq2 = false;
        add_check("square:phi natural", a, sq1);
        add_check("square:psi natural", a, sq2);
    }

    report.limit_nerve = limit_homology(space, k, FiltrationKind::nerve, p);
    report.limit_rips = limit_homology(space, k, FiltrationKind::rips, p);
    report.isomorphic = report.limit_nerve == report.limit_rips;
    return report;
}

} // namespace magni

#pragma once

#include <string>
#include <vector>

#include "magni/persistence.hpp"

namespace magni {

// Rank of H_k of the chosen filtration in the eps -> 0 limit. For a finite
// separated space the inverse system is constant on (0, delta_min), so the
// limit is computed at eps = 0.
int limit_homology(const FiniteMetricSpace& space, int k, FiltrationKind which, int p);

struct ConnectingMapAudit {
    Rat from_grade, to_grade;
    long long generators_checked = 0;
    bool map_is_zero = true;
};

struct OrdinaryLimit {
    int rank = 0; // always 0; verified via the audit below
    std::vector<ConnectingMapAudit> audits;
};

// The limit of ordinary (grade-exact) magnitude homology, with an audit that
// the connecting maps induced by the coefficient inclusions vanish on
// generators: a tuple of length exactly l never has length exactly l' > l.
OrdinaryLimit ordinary_mh_limit(const FiniteMetricSpace& space, int k);

// (blurred limit rank at k = 0, ordinary limit rank at k = 0) = (m, 0).
std::pair<int, int> separation_witness(const FiniteMetricSpace& space, int p);

struct DiagramCheck {
    std::string diagram;
    Rat eps;
    bool pass = false;
};

struct ApproximationReport {
    int k = 0;
    int c = 1; // = k + 1
    std::vector<Rat> sampled_eps;
    std::vector<DiagramCheck> diagram_checks;
    ExtRat stabilization_delta;
    int limit_nerve = 0;
    int limit_rips = 0;
    bool isomorphic = false;
    bool all_pass = true;

    std::string to_text() const;
    std::string to_tsv() const;
};

// Verifies the truncated inclusions N(eps) into V(eps) and V(eps) into
// N((k+1) eps) cell-by-cell at each sampled eps, checks the four
// c-approximation diagrams (containments, since every map is an inclusion),
// and compares the two limits.
ApproximationReport c_approximation_check(const FiniteMetricSpace& space, int k, int p,
                                          const std::vector<Rat>& sample_eps);

} // namespace magni

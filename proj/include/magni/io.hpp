#pragma once

#include <string>
#include <vector>

#include "magni/metric_space.hpp"

namespace magni {

// Distance-matrix text format: optional "# labels: a b c" header, a line with
// the point count m, then m lines of m whitespace-separated entries, each an
// integer, a fraction "p/q", or "inf". Throws ParseError with position and
// ValidationError from the space checks.
FiniteMetricSpace parse_distance_matrix(const std::string& text,
                                        const std::vector<Flag>& required);

std::string emit_distance_matrix(const FiniteMetricSpace& space);

enum class PointMetric { l1, linf, euclid_snapped };

struct SnapResult {
    FiniteMetricSpace space;
    std::string warning; // nonempty for euclid_snapped
};

// L1/Linf distances are exact; euclid_snapped rounds each Euclidean distance
// to the nearest multiple of 1/denominator and re-validates the triangle
// inequality (TriangleBrokenByRounding with a witness otherwise).
SnapResult snap_point_cloud(const std::vector<std::vector<Rat>>& points, PointMetric metric,
                            long denominator, const std::vector<std::string>& labels,
                            const std::vector<Flag>& required);

// Point-cloud text format: optional "# labels: ..." header, a line "m dim",
// then m lines of dim rational coordinates.
std::vector<std::vector<Rat>> parse_point_cloud(const std::string& text,
                                                std::vector<std::string>* labels_out);

} // namespace magni

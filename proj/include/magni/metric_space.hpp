#pragma once

#include <string>
#include <vector>

#include "magni/rational.hpp"

namespace magni {

enum class Flag { symmetric, zero_diagonal, separated, finite_distances, triangle_ok };

const char* flag_name(Flag f);

struct SpaceFlags {
    bool symmetric = false;
    bool zero_diagonal = false;
    bool separated = false;
    bool finite_distances = false;
    bool triangle_ok = false;

    bool has(Flag f) const;
};

// The flag set required of genuine finite metric spaces (possibly non-separated).
std::vector<Flag> default_required_flags();

// A finite quasi-pseudo-metric space with exact rational distances. Immutable
// after construction; all operations on it are pure.
class FiniteMetricSpace {
public:
    using Matrix = std::vector<std::vector<ExtRat>>;

    // Computes all structural flags and fails with a witness if a required one
    // does not hold. Throws ValidationError (NonSquare, NegativeEntry,
    // RequiredFlagViolated).
    static FiniteMetricSpace validate(Matrix dist, std::vector<std::string> labels,
                                      const std::vector<Flag>& required);
    static FiniteMetricSpace validate(Matrix dist, const std::vector<Flag>& required);

    int size() const { return static_cast<int>(dist_.size()); }
    const ExtRat& dist(int i, int j) const { return dist_[i][j]; }
    const Matrix& matrix() const { return dist_; }
    const SpaceFlags& flags() const { return flags_; }
    const std::vector<std::string>& labels() const { return labels_; }

    void require(Flag f) const;

    // Every finite distance multiplied by t > 0; flags are unchanged by positive scaling.
    FiniteMetricSpace scaled(const Rat& t) const;

    // Space with rows/columns permuted by perm (point i of the result is point perm[i]).
    FiniteMetricSpace relabeled(const std::vector<int>& perm) const;

    // Minimum positive distance; infinite when no positive finite distance exists.
    ExtRat min_positive_distance() const;
    // Maximum finite distance (0 for a one-point space). Infinite if any distance is.
    ExtRat diameter() const;

    bool operator==(const FiniteMetricSpace& other) const {
        return dist_ == other.dist_ && labels_ == other.labels_;
    }

private:
    FiniteMetricSpace(Matrix dist, std::vector<std::string> labels, SpaceFlags flags)
        : dist_(std::move(dist)), labels_(std::move(labels)), flags_(flags) {}

    Matrix dist_;
    std::vector<std::string> labels_;
    SpaceFlags flags_;
};

// A tuple of point indices with its exact length (sum of consecutive distances).
struct Tuple {
    std::vector<int> points;
    Rat length;

    int degree() const { return static_cast<int>(points.size()) - 1; }
    bool nondegenerate() const {
        for (size_t i = 1; i < points.size(); ++i)
            if (points[i] == points[i - 1]) return false;
        return true;
    }
    bool operator==(const Tuple& o) const { return points == o.points; }
    bool operator<(const Tuple& o) const { return points < o.points; }
};

// Sum of consecutive distances along t; 0 for a single-entry tuple.
// Throws ValidationError (IndexOutOfRange) for invalid indices.
ExtRat tuple_length(const FiniteMetricSpace& space, const std::vector<int>& t);

// All distinct finite lengths of nondegenerate tuples with degree <= n_max and
// length <= l_max, ascending. Always contains 0.
std::vector<Rat> length_spectrum(const FiniteMetricSpace& space, int n_max, const Rat& l_max);

} // namespace magni

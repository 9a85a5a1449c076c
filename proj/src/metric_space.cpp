#include "magni/metric_space.hpp"

#include <algorithm>
#include <set>

namespace magni {

const char* flag_name(Flag f) {
    switch (f) {
    case Flag::symmetric: return "symmetric";
    case Flag::zero_diagonal: return "zero_diagonal";
    case Flag::separated: return "separated";
    case Flag::finite_distances: return "finite_distances";
    case Flag::triangle_ok: return "triangle_ok";
    }
    return "?";
}

bool SpaceFlags::has(Flag f) const {
    switch (f) {
    case Flag::symmetric: return symmetric;
    case Flag::zero_diagonal: return zero_diagonal;
    case Flag::separated: return separated;
    case Flag::finite_distances: return finite_distances;
    case Flag::triangle_ok: return triangle_ok;
    }
    return false;
}

std::vector<Flag> default_required_flags() {
    return {Flag::zero_diagonal, Flag::symmetric, Flag::triangle_ok, Flag::finite_distances};
}

static SpaceFlags compute_flags(const FiniteMetricSpace::Matrix& d) {
    const int m = static_cast<int>(d.size());
    SpaceFlags f;
    f.symmetric = f.zero_diagonal = f.separated = f.finite_distances = f.triangle_ok = true;

    for (int i = 0; i < m; ++i) {
        if (!(d[i][i] == ExtRat(0))) f.zero_diagonal = false;
        for (int j = 0; j < m; ++j) {
            if (d[i][j].is_inf()) f.finite_distances = false;
            if (d[i][j] != d[j][i]) f.symmetric = false;
            if (i != j && d[i][j] == ExtRat(0)) f.separated = false;
        }
    }
    for (int i = 0; i < m && f.triangle_ok; ++i)
        for (int j = 0; j < m && f.triangle_ok; ++j)
            for (int k = 0; k < m; ++k)
                if (d[i][j] + d[j][k] < d[i][k]) {
                    f.triangle_ok = false;
                    break;
                }
    return f;
}

static std::string witness_for(Flag f, const FiniteMetricSpace::Matrix& d) {
    const int m = static_cast<int>(d.size());
    switch (f) {
    case Flag::zero_diagonal:
        for (int i = 0; i < m; ++i)
            if (!(d[i][i] == ExtRat(0))) return "(" + std::to_string(i) + "," + std::to_string(i) + ")";
        break;
    case Flag::symmetric:
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (d[i][j] != d[j][i]) return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
    case Flag::separated:
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && d[i][j] == ExtRat(0))
                    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
    case Flag::finite_distances:
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (d[i][j].is_inf()) return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
    case Flag::triangle_ok:
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    if (d[i][j] + d[j][k] < d[i][k])
                        return "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ")";
        break;
    }
    return "()";
}

FiniteMetricSpace FiniteMetricSpace::validate(Matrix dist, std::vector<std::string> labels,
                                              const std::vector<Flag>& required) {
    const size_t m = dist.size();
    for (const auto& row : dist)
        if (row.size() != m) throw ValidationError("NonSquare: matrix has a row of width " +
                                                   std::to_string(row.size()) + ", expected " +
                                                   std::to_string(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (!dist[i][j].is_inf() && dist[i][j].value < 0)
                throw ValidationError("NegativeEntry: dist(" + std::to_string(i) + "," +
                                      std::to_string(j) + ") = " + to_string(dist[i][j]));

    if (labels.empty())
        for (size_t i = 0; i < m; ++i) labels.push_back("p" + std::to_string(i));
    if (labels.size() != m)
        throw ValidationError("label count " + std::to_string(labels.size()) +
                              " does not match point count " + std::to_string(m));

    SpaceFlags flags = compute_flags(dist);
    for (Flag f : required)
        if (!flags.has(f))
            throw ValidationError(std::string("RequiredFlagViolated: ") + flag_name(f) +
                                  " fails at " + witness_for(f, dist));
    return FiniteMetricSpace(std::move(dist), std::move(labels), flags);
}

FiniteMetricSpace FiniteMetricSpace::validate(Matrix dist, const std::vector<Flag>& required) {
    return validate(std::move(dist), {}, required);
}

void FiniteMetricSpace::require(Flag f) const {
    if (!flags_.has(f))
        throw ValidationError(std::string("operation requires flag ") + flag_name(f) +
                              " which does not hold (witness " + witness_for(f, dist_) + ")");
}

FiniteMetricSpace FiniteMetricSpace::scaled(const Rat& t) const {
    if (t <= 0) throw ValidationError("NonPositiveScale: scale factor must be positive, got " +
                                      to_string(t));
    Matrix d = dist_;
    for (auto& row : d)
        for (auto& e : row)
            if (!e.is_inf()) e.value *= t;
    return FiniteMetricSpace(std::move(d), labels_, flags_);
}

FiniteMetricSpace FiniteMetricSpace::relabeled(const std::vector<int>& perm) const {
    const int m = size();
    if (static_cast<int>(perm.size()) != m)
        throw ValidationError("permutation size mismatch");
    Matrix d(m, std::vector<ExtRat>(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = labels_[perm[i]];
        for (int j = 0; j < m; ++j) d[i][j] = dist_[perm[i]][perm[j]];
    }
    return FiniteMetricSpace(std::move(d), std::move(labels), flags_);
}

ExtRat FiniteMetricSpace::min_positive_distance() const {
    ExtRat best = ExtRat::inf();
    for (const auto& row : dist_)
        for (const auto& e : row)
            if (!e.is_inf() && e.value > 0 && ExtRat(e) < best) best = e;
    return best;
}

ExtRat FiniteMetricSpace::diameter() const {
    ExtRat best(0);
    for (const auto& row : dist_)
        for (const auto& e : row)
            if (e.is_inf()) return ExtRat::inf();
            else if (best < e) best = e;
    return best;
}

ExtRat tuple_length(const FiniteMetricSpace& space, const std::vector<int>& t) {
    for (int p : t)
        if (p < 0 || p >= space.size())
            throw ValidationError("IndexOutOfRange: point index " + std::to_string(p) +
                                  " not in [0," + std::to_string(space.size()) + ")");
    ExtRat len(0);
    for (size_t i = 0; i + 1 < t.size(); ++i) len = len + space.dist(t[i], t[i + 1]);
    return len;
}

std::vector<Rat> length_spectrum(const FiniteMetricSpace& space, int n_max, const Rat& l_max) {
    if (n_max < 0) throw ValidationError("length_spectrum: n_max must be >= 0");
    const int m = space.size();
    std::set<Rat> seen;
    seen.insert(Rat(0));
    if (l_max < 0) return {};

    // DFS over nondegenerate tuples; lengths only grow, so prune at l_max.
    // Tuples containing an infinite step are excluded.
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int last, const Rat& len, int degree) -> void {
        if (degree == n_max) return;
        for (int j = 0; j < m; ++j) {
            if (j == last) continue;
            const ExtRat& step = space.dist(last, j);
            if (step.is_inf()) continue;
            Rat next = len + step.value;
            if (next > l_max) continue;
            seen.insert(next);
            self(self, j, next, degree + 1);
        }
    };
    for (int i = 0; i < m; ++i) dfs(dfs, i, Rat(0), 0);
    return std::vector<Rat>(seen.begin(), seen.end());
}

} // namespace magni

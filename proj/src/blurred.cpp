#include "magni/blurred.hpp"

#include <map>

#include "magni/errors.hpp"

namespace magni {

Barcode blurred_mh(const FiniteMetricSpace& space, int dim_max, const Rat& eps_max, int p,
                   const ComplexOptions& opts) {
    return reduce_persistence(build_enriched_nerve(space, dim_max, eps_max, opts), p);
}

CoendComplex coend_complex_at(const FiniteMetricSpace& space, const Rat& eps, int n_max,
                              bool include_degenerate, long long max_generators) {
    if (eps < 0 || n_max < 0)
        throw ValidationError("coend_complex_at: bounds must be non-negative");
    space.require(Flag::triangle_ok);
    space.require(Flag::zero_diagonal);
    space.require(Flag::finite_distances);
    const int m = space.size();

    CoendComplex cc;
    cc.eps = eps;
    cc.n_max = n_max;
    cc.includes_degenerate = include_degenerate;

    // Enumerate tuples of length <= eps per degree, lexicographically.
    std::vector<std::vector<std::vector<int>>> gens(n_max + 1);
    long long total = 0;
    std::vector<int> pts;
    auto dfs = [&](auto&& self, const Rat& len) -> void {
        if (!pts.empty()) {
            int n = static_cast<int>(pts.size()) - 1;
            gens[n].push_back(pts);
            if (++total > max_generators)
                throw ResourceBoundError("coend generators", total, max_generators);
        }
        if (static_cast<int>(pts.size()) == n_max + 1) return;
        for (int j = 0; j < m; ++j) {
            if (!include_degenerate && !pts.empty() && j == pts.back()) continue;
            Rat next = len;
            if (!pts.empty()) {
                const ExtRat& step = space.dist(pts.back(), j);
                if (step.is_inf()) continue;
                next = len + step.value;
                if (next > eps) continue;
            }
            pts.push_back(j);
            self(self, next);
            pts.pop_back();
        }
    };
    dfs(dfs, Rat(0));

    cc.generator_counts.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        cc.generator_counts[n] = static_cast<long long>(gens[n].size());

    cc.boundaries.resize(n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < gens[n - 1].size(); ++i)
            index[gens[n - 1][i]] = static_cast<int>(i);
        IntMat b(gens[n - 1].size(), std::vector<Int>(gens[n].size(), Int(0)));
        for (size_t col = 0; col < gens[n].size(); ++col) {
            const auto& t = gens[n][col];
            for (int i = 0; i <= n; ++i) {
                std::vector<int> face;
                face.reserve(t.size() - 1);
                for (int j = 0; j <= n; ++j)
                    if (j != i) face.push_back(t[j]);
                if (!include_degenerate) {
                    bool degenerate = false;
                    for (size_t j = 1; j < face.size(); ++j)
                        if (face[j] == face[j - 1]) degenerate = true;
                    if (degenerate) continue;
                }
                auto it = index.find(face);
                if (it == index.end())
                    throw InternalCheckError("coend face missing (triangle inequality?)");
                b[it->second][col] += (i % 2 == 0) ? 1 : -1;
            }
        }
        cc.boundaries[n] = std::move(b);
    }
    return cc;
}

namespace {

int mod_p_rank(const IntMat& mat, int p) {
    if (mat.empty() || mat[0].empty()) return 0;
    const int rows = static_cast<int>(mat.size());
    const int cols = static_cast<int>(mat[0].size());
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Int r = mat[i][j] % p;
            long long v = r.get_si() % p;
            a[i][j] = (v + p) % p;
        }
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        long long inv = 1;
        { // inverse of a[rank][col] mod p
            long long t = 0, nt = 1, r = p, nr = a[rank][col];
            while (nr != 0) {
                long long q = r / nr;
                long long tt = t - q * nt;
                t = nt;
                nt = tt;
                long long rr = r - q * nr;
                r = nr;
                nr = rr;
            }
            inv = ((t % p) + p) % p;
        }
        for (int i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            long long f = (p - (a[i][col] * inv) % p) % p;
            for (int j = col; j < cols; ++j) a[i][j] = (a[i][j] + f * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<int> coend_homology_ranks(const CoendComplex& complex, int p) {
    if (!is_prime(p))
        throw ValidationError("NonPrimeCharacteristic: " + std::to_string(p) + " is not prime");
    std::vector<int> ranks(complex.n_max + 1, 0);
    for (int n = 1; n <= complex.n_max; ++n) ranks[n] = mod_p_rank(complex.boundaries[n], p);

    std::vector<int> betti;
    for (int k = 0; k + 1 <= complex.n_max; ++k) {
        int c_k = static_cast<int>(complex.generator_counts[k]);
        betti.push_back(c_k - ranks[k] - ranks[k + 1]);
    }
    return betti;
}

} // namespace magni

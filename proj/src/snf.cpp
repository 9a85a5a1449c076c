#include "magni/snf.hpp"

#include <algorithm>

#include "magni/errors.hpp"

namespace magni {

IntMat identity_matrix(int n) {
    IntMat id(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const int r = static_cast<int>(a.size());
    const int inner = r ? static_cast<int>(a[0].size()) : 0;
    const int c = b.empty() ? 0 : static_cast<int>(b[0].size());
    if (inner != static_cast<int>(b.size())) throw InternalCheckError("mat_mul shape mismatch");
    IntMat out(r, std::vector<Int>(c, Int(0)));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

namespace {

struct SnfState {
    IntMat m, u, v;
    int rows, cols;

    void swap_rows(int a, int b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        std::swap(u[a], u[b]);
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (auto& row : m) std::swap(row[a], row[b]);
        for (auto& row : v) std::swap(row[a], row[b]);
    }
    void negate_row(int r) {
        for (auto& x : m[r]) x = -x;
        for (auto& x : u[r]) x = -x;
    }
    // row a += q * row b
    void add_row(int a, int b, const Int& q) {
        for (int j = 0; j < cols; ++j) m[a][j] += q * m[b][j];
        for (size_t j = 0; j < u[a].size(); ++j) u[a][j] += q * u[b][j];
    }
    // col a += q * col b
    void add_col(int a, int b, const Int& q) {
        for (int i = 0; i < rows; ++i) m[i][a] += q * m[i][b];
        for (auto& row : v) row[a] += q * row[b];
    }

    // Smallest nonzero |entry| in the trailing submatrix starting at k.
    bool find_pivot(int k, int& pi, int& pj) {
        bool found = false;
        Int best;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Int a = abs(m[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

} // namespace

SmithNormalForm smith_normal_form(const IntMat& input) {
    SnfState s;
    s.m = input;
    s.rows = static_cast<int>(input.size());
    s.cols = s.rows ? static_cast<int>(input[0].size()) : 0;
    for (const auto& row : input)
        if (static_cast<int>(row.size()) != s.cols)
            throw ValidationError("smith_normal_form: ragged matrix");
    s.u = identity_matrix(s.rows);
    s.v = identity_matrix(s.cols);

    // Quotient rounded to nearest, so the remainder magnitude is at most
    // half the pivot and the minimal entry halves every sweep.
    auto nearest_quotient = [](const Int& a, const Int& b) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (2 * abs(r) > abs(b)) q += 1;
        return q;
    };

    const int bound = std::min(s.rows, s.cols);
    int k = 0;
    while (k < bound) {
        int pi = 0, pj = 0;
        if (!s.find_pivot(k, pi, pj)) break;
        s.swap_rows(k, pi);
        s.swap_cols(k, pj);

        bool dirty = false;
        for (int i = k + 1; i < s.rows; ++i) {
            if (s.m[i][k] == 0) continue;
            Int q = nearest_quotient(s.m[i][k], s.m[k][k]);
            if (q != 0) s.add_row(i, k, -q);
            if (s.m[i][k] != 0) dirty = true;
        }
        for (int j = k + 1; j < s.cols; ++j) {
            if (s.m[k][j] == 0) continue;
            Int q = nearest_quotient(s.m[k][j], s.m[k][k]);
            if (q != 0) s.add_col(j, k, -q);
            if (s.m[k][j] != 0) dirty = true;
        }
        if (dirty) continue; // re-select the minimal pivot and sweep again

        // Pivot must divide every remaining entry; fold an offending row in,
        // which forces a strictly smaller pivot on the next sweep.
        bool folded = false;
        for (int i = k + 1; i < s.rows && !folded; ++i)
            for (int j = k + 1; j < s.cols; ++j)
                if (s.m[i][j] % s.m[k][k] != 0) {
                    s.add_row(k, i, Int(1));
                    folded = true;
                    break;
                }
        if (folded) continue;

        if (s.m[k][k] < 0) s.negate_row(k);
        ++k;
    }

    SmithNormalForm out;
    out.d = std::move(s.m);
    out.u = std::move(s.u);
    out.v = std::move(s.v);
    for (int i = 0; i < bound; ++i) {
        if (out.d[i][i] == 0) break;
        out.diagonal.push_back(out.d[i][i]);
    }
    return out;
}

int integer_rank(const IntMat& m) {
    return smith_normal_form(m).rank();
}

} // namespace magni

#include "magni/persistence.hpp"

#include <algorithm>
#include <map>

#include "magni/errors.hpp"

namespace magni {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string Barcode::to_tsv() const {
    std::string out;
    for (const auto& b : bars)
        out += std::to_string(b.degree) + "\t" + to_string(b.birth) + "\t" + to_string(b.death) +
               "\n";
    return out;
}

namespace {

long long mod_inverse(long long a, long long p) {
    // Extended Euclid; p prime and a not divisible by p.
    long long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tt = t - q * new_t;
        t = new_t;
        new_t = tt;
        long long rr = r - q * new_r;
        r = new_r;
        new_r = rr;
    }
    return ((t % p) + p) % p;
}

using SparseCol = std::vector<std::pair<int, long long>>; // ascending row ids, coeff in (0,p)

int pivot_of(const SparseCol& c) { return c.empty() ? -1 : c.back().first; }

SparseCol add_scaled(const SparseCol& a, const SparseCol& b, long long factor, long long p) {
    SparseCol out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            long long v = (b[j].second * factor) % p;
            if (v) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            long long v = (a[i].second + b[j].second * factor) % p;
            if (v) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Barcode reduce_persistence(const FilteredComplex& complex, int p) {
    if (!is_prime(p))
        throw ValidationError("NonPrimeCharacteristic: " + std::to_string(p) + " is not prime");
    complex.check_invariants();

    const int n = static_cast<int>(complex.cells.size());
    std::vector<SparseCol> cols(n);
    for (int j = 0; j < n; ++j) {
        SparseCol c;
        for (const auto& [id, sign] : complex.cells[j].boundary)
            c.emplace_back(id, ((sign % p) + p) % p);
        std::sort(c.begin(), c.end());
        c.erase(std::remove_if(c.begin(), c.end(), [](auto& e) { return e.second == 0; }),
                c.end());
        cols[j] = std::move(c);
    }

    std::vector<int> owner(n, -1); // pivot row -> column that owns it
    std::vector<int> killed_by(n, -1);
    for (int j = 0; j < n; ++j) {
        while (!cols[j].empty()) {
            int piv = pivot_of(cols[j]);
            int other = owner[piv];
            if (other < 0) break;
            long long lead = cols[j].back().second;
            long long other_lead = cols[other].back().second;
            long long factor = (p - (lead * mod_inverse(other_lead, p)) % p) % p;
            cols[j] = add_scaled(cols[j], cols[other], factor, p);
        }
        if (!cols[j].empty()) {
            int piv = pivot_of(cols[j]);
            owner[piv] = j;
            killed_by[piv] = j;
        }
    }

    Barcode bc;
    bc.characteristic = p;
    bc.complete_below_degree = complex.dim_max;
    for (int i = 0; i < n; ++i) {
        const Cell& cell = complex.cells[i];
        if (killed_by[i] >= 0) {
            const Cell& killer = complex.cells[killed_by[i]];
            if (cell.filtration != killer.filtration)
                bc.bars.push_back(Bar{cell.dim, cell.filtration, ExtRat(killer.filtration)});
        } else if (cols[i].empty()) {
            bc.bars.push_back(Bar{cell.dim, cell.filtration, ExtRat::inf()});
        }
    }
    std::sort(bc.bars.begin(), bc.bars.end(), [](const Bar& a, const Bar& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    return bc;
}

std::vector<int> sublevel_betti(const FilteredComplex& complex, const Rat& eps, int p, int k_max) {
    if (!is_prime(p))
        throw ValidationError("NonPrimeCharacteristic: " + std::to_string(p) + " is not prime");

    // Dense F_p rank of each boundary matrix restricted to the sublevel.
    std::vector<std::vector<int>> cells_by_dim(k_max + 2);
    std::vector<int> dense_index(complex.cells.size(), -1);
    for (const auto& c : complex.cells) {
        if (c.filtration > eps || c.dim > k_max + 1) continue;
        dense_index[c.id] = static_cast<int>(cells_by_dim[c.dim].size());
        cells_by_dim[c.dim].push_back(c.id);
    }

    auto rank_of_boundary = [&](int dim) -> int {
        // Matrix of d_dim: columns are dim-cells, rows are (dim-1)-cells.
        if (dim <= 0 || dim > k_max + 1) return 0;
        const auto& src = cells_by_dim[dim];
        if (src.empty() || cells_by_dim[dim - 1].empty()) return 0;
        const int rows = static_cast<int>(cells_by_dim[dim - 1].size());
        std::vector<std::vector<long long>> mat;
        mat.reserve(src.size());
        for (int id : src) {
            std::vector<long long> col(rows, 0);
            for (const auto& [b, sign] : complex.cells[id].boundary) {
                int r = dense_index[b];
                if (r >= 0) col[r] = ((col[r] + sign) % p + p) % p;
            }
            mat.push_back(std::move(col));
        }
        // Column-wise elimination.
        int rank = 0;
        std::vector<int> pivot_row_of;
        std::vector<std::vector<long long>*> reduced;
        for (auto& col : mat) {
            for (;;) {
                int piv = -1;
                for (int r = rows - 1; r >= 0; --r)
                    if (col[r] != 0) {
                        piv = r;
                        break;
                    }
                if (piv < 0) break;
                bool hit = false;
                for (size_t k = 0; k < reduced.size(); ++k) {
                    if (pivot_row_of[k] == piv) {
                        long long factor =
                            (p - (col[piv] * mod_inverse((*reduced[k])[piv], p)) % p) % p;
                        for (int r = 0; r <= piv; ++r)
                            col[r] = (col[r] + factor * (*reduced[k])[r]) % p;
                        hit = true;
                        break;
                    }
                }
                if (!hit) {
                    pivot_row_of.push_back(piv);
                    reduced.push_back(&col);
                    ++rank;
                    break;
                }
            }
        }
        return rank;
    };

    std::vector<int> betti(k_max + 1, 0);
    std::vector<int> ranks(k_max + 2, 0);
    for (int d = 1; d <= k_max + 1; ++d) ranks[d] = rank_of_boundary(d);
    for (int k = 0; k <= k_max; ++k) {
        int c_k = static_cast<int>(cells_by_dim[k].size());
        betti[k] = c_k - ranks[k] - ranks[k + 1];
    }
    return betti;
}

} // namespace magni

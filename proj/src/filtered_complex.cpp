#include "magni/filtered_complex.hpp"

#include <algorithm>
#include <map>

#include "magni/errors.hpp"

namespace magni {

std::vector<Rat> FilteredComplex::critical_values() const {
    std::vector<Rat> out;
    for (const auto& c : cells) out.push_back(c.filtration);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void FilteredComplex::check_invariants() const {
    for (size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        if (c.id != static_cast<int>(i))
            throw ValidationError("UnsortedComplex: cell ids out of order");
        if (i > 0) {
            const Cell& prev = cells[i - 1];
            if (c.filtration < prev.filtration ||
                (c.filtration == prev.filtration && c.dim < prev.dim))
                throw ValidationError("UnsortedComplex: cells not sorted by "
                                      "(filtration, dimension)");
        }
        for (const auto& [b, sign] : c.boundary) {
            if (b < 0 || b >= c.id)
                throw ValidationError("UnsortedComplex: boundary cell does not precede its cell");
            if (cells[b].dim != c.dim - 1)
                throw ValidationError("UnsortedComplex: boundary dimension mismatch");
            if (c.filtration < cells[b].filtration)
                throw ValidationError("UnsortedComplex: filtration not sublevel-monotone");
            if (sign != 1 && sign != -1)
                throw ValidationError("UnsortedComplex: boundary signs must be +-1");
        }
    }
}

std::string FilteredComplex::to_text() const {
    std::string out;
    for (const auto& c : cells) {
        out += std::to_string(c.id) + " " + std::to_string(c.dim) + " " + to_string(c.filtration);
        std::string ids, signs;
        for (const auto& [b, s] : c.boundary) {
            ids += " " + std::to_string(b);
            signs += " " + std::string(s > 0 ? "+1" : "-1");
        }
        out += ids + signs + "\n";
    }
    return out;
}

namespace {

struct ProtoCell {
    std::vector<int> vertices;
    Rat filtration;
};

FilteredComplex assemble(FiltrationKind kind, int dim_max, const Rat& eps_max,
                         std::vector<ProtoCell> protos,
                         const std::vector<std::vector<std::pair<std::vector<int>, int>>>& faces) {
    // Sort by (filtration, dimension, tuple) and resolve face references.
    std::vector<size_t> order(protos.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const auto& pa = protos[a];
        const auto& pb = protos[b];
        if (pa.filtration != pb.filtration) return pa.filtration < pb.filtration;
        if (pa.vertices.size() != pb.vertices.size())
            return pa.vertices.size() < pb.vertices.size();
        return pa.vertices < pb.vertices;
    });

    std::map<std::vector<int>, int> id_of;
    FilteredComplex fc;
    fc.kind = kind;
    fc.dim_max = dim_max;
    fc.eps_max = eps_max;
    fc.cells.reserve(protos.size());
    for (size_t rank = 0; rank < order.size(); ++rank) {
        const ProtoCell& p = protos[order[rank]];
        Cell c;
        c.id = static_cast<int>(rank);
        c.dim = static_cast<int>(p.vertices.size()) - 1;
        c.filtration = p.filtration;
        c.vertices = p.vertices;
        std::map<int, int> acc;
        for (const auto& [face, sign] : faces[order[rank]]) {
            auto it = id_of.find(face);
            if (it == id_of.end())
                throw InternalCheckError("face does not precede its cell in filtration order");
            acc[it->second] += sign;
        }
        for (const auto& [id, s] : acc)
            if (s != 0) c.boundary.emplace_back(id, s);
        id_of[c.vertices] = c.id;
        fc.cells.push_back(std::move(c));
    }
    fc.check_invariants();
    return fc;
}

} // namespace

FilteredComplex build_enriched_nerve(const FiniteMetricSpace& space, int dim_max,
                                     const Rat& eps_max, const ComplexOptions& opts) {
    if (dim_max < 0 || eps_max < 0)
        throw ValidationError("build_enriched_nerve: bounds must be non-negative");
    space.require(Flag::separated);
    space.require(Flag::triangle_ok);
    space.require(Flag::zero_diagonal);
    space.require(Flag::finite_distances);
    const int m = space.size();

    std::vector<ProtoCell> protos;
    std::vector<std::vector<std::pair<std::vector<int>, int>>> faces;
    std::vector<int> pts;
    auto emit = [&](const Rat& len) {
        if (static_cast<long long>(protos.size()) >= opts.max_cells)
            throw ResourceBoundError("enriched nerve cells", protos.size() + 1, opts.max_cells);
        ProtoCell p{pts, len};
        std::vector<std::pair<std::vector<int>, int>> fs;
        const int n = static_cast<int>(pts.size()) - 1;
        for (int i = 0; i <= n && n > 0; ++i) {
            std::vector<int> face;
            face.reserve(pts.size() - 1);
            for (int j = 0; j <= n; ++j)
                if (j != i) face.push_back(pts[j]);
            bool degenerate = false;
            for (size_t j = 1; j < face.size(); ++j)
                if (face[j] == face[j - 1]) degenerate = true;
            if (degenerate) continue;
            fs.emplace_back(std::move(face), i % 2 == 0 ? 1 : -1);
        }
        protos.push_back(std::move(p));
        faces.push_back(std::move(fs));
    };
    auto dfs = [&](auto&& self, const Rat& len) -> void {
        if (static_cast<int>(pts.size()) == dim_max + 1) return;
        for (int j = 0; j < m; ++j) {
            if (!pts.empty() && j == pts.back()) continue;
            Rat next = len;
            if (!pts.empty()) {
                const ExtRat& step = space.dist(pts.back(), j);
                if (step.is_inf()) continue;
                next = len + step.value;
                if (next > eps_max) continue;
            }
            pts.push_back(j);
            emit(next);
            self(self, next);
            pts.pop_back();
        }
    };
    if (eps_max >= 0) dfs(dfs, Rat(0));
    return assemble(FiltrationKind::nerve, dim_max, eps_max, std::move(protos), faces);
}

FilteredComplex build_vietoris_rips(const FiniteMetricSpace& space, int dim_max,
                                    const Rat& eps_max, const ComplexOptions& opts) {
    if (dim_max < 0 || eps_max < 0)
        throw ValidationError("build_vietoris_rips: bounds must be non-negative");
    space.require(Flag::symmetric);
    space.require(Flag::separated);
    space.require(Flag::triangle_ok);
    space.require(Flag::zero_diagonal);
    space.require(Flag::finite_distances);
    const int m = space.size();

    std::vector<ProtoCell> protos;
    std::vector<std::vector<std::pair<std::vector<int>, int>>> faces;
    std::vector<int> pts;
    auto emit = [&](const Rat& diam) {
        if (static_cast<long long>(protos.size()) >= opts.max_cells)
            throw ResourceBoundError("Vietoris-Rips cells", protos.size() + 1, opts.max_cells);
        ProtoCell p{pts, diam};
        std::vector<std::pair<std::vector<int>, int>> fs;
        const int n = static_cast<int>(pts.size()) - 1;
        for (int i = 0; i <= n && n > 0; ++i) {
            std::vector<int> face;
            for (int j = 0; j <= n; ++j)
                if (j != i) face.push_back(pts[j]);
            fs.emplace_back(std::move(face), i % 2 == 0 ? 1 : -1);
        }
        protos.push_back(std::move(p));
        faces.push_back(std::move(fs));
    };
    // Strictly increasing vertex tuples; the diameter grows monotonically with
    // each added vertex, so prune above eps_max.
    auto dfs = [&](auto&& self, const Rat& diam) -> void {
        if (static_cast<int>(pts.size()) == dim_max + 1) return;
        int start = pts.empty() ? 0 : pts.back() + 1;
        for (int j = start; j < m; ++j) {
            Rat next = diam;
            bool ok = true;
            for (int v : pts) {
                const ExtRat& d = space.dist(v, j);
                if (d.is_inf()) {
                    ok = false;
                    break;
                }
                if (d.value > next) next = d.value;
            }
            if (!ok || next > eps_max) continue;
            pts.push_back(j);
            emit(next);
            self(self, next);
            pts.pop_back();
        }
    };
    if (eps_max >= 0) dfs(dfs, Rat(0));
    return assemble(FiltrationKind::rips, dim_max, eps_max, std::move(protos), faces);
}

} // namespace magni

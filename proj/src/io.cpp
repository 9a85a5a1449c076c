#include "magni/io.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <sstream>

#include "magni/errors.hpp"

namespace magni {

namespace {

struct Lines {
    std::vector<std::string> lines;
    size_t next = 0;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    bool done() const { return next >= lines.size(); }
    int lineno() const { return static_cast<int>(next) + 1; }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int column_of(const std::string& line, int token_index) {
    // 1-based column of the token's first character.
    std::istringstream in(line);
    std::string tok;
    int idx = 0;
    size_t pos = 0;
    while (in >> tok) {
        pos = line.find(tok, pos);
        if (idx == token_index) return static_cast<int>(pos) + 1;
        pos += tok.size();
        ++idx;
    }
    return 1;
}

std::vector<std::string> take_labels(Lines& in) {
    std::vector<std::string> labels;
    while (!in.done()) {
        const std::string& line = in.lines[in.next];
        auto toks = split_ws(line);
        if (toks.empty()) { // blank line
            ++in.next;
            continue;
        }
        if (toks[0] == "#") {
            if (toks.size() >= 2 && toks[1] == "labels:")
                labels.assign(toks.begin() + 2, toks.end());
            ++in.next; // comments are skipped either way
            continue;
        }
        break;
    }
    return labels;
}

} // namespace

FiniteMetricSpace parse_distance_matrix(const std::string& text,
                                        const std::vector<Flag>& required) {
    Lines in(text);
    std::vector<std::string> labels = take_labels(in);

    if (in.done()) throw ParseError(in.lineno(), 1, "expected point count");
    auto head = split_ws(in.lines[in.next]);
    if (head.size() != 1) throw ParseError(in.lineno(), 1, "expected a single integer point count");
    long m = 0;
    try {
        size_t used = 0;
        m = std::stol(head[0], &used);
        if (used != head[0].size()) throw std::invalid_argument("");
    } catch (...) {
        throw ParseError(in.lineno(), column_of(in.lines[in.next], 0),
                         "invalid point count '" + head[0] + "'");
    }
    if (m <= 0) throw ParseError(in.lineno(), 1, "point count must be positive");
    ++in.next;

    FiniteMetricSpace::Matrix dist;
    for (long i = 0; i < m; ++i) {
        while (!in.done() && split_ws(in.lines[in.next]).empty()) ++in.next;
        if (in.done())
            throw ParseError(in.lineno(), 1,
                             "expected matrix row " + std::to_string(i + 1) + " of " +
                                 std::to_string(m));
        auto toks = split_ws(in.lines[in.next]);
        if (static_cast<long>(toks.size()) != m)
            throw ParseError(in.lineno(), 1,
                             "expected " + std::to_string(m) + " entries, found " +
                                 std::to_string(toks.size()));
        std::vector<ExtRat> row;
        for (size_t j = 0; j < toks.size(); ++j) {
            auto v = parse_ext_rat(toks[j]);
            if (!v)
                throw ParseError(in.lineno(), column_of(in.lines[in.next], static_cast<int>(j)),
                                 "invalid distance token '" + toks[j] + "'");
            row.push_back(*v);
        }
        dist.push_back(std::move(row));
        ++in.next;
    }
    return FiniteMetricSpace::validate(std::move(dist), std::move(labels), required);
}

std::string emit_distance_matrix(const FiniteMetricSpace& space) {
    std::string out = "# labels:";
    for (const auto& l : space.labels()) out += " " + l;
    out += "\n" + std::to_string(space.size()) + "\n";
    for (int i = 0; i < space.size(); ++i) {
        for (int j = 0; j < space.size(); ++j) {
            if (j) out += " ";
            out += to_string(space.dist(i, j));
        }
        out += "\n";
    }
    return out;
}

std::vector<std::vector<Rat>> parse_point_cloud(const std::string& text,
                                                std::vector<std::string>* labels_out) {
    Lines in(text);
    auto labels = take_labels(in);
    if (labels_out) *labels_out = labels;

    if (in.done()) throw ParseError(in.lineno(), 1, "expected 'count dimension' header");
    auto head = split_ws(in.lines[in.next]);
    if (head.size() != 2)
        throw ParseError(in.lineno(), 1, "expected 'count dimension' header with two integers");
    long m = 0, dim = 0;
    try {
        m = std::stol(head[0]);
        dim = std::stol(head[1]);
    } catch (...) {
        throw ParseError(in.lineno(), 1, "invalid header integers");
    }
    if (m <= 0 || dim <= 0) throw ParseError(in.lineno(), 1, "count and dimension must be positive");
    ++in.next;

    std::vector<std::vector<Rat>> points;
    for (long i = 0; i < m; ++i) {
        while (!in.done() && split_ws(in.lines[in.next]).empty()) ++in.next;
        if (in.done()) throw ParseError(in.lineno(), 1, "expected point row");
        auto toks = split_ws(in.lines[in.next]);
        if (static_cast<long>(toks.size()) != dim)
            throw ParseError(in.lineno(), 1,
                             "expected " + std::to_string(dim) + " coordinates, found " +
                                 std::to_string(toks.size()));
        std::vector<Rat> p;
        for (size_t j = 0; j < toks.size(); ++j) {
            auto v = parse_rat(toks[j]);
            if (!v)
                throw ParseError(in.lineno(), column_of(in.lines[in.next], static_cast<int>(j)),
                                 "invalid coordinate '" + toks[j] + "'");
            p.push_back(*v);
        }
        points.push_back(std::move(p));
        ++in.next;
    }
    return points;
}

SnapResult snap_point_cloud(const std::vector<std::vector<Rat>>& points, PointMetric metric,
                            long denominator, const std::vector<std::string>& labels,
                            const std::vector<Flag>& required) {
    const size_t m = points.size();
    if (m == 0) throw ValidationError("point cloud is empty");
    const size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim)
            throw ValidationError("DimensionMismatch: coordinate counts differ across points");
    if (metric == PointMetric::euclid_snapped && denominator < 1)
        throw ValidationError("euclid snapping denominator must be >= 1");

    FiniteMetricSpace::Matrix dist(m, std::vector<ExtRat>(m, ExtRat(0)));
    std::string warning;

    if (metric == PointMetric::l1 || metric == PointMetric::linf) {
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                Rat acc(0);
                for (size_t k = 0; k < dim; ++k) {
                    Rat d = points[i][k] - points[j][k];
                    if (d < 0) d = -d;
                    if (metric == PointMetric::l1) acc += d;
                    else if (d > acc) acc = d;
                }
                dist[i][j] = ExtRat(acc);
            }
    } else {
        using BigFloat = boost::multiprecision::mpfr_float;
        BigFloat::default_precision(60);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                Rat sq(0);
                for (size_t k = 0; k < dim; ++k) {
                    Rat d = points[i][k] - points[j][k];
                    sq += d * d;
                }
                // Round sqrt(sq) to the nearest multiple of 1/D (ties away
                // from zero): floor(sqrt(sq) * D + 1/2) / D.
                BigFloat root = sqrt(BigFloat(sq.get_mpq_t()));
                BigFloat scaled = root * denominator + BigFloat(0.5);
                BigFloat fl = floor(scaled);
                Int num;
                mpfr_get_z(num.get_mpz_t(), fl.backend().data(), MPFR_RNDZ);
                Rat snapped(num, Int(denominator));
                snapped.canonicalize();
                dist[i][j] = ExtRat(snapped);
            }
        warning = "euclidean distances snapped to multiples of 1/" + std::to_string(denominator) +
                  "; strict-equality structure (hence magnitude homology) depends on this choice";

        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                for (size_t k = 0; k < m; ++k)
                    if (dist[i][j] + dist[j][k] < dist[i][k])
                        throw ValidationError(
                            "TriangleBrokenByRounding: (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) +
                            ") violates the triangle inequality after snapping to 1/" +
                            std::to_string(denominator));
    }

    return SnapResult{FiniteMetricSpace::validate(std::move(dist), labels, required),
                      std::move(warning)};
}

} // namespace magni

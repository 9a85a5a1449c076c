#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "magni/io.hpp"
#include "magni/run.hpp"
#include "support.hpp"

using namespace magni;
using namespace magni::testing;

TEST_CASE("parse_distance_matrix basics") {
    auto one = parse_distance_matrix("1\n0\n", default_required_flags());
    CHECK(one.size() == 1);

    auto two = parse_distance_matrix("2\n0 1\n1 0\n", default_required_flags());
    CHECK(two.dist(0, 1) == er(1));

    auto half = parse_distance_matrix("2\n0 1/2\n1/2 0\n", default_required_flags());
    CHECK(half.dist(0, 1) == er(1, 2));

    auto labeled = parse_distance_matrix("# labels: x y\n2\n0 1\n1 0\n", default_required_flags());
    CHECK(labeled.labels() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_distance_matrix("2\n0 1\n1 zzz\n", {});
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.col() == 3);
    }
    CHECK_THROWS_AS(parse_distance_matrix("", {}), ParseError);
    CHECK_THROWS_AS(parse_distance_matrix("2\n0 1\n", {}), ParseError);
    CHECK_THROWS_AS(parse_distance_matrix("x\n", {}), ParseError);
    CHECK_THROWS_AS(parse_distance_matrix("2\n0 1 2\n1 0 2\n", {}), ParseError);
}

TEST_CASE("matrix round-trip") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        auto space = random_space(rng, 4, {make_rat(1, 2), make_rat(1), make_rat(2)});
        auto again = parse_distance_matrix(emit_distance_matrix(space), default_required_flags());
        CHECK(again == space);
    }
    // Infinity round-trips too.
    FiniteMetricSpace::Matrix m{{er(0), ExtRat::inf()}, {ExtRat::inf(), er(0)}};
    auto space = FiniteMetricSpace::validate(m, {Flag::zero_diagonal});
    auto again = parse_distance_matrix(emit_distance_matrix(space), {Flag::zero_diagonal});
    CHECK(again == space);
}

TEST_CASE("snap_point_cloud exact metrics") {
    // (0,0), (1,0), (2,0) under L1 is the collinear T3.
    std::vector<std::vector<Rat>> line{{make_rat(0), make_rat(0)},
                                       {make_rat(1), make_rat(0)},
                                       {make_rat(2), make_rat(0)}};
    auto t = snap_point_cloud(line, PointMetric::l1, 1, {"a", "b", "c"}, default_required_flags());
    CHECK(t.space.matrix() == t3().matrix());
    CHECK(t.warning.empty());

    // (0,0), (1,0), (0,1) under Linf is equilateral.
    std::vector<std::vector<Rat>> tri{{make_rat(0), make_rat(0)},
                                      {make_rat(1), make_rat(0)},
                                      {make_rat(0), make_rat(1)}};
    auto e = snap_point_cloud(tri, PointMetric::linf, 1, {}, default_required_flags());
    CHECK(e.space.matrix() == e3().matrix());

    auto single = snap_point_cloud({{make_rat(7)}}, PointMetric::l1, 1, {}, default_required_flags());
    CHECK(single.space.size() == 1);

    std::vector<std::vector<Rat>> ragged{{make_rat(0)}, {make_rat(0), make_rat(1)}};
    CHECK_THROWS_WITH_AS(snap_point_cloud(ragged, PointMetric::l1, 1, {}, {}),
                         doctest::Contains("DimensionMismatch"), ValidationError);
}

TEST_CASE("euclidean snapping warns and validates") {
    // 3-4-5 triangle: all distances integral, snapping to D=1 is exact.
    std::vector<std::vector<Rat>> pyth{{make_rat(0), make_rat(0)},
                                       {make_rat(3), make_rat(0)},
                                       {make_rat(3), make_rat(4)}};
    auto r = snap_point_cloud(pyth, PointMetric::euclid_snapped, 1, {}, default_required_flags());
    CHECK(r.space.dist(0, 1) == er(3));
    CHECK(r.space.dist(1, 2) == er(4));
    CHECK(r.space.dist(0, 2) == er(5));
    CHECK_FALSE(r.warning.empty());

    // Collinear 0, 2/5, 4/5: snapped to D=1 the short legs collapse to 0 while
    // the long distance rounds to 1.
    std::vector<std::vector<Rat>> flat{{make_rat(0)}, {make_rat(2, 5)}, {make_rat(4, 5)}};
    CHECK_THROWS_WITH_AS(snap_point_cloud(flat, PointMetric::euclid_snapped, 1, {}, {}),
                         doctest::Contains("TriangleBrokenByRounding"), ValidationError);

    // With a finer grid the same cloud is fine.
    auto fine = snap_point_cloud(flat, PointMetric::euclid_snapped, 10, {}, default_required_flags());
    CHECK(fine.space.dist(0, 1) == er(2, 5));
}

TEST_CASE("point cloud parsing") {
    auto pts = parse_point_cloud("3 2\n0 0\n1 0\n2 0\n", nullptr);
    REQUIRE(pts.size() == 3);
    CHECK(pts[2][0] == make_rat(2));
    CHECK_THROWS_AS(parse_point_cloud("2 2\n0 0\n", nullptr), ParseError);
    CHECK_THROWS_AS(parse_point_cloud("2 2\n0 0\n1 x\n", nullptr), ParseError);
}

namespace {

// Writes content to a temp file and returns the path.
std::string temp_input(const std::string& content, const std::string& name) {
    std::string path = std::string("magni_test_") + name + ".txt";
    std::ofstream out(path);
    out << content;
    return path;
}

std::pair<int, std::string> run_config(RunConfig cfg) {
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, code == 0 ? out.str() : err.str()};
}

} // namespace

TEST_CASE("run: magnitude command output is pinned") {
    RunConfig cfg;
    cfg.command = "magnitude";
    cfg.input_path = temp_input("2\n0 1\n1 0\n", "two");
    auto [code, text] = run_config(cfg);
    CHECK(code == 0);
    CHECK(text == "(2)/(1 + 1*u^1) in q^(1/1)\n");
    std::remove(cfg.input_path.c_str());
}

TEST_CASE("run: euler command emits per-grade rows with ok=true") {
    RunConfig cfg;
    cfg.command = "euler";
    cfg.input_path = temp_input("3\n0 1 1\n1 0 1\n1 1 0\n", "e3");
    cfg.n_max = 3;
    cfg.l_max = make_rat(2);
    auto [code, text] = run_config(cfg);
    CHECK(code == 0);
    CHECK(text == "0\t3\t3\t3\ttrue\n1\t-6\t-6\t-6\ttrue\n2\t12\t12\t12\ttrue\n");
    std::remove(cfg.input_path.c_str());
}

TEST_CASE("run: ph command on T3") {
    RunConfig cfg;
    cfg.command = "ph";
    cfg.input_path = temp_input("3\n0 1 2\n1 0 1\n2 1 0\n", "t3");
    cfg.n_max = 2;
    cfg.prime = 2;
    auto [code, text] = run_config(cfg);
    CHECK(code == 0);
    CHECK(text == "# complete below degree 2; higher degrees may be truncation artifacts\n"
                  "# scale truncated at 2; deaths shown as inf may occur beyond it\n"
                  "0\t0\t1\n0\t0\t1\n0\t0\tinf\n");
    std::remove(cfg.input_path.c_str());
}

TEST_CASE("run: deterministic output and distinct failure codes") {
    RunConfig cfg;
    cfg.command = "blurred";
    cfg.input_path = temp_input("2\n0 1\n1 0\n", "blur");
    cfg.n_max = 3;
    cfg.l_max = make_rat(3);
    auto first = run_config(cfg);
    auto second = run_config(cfg);
    CHECK(first.first == 0);
    CHECK(first.second == second.second);

    RunConfig bad_parse = cfg;
    bad_parse.input_path = temp_input("2\n0 x\nx 0\n", "badparse");
    CHECK(run_config(bad_parse).first == 2);

    RunConfig bad_valid = cfg;
    bad_valid.input_path = temp_input("2\n0 1\n2 0\n", "badsym"); // asymmetric
    bad_valid.command = "ph";
    CHECK(run_config(bad_valid).first == 3);

    RunConfig bad_cap = cfg;
    bad_cap.max_cells = 2;
    CHECK(run_config(bad_cap).first == 4);

    RunConfig bad_prime = cfg;
    bad_prime.prime = 6;
    CHECK(run_config(bad_prime).first == 3);

    RunConfig missing = cfg;
    missing.input_path = "does_not_exist.txt";
    CHECK(run_config(missing).first == 1);

    std::remove(cfg.input_path.c_str());
    std::remove(bad_parse.input_path.c_str());
    std::remove(bad_valid.input_path.c_str());
}

TEST_CASE("run: limits and approx commands") {
    RunConfig cfg;
    cfg.command = "limits";
    cfg.input_path = temp_input("3\n0 1 2\n1 0 1\n2 1 0\n", "lim");
    auto [code, text] = run_config(cfg);
    CHECK(code == 0);
    CHECK(text == "delta_min\t1\n"
                  "nerve\t0\t3\nrips\t0\t3\nordinary\t0\t0\n"
                  "nerve\t1\t0\nrips\t1\t0\nordinary\t1\t0\n"
                  "separation\t3\t0\n");

    RunConfig ap;
    ap.command = "approx";
    ap.input_path = cfg.input_path;
    ap.n_max = 1;
    auto [acode, atext] = run_config(ap);
    CHECK(acode == 0);
    CHECK(atext.find("all pass") != std::string::npos);
    CHECK(atext.find("fail") == std::string::npos);
    std::remove(cfg.input_path.c_str());
}

TEST_CASE("run: magfun and point-cloud input") {
    RunConfig cfg;
    cfg.command = "magfun";
    cfg.input_path = temp_input("4 2\n0 0\n1 0\n0 1\n1 1\n", "cloud");
    cfg.metric = PointMetric::l1;
    cfg.t_values = {make_rat(20)};
    cfg.precision = 8;
    auto [code, text] = run_config(cfg);
    CHECK(code == 0);
    CHECK(text.substr(0, 12) == "20\t3.9999999");
    std::remove(cfg.input_path.c_str());
}

TEST_CASE("run: dump-complex writes the cell-per-line format") {
    RunConfig cfg;
    cfg.command = "ph";
    cfg.input_path = temp_input("2\n0 1\n1 0\n", "dump");
    cfg.n_max = 1;
    cfg.dump_complex_path = "magni_test_complex.txt";
    auto [code, text] = run_config(cfg);
    CHECK(code == 0);
    std::ifstream in(cfg.dump_complex_path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "0 0 0\n1 0 0\n2 1 1 0 1 -1 +1\n");
    std::remove(cfg.input_path.c_str());
    std::remove(cfg.dump_complex_path.c_str());
}

TEST_CASE("run: output file receives the bytes") {
    RunConfig cfg;
    cfg.command = "magnitude";
    cfg.input_path = temp_input("1\n0\n", "onepoint");
    cfg.output_path = "magni_test_out.txt";
    auto [code, text] = run_config(cfg);
    CHECK(code == 0);
    std::ifstream in(cfg.output_path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "(1)/(1) in q^(1/1)\n");
    std::remove(cfg.input_path.c_str());
    std::remove(cfg.output_path.c_str());
}

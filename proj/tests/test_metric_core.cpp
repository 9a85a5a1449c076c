#include <doctest.h>

#include "support.hpp"

using namespace magni;
using namespace magni::testing;

TEST_CASE("validate_space computes flags and enforces requirements") {
    auto one = one_point();
    CHECK(one.flags().symmetric);
    CHECK(one.flags().zero_diagonal);
    CHECK(one.flags().separated);
    CHECK(one.flags().finite_distances);
    CHECK(one.flags().triangle_ok);

    auto two = two_points(make_rat(1));
    CHECK(two.flags().symmetric);
    CHECK(two.flags().triangle_ok);

    // 1 + 1 < 3 breaks the triangle inequality at (0,1,2).
    FiniteMetricSpace::Matrix bad{{er(0), er(1), er(3)}, {er(1), er(0), er(1)}, {er(3), er(1), er(0)}};
    CHECK_THROWS_WITH_AS(FiniteMetricSpace::validate(bad, {Flag::triangle_ok}),
                         doctest::Contains("RequiredFlagViolated: triangle_ok fails at (0,1,2)"),
                         ValidationError);
    auto no_req = FiniteMetricSpace::validate(bad, {});
    CHECK_FALSE(no_req.flags().triangle_ok);
    CHECK(no_req.flags().symmetric);
}

TEST_CASE("validate_space rejects malformed matrices") {
    FiniteMetricSpace::Matrix ragged{{er(0), er(1)}, {er(1)}};
    CHECK_THROWS_WITH_AS(FiniteMetricSpace::validate(ragged, {}), doctest::Contains("NonSquare"),
                         ValidationError);
    FiniteMetricSpace::Matrix negative{{er(0), er(-1)}, {er(-1), er(0)}};
    CHECK_THROWS_WITH_AS(FiniteMetricSpace::validate(negative, {}),
                         doctest::Contains("NegativeEntry"), ValidationError);
}

TEST_CASE("infinity absorbs addition and dominates comparison") {
    ExtRat inf = ExtRat::inf();
    CHECK((inf + er(5).finite()) == inf);
    CHECK(er(100) < inf);
    CHECK(inf + inf == inf);

    FiniteMetricSpace::Matrix m{{er(0), ExtRat::inf()}, {ExtRat::inf(), er(0)}};
    auto space = FiniteMetricSpace::validate(m, {Flag::zero_diagonal, Flag::triangle_ok});
    CHECK_FALSE(space.flags().finite_distances);
    CHECK(space.flags().triangle_ok); // infinity never undercuts a sum
}

TEST_CASE("tuple_length examples") {
    auto t = t3();
    CHECK(tuple_length(t, {0}) == ExtRat(0));
    CHECK(tuple_length(t, {0, 1, 2}) == er(2));
    CHECK(tuple_length(t, {0, 1, 0}) == er(2));
    CHECK_THROWS_WITH_AS(tuple_length(t, {0, 7}), doctest::Contains("IndexOutOfRange"),
                         ValidationError);
}

TEST_CASE("scale_space") {
    auto t = t3();
    auto same = t.scaled(make_rat(1));
    CHECK(same.matrix() == t.matrix());

    auto doubled = t.scaled(make_rat(2));
    CHECK(doubled.dist(0, 1) == er(2));
    CHECK(doubled.dist(1, 2) == er(2));
    CHECK(doubled.dist(0, 2) == er(4));

    auto two = two_points(make_rat(1)).scaled(make_rat(3, 2));
    CHECK(two.dist(0, 1) == er(3, 2));

    CHECK_THROWS_WITH_AS(t.scaled(make_rat(0)), doctest::Contains("NonPositiveScale"),
                         ValidationError);
    CHECK_THROWS_AS(t.scaled(make_rat(-2)), ValidationError);
}

TEST_CASE("length_spectrum examples") {
    CHECK(length_spectrum(one_point(), 4, make_rat(10)) == std::vector<Rat>{make_rat(0)});

    auto two = two_points(make_rat(1));
    CHECK(length_spectrum(two, 2, make_rat(2)) ==
          std::vector<Rat>{make_rat(0), make_rat(1), make_rat(2)});

    CHECK(length_spectrum(t3(), 1, make_rat(2)) ==
          std::vector<Rat>{make_rat(0), make_rat(1), make_rat(2)});
}

TEST_CASE("tuple_length scales with the space and is additive over concatenation") {
    std::mt19937 rng(20260809);
    std::vector<Rat> values{make_rat(1, 2), make_rat(1), make_rat(3, 2), make_rat(2), make_rat(3)};
    for (int trial = 0; trial < 20; ++trial) {
        auto space = random_space(rng, 4, values);
        Rat t = values[trial % values.size()];
        auto scaled = space.scaled(t);
        std::uniform_int_distribution<int> pt(0, 3);
        std::vector<int> tuple;
        for (int i = 0; i < 5; ++i) tuple.push_back(pt(rng));

        CHECK(tuple_length(scaled, tuple) == tuple_length(space, tuple) * t);

        std::vector<int> prefix(tuple.begin(), tuple.begin() + 3);
        std::vector<int> suffix(tuple.begin() + 2, tuple.end());
        CHECK(tuple_length(space, prefix) + tuple_length(space, suffix) ==
              tuple_length(space, tuple));
    }
}

TEST_CASE("length_spectrum contains the lengths of witnessing prefixes") {
    std::mt19937 rng(7);
    std::vector<Rat> values{make_rat(1), make_rat(2)};
    auto space = random_space(rng, 4, values);
    const int n_max = 3;
    const Rat l_max = make_rat(5);
    auto spectrum = length_spectrum(space, n_max, l_max);
    auto in_spectrum = [&](const Rat& v) {
        return std::binary_search(spectrum.begin(), spectrum.end(), v);
    };

    // Walk all nondegenerate tuples up to the bounds; every prefix length must
    // itself be in the spectrum.
    std::vector<int> pts;
    auto dfs = [&](auto&& self) -> void {
        if (!pts.empty()) {
            ExtRat len(0);
            for (size_t i = 0; i + 1 < pts.size(); ++i) len = len + space.dist(pts[i], pts[i + 1]);
            if (!(ExtRat(l_max) < len)) CHECK(in_spectrum(len.finite()));
        }
        if (static_cast<int>(pts.size()) == n_max + 1) return;
        for (int j = 0; j < space.size(); ++j) {
            if (!pts.empty() && j == pts.back()) continue;
            pts.push_back(j);
            self(self);
            pts.pop_back();
        }
    };
    dfs(dfs);
}

TEST_CASE("relabeling preserves flags and distances up to permutation") {
    auto t = t3();
    auto r = t.relabeled({2, 0, 1});
    CHECK(r.dist(0, 1) == t.dist(2, 0));
    CHECK(r.labels()[0] == "c");
    CHECK(r.flags().symmetric);
}

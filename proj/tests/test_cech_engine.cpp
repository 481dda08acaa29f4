#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <kodaira/cech.hpp>

using namespace kodaira;

namespace {

long binom(long top, long k) {
    if (top < 0 || k < 0 || k > top) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (top - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("section dimension per multidegree") {
    TwistingSheaf s(1, 2);
    CHECK(section_dim(s, {0}, {2, 0}) == 1);
    CHECK(section_dim(s, {0}, {3, -1}) == 0);
    TwistingSheaf sm(1, -2);
    CHECK(section_dim(sm, {0, 1}, {-1, -1}) == 1);
    CHECK_THROWS_AS(section_dim(s, {0}, {1, 0}), DegreeMismatch);
}

TEST_CASE("coboundary matrix shapes and the delta0 sign convention") {
    TwistingSheaf s(1, 0);
    ExactMatrix m = coboundary_matrix(s, 0, {0, 0});
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 2);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == -1);

    // p past the nerve: zero rows.
    CHECK(coboundary_matrix(s, 1, {0, 0}).rows() == 0);

    // No 0-cochains, one 1-cochain slot.
    TwistingSheaf sm(1, -2);
    ExactMatrix e = coboundary_matrix(sm, 0, {-1, -1});
    CHECK(e.rows() == 1);
    CHECK(e.cols() == 0);
}

TEST_CASE("cohomology dimension oracles on the projective line") {
    CHECK(cohomology_dim(TwistingSheaf(1, 0), 0) == 1);
    CHECK(cohomology_dim(TwistingSheaf(1, 3), 0) == 4);
    CHECK(cohomology_dim(TwistingSheaf(1, -3), 1) == 2);
    for (long d = -6; d <= 6; ++d) {
        TwistingSheaf s(1, d);
        CHECK(cohomology_dim(s, 0) == static_cast<size_t>(std::max(d + 1, 0L)));
        CHECK(cohomology_dim(s, 1) == static_cast<size_t>(std::max(-d - 1, 0L)));
    }
}

TEST_CASE("cohomology dimension formulas on the projective plane") {
    for (long d = -6; d <= 6; ++d) {
        TwistingSheaf s(2, d);
        CHECK(cohomology_dim(s, 0) == static_cast<size_t>(binom(d + 2, 2)));
        CHECK(cohomology_dim(s, 1) == 0);
        CHECK(cohomology_dim(s, 2) == static_cast<size_t>(binom(-d - 1, 2)));
    }
}

TEST_CASE("delta squared vanishes") {
    TwistingSheaf s21(2, 1);
    for (const GradedPiece& a : multidegree_window(s21))
        CHECK(verify_delta_squared(s21, 0, a));
    CHECK(verify_delta_squared(TwistingSheaf(1, 4), 1, {2, 2}));
    CHECK(verify_delta_squared(TwistingSheaf(2, -3), 0, {-1, -1, -1}));

    std::mt19937 rng(29);
    std::uniform_int_distribution<size_t> nd(1, 3);
    std::uniform_int_distribution<long> dd(-6, 6);
    for (int t = 0; t < 60; ++t) {
        TwistingSheaf s(nd(rng), dd(rng));
        std::vector<GradedPiece> w = multidegree_window(s);
        std::uniform_int_distribution<size_t> pick(0, w.size() - 1);
        std::uniform_int_distribution<size_t> pp(0, s.n);
        CHECK(verify_delta_squared(s, pp(rng), w[pick(rng)]));
    }
}

TEST_CASE("window padding does not change dimensions") {
    for (long d = -4; d <= 4; ++d)
        for (size_t q = 0; q <= 1; ++q)
            CHECK(cohomology_dim(TwistingSheaf(1, d), q, 1) ==
                  cohomology_dim(TwistingSheaf(1, d), q, 3));
    CHECK(cohomology_dim(TwistingSheaf(2, -4), 2, 1) ==
          cohomology_dim(TwistingSheaf(2, -4), 2, 3));
}

TEST_CASE("graded report and thread independence") {
    CohomologyReport r1 = cohomology_report(TwistingSheaf(1, -3), 1, 1, 1);
    CohomologyReport r8 = cohomology_report(TwistingSheaf(1, -3), 1, 1, 8);
    CHECK(r1.dim == 2);
    REQUIRE(r1.pieces.size() == r8.pieces.size());
    for (size_t i = 0; i < r1.pieces.size(); ++i) {
        CHECK(r1.pieces[i].multidegree == r8.pieces[i].multidegree);
        CHECK(r1.pieces[i].dim == r8.pieces[i].dim);
    }
    // Nonzero pieces of h^1(O(-3)) sit at the two interior multidegrees.
    REQUIRE(r1.pieces.size() == 2);
    CHECK(r1.pieces[0].multidegree == GradedPiece{-2, -1});
    CHECK(r1.pieces[1].multidegree == GradedPiece{-1, -2});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <kodaira/cech.hpp>
#include <kodaira/kodaira_map.hpp>

using namespace kodaira;

namespace {

LaurentPoly section_from(const std::vector<Exponents>& exps,
                         const std::vector<long>& coeffs, size_t n) {
    LaurentPoly p(homog_vars(n));
    for (size_t i = 0; i < exps.size(); ++i)
        p.add_term(exps[i], ExactScalar(coeffs[i]));
    return p;
}

}  // namespace

TEST_CASE("projective point canonical form") {
    ProjPoint p(std::vector<GaussRat>{GaussRat(rat(2)), GaussRat(rat(4))});
    ProjPoint q(std::vector<GaussRat>{GaussRat(rat(1)), GaussRat(rat(2))});
    CHECK(p == q);
    CHECK_FALSE(p == p1_point(1, 3));
    CHECK_THROWS(ProjPoint(std::vector<GaussRat>{GaussRat(rat(0)), GaussRat(rat(0))}));
}

TEST_CASE("full monomial basis matches global section count") {
    CHECK(full_monomial_basis(1, 3).size() == 4);
    CHECK(full_monomial_basis(2, 2).size() == 6);
    for (long d = 0; d <= 4; ++d)
        CHECK(full_monomial_basis(1, d).size() ==
              cohomology_dim(TwistingSheaf(1, d), 0));
}

TEST_CASE("base point detection") {
    BasePointReport none = base_points(full_monomial_basis(1, 2));
    CHECK(none.complete);
    CHECK(none.points.empty());

    // {x^2, xy}: common factor x vanishes at [0:1].
    SectionBasis with_base(1, 2,
                           {section_from({{2, 0}}, {1}, 1),
                            section_from({{1, 1}}, {1}, 1)});
    BasePointReport b = base_points(with_base);
    REQUIRE(b.points.size() == 1);
    CHECK(b.points[0] == p1_point(0, 1));
    CHECK(b.complete);

    // {x - y} vanishes at [1:1].
    SectionBasis line(1, 1, {section_from({{1, 0}, {0, 1}}, {1, -1}, 1)});
    BasePointReport l = base_points(line);
    REQUIRE(l.points.size() == 1);
    CHECK(l.points[0] == p1_point(1, 1));
}

TEST_CASE("veronese evaluation") {
    SectionBasis v2 = full_monomial_basis(1, 2);
    CHECK(eval_map(v2, p1_point(1, 1)) ==
          ProjPoint({GaussRat(rat(1)), GaussRat(rat(1)), GaussRat(rat(1))}));
    CHECK(eval_map(v2, p1_point(1, 2)) ==
          ProjPoint({GaussRat(rat(1)), GaussRat(rat(2)), GaussRat(rat(4))}));
    SectionBasis v3 = full_monomial_basis(1, 3);
    CHECK(eval_map(v3, p1_point(0, 1)) ==
          ProjPoint({GaussRat(rat(0)), GaussRat(rat(0)), GaussRat(rat(0)),
                     GaussRat(rat(1))}));

    // Evaluation at a base point is rejected.
    SectionBasis line(1, 1, {section_from({{1, 0}, {0, 1}}, {1, -1}, 1)});
    CHECK_THROWS_AS(eval_map(line, p1_point(1, 1)), BasePointEvaluation);
}

TEST_CASE("scale invariance of the evaluation map") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long> lam(1, 9), val(-6, 6);
    SectionBasis b = full_monomial_basis(1, 3);
    for (int t = 0; t < 30; ++t) {
        ExactScalar l = rat(lam(rng), lam(rng));
        ExactScalar v = rat(val(rng), lam(rng));
        ProjPoint p = p1_point(1, v);
        ProjPoint scaled(std::vector<GaussRat>{GaussRat(l), GaussRat(l * v)});
        CHECK(eval_map(b, p) == eval_map(b, scaled));
    }
}

TEST_CASE("injectivity verdicts") {
    std::vector<ProjPoint> samples = default_p1_samples();
    REQUIRE(samples.size() == 12);
    std::vector<std::pair<ProjPoint, ProjPoint>> pairs;
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i + 1; j < samples.size(); ++j)
            pairs.emplace_back(samples[i], samples[j]);

    CHECK(check_injective(full_monomial_basis(1, 1), pairs).all_separated);
    CHECK(check_injective(full_monomial_basis(1, 2), pairs).all_separated);
    CHECK_FALSE(check_injective(full_monomial_basis(1, 0), pairs).all_separated);
    CHECK_THROWS_AS(
        check_injective(full_monomial_basis(1, 2), {{samples[0], samples[0]}}),
        EqualPoints);
}

TEST_CASE("immersion verdicts") {
    std::vector<ProjPoint> samples = default_p1_samples();
    CHECK(check_immersion(full_monomial_basis(1, 1), samples).all_immersive);
    ImmersionReport r2 = check_immersion(full_monomial_basis(1, 2), samples);
    CHECK(r2.all_immersive);
    for (const auto& v : r2.verdicts) CHECK(v.rank == 2);
    CHECK_FALSE(check_immersion(full_monomial_basis(1, 0), samples).all_immersive);

    // {x^2, y^2} has a vanishing differential at [1:0].
    SectionBasis degenerate(1, 2,
                            {section_from({{2, 0}}, {1}, 1),
                             section_from({{0, 2}}, {1}, 1)});
    CHECK_FALSE(check_immersion(degenerate, {p1_point(1, 0)}).all_immersive);
}

TEST_CASE("two-point surjectivity") {
    CHECK(two_point_surjectivity(1, p1_point(1, 0), p1_point(0, 1)));
    CHECK_FALSE(two_point_surjectivity(0, p1_point(1, 0), p1_point(0, 1)));
    CHECK(two_point_surjectivity(3, p1_point(1, 1), p1_point(1, 2)));
    CHECK_THROWS_AS(two_point_surjectivity(2, p1_point(1, 1), p1_point(1, 1)),
                    EqualPoints);

    std::vector<ProjPoint> samples = default_p1_samples();
    for (long d = 1; d <= 4; ++d)
        for (size_t i = 0; i < samples.size(); ++i)
            for (size_t j = i + 1; j < samples.size(); ++j)
                CHECK(two_point_surjectivity(d, samples[i], samples[j]));
}

TEST_CASE("smallest embedding degree on the line is one") {
    CHECK(smallest_embedding_degree(4, default_p1_samples()) == 1);
}

TEST_CASE("section basis validation") {
    // Dependent sections rejected.
    CHECK_THROWS(SectionBasis(1, 1,
                              {section_from({{1, 0}}, {1}, 1),
                               section_from({{1, 0}}, {2}, 1)}));
    // Wrong degree rejected.
    CHECK_THROWS_AS(SectionBasis(1, 2, {section_from({{1, 0}}, {1}, 1)}),
                    DegreeMismatch);
    // Empty basis rejected.
    CHECK_THROWS_AS(SectionBasis(1, 2, {}), EmptyBasis);
}

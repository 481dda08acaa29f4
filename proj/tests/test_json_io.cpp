#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kodaira/json_io.hpp>

using namespace kodaira;
using nlohmann::json;

TEST_CASE("rational function round-trip") {
    std::vector<std::string> Z{"z"};
    RationalFunc f = (RationalFunc::variable(Z, "z").pow(2) -
                      RationalFunc::constant(Z, 1)) /
                     (RationalFunc::variable(Z, "z") + RationalFunc::constant(Z, 3));
    json j = io::to_json(f);
    CHECK(io::rational_func_from_json(j) == f);
    CHECK(io::rational_func_from_json(json::parse(j.dump())) == f);
}

TEST_CASE("rational function schema errors") {
    CHECK_THROWS_AS(io::rational_func_from_json(json::parse("{}")), SchemaError);
    CHECK_THROWS_AS(io::rational_func_from_json(json::parse(
                        R"({"variables":["z"],"num":[{"coeff":"1","exponents":[0,0]}]})")),
                    SchemaError);
}

TEST_CASE("cocycle round-trip") {
    MonomialCocycle c = standard_bundle(2, 3);
    json j = io::to_json(c);
    MonomialCocycle back = io::cocycle_from_json(j);
    CHECK(back == c);

    // One-directional transition lists are completed with inverses.
    json half = {{"charts", 2},
                 {"variables", {"x0", "x1"}},
                 {"transitions",
                  json::array({{{"i", 0}, {"j", 1}, {"coeff", "1"},
                                {"exponents", {-1, 1}}}})}};
    MonomialCocycle h = io::cocycle_from_json(half);
    CHECK(h == standard_bundle(1, 1));
}

TEST_CASE("divisor round-trip") {
    DivisorP1 d;
    d.add(PointP1::affine(rat(1, 2)), 2);
    d.add(PointP1::infinity(), -1);
    CHECK(io::divisor_from_json(io::to_json(d)) == d);
    CHECK_THROWS_AS(io::divisor_from_json(json::parse("{}")), SchemaError);
    CHECK_THROWS_AS(io::point_p1_from_string("oops"), SchemaError);
}

TEST_CASE("projective point round-trip") {
    ProjPoint p({GaussRat(rat(1)), GaussRat(rat(2, 3)),
                 GaussRat(rat(0), rat(1))});
    CHECK(io::proj_point_from_json(io::to_json(p)) == p);
    CHECK_THROWS_AS(io::proj_point_from_json(json::parse("[]")), SchemaError);
}

TEST_CASE("form matrix round-trip") {
    FormCoeffMatrix m = fubini_study(2, 0);
    FormCoeffMatrix back = io::form_matrix_from_json(io::to_json(m));
    CHECK(back.n == m.n);
    CHECK((back - m).is_zero());
}

TEST_CASE("reports serialize with stable shapes") {
    json r = io::to_json(cohomology_report(TwistingSheaf(1, -3), 1));
    CHECK(r.at("dim") == 2);
    CHECK(r.at("graded_pieces").size() == 2);

    json b = io::to_json(base_points(full_monomial_basis(1, 2)));
    CHECK(b.at("complete") == true);
    CHECK(b.at("base_points").empty());

    std::vector<ProjPoint> s = default_p1_samples();
    json imm = io::to_json(check_immersion(full_monomial_basis(1, 2), s));
    CHECK(imm.at("all_immersive") == true);
    CHECK(imm.at("samples").size() == s.size());
}

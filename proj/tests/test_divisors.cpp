#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <kodaira/cech.hpp>
#include <kodaira/divisor.hpp>

using namespace kodaira;

namespace {

const std::vector<std::string> Z{"z"};
RationalFunc zf() { return RationalFunc::variable(Z, "z"); }
RationalFunc c(long n) { return RationalFunc::constant(Z, ExactScalar(n)); }

}  // namespace

TEST_CASE("vanishing order at points") {
    RationalFunc f = zf() * zf() / (zf() - c(1));
    CHECK(ord_at(f, PointP1::affine(0)) == 2);
    CHECK(ord_at(f, PointP1::affine(1)) == -1);
    CHECK(ord_at(f, PointP1::infinity()) == -1);
    CHECK(ord_at(f, PointP1::affine(5)) == 0);
    CHECK_THROWS_AS(ord_at(c(0), PointP1::affine(0)), ZeroFunction);
}

TEST_CASE("principal divisors") {
    DivisorP1 d1 = principal_divisor((zf() - c(1)) / (zf() + c(1)));
    CHECK(d1.coefficient(PointP1::affine(1)) == 1);
    CHECK(d1.coefficient(PointP1::affine(-1)) == -1);
    CHECK(d1.degree() == 0);

    DivisorP1 dz = principal_divisor(zf());
    CHECK(dz.coefficient(PointP1::affine(0)) == 1);
    CHECK(dz.coefficient(PointP1::infinity()) == -1);

    CHECK(principal_divisor(c(7)) == DivisorP1{});

    // Irrational zero locus is out of scope.
    CHECK_THROWS_AS(principal_divisor(zf() * zf() - c(2)), NonSplitPolynomial);
    CHECK_THROWS_AS(principal_divisor(c(0)), ZeroFunction);
}

TEST_CASE("principal divisor degree and ord additivity") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> root(-4, 4), mult(1, 3);
    std::uniform_int_distribution<int> nfac(1, 4);
    auto random_split = [&]() {
        RationalFunc f = c(1);
        int k = nfac(rng);
        for (int i = 0; i < k; ++i) {
            RationalFunc lin = zf() - c(root(rng));
            f = (i % 2 == 0) ? f * lin.pow(mult(rng)) : f / lin.pow(mult(rng));
        }
        return f;
    };
    for (int t = 0; t < 50; ++t) {
        RationalFunc f = random_split(), g = random_split();
        CHECK(principal_divisor(f).degree() == 0);
        PointP1 p = PointP1::affine(root(rng));
        CHECK(ord_at(f * g, p) == ord_at(f, p) + ord_at(g, p));
        CHECK(ord_at(f * g, PointP1::infinity()) ==
              ord_at(f, PointP1::infinity()) + ord_at(g, PointP1::infinity()));
    }
}

TEST_CASE("divisor to line bundle") {
    DivisorP1 p;
    p.add(PointP1::affine(rat(3)), 1);
    CHECK(bundle_of_divisor(p) == 1);
    CHECK(bundle_of_divisor(DivisorP1{}) == 0);

    DivisorP1 mixed;
    mixed.add(PointP1::affine(rat(0)), 2);
    mixed.add(PointP1::infinity(), -1);
    CHECK(bundle_of_divisor(mixed) == 1);

    // The transition of [p] is a unit multiple of x1/x0.
    MonomialCocycle cc = divisor_cocycle(p);
    CHECK(cc.g(0, 1).exponents == Exponents{-1, 1});
    CHECK(check_cocycle(cc));
}

TEST_CASE("section spaces") {
    DivisorP1 d;
    d.add(PointP1::affine(rat(0)), 3);
    SectionSpace s = section_space(d);
    REQUIRE(s.basis.size() == 4);
    // Basis {z^k / z^3 : 0 <= k <= 3} = {1/z^3, 1/z^2, 1/z, 1}.
    CHECK(s.basis[0] == zf().pow(-3));
    CHECK(s.basis[1] == zf().pow(-2));
    CHECK(s.basis[3] == c(1));

    CHECK(section_space(DivisorP1{}).basis.size() == 1);

    DivisorP1 neg;
    neg.add(PointP1::affine(rat(0)), -1);
    CHECK(section_space(neg).basis.empty());
}

TEST_CASE("section space dimension matches cohomology") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> root(-4, 4), mult(1, 3);
    std::uniform_int_distribution<int> npts(1, 3);
    for (int t = 0; t < 30; ++t) {
        DivisorP1 d;
        int k = npts(rng);
        for (int i = 0; i < k; ++i) d.add(PointP1::affine(rat(root(rng))), mult(rng));
        if (t % 3 == 0) d.add(PointP1::infinity(), mult(rng));
        SectionSpace s = section_space(d);
        CHECK(static_cast<long>(s.basis.size()) == d.degree() + 1);
        CHECK(s.basis.size() == cohomology_dim(TwistingSheaf(1, d.degree()), 0));
        for (const RationalFunc& f : s.basis)
            CHECK(is_effective(d + principal_divisor(f)));
    }
}

TEST_CASE("linear equivalence") {
    DivisorP1 zero, inf, two_inf, zero_one;
    zero.add(PointP1::affine(rat(0)), 1);
    inf.add(PointP1::infinity(), 1);
    two_inf.add(PointP1::infinity(), 2);
    zero_one.add(PointP1::affine(rat(0)), 1);
    zero_one.add(PointP1::affine(rat(1)), 1);

    RationalFunc w = c(1);
    CHECK(linearly_equivalent(zero, inf, &w));
    CHECK(principal_divisor(w) == zero - inf);

    CHECK(linearly_equivalent(zero_one, two_inf, &w));
    CHECK(w == zf() * (zf() - c(1)));

    DivisorP1 two_zero = zero + zero;
    CHECK_FALSE(linearly_equivalent(zero, two_zero, nullptr));
}

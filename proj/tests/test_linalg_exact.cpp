#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <kodaira/exact_matrix.hpp>
#include <kodaira/gaussian.hpp>

using namespace kodaira;

namespace {

ExactMatrix random_matrix(std::mt19937& rng, size_t r, size_t c) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    ExactMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rat(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rank oracles") {
    ExactMatrix id3(3, 3);
    for (size_t i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(id3.rank() == 3);
    CHECK(id3.kernel_dim() == 0);

    ExactMatrix zero22(2, 2);
    CHECK(zero22.rank() == 0);

    ExactMatrix prop(2, 2);
    prop.at(0, 0) = 1; prop.at(0, 1) = 2;
    prop.at(1, 0) = 2; prop.at(1, 1) = 4;
    CHECK(prop.rank() == 1);

    ExactMatrix zero23(2, 3);
    CHECK(zero23.kernel_dim() == 3);

    ExactMatrix steps(2, 3);
    steps.at(0, 0) = 1; steps.at(0, 1) = 1;
    steps.at(1, 1) = 1; steps.at(1, 2) = 1;
    CHECK(steps.kernel_dim() == 1);
}

TEST_CASE("rank equals rank of transpose") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<size_t> dim(1, 6);
    for (int t = 0; t < 30; ++t) {
        ExactMatrix m = random_matrix(rng, dim(rng), dim(rng));
        CHECK(m.rank() == m.transpose().rank());
        CHECK(m.kernel_dim() + m.rank() == m.cols());
    }
}

TEST_CASE("composable annihilating pair bounds ranks") {
    // A.B = 0 forces rank(A) + rank(B) <= cols(A).
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> val(-5, 5);
    for (int t = 0; t < 20; ++t) {
        // B has columns in the kernel of A built by construction:
        // A = [v | -v] (cols 2k), B stacks identity over identity.
        size_t k = 2;
        ExactMatrix a = random_matrix(rng, 3, k);
        ExactMatrix full(3, 2 * k);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < k; ++j) {
                full.at(i, j) = a.at(i, j);
                full.at(i, k + j) = -a.at(i, j);
            }
        ExactMatrix b(2 * k, k);
        for (size_t j = 0; j < k; ++j) {
            b.at(j, j) = 1;
            b.at(k + j, j) = 1;
        }
        CHECK((full * b).is_zero());
        CHECK(full.rank() + b.rank() <= full.cols());
    }
}

TEST_CASE("determinant and leading minors") {
    ExactMatrix m(2, 2);
    m.at(0, 0) = rat(1, 2); m.at(0, 1) = 1;
    m.at(1, 0) = 1;         m.at(1, 1) = 4;
    CHECK(m.det() == 1);
    CHECK(m.leading_minor(1) == rat(1, 2));
    CHECK(m.leading_minor(2) == 1);

    ExactMatrix sing(2, 2);
    sing.at(0, 0) = 1; sing.at(0, 1) = 2;
    sing.at(1, 0) = 2; sing.at(1, 1) = 4;
    CHECK(sing.det() == 0);
}

TEST_CASE("field rank over gaussian rationals") {
    std::vector<std::vector<GaussRat>> m{
        {GaussRat(1), GaussRat(ExactScalar(0), ExactScalar(1))},
        {GaussRat(ExactScalar(0), ExactScalar(-1)), GaussRat(1)}};
    // second row = -i times the first
    CHECK(field_rank(m) == 1);
    m[1][1] = GaussRat(2);
    CHECK(field_rank(m) == 2);
}

TEST_CASE("index guards") {
    ExactMatrix m(2, 2);
    CHECK_THROWS_AS(m.at(2, 0), IndexOutOfRange);
    CHECK_THROWS_AS(m.at(0, 5), IndexOutOfRange);
}

#include <catch_amalgamated.hpp>

#include "qpoly/exact.hpp"

#include <random>

using namespace qpoly;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<Vector> rs;
    for (auto r : rows) {
        Vector v;
        for (long x : r)
            v.emplace_back(x);
        rs.push_back(v);
    }
    return Matrix::from_rows(rs);
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    return make_rational(num(rng), den(rng));
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = random_rational(rng);
    return m;
}

}  // namespace

TEST_CASE("rational literals are canonical")
{
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-3/1")) == "-3");
    CHECK(to_string(parse_rational("+5")) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("1/-2"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
    CHECK_THROWS_AS(parse_rational(""), InvalidInput);
}

TEST_CASE("rref")
{
    SECTION("identity is its own reduced form")
    {
        auto r = rref(Matrix::identity(3));
        CHECK(r.rank == 3);
        CHECK(r.matrix == Matrix::identity(3));
        CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    }
    SECTION("zero matrix")
    {
        auto r = rref(Matrix(2, 3));
        CHECK(r.rank == 0);
        CHECK(r.matrix == Matrix(2, 3));
    }
    SECTION("dependent rows")
    {
        auto r = rref(mat({{1, 1, 0}, {2, 2, 0}, {0, 0, 1}}));
        CHECK(r.rank == 2);
        CHECK(r.matrix == mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    }
}

TEST_CASE("solve_affine")
{
    SECTION("identity")
    {
        auto s = solve_affine(Matrix::identity(2), Vector{3, 4});
        REQUIRE(s);
        CHECK(s->particular == Vector{3, 4});
        CHECK(s->nullspace.empty());
    }
    SECTION("one equation in two unknowns")
    {
        auto s = solve_affine(mat({{1, 1}}), Vector{2});
        REQUIRE(s);
        CHECK(s->particular == Vector{2, 0});
        REQUIRE(s->nullspace.size() == 1);
        CHECK(primitive_rational(s->nullspace[0]) == Vector{-1, 1});
    }
    SECTION("contradictory rows")
    {
        CHECK_FALSE(solve_affine(mat({{1, 1}, {1, 1}}), Vector{0, 1}));
    }
    SECTION("size mismatch")
    {
        CHECK_THROWS_AS(solve_affine(mat({{1, 1}}), Vector{1, 2}), InvalidInput);
    }
}

TEST_CASE("solve_affine round trip on random systems")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        Matrix a = random_matrix(rng, r, c);
        Vector x0(c);
        for (auto& x : x0)
            x = random_rational(rng);
        Vector b = a * x0;
        auto s = solve_affine(a, b);
        REQUIRE(s);
        CHECK(a * s->particular == b);
        for (const auto& n : s->nullspace)
            CHECK(is_zero(a * n));
        CHECK(s->nullspace.size() == c - rank(a));
    }
}

TEST_CASE("determinant")
{
    CHECK(determinant(Matrix::identity(3)) == 1);
    CHECK(determinant(mat({{4, 1, 0}, {1, 1, 1}, {0, 0, 1}})) == 3);
    CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(std::vector<IntVector>{{0, 2, 1}, {1, 0, 0}, {3, 1, 5}}) == -9);
    CHECK_THROWS_AS(determinant(Matrix(2, 3)), InvalidInput);
}

TEST_CASE("determinant is multiplicative")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = random_matrix(rng, 3, 3), n = random_matrix(rng, 3, 3);
        CHECK(determinant(m * n) == determinant(m) * determinant(n));
    }
}

TEST_CASE("lagrange interpolation")
{
    using S = std::vector<std::pair<Rational, Rational>>;
    auto p = lagrange_interpolate(S{{0, 1}, {1, 6}, {2, 15}});
    CHECK(p.coefficients() == std::vector<Rational>{1, 3, 2});
    CHECK(p.to_string() == "2*k^2 + 3*k + 1");

    auto c = lagrange_interpolate(S{{0, make_rational(7, 3)}});
    CHECK(c.coefficients() == std::vector<Rational>{make_rational(7, 3)});

    auto cube = lagrange_interpolate(S{{0, 1}, {1, 8}, {2, 27}, {3, 64}});
    CHECK(cube.coefficients() == std::vector<Rational>{1, 3, 3, 1});

    CHECK_THROWS_AS(lagrange_interpolate(S{{1, 1}, {1, 2}}), InvalidInput);
}

TEST_CASE("interpolant reproduces its samples")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::pair<Rational, Rational>> s;
        std::size_t n = 1 + rng() % 6;
        for (std::size_t i = 0; i < n; ++i)
            s.emplace_back(Rational(static_cast<long>(i) * 2 - 3) / 2, random_rational(rng));
        auto p = lagrange_interpolate(s);
        CHECK(p.degree() < static_cast<long>(n));
        for (const auto& [x, y] : s)
            CHECK(p(x) == y);
    }
}

TEST_CASE("integer kernel basis is a lattice basis")
{
    // x1 + x2 + x3 = 0 in Z^3: any basis has determinant ±1 against (1,1,1)/e1 completion.
    auto basis = integer_kernel_basis({{1, 1, 1}}, 3);
    REQUIRE(basis.size() == 2);
    for (const auto& b : basis)
        CHECK(b[0] + b[1] + b[2] == 0);
    Integer det = determinant(std::vector<IntVector>{basis[0], basis[1], IntVector{1, 0, 0}});
    CHECK(abs(det) == 1);

    // 2 x1 = 4 x2 has kernel lattice generated by (2, 1).
    auto k2 = integer_kernel_basis({{2, -4}}, 2);
    REQUIRE(k2.size() == 1);
    CHECK(abs(k2[0][0]) == 2);
    CHECK(abs(k2[0][1]) == 1);
}

TEST_CASE("primitive scaling")
{
    CHECK(primitive(Vector{make_rational(1, 2), make_rational(-3, 4)}) == IntVector{2, -3});
    CHECK(primitive(Vector{0, 0}) == IntVector{0, 0});
    CHECK(primitive(Vector{6, 9}) == IntVector{2, 3});
}

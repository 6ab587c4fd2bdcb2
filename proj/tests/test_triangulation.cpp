#include <catch_amalgamated.hpp>

#include "qpoly/triangulation.hpp"
#include "support.hpp"

#include <random>

using namespace qpoly;
using qpoly::test::ints;
using qpoly::test::points;

namespace {

PointConfiguration square() { return PointConfiguration(points({{0, 0}, {1, 0}, {1, 1}, {0, 1}})); }

Triangulation tri(std::vector<std::vector<std::size_t>> cells)
{
    Triangulation t{std::move(cells)};
    t.canonicalize();
    return t;
}

}  // namespace

TEST_CASE("small enumerations")
{
    CHECK(all_triangulations(PointConfiguration(points({{0, 0}, {1, 0}, {0, 1}}))).size() == 1);
    auto sq = all_triangulations(square());
    REQUIRE(sq.size() == 2);
    CHECK(sq[0] == tri({{0, 1, 2}, {0, 2, 3}}));
    CHECK(sq[1] == tri({{0, 1, 3}, {1, 2, 3}}));
    // Convex pentagon: Catalan(3) = 5. Hexagon: Catalan(4) = 14.
    CHECK(all_triangulations(PointConfiguration(points({{0, 0}, {2, 0}, {3, 1}, {1, 3}, {-1, 1}}))).size() == 5);
    CHECK(all_triangulations(
              PointConfiguration(points({{2, 0}, {4, 1}, {4, 3}, {2, 4}, {0, 3}, {0, 1}})))
              .size() == 14);
    // Square with its centre: two diagonal splits plus the fan around the centre.
    auto sc = all_triangulations(PointConfiguration(points({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}})));
    CHECK(sc.size() == 3);
    // Collinear points on a line: subdivisions of a segment with 2 interior points = 4.
    CHECK(all_triangulations(PointConfiguration(points({{0}, {1}, {2}, {3}}))).size() == 4);
}

TEST_CASE("enumeration cap")
{
    std::vector<Vector> pts;
    for (long i = 0; i < 13; ++i)
        pts.push_back(ints({i, i * i}));
    CHECK_THROWS_AS(all_triangulations(PointConfiguration(pts)), DomainError);
}

TEST_CASE("GKZ vectors")
{
    auto cfg = square();
    CHECK(gkz_vector(cfg, tri({{0, 1, 2}, {0, 2, 3}})) == ints({2, 1, 2, 1}));
    auto simplex_cfg = PointConfiguration(points({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(gkz_vector(simplex_cfg, tri({{0, 1, 2, 3}})) == ints({2, 2, 2, 2}));
    CHECK_THROWS_AS(gkz_vector(cfg, tri({{0, 1, 2}, {0, 1, 3}})), DomainError);
    CHECK_THROWS_AS(gkz_vector(cfg, tri({{0, 1, 2}})), DomainError);
    CHECK_THROWS_AS(gkz_vector(cfg, tri({{0, 1, 7}})), InvalidInput);
}

TEST_CASE("GKZ conservation and cover identity on random planar sets")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coord(0, 6);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Vector> pts;
        for (int i = 0; i < 6; ++i)
            pts.push_back(ints({coord(rng), coord(rng)}));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        PointConfiguration cfg(pts);
        if (cfg.affine_dim() != 2)
            continue;
        Rational total = normalized_volume(convex_hull(pts));
        auto all = all_triangulations(cfg);
        CHECK_FALSE(all.empty());
        for (const auto& t : all) {
            auto g = gkz_vector(cfg, t);
            CHECK(std::accumulate(g.begin(), g.end(), Rational(0)) == 3 * total);
        }
    }
}

TEST_CASE("secondary polytopes")
{
    CHECK(secondary_polytope(PointConfiguration(points({{0, 0}, {1, 0}, {0, 1}}))).dim() == 0);
    Polyhedron seg = secondary_polytope(square());
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices().size() == 2);
    // Hexagon: the secondary polytope is the 3-dimensional associahedron.
    Polyhedron assoc = secondary_polytope(PointConfiguration(points({{2, 0}, {4, 1}, {4, 3}, {2, 4}, {0, 3}, {0, 1}})));
    CHECK(assoc.dim() == 3);
    CHECK(f_vector(assoc) == FVector{14, 21, 9});
}

TEST_CASE("regularity")
{
    auto cfg = square();
    for (const auto& t : all_triangulations(cfg)) {
        auto w = is_regular(cfg, t);
        REQUIRE(w);
        CHECK(lower_hull_subdivision(cfg, *w) == t.cells);
    }
    auto single = PointConfiguration(points({{0, 0}, {1, 0}, {0, 1}}));
    auto w = is_regular(single, tri({{0, 1, 2}}));
    REQUIRE(w);
    CHECK(is_zero(*w));
}

TEST_CASE("placing triangulations are regular")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> coord(-4, 4);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Vector> pts;
        for (int i = 0; i < 7; ++i)
            pts.push_back(ints({coord(rng), coord(rng), coord(rng)}));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        PointConfiguration cfg(pts);
        if (cfg.affine_dim() != 3)
            continue;
        Triangulation t = placing_triangulation(pts);
        auto w = is_regular(cfg, t);
        REQUIRE(w);
        CHECK(lower_hull_subdivision(cfg, *w) == t.cells);
    }
}

TEST_CASE("the mother of all examples has a non-regular triangulation")
{
    // Two nested triangles; the rotated "pinwheel" triangulation is not regular.
    auto cfg = PointConfiguration(points({{0, 0}, {4, 0}, {2, 4}, {1, 1}, {3, 1}, {2, 3}}));
    auto all = all_triangulations(cfg);
    std::size_t regular = 0;
    for (const auto& t : all)
        if (is_regular(cfg, t))
            ++regular;
    CHECK(all.size() == 18);
    CHECK(regular == 16);
    CHECK(secondary_polytope(cfg).vertices().size() == 16);
}

TEST_CASE("cube symmetries")
{
    CHECK(cube_vertex_symmetries(1).size() == 2);
    CHECK(cube_vertex_symmetries(2).size() == 8);
    auto g3 = cube_vertex_symmetries(3);
    CHECK(g3.size() == 48);
    std::set<std::vector<int>> distinct;
    for (const auto& g : g3)
        distinct.insert(g.images());
    CHECK(distinct.size() == 48);
    CHECK_THROWS_AS(cube_vertex_symmetries(5), InvalidInput);

    // Closure of the generators is the whole group.
    std::set<std::vector<int>> closure{Permutation::identity(8).images()};
    std::deque<Permutation> queue{Permutation::identity(8)};
    while (!queue.empty()) {
        Permutation p = queue.front();
        queue.pop_front();
        for (const auto& g : cube_symmetry_generators(3)) {
            Permutation q = g.compose(p);
            if (closure.insert(q.images()).second)
                queue.push_back(q);
        }
    }
    CHECK(closure == distinct);
}

TEST_CASE("orbit decomposition")
{
    std::vector<Vector> vs{ints({1, 2, 3}), ints({3, 2, 1}), ints({2, 2, 2})};
    auto trivial = orbit_decomposition(vs, {});
    CHECK(trivial.size() == 3);
    Permutation rev({3, 2, 1});
    auto orbits = orbit_decomposition(vs, {rev});
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].representative == ints({1, 2, 3}));
    CHECK(orbits[0].size == 2);
    CHECK(orbits[1].size == 1);
    CHECK_THROWS_AS(orbit_decomposition({ints({1, 2}), ints({1, 2})}, {}), InvalidInput);
    CHECK_THROWS_AS(orbit_decomposition({ints({1, 2})}, {rev}), InvalidInput);
    CHECK_THROWS_AS(orbit_decomposition({ints({1, 2, 3})}, {rev}), DomainError);
}

TEST_CASE("explode layout")
{
    auto cfg = square();
    auto t = tri({{0, 1, 2}, {0, 2, 3}});
    auto still = explode_layout(cfg, t, 0);
    REQUIRE(still.size() == 2);
    CHECK(still[0] == std::vector<Vector>{cfg[0], cfg[1], cfg[2]});
    auto moved = explode_layout(cfg, t, 1);
    // The two cells move apart along the normal of the shared diagonal.
    Vector shift0(2), shift1(2);
    for (std::size_t j = 0; j < 2; ++j) {
        shift0[j] = moved[0][0][j] - cfg[0][j];
        shift1[j] = moved[1][0][j] - cfg[0][j];
    }
    CHECK(shift0 == Vector{make_rational(1, 6), make_rational(-1, 6)});
    CHECK(shift1 == Vector{make_rational(-1, 6), make_rational(1, 6)});
    auto single = PointConfiguration(points({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(explode_layout(single, tri({{0, 1, 2}}), 5)[0] == single.points());
    CHECK_THROWS_AS(explode_layout(cfg, t, -1), InvalidInput);
}

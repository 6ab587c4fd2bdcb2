// Acceptance run: one PASS/FAIL line per criterion, with its time budget.
// Exit status is the number of failed criteria.

#include "qpoly/experiments.hpp"
#include "qpoly/fan.hpp"
#include "qpoly/lp.hpp"
#include "qpoly/triangulation.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace qpoly;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<bool(std::ostream&)> check;
};

Vector ints(std::initializer_list<long> xs)
{
    Vector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

#define EXPECT(cond)                                          \
    do {                                                      \
        if (!(cond)) {                                        \
            note << "failed: " #cond " (line " << __LINE__ << ")"; \
            return false;                                     \
        }                                                     \
    } while (0)

// 1 -----------------------------------------------------------------------

Rational shoelace(const std::vector<Vector>& cyclic)
{
    Rational twice = 0;
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
        const auto& a = cyclic[i];
        const auto& b = cyclic[(i + 1) % cyclic.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
}

// Points of the box inside a counter-clockwise convex polygon, by edge orientation tests.
long box_scan(const std::vector<Vector>& ccw, long lo, long hi)
{
    long count = 0;
    for (long x = lo; x <= hi; ++x)
        for (long y = lo; y <= hi; ++y) {
            bool inside = true;
            for (std::size_t i = 0; i < ccw.size() && inside; ++i) {
                const auto& a = ccw[i];
                const auto& b = ccw[(i + 1) % ccw.size()];
                Rational cross = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
                inside = cross >= 0;
            }
            count += inside ? 1 : 0;
        }
    return count;
}

bool pentagon_pipeline(std::ostream& note)
{
    const std::vector<Vector> pts{ints({0, 0}), ints({2, 0}), ints({2, 1}), ints({1, 2}), ints({0, 2})};
    Polyhedron p = convex_hull(pts);
    EXPECT(p.facets().inequalities.size() == 5);
    EXPECT(f_vector(p) == (FVector{5, 5}));
    EXPECT(volume(p) == Rational(7, 2));
    EXPECT(volume(p) == shoelace(pts));
    EXPECT(count_lattice_points(p) == 8);
    EXPECT(count_lattice_points(p) == box_scan(pts, -1, 3));
    Fan expected = fan_from_rays_and_cones({ints({1, 0}), ints({1, 1}), ints({0, 1}), ints({-1, 0}), ints({0, -1})},
                                           {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Fan nf = normal_fan(p);
    EXPECT(nf.maximal_cones.size() == 5);
    EXPECT(nf == expected);
    note << "f=(5,5) area=7/2 lattice=8 normal fan on e1, e1+e2, e2, -e1, -e2";
    return true;
}

// 2 -----------------------------------------------------------------------

bool gt_suite(std::ostream& note)
{
    Partition lambda({3, 1, 1});
    Permutation sigma({1, 3, 2});
    Polyhedron gt = gelfand_tsetlin(lambda);
    EXPECT(count_lattice_points(gt) == 6);
    EXPECT(ehrhart_polynomial(gt) == UnivariatePolynomial({1, 3, 2}));
    EXPECT(count_lattice_points(generalized_gelfand_tsetlin(lambda, sigma)) == 3);
    EXPECT(demazure_character(lambda, sigma)(std::vector<Rational>{1, 1, 1}) == 3);
    EXPECT(demazure_dimension(lambda, sigma) == 3);
    EXPECT(gt_weight(GTDiagram::from_rows({{3, 1, 1}, {1, 1}, {1}})) == (std::vector<Rational>{1, 1, 3}));
    note << "6 points, 2k^2+3k+1, 3 points, character(1,1,1)=3, det=3, weight (1,1,3)";
    return true;
}

// 3 -----------------------------------------------------------------------

void partitions(std::size_t n, long max_part, std::vector<long>& prefix, std::vector<Partition>& out)
{
    if (prefix.size() == n) {
        out.emplace_back(prefix);
        return;
    }
    for (long v = max_part; v >= 0; --v) {
        prefix.push_back(v);
        partitions(n, v, prefix, out);
        prefix.pop_back();
    }
}

// Weyl's formula evaluated directly: prod_{i<j} (k(l_i - l_j) + j - i) / (j - i).
Integer weyl_oracle(const Partition& l, long k)
{
    Rational v = 1;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
            v *= make_rational(Integer(k * (l[i] - l[j]) + static_cast<long>(j - i)), Integer(static_cast<long>(j - i)));
    return v.get_num();
}

bool weyl_sweep(std::ostream& note)
{
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<Partition> all;
        std::vector<long> prefix;
        partitions(n, 4, prefix, all);
        for (const auto& l : all) {
            Polyhedron gt = gelfand_tsetlin(l);
            EXPECT(count_lattice_points(gt) == weyl_dimension(l, 1));
            EXPECT(weyl_dimension(l, 1) == weyl_oracle(l, 1));
            UnivariatePolynomial e = ehrhart_polynomial(gt);
            for (long k = 1; k <= 3; ++k) {
                EXPECT(e(Rational(k)) == weyl_dimension(l, k));
                EXPECT(weyl_dimension(l, k) == weyl_oracle(l, k));
            }
            ++checked;
        }
    }
    note << checked << " partitions";
    return true;
}

// 4, 5 --------------------------------------------------------------------

struct CubeData {
    PointConfiguration cfg{cube_vertices(3)};
    std::vector<Triangulation> triangulations;
    std::vector<Vector> gkz;
};

CubeData& cube_data()
{
    static CubeData data;
    return data;
}

bool secondary_c3(std::ostream& note)
{
    CubeData& c = cube_data();
    c.triangulations = all_triangulations(c.cfg);
    EXPECT(c.triangulations.size() == 74);
    std::size_t regular = 0;
    for (const auto& t : c.triangulations) {
        auto w = is_regular(c.cfg, t);
        EXPECT(w.has_value());
        EXPECT(lower_hull_subdivision(c.cfg, *w) == t.cells);
        ++regular;
        c.gkz.push_back(gkz_vector(c.cfg, t));
    }
    Polyhedron sec = convex_hull(c.gkz, 8);
    EXPECT(sec.dim() == 4);
    EXPECT(f_vector(sec) == (FVector{74, 152, 100, 22}));
    note << "74 triangulations, " << regular << " regular, dim 4, f=(74,152,100,22)";
    return true;
}

// The 48 symmetries of [0,1]^3 acting on coordinates, turned into point permutations by lookup.
std::vector<std::vector<std::size_t>> cube_group_oracle(const std::vector<Vector>& pts)
{
    std::vector<std::vector<std::size_t>> group;
    std::vector<int> axes{0, 1, 2};
    do {
        for (int flips = 0; flips < 8; ++flips) {
            std::vector<std::size_t> perm;
            for (const auto& p : pts) {
                Vector q(3);
                for (int i = 0; i < 3; ++i) {
                    Rational x = p[static_cast<std::size_t>(axes[static_cast<std::size_t>(i)])];
                    q[static_cast<std::size_t>(i)] = (flips >> i) & 1 ? Rational(1 - x) : x;
                }
                perm.push_back(static_cast<std::size_t>(std::find(pts.begin(), pts.end(), q) - pts.begin()));
            }
            group.push_back(std::move(perm));
        }
    } while (std::next_permutation(axes.begin(), axes.end()));
    return group;
}

bool gkz_orbits(std::ostream& note)
{
    CubeData& c = cube_data();
    if (c.gkz.size() != 74) {
        c.triangulations = all_triangulations(c.cfg);
        c.gkz.clear();
        for (const auto& t : c.triangulations)
            c.gkz.push_back(gkz_vector(c.cfg, t));
    }
    auto orbits = orbit_decomposition(c.gkz, cube_symmetry_generators(3));
    std::size_t total = 0;
    std::vector<std::size_t> sizes;
    for (const auto& o : orbits) {
        EXPECT(48 % o.size == 0);
        total += o.size;
        sizes.push_back(o.size);
    }
    EXPECT(total == 74);

    // brute force: close every vector under all 48 group elements
    auto group = cube_group_oracle(c.cfg.points());
    EXPECT(group.size() == 48);
    std::set<std::pair<Vector, std::size_t>> oracle;
    const std::set<Vector> all(c.gkz.begin(), c.gkz.end());
    for (const auto& v : c.gkz) {
        std::set<Vector> orbit;
        for (const auto& g : group) {
            Vector w(v.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                w[g[i]] = v[i];
            EXPECT(all.count(w));
            orbit.insert(w);
        }
        oracle.emplace(*orbit.begin(), orbit.size());
    }
    std::set<std::pair<Vector, std::size_t>> got;
    for (const auto& o : orbits)
        got.emplace(o.representative, o.size);
    EXPECT(got == oracle);
    note << orbits.size() << " orbits, sizes";
    for (auto s : sizes)
        note << ' ' << s;
    return true;
}

// 6, 7 --------------------------------------------------------------------

bool g_experiment(std::ostream& note)
{
    GExperiment ex = gexperiment(6, 30, 100, 20240601);
    EXPECT(ex.ubt_ceiling == 276);
    for (const auto& t : ex.trials) {
        EXPECT(t.simplicial);
        for (std::size_t k = 0; k <= 6; ++k)
            EXPECT(t.h[k] == t.h[6 - k]);
        EXPECT(t.g[2] <= 276);
        EXPECT(t.g[2] >= 0);
        EXPECT(f_vector_from_h(h_vector_from_g(t.g, 6)) == t.f);
    }
    note << "100 instances, g2 range [" << *ex.g2_min << ", " << *ex.g2_max << "], ceiling 276";
    return true;
}

bool three_d_law(std::ostream& note)
{
    std::size_t smallest = 1000, largest = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::size_t n = 10 + 2 * i;
        Polyhedron p = rand_spherical_polytope(3, n, SphereMode::exact, 7000 + i);
        FVector f = f_vector(p);
        const long v = static_cast<long>(p.vertices().size());
        EXPECT(f == (FVector{v, 3 * v - 6, 2 * v - 4}));
        EXPECT(f[0] - f[1] + f[2] == 2);
        smallest = std::min(smallest, static_cast<std::size_t>(v));
        largest = std::max(largest, static_cast<std::size_t>(v));
    }
    note << "50 instances, " << smallest << ".." << largest << " vertices";
    return true;
}

// 8 -----------------------------------------------------------------------

// Is target in conv(points) + cone(rays)? Decided by an LP feasibility problem.
bool in_hull_lp(const std::vector<Vector>& points, const std::vector<Vector>& rays, const Vector& target)
{
    const std::size_t d = target.size();
    const std::size_t m = points.size() + rays.size();
    if (points.empty())
        return false;
    HRep h;
    h.dim = m;
    for (std::size_t j = 0; j < m; ++j) {
        Vector a(m, Rational(0));
        a[j] = -1;
        h.inequalities.push_back({a, Rational(0)});
    }
    for (std::size_t i = 0; i < d; ++i) {
        Vector e(m);
        for (std::size_t j = 0; j < points.size(); ++j)
            e[j] = points[j][i];
        for (std::size_t j = 0; j < rays.size(); ++j)
            e[points.size() + j] = rays[j][i];
        h.equations.push_back({e, target[i]});
    }
    Vector sum(m, Rational(0));
    for (std::size_t j = 0; j < points.size(); ++j)
        sum[j] = 1;
    h.equations.push_back({sum, Rational(1)});
    LinearProgram lp{Polyhedron::from_hrep(h), Vector(m, Rational(0))};
    return solve(lp).status == LPStatus::optimal;
}

// Is r in cone(rays)?
bool in_cone_lp(const std::vector<Vector>& rays, const Vector& r)
{
    if (rays.empty())
        return false;
    const std::size_t d = r.size(), m = rays.size();
    HRep h;
    h.dim = m;
    for (std::size_t j = 0; j < m; ++j) {
        Vector a(m, Rational(0));
        a[j] = -1;
        h.inequalities.push_back({a, Rational(0)});
    }
    for (std::size_t i = 0; i < d; ++i) {
        Vector e(m);
        for (std::size_t j = 0; j < m; ++j)
            e[j] = rays[j][i];
        h.equations.push_back({e, r[i]});
    }
    LinearProgram lp{Polyhedron::from_hrep(h), Vector(m, Rational(0))};
    return solve(lp).status == LPStatus::optimal;
}

std::vector<Vector> without(const std::vector<Vector>& v, std::size_t i)
{
    std::vector<Vector> out = v;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

bool hull_round_trips(std::ostream& note)
{
    std::mt19937_64 rng(424242);
    auto coord = [&] {
        long den = std::uniform_int_distribution<long>(1, 3)(rng);
        long num = std::uniform_int_distribution<long>(-5 * den, 5 * den)(rng);
        return make_rational(Integer(num), Integer(den));
    };
    std::size_t with_rays = 0, lower_dim = 0, skipped = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + static_cast<std::size_t>(trial % 4);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 15)(rng);
        const bool flat = trial % 7 == 3 && d >= 2;  // confine to a hyperplane x_d = x_1
        std::vector<Vector> pts;
        for (std::size_t i = 0; i < n; ++i) {
            Vector p(d);
            for (auto& x : p)
                x = coord();
            if (flat)
                p[d - 1] = p[0];
            pts.push_back(p);
        }
        std::vector<Vector> rays;
        if (trial % 5 == 0) {
            const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
            for (std::size_t i = 0; i < k; ++i) {
                Vector r(d);
                for (auto& x : r)
                    x = coord();
                if (flat)
                    r[d - 1] = r[0];
                if (!is_zero(r))
                    rays.push_back(r);
            }
        }
        with_rays += rays.empty() ? 0 : 1;

        VRep input{d, pts, rays, {}};
        HRep h = vrep_to_hrep(input);
        VRep back = hrep_to_vrep(h);
        if (!h.equations.empty())
            ++lower_dim;

        // Oracle: minimal generators by LP redundancy tests on the deduplicated input.
        std::set<Vector> uniq_pts(pts.begin(), pts.end());
        std::vector<Vector> up(uniq_pts.begin(), uniq_pts.end());
        std::set<Vector> uniq_rays;
        for (const auto& r : rays)
            uniq_rays.insert(primitive_rational(r));
        std::vector<Vector> ur(uniq_rays.begin(), uniq_rays.end());

        // Same set after the round trip; H -> V -> H is stable.
        EXPECT(vrep_to_hrep(back) == h);

        // Generators are compared one by one only for pointed results.
        if (!back.lineality.empty()) {
            ++skipped;
            continue;
        }
        std::set<Vector> expected_pts, expected_rays;
        for (std::size_t i = 0; i < up.size(); ++i)
            if (!in_hull_lp(without(up, i), ur, up[i]))
                expected_pts.insert(up[i]);
        for (std::size_t i = 0; i < ur.size(); ++i)
            if (!in_cone_lp(without(ur, i), ur[i]))
                expected_rays.insert(ur[i]);
        std::set<Vector> got_pts(back.points.begin(), back.points.end());
        std::set<Vector> got_rays;
        for (const auto& r : back.rays)
            got_rays.insert(primitive_rational(r));
        EXPECT(got_pts == expected_pts);
        EXPECT(got_rays == expected_rays);
        EXPECT(back.points.size() == got_pts.size());

        if (rays.empty() && d >= 1) {
            HRep placed = vrep_to_hrep_placing(pts);
            EXPECT(placed.inequalities.size() == h.inequalities.size());
            EXPECT(placed.equations.size() == h.equations.size());
        }
    }
    note << "200 instances (" << with_rays << " with rays, " << lower_dim << " lower-dimensional, "
         << skipped << " with a lineality space compared as sets)";
    return true;
}

// 9 -----------------------------------------------------------------------

bool lp_fan_duality(std::ostream& note)
{
    std::mt19937_64 rng(9090);
    std::uniform_int_distribution<long> coord(-6, 6), obj(-9, 9);
    std::size_t bigger_faces = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
        Polyhedron p = cube(1);
        do {
            std::vector<Vector> pts;
            for (std::size_t i = 0; i < d + 6; ++i) {
                Vector v(d);
                for (auto& x : v)
                    x = coord(rng);
                pts.push_back(v);
            }
            p = convex_hull(pts, d);
        } while (p.dim() != static_cast<int>(d));

        const auto& verts = p.vertices();
        Fan nf = normal_fan(p);
        Vector c(d);
        if (trial % 2 == 0) {
            for (auto& x : c)
                x = obj(rng);
        } else {
            // a facet normal, so the optimal face is a facet
            const auto& f = p.facets().inequalities;
            c = f[static_cast<std::size_t>(trial) % f.size()].normal;
        }
        if (is_zero(c))
            c[0] = 1;

        LinearProgram lp{p, c};
        LPResult r = solve(lp);
        EXPECT(r.status == LPStatus::optimal);
        auto it = std::find(verts.begin(), verts.end(), r.optimizer);
        EXPECT(it != verts.end());
        const auto v = static_cast<std::size_t>(it - verts.begin());
        EXPECT(nf.cone(v).contains(c));

        // optimal face: its vertices are vertices of P and it is cut out by the facets tight on all of them
        Polyhedron face = optimal_face(lp);
        const auto& fv = face.vertices();
        std::set<Vector> pv(verts.begin(), verts.end());
        for (const auto& x : fv) {
            EXPECT(pv.count(x));
            EXPECT(dot(c, x) == r.value);
        }
        std::vector<const Inequality*> tight;
        for (const auto& f : p.facets().inequalities) {
            bool all = true;
            for (const auto& x : fv)
                all = all && dot(f.normal, x) == f.rhs;
            if (all)
                tight.push_back(&f);
        }
        EXPECT(!tight.empty());
        std::set<Vector> cut;
        for (const auto& x : verts) {
            bool all = true;
            for (const auto* f : tight)
                all = all && dot(f->normal, x) == f->rhs;
            if (all)
                cut.insert(x);
        }
        EXPECT(cut == std::set<Vector>(fv.begin(), fv.end()));
        bigger_faces += fv.size() > 1 ? 1 : 0;
    }
    note << "50 instances, " << bigger_faces << " with optimal faces larger than a vertex";
    return true;
}

// 10 ----------------------------------------------------------------------

bool sphere_exact(std::ostream& note)
{
    std::size_t count = 0;
    for (std::size_t d = 2; d <= 6; ++d)
        for (const auto& p : random_sphere_points(d, 200, SphereMode::exact, 31 + d)) {
            Rational s = 0;
            for (const auto& x : p)
                s += x * x;
            EXPECT(s == 1);
            ++count;
        }
    EXPECT(count == 1000);
    note << "1000 points in dimensions 2..6";
    return true;
}

}  // namespace

int main(int argc, char** argv)
{
    std::vector<Criterion> criteria{
        {1, "pentagon pipeline", 1, pentagon_pipeline},
        {2, "GT suite", 5, gt_suite},
        {3, "Weyl consistency sweep", 120, weyl_sweep},
        {4, "secondary polytope of the 3-cube", 300, secondary_c3},
        {5, "GKZ orbits under the cube group", 60, gkz_orbits},
        {6, "random 6-polytopes with 30 points", 600, g_experiment},
        {7, "3D f-vector law", 120, three_d_law},
        {8, "hull round trips", 300, hull_round_trips},
        {9, "LP/fan duality", 120, lp_fan_duality},
        {10, "exact sphere points", 10, sphere_exact},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id))
            continue;
        std::ostringstream note;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(note);
        } catch (const std::exception& e) {
            note << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        if (ok && !in_time)
            note << "; over the time budget";
        ok = ok && in_time;
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << note.str() << " ("
                  << std::fixed << std::setprecision(2) << secs << " s, budget " << c.budget_seconds << " s)"
                  << std::endl;
    }
    return failed;
}

/**
 * Seeded experiments on random spherical polytopes: g-vector statistics and
 * the hull-algorithm race.
 */
#pragma once

#include "qpoly/constructions.hpp"

#include <chrono>
#include <cstdio>

namespace qpoly {

struct GTrial {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t vertices = 0;
    bool simplicial = false;
    bool dehn_sommerville = false;
    FVector f;
    HVector h;
    GVector g;
};

struct GExperiment {
    std::size_t d = 0, n = 0;
    std::uint64_t seed = 0;
    std::vector<GTrial> trials;
    Integer ubt_ceiling;  ///< binom(g1 + 1, 2) with g1 = n - d - 1
    std::optional<Integer> g2_min, g2_max;

    /// (g2, g3) per trial, for d >= 6.
    std::vector<std::pair<Integer, Integer>> scatter() const
    {
        std::vector<std::pair<Integer, Integer>> out;
        for (const auto& t : trials)
            if (t.g.size() > 3)
                out.emplace_back(t.g[2], t.g[3]);
        return out;
    }
};

inline bool is_palindromic(const HVector& h)
{
    for (std::size_t k = 0; k < h.size(); ++k)
        if (h[k] != h[h.size() - 1 - k])
            return false;
    return true;
}

/// Trial t uses seed + t.
inline GExperiment gexperiment(std::size_t d, std::size_t n, std::size_t trials, std::uint64_t seed)
{
    if (d < 3 || n <= d)
        throw InvalidInput("gexperiment needs d >= 3 and n > d");
    GExperiment ex;
    ex.d = d;
    ex.n = n;
    ex.seed = seed;
    ex.ubt_ceiling = binomial(static_cast<long>(n - d), 2);
    for (std::size_t t = 0; t < trials; ++t) {
        GTrial tr;
        tr.trial = t;
        tr.seed = seed + t;
        Polyhedron p = rand_spherical_polytope(d, n, SphereMode::exact, tr.seed);
        tr.vertices = p.vertices().size();
        tr.simplicial = is_simplicial(p);
        tr.f = f_vector(p);
        tr.h = h_vector_from_f(tr.f);
        tr.g = g_vector_from_h(tr.h);
        tr.dehn_sommerville = is_palindromic(tr.h);
        if (tr.g.size() > 2) {
            const Integer& g2 = tr.g[2];
            if (!ex.g2_min || g2 < *ex.g2_min)
                ex.g2_min = g2;
            if (!ex.g2_max || g2 > *ex.g2_max)
                ex.g2_max = g2;
        }
        ex.trials.push_back(std::move(tr));
    }
    return ex;
}

// Benchmark
// ---------------------------------------------------------------------------

enum class HullAlgorithm { dd, placing };

inline const char* to_string(HullAlgorithm a) { return a == HullAlgorithm::dd ? "dd" : "placing"; }

inline HullAlgorithm parse_hull_algorithm(std::string_view s)
{
    if (s == "dd")
        return HullAlgorithm::dd;
    if (s == "placing")
        return HullAlgorithm::placing;
    throw InvalidInput("unknown hull algorithm '" + std::string(s) + "' (expected dd or placing)");
}

struct BenchRun {
    HullAlgorithm algorithm = HullAlgorithm::dd;
    double seconds = 0;
    std::size_t peak_cells = 0;  ///< intermediate rays for dd, simplices for placing
    std::size_t facets = 0;
};

struct BenchReport {
    std::size_t d = 0, n = 0;
    std::uint64_t seed = 0;
    std::string instance_hash;
    std::size_t vertices = 0;
    std::vector<BenchRun> runs;

    bool facet_counts_agree() const
    {
        for (const auto& r : runs)
            if (r.facets != runs.front().facets)
                return false;
        return true;
    }
};

/// FNV-1a over the exact coordinates.
inline std::string instance_hash(const std::vector<Vector>& points)
{
    std::uint64_t h = 14695981039346656037ULL;
    auto feed = [&](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& p : points) {
        for (const auto& x : p) {
            feed(to_string(x));
            feed(",");
        }
        feed(";");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline BenchReport bench(std::size_t d, std::size_t n, std::uint64_t seed, const std::vector<HullAlgorithm>& algorithms)
{
    if (d < 2 || n <= d)
        throw InvalidInput("bench needs d >= 2 and n > d");
    BenchReport rep;
    rep.d = d;
    rep.n = n;
    rep.seed = seed;
    const std::vector<Vector> pts = random_sphere_points(d, n, SphereMode::exact, seed);
    rep.instance_hash = instance_hash(pts);
    const VRep v{d, pts, {}, {}};

    using clock = std::chrono::steady_clock;
    for (auto alg : algorithms) {
        BenchRun run;
        run.algorithm = alg;
        auto start = clock::now();
        if (alg == HullAlgorithm::dd) {
            detail::HomogenizedHull hh = detail::homogenized_hull(v, InsertionOrder::input);
            run.facets = detail::facets_from_hull(hh, pts.size()).hrep.inequalities.size();
            run.peak_cells = hh.peak;
        } else {
            HullStats stats;
            run.facets = vrep_to_hrep_placing(pts, {}, &stats).inequalities.size();
            run.peak_cells = stats.peak_cells;
        }
        run.seconds = std::chrono::duration<double>(clock::now() - start).count();
        rep.runs.push_back(run);
    }
    rep.vertices = convex_hull(pts, d).vertices().size();
    return rep;
}

}  // namespace qpoly

/**
 * Triangulations of point configurations: enumeration, GKZ vectors, secondary
 * polytopes, regularity, and symmetry orbits.
 */
#pragma once

#include "qpoly/constructions.hpp"
#include "qpoly/lp.hpp"

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace qpoly {

/// Labelled point set; the order of the points is significant.
class PointConfiguration {
  public:
    explicit PointConfiguration(std::vector<Vector> points) : points_(std::move(points))
    {
        if (points_.empty())
            throw InvalidInput("point configuration is empty");
        ambient_ = points_.front().size();
        for (const auto& p : points_)
            if (p.size() != ambient_)
                throw InvalidInput("point configuration mixes dimensions");
        frame_ = detail::affine_frame(points_, ambient_);
        if (frame_.dim < 1)
            throw DomainError("point configuration must span at least a line");
        for (const auto& p : points_) {
            Vector q = frame_.project(p);
            q.insert(q.begin(), Rational(1));
            lifted_.push_back(std::move(q));
        }
        HRep h = vrep_to_hrep(VRep{ambient_, points_, {}, {}});
        std::vector<Vector> normals;
        for (const auto& e : h.equations)
            normals.push_back(e.normal);
        lattice_ = std::make_shared<detail::LatticeFrame>(normals, ambient_);
    }

    std::size_t size() const { return points_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t affine_dim() const { return frame_.dim; }
    const std::vector<Vector>& points() const { return points_; }
    const Vector& operator[](std::size_t i) const { return points_[i]; }

    /// (1, coordinates in the affine hull) for point i.
    const Vector& homogeneous(std::size_t i) const { return lifted_[i]; }

    /// Signed determinant of the homogenised points (size affine_dim + 1).
    Rational det(const std::vector<std::size_t>& idx) const
    {
        const std::size_t n = idx.size();
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = lifted_[idx[i]][j];
        return determinant(std::move(m));
    }

    /// Same with an arbitrary homogeneous point in the last row.
    Rational det_with(const std::vector<std::size_t>& idx, const Vector& extra) const
    {
        const std::size_t n = idx.size() + 1;
        Matrix m(n, n);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = lifted_[idx[i]][j];
        for (std::size_t j = 0; j < n; ++j)
            m(n - 1, j) = extra[j];
        return determinant(std::move(m));
    }

    /// Lattice-normalised volume of a full-dimensional simplex on the given points.
    Rational normalized_volume(const std::vector<std::size_t>& cell) const
    {
        std::vector<const Vector*> verts;
        for (auto i : cell)
            verts.push_back(&points_[i]);
        return lattice_->normalized_volume(verts);
    }

  private:
    std::vector<Vector> points_;
    std::size_t ambient_ = 0;
    detail::AffineFrame frame_;
    std::vector<Vector> lifted_;
    std::shared_ptr<detail::LatticeFrame> lattice_;
};

using GKZVector = Vector;

namespace detail {

inline int sign_of(const Rational& q) { return sgn(q); }

/// Whether conv(S) ∩ conv(T) = conv(S ∩ T) for two full-dimensional simplices.
inline bool properly_intersect(const PointConfiguration& cfg, const std::vector<std::size_t>& s,
                               const std::vector<std::size_t>& t)
{
    std::vector<std::size_t> common;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(common));
    const std::size_t r = cfg.affine_dim();
    if (common.size() == s.size())
        return true;
    if (common.size() == r) {
        // Sharing a facet: fine iff the two apexes lie on opposite sides.
        std::size_t a = 0, b = 0;
        for (auto i : s)
            if (!std::binary_search(common.begin(), common.end(), i))
                a = i;
        for (auto i : t)
            if (!std::binary_search(common.begin(), common.end(), i))
                b = i;
        return sign_of(cfg.det_with(common, cfg.homogeneous(a))) != sign_of(cfg.det_with(common, cfg.homogeneous(b)));
    }
    // max Σ_{i ∈ S\T} λ_i over λ, μ >= 0 with Σλ q = Σμ q, Σλ = 1; positive iff improper.
    const std::size_t ns = s.size(), nt = t.size(), nv = ns + nt;
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t k = 0; k <= r; ++k) {
        Vector row(nv, Rational(0));
        for (std::size_t i = 0; i < ns; ++i)
            row[i] = cfg.homogeneous(s[i])[k];
        for (std::size_t j = 0; j < nt; ++j)
            row[ns + j] = -cfg.homogeneous(t[j])[k];
        rows.push_back(std::move(row));
        rhs.push_back(0);
    }
    Vector sum(nv, Rational(0));
    for (std::size_t i = 0; i < ns; ++i)
        sum[i] = 1;
    rows.push_back(sum);
    rhs.push_back(1);
    Vector c(nv, Rational(0));
    for (std::size_t i = 0; i < ns; ++i)
        if (!std::binary_search(common.begin(), common.end(), s[i]))
            c[i] = 1;
    StandardFormResult res = maximize_standard(std::move(rows), std::move(rhs), c);
    return res.status != LPStatus::optimal || res.value == 0;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n)
        return;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

inline std::vector<std::size_t> without(const std::vector<std::size_t>& cell, std::size_t pos)
{
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < cell.size(); ++i)
        if (i != pos)
            f.push_back(cell[i]);
    return f;
}

/// Enumeration state shared by the backtracking search.
class TriangulationSearch {
  public:
    explicit TriangulationSearch(const PointConfiguration& cfg) : cfg_(cfg), r_(cfg.affine_dim())
    {
        for_each_subset(cfg.size(), r_ + 1, [&](const std::vector<std::size_t>& s) {
            if (cfg.det(s) != 0)
                cands_.push_back(s);
        });
        for (std::size_t c = 0; c < cands_.size(); ++c)
            for (std::size_t k = 0; k <= r_; ++k)
                by_facet_[without(cands_[c], k)].push_back({c, cands_[c][k]});
        total_volume_ = normalized_volume(convex_hull(cfg.points(), cfg.ambient_dim()));
    }

    std::vector<Triangulation> run()
    {
        const Vector x = generic_point();
        for (std::size_t c = 0; c < cands_.size(); ++c)
            if (strictly_inside(cands_[c], x)) {
                push(c);
                recurse();
                pop();
            }
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

  private:
    struct FacetState {
        int count = 0;
        int apex_side = 0;
    };

    // A point of the interior lying on no hyperplane spanned by configuration points.
    Vector generic_point() const
    {
        const auto& s0 = cands_.front();
        std::vector<std::vector<std::size_t>> hyperplanes;
        for_each_subset(cfg_.size(), r_, [&](const std::vector<std::size_t>& f) {
            // keep only affinely independent r-subsets
            Matrix m(f.size(), r_ + 1);
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = 0; j <= r_; ++j)
                    m(i, j) = cfg_.homogeneous(f[i])[j];
            if (rank(m) == r_)
                hyperplanes.push_back(f);
        });
        for (long salt = 1;; ++salt) {
            Vector x(r_ + 1, Rational(0));
            Rational total = 0;
            for (std::size_t i = 0; i <= r_; ++i) {
                const long li = static_cast<long>(i);
                Rational w = 1 + make_rational(1, salt * 7 + 3 * li + 11) + make_rational(li * li + 1, 97 * salt + 1);
                total += w;
                for (std::size_t j = 0; j <= r_; ++j)
                    x[j] += w * cfg_.homogeneous(s0[i])[j];
            }
            for (auto& v : x)
                v /= total;
            bool generic = true;
            for (const auto& f : hyperplanes)
                if (cfg_.det_with(f, x) == 0) {
                    generic = false;
                    break;
                }
            if (generic)
                return x;
        }
    }

    bool strictly_inside(const std::vector<std::size_t>& cell, const Vector& x) const
    {
        for (std::size_t k = 0; k <= r_; ++k) {
            auto f = without(cell, k);
            int s_apex = sign_of(cfg_.det_with(f, cfg_.homogeneous(cell[k])));
            int s_x = sign_of(cfg_.det_with(f, x));
            if (s_apex != s_x)
                return false;
        }
        return true;
    }

    bool is_boundary(const std::vector<std::size_t>& facet)
    {
        auto it = boundary_.find(facet);
        if (it != boundary_.end())
            return it->second;
        bool pos = false, neg = false;
        for (std::size_t i = 0; i < cfg_.size(); ++i) {
            int s = sign_of(cfg_.det_with(facet, cfg_.homogeneous(i)));
            pos |= s > 0;
            neg |= s < 0;
        }
        return boundary_[facet] = !(pos && neg);
    }

    bool compatible(std::size_t a, std::size_t b)
    {
        auto key = std::minmax(a, b);
        auto k = key.first * cands_.size() + key.second;
        auto it = compat_.find(k);
        if (it != compat_.end())
            return it->second;
        return compat_[k] = properly_intersect(cfg_, cands_[a], cands_[b]);
    }

    void push(std::size_t c)
    {
        cells_.push_back(c);
        const auto& cell = cands_[c];
        for (std::size_t k = 0; k <= r_; ++k) {
            auto f = without(cell, k);
            auto& st = facets_[f];
            if (st.count++ == 0)
                st.apex_side = sign_of(cfg_.det_with(f, cfg_.homogeneous(cell[k])));
        }
    }

    void pop()
    {
        const auto& cell = cands_[cells_.back()];
        for (std::size_t k = 0; k <= r_; ++k) {
            auto f = without(cell, k);
            auto it = facets_.find(f);
            if (--it->second.count == 0)
                facets_.erase(it);
        }
        cells_.pop_back();
    }

    void recurse()
    {
        const std::vector<std::size_t>* open = nullptr;
        int side = 0;
        for (const auto& [f, st] : facets_)
            if (st.count == 1 && !is_boundary(f)) {
                open = &f;
                side = st.apex_side;
                break;
            }
        if (!open) {
            record();
            return;
        }
        const std::vector<std::size_t> facet = *open;
        for (const auto& [c, apex] : by_facet_[facet]) {
            if (sign_of(cfg_.det_with(facet, cfg_.homogeneous(apex))) != -side)
                continue;
            bool ok = true;
            for (auto other : cells_)
                if (!compatible(c, other)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            push(c);
            recurse();
            pop();
        }
    }

    void record()
    {
        Triangulation t;
        Rational vol = 0;
        for (auto c : cells_) {
            t.cells.push_back(cands_[c]);
            vol += cfg_.normalized_volume(cands_[c]);
        }
        if (vol != total_volume_)
            throw std::logic_error("triangulation search produced a non-covering complex");
        t.canonicalize();
        found_.push_back(std::move(t));
    }

    const PointConfiguration& cfg_;
    std::size_t r_;
    std::vector<std::vector<std::size_t>> cands_;
    std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> by_facet_;
    std::map<std::vector<std::size_t>, bool> boundary_;
    std::unordered_map<std::size_t, bool> compat_;
    std::map<std::vector<std::size_t>, FacetState> facets_;
    std::vector<std::size_t> cells_;
    std::vector<Triangulation> found_;
    Rational total_volume_;
};

}  // namespace detail

/// Every triangulation of the configuration (not necessarily using all points), sorted.
inline std::vector<Triangulation> all_triangulations(const PointConfiguration& cfg, std::size_t cap = 12)
{
    if (cfg.size() > cap)
        throw DomainError("all_triangulations: " + std::to_string(cfg.size()) + " points exceed the cap of " +
                          std::to_string(cap));
    if (cfg.affine_dim() > 4)
        throw DomainError("all_triangulations: affine dimension above 4 is not supported");
    return detail::TriangulationSearch(cfg).run();
}

/// Throws DomainError unless T is a triangulation of cfg.
inline void validate_triangulation(const PointConfiguration& cfg, const Triangulation& t)
{
    const std::size_t r = cfg.affine_dim();
    if (t.cells.empty())
        throw DomainError("triangulation has no cells");
    for (const auto& cell : t.cells) {
        if (cell.size() != r + 1)
            throw InvalidInput("cell size does not match the affine dimension");
        for (auto i : cell)
            if (i >= cfg.size())
                throw InvalidInput("cell references a point outside the configuration");
        if (!std::is_sorted(cell.begin(), cell.end()) || std::adjacent_find(cell.begin(), cell.end()) != cell.end())
            throw InvalidInput("cells must be sorted index sets without repeats");
        if (cfg.det(cell) == 0)
            throw DomainError("degenerate cell");
    }
    Rational vol = 0;
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
        vol += cfg.normalized_volume(t.cells[i]);
        for (std::size_t j = i + 1; j < t.cells.size(); ++j)
            if (!detail::properly_intersect(cfg, t.cells[i], t.cells[j]))
                throw DomainError("cells overlap");
    }
    if (vol != normalized_volume(convex_hull(cfg.points(), cfg.ambient_dim())))
        throw DomainError("cells do not cover the convex hull");
}

/// Entry a: sum of the normalised volumes of the cells containing point a.
inline GKZVector gkz_vector(const PointConfiguration& cfg, const Triangulation& t, bool validate = true)
{
    if (validate)
        validate_triangulation(cfg, t);
    GKZVector g(cfg.size(), Rational(0));
    for (const auto& cell : t.cells) {
        Rational v = cfg.normalized_volume(cell);
        for (auto i : cell)
            g[i] += v;
    }
    return g;
}

/// Convex hull of the GKZ vectors of all triangulations.
inline Polyhedron secondary_polytope(const PointConfiguration& cfg, std::size_t cap = 12)
{
    std::vector<Vector> gkz;
    for (const auto& t : all_triangulations(cfg, cap))
        gkz.push_back(gkz_vector(cfg, t, false));
    return convex_hull(gkz, cfg.size());
}

/// Cells of the lower hull of the points lifted by `heights`.
inline std::vector<std::vector<std::size_t>> lower_hull_subdivision(const PointConfiguration& cfg, const Vector& heights)
{
    if (heights.size() != cfg.size())
        throw InvalidInput("one height per point is required");
    const std::size_t r = cfg.affine_dim();
    std::vector<Vector> lifted;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        Vector q(cfg.homogeneous(i).begin() + 1, cfg.homogeneous(i).end());
        q.push_back(heights[i]);
        lifted.push_back(std::move(q));
    }
    HRep h = vrep_to_hrep(VRep{r + 1, lifted, {}, {}});
    std::vector<std::vector<std::size_t>> cells;
    if (!h.equations.empty()) {
        std::vector<std::size_t> all(cfg.size());
        std::iota(all.begin(), all.end(), 0);
        cells.push_back(std::move(all));
        return cells;
    }
    for (const auto& f : h.inequalities) {
        if (f.normal[r] >= 0)
            continue;
        std::vector<std::size_t> cell;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (dot(f.normal, lifted[i]) == f.rhs)
                cell.push_back(i);
        cells.push_back(std::move(cell));
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

/// Heights whose lower hull induces T, if T is regular.
inline std::optional<Vector> is_regular(const PointConfiguration& cfg, const Triangulation& t)
{
    validate_triangulation(cfg, t);
    const std::size_t m = cfg.size(), r = cfg.affine_dim();

    // Each condition is a linear form in the heights that must be positive.
    std::vector<Vector> conditions;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> apexes;
    for (const auto& cell : t.cells)
        for (std::size_t k = 0; k <= r; ++k)
            apexes[detail::without(cell, k)].push_back(cell[k]);
    for (const auto& [wall, ap] : apexes) {
        if (ap.size() != 2)
            continue;
        // Affine dependence on wall ∪ {a, b}; a and b get coefficients of equal sign.
        std::vector<std::size_t> pts = wall;
        pts.push_back(ap[0]);
        pts.push_back(ap[1]);
        Matrix mtx(r + 1, pts.size());
        for (std::size_t j = 0; j < pts.size(); ++j)
            for (std::size_t i = 0; i <= r; ++i)
                mtx(i, j) = cfg.homogeneous(pts[j])[i];
        auto ker = nullspace(mtx);
        Vector lam = ker.at(0);
        if (lam[pts.size() - 2] < 0)
            for (auto& x : lam)
                x = -x;
        Vector cond(m, Rational(0));
        for (std::size_t j = 0; j < pts.size(); ++j)
            cond[pts[j]] += lam[j];
        conditions.push_back(std::move(cond));
    }
    std::vector<bool> used(m, false);
    for (const auto& cell : t.cells)
        for (auto i : cell)
            used[i] = true;
    for (std::size_t p = 0; p < m; ++p) {
        if (used[p])
            continue;
        // Barycentric coordinates of p in a cell containing it; p must lie above that cell's lift.
        for (const auto& cell : t.cells) {
            Matrix mtx(r + 1, r + 1);
            for (std::size_t j = 0; j <= r; ++j)
                for (std::size_t i = 0; i <= r; ++i)
                    mtx(i, j) = cfg.homogeneous(cell[j])[i];
            auto sol = solve_affine(mtx, cfg.homogeneous(p));
            bool inside = true;
            for (const auto& b : sol->particular)
                if (b < 0)
                    inside = false;
            if (!inside)
                continue;
            Vector cond(m, Rational(0));
            cond[p] = 1;
            for (std::size_t j = 0; j <= r; ++j)
                cond[cell[j]] -= sol->particular[j];
            conditions.push_back(std::move(cond));
            break;
        }
    }
    if (conditions.empty())
        return Vector(m, Rational(0));

    // max s subject to cond·w >= s, -1 <= w <= 1. Variables (w, s).
    HRep h;
    h.dim = m + 1;
    for (const auto& cond : conditions) {
        Vector a(m + 1, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            a[i] = -cond[i];
        a[m] = 1;
        h.inequalities.push_back({a, Rational(0)});
    }
    for (std::size_t i = 0; i < m; ++i) {
        Vector a(m + 1, Rational(0));
        a[i] = 1;
        h.inequalities.push_back({a, Rational(1)});
        a[i] = -1;
        h.inequalities.push_back({a, Rational(1)});
    }
    Vector obj(m + 1, Rational(0));
    obj[m] = 1;
    LPResult res = solve({Polyhedron::from_hrep(std::move(h)), obj});
    if (res.status != LPStatus::optimal || res.value <= 0)
        return std::nullopt;
    return Vector(res.optimizer.begin(), res.optimizer.begin() + static_cast<std::ptrdiff_t>(m));
}

// ---------------------------------------------------------------------------
// Symmetry
// ---------------------------------------------------------------------------

struct Orbit {
    Vector representative;  ///< lexicographically smallest member
    std::size_t size = 0;
};

/// Acting by (g·v)_{g(i)} = v_i.
inline Vector act(const Permutation& g, const Vector& v)
{
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[static_cast<std::size_t>(g(i + 1) - 1)] = v[i];
    return out;
}

/// Splits a set of vectors into orbits of the group generated by `generators`.
inline std::vector<Orbit> orbit_decomposition(const std::vector<Vector>& vectors, const std::vector<Permutation>& generators)
{
    std::set<Vector> input(vectors.begin(), vectors.end());
    if (input.size() != vectors.size())
        throw InvalidInput("orbit_decomposition: duplicate vectors");
    for (const auto& v : vectors)
        for (const auto& g : generators)
            if (g.size() != v.size())
                throw InvalidInput("orbit_decomposition: generator length does not match the vectors");
    std::set<Vector> seen;
    std::vector<Orbit> out;
    for (const auto& start : input) {
        if (seen.count(start))
            continue;
        std::set<Vector> orbit{start};
        std::deque<Vector> queue{start};
        while (!queue.empty()) {
            Vector v = std::move(queue.front());
            queue.pop_front();
            for (const auto& g : generators) {
                Vector w = act(g, v);
                if (orbit.insert(w).second)
                    queue.push_back(std::move(w));
            }
        }
        for (const auto& w : orbit)
            if (!input.count(w))
                throw DomainError("orbit_decomposition: input set is not closed under the group");
        seen.insert(orbit.begin(), orbit.end());
        out.push_back({*orbit.begin(), orbit.size()});
    }
    std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
    return out;
}

/// The 2^n n! symmetries of [0,1]^n as permutations of cube_vertices(n).
inline std::vector<Permutation> cube_vertex_symmetries(std::size_t n)
{
    if (n < 1 || n > 4)
        throw InvalidInput("cube_vertex_symmetries: n must be between 1 and 4");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Permutation> out;
    const std::size_t nv = std::size_t{1} << n;
    do {
        for (std::size_t flips = 0; flips < nv; ++flips) {
            std::vector<int> images(nv);
            for (std::size_t k = 0; k < nv; ++k) {
                std::size_t img = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::size_t bit = ((k >> i) & 1U) ^ ((flips >> i) & 1U);
                    img |= bit << perm[i];
                }
                images[k] = static_cast<int>(img + 1);
            }
            out.emplace_back(std::move(images));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Generators of the same group: adjacent coordinate swaps and one reflection.
inline std::vector<Permutation> cube_symmetry_generators(std::size_t n)
{
    if (n < 1 || n > 4)
        throw InvalidInput("cube_symmetry_generators: n must be between 1 and 4");
    const std::size_t nv = std::size_t{1} << n;
    std::vector<Permutation> out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<int> images(nv);
        for (std::size_t k = 0; k < nv; ++k) {
            std::size_t a = (k >> i) & 1U, b = (k >> (i + 1)) & 1U;
            std::size_t img = k & ~((std::size_t{1} << i) | (std::size_t{1} << (i + 1)));
            img |= (b << i) | (a << (i + 1));
            images[k] = static_cast<int>(img + 1);
        }
        out.emplace_back(std::move(images));
    }
    std::vector<int> flip(nv);
    for (std::size_t k = 0; k < nv; ++k)
        flip[k] = static_cast<int>((k ^ 1U) + 1);
    out.emplace_back(std::move(flip));
    return out;
}

/// Each cell's vertices translated by factor·(cell barycentre - barycentre of the configuration).
inline std::vector<std::vector<Vector>> explode_layout(const PointConfiguration& cfg, const Triangulation& t,
                                                       const Rational& factor)
{
    if (factor < 0)
        throw InvalidInput("explode factor must be nonnegative");
    const std::size_t d = cfg.ambient_dim();
    Vector center(d, Rational(0));
    for (const auto& p : cfg.points())
        for (std::size_t j = 0; j < d; ++j)
            center[j] += p[j];
    for (auto& x : center)
        x /= static_cast<long>(cfg.size());
    std::vector<std::vector<Vector>> out;
    for (const auto& cell : t.cells) {
        Vector bary(d, Rational(0));
        for (auto i : cell)
            for (std::size_t j = 0; j < d; ++j)
                bary[j] += cfg[i][j];
        for (auto& x : bary)
            x /= static_cast<long>(cell.size());
        std::vector<Vector> moved;
        for (auto i : cell) {
            Vector v = cfg[i];
            for (std::size_t j = 0; j < d; ++j)
                v[j] += factor * (bary[j] - center[j]);
            moved.push_back(std::move(v));
        }
        out.push_back(std::move(moved));
    }
    return out;
}

}  // namespace qpoly

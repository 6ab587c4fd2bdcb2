/**
 * Conversion between generator (V) and inequality (H) descriptions of
 * polyhedra, and placing (beneath-beyond) triangulations.
 *
 * Both conversion directions go through the double description core on the
 * homogenised cone. Lower-dimensional inputs are first restricted to the
 * linear span of their homogenised generators.
 *
 * Conventions:
 *  - an inequality (a, b) means a·x <= b; its normal `a` is a primitive
 *    integer vector;
 *  - equations are kept in reduced echelon form (pivots on the coordinates)
 *    and inequality normals are reduced modulo them, so two descriptions of
 *    the same polyhedron compare equal after sorting.
 */
#pragma once

#include "qpoly/detail/bitset.hpp"
#include "qpoly/detail/dd.hpp"
#include "qpoly/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

namespace qpoly {

struct VRep {
    std::size_t dim = 0;
    std::vector<Vector> points;
    std::vector<Vector> rays;
    std::vector<Vector> lineality;

    bool is_empty() const { return points.empty(); }

    void check() const
    {
        auto check_all = [&](const std::vector<Vector>& vs, bool nonzero) {
            for (const auto& v : vs) {
                if (v.size() != dim)
                    throw InvalidInput("generator has ambient dimension " + std::to_string(v.size()) +
                                       ", expected " + std::to_string(dim));
                if (nonzero && is_zero(v))
                    throw InvalidInput("ray and lineality generators must be nonzero");
            }
        };
        check_all(points, false);
        check_all(rays, true);
        check_all(lineality, true);
    }

    friend bool operator==(const VRep&, const VRep&) = default;
};

struct Inequality {
    Vector normal;
    Rational rhs;
    friend auto operator<=>(const Inequality& a, const Inequality& b)
    {
        if (a.normal != b.normal)
            return a.normal < b.normal ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.rhs < b.rhs ? std::strong_ordering::less
               : a.rhs > b.rhs ? std::strong_ordering::greater
                               : std::strong_ordering::equal;
    }
    friend bool operator==(const Inequality&, const Inequality&) = default;
};

using Equation = Inequality;

struct HRep {
    std::size_t dim = 0;
    std::vector<Inequality> inequalities;
    std::vector<Equation> equations;
    bool empty = false;

    void check() const
    {
        for (const auto& h : inequalities)
            if (h.normal.size() != dim)
                throw InvalidInput("inequality has wrong ambient dimension");
        for (const auto& e : equations)
            if (e.normal.size() != dim)
                throw InvalidInput("equation has wrong ambient dimension");
    }

    static HRep empty_set(std::size_t dim)
    {
        HRep h;
        h.dim = dim;
        h.empty = true;
        h.inequalities.push_back({Vector(dim, Rational(0)), Rational(-1)});
        return h;
    }

    friend bool operator==(const HRep&, const HRep&) = default;
};

struct Triangulation {
    /// Each cell is a sorted list of 0-based point indices.
    std::vector<std::vector<std::size_t>> cells;

    void canonicalize()
    {
        for (auto& c : cells)
            std::sort(c.begin(), c.end());
        std::sort(cells.begin(), cells.end());
    }

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
    friend bool operator<(const Triangulation& a, const Triangulation& b) { return a.cells < b.cells; }
};

struct HullStats {
    std::size_t peak_cells = 0;
};

namespace detail {

inline Vector homogenize(const Vector& v, const Rational& x0)
{
    Vector h;
    h.reserve(v.size() + 1);
    h.push_back(x0);
    h.insert(h.end(), v.begin(), v.end());
    return h;
}

/// Coordinates that parametrise the affine hull of a point set.
struct AffineFrame {
    std::size_t ambient = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> coords;

    Vector project(const Vector& p) const
    {
        Vector q(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            q[i] = p[coords[i]];
        return q;
    }
};

inline AffineFrame affine_frame(const std::vector<Vector>& points, std::size_t ambient)
{
    AffineFrame f;
    f.ambient = ambient;
    if (points.empty())
        return f;
    std::vector<Vector> rows;
    for (const auto& p : points)
        rows.push_back(homogenize(p, 1));
    RrefResult r = rref(Matrix::from_rows(rows, ambient + 1));
    for (std::size_t i = 1; i < r.pivots.size(); ++i)
        f.coords.push_back(r.pivots[i] - 1);
    f.dim = f.coords.size();
    return f;
}

/// Sign of det[(1,p_0); ...; (1,p_k)] for k+1 points in ℚ^k.
inline int orientation(const std::vector<const Vector*>& pts)
{
    const std::size_t n = pts.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, 0) = 1;
        for (std::size_t j = 1; j < n; ++j)
            m(i, j) = (*pts[i])[j - 1];
    }
    return sgn(determinant(std::move(m)));
}

inline Rational simplex_det(const std::vector<Vector>& pts, const std::vector<std::size_t>& cell)
{
    const std::size_t n = cell.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, 0) = 1;
        for (std::size_t j = 1; j < n; ++j)
            m(i, j) = pts[cell[i]][j - 1];
    }
    return determinant(std::move(m));
}

/// Equations e (e·g = 0 for all rows g of `gm`) in echelon form with x0 treated as the last column.
inline std::vector<IntVector> homogeneous_equations(const Matrix& gm, std::size_t dim)
{
    std::vector<IntVector> out;
    std::vector<Vector> kernel = nullspace(gm);
    if (kernel.empty())
        return out;
    Matrix km(kernel.size(), dim + 1);
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j)
            km(i, j) = kernel[i][j + 1];
        km(i, dim) = kernel[i][0];
    }
    RrefResult kr = rref(km);
    for (std::size_t i = 0; i < kr.rank; ++i) {
        Vector e(dim + 1);
        e[0] = kr.matrix(i, dim);
        for (std::size_t j = 0; j < dim; ++j)
            e[j + 1] = kr.matrix(i, j);
        out.push_back(primitive(e));
    }
    return out;
}

/// Homogenised hull data shared by both conversions and the vertex extraction.
struct HomogenizedHull {
    std::size_t dim = 0;
    std::size_t num_points = 0;
    std::size_t num_rays = 0;
    std::vector<IntVector> generators;
    std::vector<IntVector> equations;  // homogeneous e with e·g = 0, columns (x0, x)
    std::vector<IntVector> facets;     // homogeneous a with a·g >= 0
    std::vector<Bitset> incidence;     // per facet, over generators
    std::size_t peak = 0;
};

inline HomogenizedHull homogenized_hull(const VRep& v, InsertionOrder order)
{
    HomogenizedHull h;
    h.dim = v.dim;
    const std::size_t n = v.dim + 1;
    for (const auto& p : v.points)
        h.generators.push_back(primitive(homogenize(p, 1)));
    for (const auto& r : v.rays)
        h.generators.push_back(primitive(homogenize(r, 0)));
    h.num_points = v.points.size();
    h.num_rays = v.rays.size();
    for (const auto& l : v.lineality) {
        IntVector g = primitive(homogenize(l, 0));
        h.generators.push_back(g);
        for (auto& x : g)
            x = -x;
        h.generators.push_back(std::move(g));
    }

    std::vector<Vector> rows;
    for (const auto& g : h.generators)
        rows.push_back(to_rational(g));
    Matrix gm = Matrix::from_rows(rows, n);
    RrefResult span = rref(gm);

    h.equations = homogeneous_equations(gm, v.dim);

    // Facets of the full-dimensional cone in the pivot coordinates.
    const auto& cols = span.pivots;
    std::vector<IntVector> restricted;
    for (const auto& g : h.generators) {
        IntVector r(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            r[j] = g[cols[j]];
        restricted.push_back(std::move(r));
    }
    ConeGenerators dual = cone_generators(restricted, cols.size(), order);
    h.peak = dual.peak_rays;
    for (std::size_t k = 0; k < dual.rays.size(); ++k) {
        IntVector a(n, Integer(0));
        for (std::size_t j = 0; j < cols.size(); ++j)
            a[cols[j]] = dual.rays[k][j];
        h.facets.push_back(std::move(a));
        h.incidence.push_back(std::move(dual.tight[k]));
    }
    return h;
}

/// Reduces a homogeneous vector modulo the (echelon) equations and splits it into normal/rhs.
inline Inequality reduce_inequality(IntVector a, const std::vector<IntVector>& equations, std::size_t dim)
{
    for (const auto& e : equations) {
        std::size_t p = 1;
        while (p <= dim && e[p] == 0)
            ++p;
        if (p > dim)
            continue;
        if (a[p] == 0)
            continue;
        Integer f = a[p], g = e[p];
        for (std::size_t j = 0; j <= dim; ++j)
            a[j] = a[j] * g - f * e[j];
        if (g < 0)
            for (auto& x : a)
                x = -x;
        make_primitive(a);
    }
    Integer gx = 0;
    for (std::size_t j = 1; j <= dim; ++j)
        mpz_gcd(gx.get_mpz_t(), gx.get_mpz_t(), a[j].get_mpz_t());
    Inequality out;
    out.normal.resize(dim);
    if (gx == 0)
        gx = 1;
    for (std::size_t j = 0; j < dim; ++j)
        out.normal[j] = Rational(-a[j + 1]) / gx;
    out.rhs = Rational(a[0]) / gx;
    return out;
}

inline Equation equation_from_homogeneous(const IntVector& e, std::size_t dim)
{
    Equation out;
    out.normal.resize(dim);
    for (std::size_t j = 0; j < dim; ++j)
        out.normal[j] = e[j + 1];
    out.rhs = Rational(-e[0]);
    return out;
}

struct FacetResult {
    HRep hrep;
    std::vector<Bitset> incidence;  // per inequality, over v.points
};

inline FacetResult facets_from_hull(const HomogenizedHull& h, std::size_t num_points)
{
    FacetResult out;
    out.hrep.dim = h.dim;
    for (const auto& e : h.equations)
        out.hrep.equations.push_back(equation_from_homogeneous(e, h.dim));
    std::vector<std::pair<Inequality, Bitset>> ineqs;
    for (std::size_t k = 0; k < h.facets.size(); ++k) {
        Bitset on_points(num_points);
        for (std::size_t i = 0; i < num_points; ++i)
            if (h.incidence[k].test(i))
                on_points.set(i);
        if (on_points.none())
            continue;  // face at infinity
        ineqs.emplace_back(reduce_inequality(h.facets[k], h.equations, h.dim), std::move(on_points));
    }
    std::sort(ineqs.begin(), ineqs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [ineq, inc] : ineqs) {
        out.hrep.inequalities.push_back(std::move(ineq));
        out.incidence.push_back(std::move(inc));
    }
    return out;
}

inline VRep with_origin_if_cone(const VRep& input)
{
    VRep v = input;
    if (v.points.empty())
        v.points.push_back(Vector(v.dim, Rational(0)));
    return v;
}

inline FacetResult facets_with_incidence(const VRep& input, InsertionOrder order)
{
    input.check();
    if (input.points.empty() && input.rays.empty() && input.lineality.empty())
        return {HRep::empty_set(input.dim), {}};
    VRep v = with_origin_if_cone(input);
    return facets_from_hull(homogenized_hull(v, order), v.points.size());
}

inline void canonicalize_vrep(VRep& v)
{
    std::sort(v.points.begin(), v.points.end());
    v.points.erase(std::unique(v.points.begin(), v.points.end()), v.points.end());
    for (auto& r : v.rays)
        r = primitive_rational(r);
    std::sort(v.rays.begin(), v.rays.end());
    v.rays.erase(std::unique(v.rays.begin(), v.rays.end()), v.rays.end());
    if (!v.lineality.empty()) {
        RrefResult r = rref(Matrix::from_rows(v.lineality, v.dim));
        v.lineality.clear();
        for (std::size_t i = 0; i < r.rank; ++i)
            v.lineality.push_back(primitive_rational(r.matrix.row(i)));
    }
}

}  // namespace detail

/// Facet description of conv(points) + pos(rays) + span(lineality).
inline HRep vrep_to_hrep(const VRep& v, InsertionOrder order = InsertionOrder::input)
{
    return detail::facets_with_incidence(v, order).hrep;
}

/// Minimal generator description of {x : A x <= b, E x = d}.
inline VRep hrep_to_vrep(const HRep& h, InsertionOrder order = InsertionOrder::input)
{
    h.check();
    const std::size_t d = h.dim, n = d + 1;
    VRep out;
    out.dim = d;

    std::vector<IntVector> eqs;
    for (const auto& e : h.equations) {
        Vector row = detail::homogenize(e.normal, -e.rhs);
        eqs.push_back(primitive(row));
    }
    // Parametrise the solution space of the homogeneous equations: y = N z.
    std::vector<Vector> basis;
    if (eqs.empty()) {
        for (std::size_t j = 0; j < n; ++j)
            basis.push_back(unit_vector(n, j));
    } else {
        std::vector<Vector> rows;
        for (const auto& e : eqs)
            rows.push_back(to_rational(e));
        basis = nullspace(Matrix::from_rows(rows, n));
    }
    std::vector<IntVector> nb;
    for (const auto& b : basis)
        nb.push_back(primitive(b));
    const std::size_t q = nb.size();

    std::vector<IntVector> cons;
    auto add_constraint = [&](const Vector& hom) {
        IntVector c = primitive(hom);
        IntVector z(q);
        for (std::size_t j = 0; j < q; ++j)
            z[j] = dot(std::span<const Integer>(c), std::span<const Integer>(nb[j]));
        cons.push_back(std::move(z));
    };
    {
        Vector x0(n, Rational(0));
        x0[0] = 1;
        add_constraint(x0);
    }
    for (const auto& ineq : h.inequalities) {
        Vector hom(n);
        hom[0] = ineq.rhs;
        for (std::size_t j = 0; j < d; ++j)
            hom[j + 1] = -ineq.normal[j];
        add_constraint(hom);
    }
    if (q == 0)
        return out;
    detail::ConeGenerators g = detail::cone_generators(cons, q, order);
    auto lift = [&](const IntVector& z) {
        Vector y(n, Rational(0));
        for (std::size_t j = 0; j < q; ++j)
            if (z[j] != 0)
                for (std::size_t c = 0; c < n; ++c)
                    y[c] += Rational(z[j]) * Rational(nb[j][c]);
        return y;
    };
    for (const auto& z : g.rays) {
        Vector y = lift(z);
        if (sgn(y[0]) > 0) {
            Vector p(d);
            for (std::size_t j = 0; j < d; ++j)
                p[j] = y[j + 1] / y[0];
            out.points.push_back(std::move(p));
        } else {
            out.rays.push_back(Vector(y.begin() + 1, y.end()));
        }
    }
    for (const auto& z : g.lineality) {
        Vector y = lift(z);
        out.lineality.push_back(Vector(y.begin() + 1, y.end()));
    }
    if (out.points.empty())
        return VRep{d, {}, {}, {}};
    detail::canonicalize_vrep(out);
    return out;
}

/// Both descriptions of conv(points) + pos(rays) + span(lineality), each minimal.
struct DualDescription {
    VRep vrep;
    HRep hrep;
};

/**
 * Facets by double description, then the extreme generators read off the
 * generator-facet incidences: in a pointed cone a generator is extreme iff no
 * other generator lies on every facet through it. Non-pointed inputs fall back
 * to converting the facets back.
 */
inline DualDescription describe(const VRep& input, InsertionOrder order = InsertionOrder::input)
{
    input.check();
    DualDescription out;
    out.vrep.dim = input.dim;
    if (input.points.empty() && input.rays.empty() && input.lineality.empty()) {
        out.hrep = HRep::empty_set(input.dim);
        return out;
    }
    VRep v = detail::with_origin_if_cone(input);
    detail::canonicalize_vrep(v);
    // canonicalize_vrep reduces the lineality to a basis; rays parallel to it stay.
    detail::HomogenizedHull h = detail::homogenized_hull(v, order);
    out.hrep = detail::facets_from_hull(h, v.points.size()).hrep;

    std::vector<Vector> normals;
    for (const auto& f : h.facets)
        normals.push_back(to_rational(f));
    for (const auto& e : h.equations)
        normals.push_back(to_rational(e));
    bool pointed = rank(normals, v.dim + 1) == v.dim + 1;
    if (!pointed) {
        out.vrep = hrep_to_vrep(out.hrep, order);
        return out;
    }
    const std::size_t ng = v.points.size() + v.rays.size();
    std::vector<detail::Bitset> tight(ng, detail::Bitset(h.facets.size()));
    for (std::size_t k = 0; k < h.facets.size(); ++k)
        for (std::size_t g = 0; g < ng; ++g)
            if (h.incidence[k].test(g))
                tight[g].set(k);
    for (std::size_t g = 0; g < ng; ++g) {
        bool extreme = true;
        for (std::size_t o = 0; o < ng && extreme; ++o)
            if (o != g && tight[g].is_subset_of(tight[o]))
                extreme = false;
        if (!extreme)
            continue;
        if (g < v.points.size())
            out.vrep.points.push_back(v.points[g]);
        else
            out.vrep.rays.push_back(v.rays[g - v.points.size()]);
    }
    detail::canonicalize_vrep(out.vrep);
    return out;
}

/// Facets of pos(generators): inner normals a (a·x >= 0) and equations (e·x = 0).
struct ConeFacets {
    std::vector<IntVector> facets;
    std::vector<IntVector> equations;
};

inline ConeFacets double_description(const std::vector<Vector>& generators, std::size_t dim,
                                     InsertionOrder order = InsertionOrder::input)
{
    VRep v;
    v.dim = dim;
    v.points.push_back(Vector(dim, Rational(0)));
    v.rays = generators;
    for (const auto& g : v.rays)
        if (g.size() != dim)
            throw InvalidInput("cone generator has wrong dimension");
    v.rays.erase(std::remove_if(v.rays.begin(), v.rays.end(), [](const Vector& r) { return is_zero(r); }),
                 v.rays.end());
    HRep h = vrep_to_hrep(v, order);
    ConeFacets out;
    for (const auto& ineq : h.inequalities) {
        Vector inner(dim);
        for (std::size_t j = 0; j < dim; ++j)
            inner[j] = -ineq.normal[j];
        out.facets.push_back(primitive(inner));
    }
    for (const auto& e : h.equations)
        out.equations.push_back(primitive(e.normal));
    return out;
}

/**
 * Placing triangulation of a point set.
 *
 * An initial simplex is taken greedily in placing order; every further point
 * is coned to the boundary facets it sees. Points that see no facet are
 * skipped. Computation happens in coordinates of the affine hull.
 */
inline Triangulation placing_triangulation(const std::vector<Vector>& points,
                                           std::span<const std::size_t> placing_order = {},
                                           HullStats* stats = nullptr)
{
    if (points.empty())
        throw InvalidInput("placing_triangulation: no points");
    const std::size_t ambient = points.front().size();
    for (const auto& p : points)
        if (p.size() != ambient)
            throw InvalidInput("placing_triangulation: inconsistent dimensions");
    detail::AffineFrame frame = detail::affine_frame(points, ambient);
    if (frame.dim == 0)
        throw DomainError("placing_triangulation: all points coincide");
    const std::size_t k = frame.dim;
    std::vector<Vector> q;
    for (const auto& p : points)
        q.push_back(frame.project(p));

    std::vector<std::size_t> order;
    if (placing_order.empty()) {
        order.resize(points.size());
        std::iota(order.begin(), order.end(), 0);
    } else {
        order.assign(placing_order.begin(), placing_order.end());
    }

    std::vector<std::size_t> initial;
    {
        std::vector<Vector> rows;
        for (std::size_t idx : order) {
            rows.push_back(detail::homogenize(q[idx], 1));
            if (rank(rows, k + 1) == rows.size())
                initial.push_back(idx);
            else
                rows.pop_back();
            if (initial.size() == k + 1)
                break;
        }
    }
    std::set<std::size_t> used(initial.begin(), initial.end());

    Triangulation t;
    std::vector<std::size_t> first = initial;
    std::sort(first.begin(), first.end());
    t.cells.push_back(first);

    // boundary facet (sorted) -> opposite vertex inside the adjacent cell
    std::map<std::vector<std::size_t>, std::size_t> boundary;
    for (std::size_t i = 0; i < first.size(); ++i) {
        std::vector<std::size_t> f = first;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        boundary.emplace(std::move(f), first[i]);
    }

    auto side = [&](const std::vector<std::size_t>& facet, std::size_t apex) {
        std::vector<const Vector*> pts;
        for (auto i : facet)
            pts.push_back(&q[i]);
        pts.push_back(&q[apex]);
        return detail::orientation(pts);
    };

    for (std::size_t idx : order) {
        if (used.count(idx))
            continue;
        used.insert(idx);
        std::vector<std::vector<std::size_t>> visible;
        for (const auto& [facet, opposite] : boundary) {
            int s = side(facet, idx);
            if (s != 0 && s != side(facet, opposite))
                visible.push_back(facet);
        }
        for (const auto& f : visible) {
            boundary.erase(f);
            std::vector<std::size_t> cell = f;
            cell.push_back(idx);
            std::sort(cell.begin(), cell.end());
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<std::size_t> nf = f;
                std::size_t dropped = nf[i];
                nf[i] = idx;
                std::sort(nf.begin(), nf.end());
                auto it = boundary.find(nf);
                if (it != boundary.end())
                    boundary.erase(it);
                else
                    boundary.emplace(std::move(nf), dropped);
            }
            t.cells.push_back(std::move(cell));
        }
        if (stats)
            stats->peak_cells = std::max(stats->peak_cells, t.cells.size());
    }
    if (stats)
        stats->peak_cells = std::max(stats->peak_cells, t.cells.size());
    t.canonicalize();
    return t;
}

/**
 * Facet description of conv(points) read off the boundary of a placing
 * triangulation. Coplanar boundary simplices merge into one facet. Used as the
 * second, independent hull algorithm.
 */
inline HRep vrep_to_hrep_placing(const std::vector<Vector>& points, std::span<const std::size_t> order = {},
                                 HullStats* stats = nullptr)
{
    if (points.empty())
        throw InvalidInput("vrep_to_hrep_placing: no points");
    const std::size_t d = points.front().size();
    std::vector<Vector> rows;
    for (const auto& p : points)
        rows.push_back(detail::homogenize(p, 1));
    std::vector<IntVector> hom_eqs = detail::homogeneous_equations(Matrix::from_rows(rows, d + 1), d);
    HRep out;
    out.dim = d;
    for (const auto& e : hom_eqs)
        out.equations.push_back(detail::equation_from_homogeneous(e, d));
    detail::AffineFrame frame = detail::affine_frame(points, d);
    if (frame.dim == 0)
        return out;
    Triangulation t = placing_triangulation(points, order, stats);
    const std::size_t k = frame.dim;
    std::vector<Vector> q;
    for (const auto& p : points)
        q.push_back(frame.project(p));

    std::map<std::vector<std::size_t>, std::pair<std::size_t, int>> facets;
    for (const auto& cell : t.cells)
        for (std::size_t i = 0; i < cell.size(); ++i) {
            std::vector<std::size_t> f = cell;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            auto [it, inserted] = facets.emplace(f, std::make_pair(cell[i], 1));
            if (!inserted)
                it->second.second += 1;
        }
    std::set<Inequality> result;
    for (const auto& [f, info] : facets) {
        if (info.second != 1)
            continue;
        // Hyperplane a·x = b through the facet: kernel of rows (q_i, -1).
        Matrix m(f.size(), k + 1);
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = 0; j < k; ++j)
                m(i, j) = q[f[i]][j];
            m(i, k) = -1;
        }
        Vector hyper = nullspace(m).front();
        Vector a(hyper.begin(), hyper.begin() + static_cast<std::ptrdiff_t>(k));
        Rational b = hyper[k];
        if (dot(a, q[info.first]) > b) {
            for (auto& x : a)
                x = -x;
            b = -b;
        }
        IntVector hom(d + 1, Integer(0));
        Vector homq(k + 1);
        homq[0] = b;
        for (std::size_t j = 0; j < k; ++j)
            homq[j + 1] = -a[j];
        IntVector prim = primitive(homq);
        hom[0] = prim[0];
        for (std::size_t j = 0; j < k; ++j)
            hom[frame.coords[j] + 1] = prim[j + 1];
        result.insert(detail::reduce_inequality(std::move(hom), hom_eqs, d));
    }
    out.inequalities.assign(result.begin(), result.end());
    return out;
}

}  // namespace qpoly

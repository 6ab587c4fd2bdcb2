/**
 * The Polyhedron object: a lazily completed dual description plus the
 * combinatorial and metric invariants computed from it.
 */
#pragma once

#include "qpoly/detail/bitset.hpp"
#include "qpoly/detail/lattice_frame.hpp"
#include "qpoly/exact.hpp"
#include "qpoly/hull.hpp"

#include <climits>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace qpoly {

/// Vertex-facet incidences: rows are facets, columns are vertices.
struct IncidenceMatrix {
    std::size_t num_vertices = 0;
    std::vector<detail::Bitset> rows;

    bool operator()(std::size_t facet, std::size_t vertex) const { return rows[facet].test(vertex); }
};

/// Point plus linear subspace.
struct AffineSubspace {
    Vector point;
    std::vector<Vector> basis;
};

class Polyhedron {
  public:
    static Polyhedron from_vrep(VRep v)
    {
        v.check();
        Polyhedron p(v.dim);
        p.state_->input_vrep = std::move(v);
        return p;
    }

    static Polyhedron from_hrep(HRep h)
    {
        h.check();
        Polyhedron p(h.dim);
        p.state_->input_hrep = std::move(h);
        return p;
    }

    std::size_t ambient_dim() const { return state_->ambient; }
    bool has_input_vrep() const { return state_->input_vrep.has_value(); }
    bool has_input_hrep() const { return state_->input_hrep.has_value(); }

    /// Minimal generators: vertices (or minimal-face representatives), extreme rays, lineality basis.
    const VRep& vrep() const
    {
        std::call_once(state_->vrep_once, [this] {
            if (state_->input_vrep) {
                fill_from_vrep();
            } else {
                state_->vrep = hrep_to_vrep(*state_->input_hrep);
            }
        });
        return *state_->vrep;
    }

    /// Irredundant canonical facets and affine-hull equations.
    const HRep& facets() const
    {
        // From a V-description both sides come out of one hull run inside vrep().
        if (state_->input_vrep) {
            vrep();
            return *state_->facets;
        }
        std::call_once(state_->facets_once, [this] {
            const VRep& v = vrep();
            state_->facets = v.is_empty() ? HRep::empty_set(ambient_dim()) : describe(v).hrep;
        });
        return *state_->facets;
    }

    /// The stored inequality description if one was given, else the facets.
    const HRep& hrep() const { return state_->input_hrep ? *state_->input_hrep : facets(); }

    bool is_empty() const { return vrep().is_empty(); }
    bool is_bounded() const { return vrep().rays.empty() && vrep().lineality.empty(); }
    bool is_pointed() const { return vrep().lineality.empty(); }

    /// Dimension of the affine hull; -1 for the empty set.
    int dim() const
    {
        if (is_empty())
            return -1;
        return static_cast<int>(ambient_dim() - facets().equations.size());
    }

    const std::vector<Vector>& vertices() const
    {
        if (!is_pointed())
            throw DomainError("polyhedron has no vertices (nontrivial lineality space)");
        return vrep().points;
    }

    const IncidenceMatrix& incidence() const
    {
        std::call_once(state_->incidence_once, [this] {
            IncidenceMatrix inc;
            const auto& verts = vertices();
            inc.num_vertices = verts.size();
            for (const auto& f : facets().inequalities) {
                detail::Bitset row(verts.size());
                for (std::size_t j = 0; j < verts.size(); ++j)
                    if (dot(f.normal, verts[j]) == f.rhs)
                        row.set(j);
                inc.rows.push_back(std::move(row));
            }
            state_->incidence = std::move(inc);
        });
        return *state_->incidence;
    }

  private:
    struct State {
        std::size_t ambient = 0;
        std::optional<VRep> input_vrep;
        std::optional<HRep> input_hrep;
        std::once_flag vrep_once, facets_once, incidence_once;
        std::optional<VRep> vrep;
        std::optional<HRep> facets;
        std::optional<IncidenceMatrix> incidence;
    };

    explicit Polyhedron(std::size_t ambient) : state_(std::make_shared<State>()) { state_->ambient = ambient; }

    // Runs inside vrep_once; also settles the facets so both share one hull computation.
    void fill_from_vrep() const
    {
        DualDescription dd = describe(*state_->input_vrep);
        state_->vrep = std::move(dd.vrep);
        std::call_once(state_->facets_once, [&] { state_->facets = std::move(dd.hrep); });
    }

    std::shared_ptr<State> state_;
};

inline Polyhedron convex_hull(const std::vector<Vector>& points, std::size_t dim)
{
    return Polyhedron::from_vrep(VRep{dim, points, {}, {}});
}

inline Polyhedron convex_hull(const std::vector<Vector>& points)
{
    if (points.empty())
        throw InvalidInput("convex_hull of no points needs an explicit dimension");
    return convex_hull(points, points.front().size());
}

/// {x : A x <= b, E x = d}.
inline Polyhedron polyhedron_from_inequalities(const std::vector<Vector>& a, const Vector& b,
                                               const std::vector<Vector>& e, const Vector& d, std::size_t dim)
{
    if (a.size() != b.size() || e.size() != d.size())
        throw InvalidInput("constraint matrix and right-hand side differ in length");
    HRep h;
    h.dim = dim;
    for (std::size_t i = 0; i < a.size(); ++i)
        h.inequalities.push_back({a[i], b[i]});
    for (std::size_t i = 0; i < e.size(); ++i)
        h.equations.push_back({e[i], d[i]});
    return Polyhedron::from_hrep(std::move(h));
}

inline bool contains(const Polyhedron& p, const Vector& x)
{
    if (x.size() != p.ambient_dim())
        throw InvalidInput("contains: dimension mismatch");
    const HRep& h = p.hrep();
    for (const auto& ineq : h.inequalities)
        if (dot(ineq.normal, x) > ineq.rhs)
            return false;
    for (const auto& eq : h.equations)
        if (dot(eq.normal, x) != eq.rhs)
            return false;
    return true;
}

/// A smallest face: the lexicographically smallest vertex, or a representative point plus the lineality space.
inline AffineSubspace minimal_face(const Polyhedron& p)
{
    if (p.is_empty())
        throw DomainError("minimal_face: empty polyhedron");
    const VRep& v = p.vrep();
    return AffineSubspace{*std::min_element(v.points.begin(), v.points.end()), v.lineality};
}

// ---------------------------------------------------------------------------
// Face numbers
// ---------------------------------------------------------------------------

using FVector = std::vector<Integer>;
using HVector = std::vector<Integer>;
using GVector = std::vector<Integer>;

/**
 * f-vector from vertex-facet incidences. Faces are vertex sets; the facets of
 * a face F are the inclusion-maximal proper sets F ∩ G over facets G of P.
 * Levels are generated top-down without storing covering relations.
 */
inline FVector f_vector(const Polyhedron& p)
{
    if (p.is_empty())
        throw DomainError("f_vector: empty polyhedron");
    if (!p.is_bounded())
        throw DomainError("f_vector: polyhedron is unbounded");
    const int d = p.dim();
    FVector f(static_cast<std::size_t>(std::max(d, 0)), Integer(0));
    if (d <= 0)
        return f;
    const auto& facet_sets = p.incidence().rows;
    std::vector<detail::Bitset> level(facet_sets.begin(), facet_sets.end());
    f[static_cast<std::size_t>(d - 1)] = level.size();
    for (int k = d - 1; k > 0; --k) {
        std::unordered_set<detail::Bitset, detail::BitsetHash> next;
        for (const auto& face : level) {
            std::vector<detail::Bitset> cands;
            std::unordered_set<detail::Bitset, detail::BitsetHash> seen;
            const std::size_t size = face.count();
            for (const auto& g : facet_sets) {
                detail::Bitset c = face & g;
                std::size_t cnt = c.count();
                if (cnt == 0 || cnt == size)
                    continue;
                if (seen.insert(c).second)
                    cands.push_back(std::move(c));
            }
            for (std::size_t i = 0; i < cands.size(); ++i) {
                bool maximal = true;
                for (std::size_t j = 0; j < cands.size() && maximal; ++j)
                    if (i != j && cands[i].is_subset_of(cands[j]))
                        maximal = false;
                if (maximal)
                    next.insert(cands[i]);
            }
        }
        level.assign(next.begin(), next.end());
        f[static_cast<std::size_t>(k - 1)] = level.size();
    }
    return f;
}

inline bool is_simplicial(const Polyhedron& p)
{
    if (!p.is_bounded())
        throw DomainError("is_simplicial: polyhedron is unbounded");
    const auto d = static_cast<std::size_t>(std::max(p.dim(), 0));
    for (const auto& row : p.incidence().rows)
        if (row.count() != d)
            return false;
    return true;
}

/// h_k = Σ_{i=0}^{k} (-1)^{k-i} C(d-i, d-k) f_{i-1}, with f_{-1} = 1.
inline HVector h_vector_from_f(const FVector& f)
{
    const long d = static_cast<long>(f.size());
    HVector h(static_cast<std::size_t>(d + 1), Integer(0));
    for (long k = 0; k <= d; ++k)
        for (long i = 0; i <= k; ++i) {
            Integer fi = i == 0 ? Integer(1) : f[static_cast<std::size_t>(i - 1)];
            Integer term = binomial(d - i, d - k) * fi;
            h[static_cast<std::size_t>(k)] += ((k - i) % 2 == 0) ? term : Integer(-term);
        }
    return h;
}

/// Inverse transform: f_{k-1} = Σ_{i=0}^{k} C(d-i, k-i) h_i.
inline FVector f_vector_from_h(const HVector& h)
{
    const long d = static_cast<long>(h.size()) - 1;
    FVector f(static_cast<std::size_t>(d), Integer(0));
    for (long k = 1; k <= d; ++k)
        for (long i = 0; i <= k; ++i)
            f[static_cast<std::size_t>(k - 1)] += binomial(d - i, k - i) * h[static_cast<std::size_t>(i)];
    return f;
}

/// g_0 = h_0, g_k = h_k - h_{k-1} for 1 <= k <= floor(d/2).
inline GVector g_vector_from_h(const HVector& h)
{
    const std::size_t d = h.size() - 1;
    GVector g(d / 2 + 1);
    g[0] = h[0];
    for (std::size_t k = 1; k <= d / 2; ++k)
        g[k] = h[k] - h[k - 1];
    return g;
}

/// Recovers h from g using the Dehn-Sommerville symmetry.
inline HVector h_vector_from_g(const GVector& g, std::size_t d)
{
    HVector h(d + 1);
    Integer acc = 0;
    for (std::size_t k = 0; k <= d / 2; ++k) {
        acc += g[k];
        h[k] = acc;
        h[d - k] = acc;
    }
    return h;
}

inline HVector h_vector(const Polyhedron& p)
{
    if (!is_simplicial(p))
        throw DomainError("h_vector: polytope is not simplicial");
    return h_vector_from_f(f_vector(p));
}

inline GVector g_vector(const Polyhedron& p) { return g_vector_from_h(h_vector(p)); }

// ---------------------------------------------------------------------------
// Volume
// ---------------------------------------------------------------------------

namespace detail {

inline LatticeFrame lattice_frame_of(const Polyhedron& p)
{
    std::vector<Vector> normals;
    for (const auto& e : p.facets().equations)
        normals.push_back(e.normal);
    return LatticeFrame(normals, p.ambient_dim());
}

}  // namespace detail

/// dim! times the volume, measured in a lattice basis of the affine hull's direction space.
inline Rational normalized_volume(const Polyhedron& p)
{
    if (!p.is_bounded())
        throw DomainError("volume: polyhedron is unbounded");
    if (p.is_empty())
        return 0;
    if (p.dim() == 0)
        return 1;
    const auto& verts = p.vertices();
    Triangulation t = placing_triangulation(verts);
    detail::LatticeFrame frame = detail::lattice_frame_of(p);
    Rational total = 0;
    for (const auto& cell : t.cells) {
        std::vector<const Vector*> simplex;
        for (auto i : cell)
            simplex.push_back(&verts[i]);
        total += frame.normalized_volume(simplex);
    }
    return total;
}

/// Euclidean volume for full-dimensional P; relative lattice volume otherwise.
inline Rational volume(const Polyhedron& p)
{
    Rational nv = normalized_volume(p);
    int d = std::max(p.dim(), 0);
    return nv / Rational(factorial(static_cast<unsigned long>(d)));
}

// ---------------------------------------------------------------------------
// Lattice points
// ---------------------------------------------------------------------------

namespace detail {

/// Integer rows a·x <= b (or = b) ready for scanning.
template <class Int>
struct ScanRow {
    std::vector<Int> a;
    Int b;
    std::size_t last = 0;
};

template <class Int>
struct LatticeScanner {
    std::size_t dim = 0;
    std::vector<Int> lo, hi;
    std::vector<std::vector<ScanRow<Int>>> ineq_by_last, eq_by_last;
    std::vector<Int> x;

    static Int floor_div(const Int& a, const Int& b)
    {
        if constexpr (std::is_same_v<Int, Integer>) {
            Integer r;
            mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return r;
        } else {
            Int q = a / b;
            if ((a % b != 0) && ((a < 0) != (b < 0)))
                --q;
            return q;
        }
    }

    static Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

    Int partial(const ScanRow<Int>& r, std::size_t j) const
    {
        Int s = 0;
        for (std::size_t i = 0; i < j; ++i)
            if (r.a[i] != 0)
                s += r.a[i] * x[i];
        return s;
    }

    template <class Visit>
    void scan(std::size_t j, Visit& visit)
    {
        if (j == dim) {
            visit(x);
            return;
        }
        Int l = lo[j], h = hi[j];
        for (const auto& r : eq_by_last[j]) {
            Int rest = r.b - partial(r, j);
            if (rest % r.a[j] != 0)
                return;
            Int v = rest / r.a[j];
            if (v > l)
                l = v;
            if (v < h)
                h = v;
        }
        for (const auto& r : ineq_by_last[j]) {
            Int rest = r.b - partial(r, j);
            if (r.a[j] > 0) {
                Int v = floor_div(rest, r.a[j]);
                if (v < h)
                    h = v;
            } else {
                Int v = ceil_div(rest, r.a[j]);
                if (v > l)
                    l = v;
            }
        }
        for (Int v = l; v <= h; ++v) {
            x[j] = v;
            scan(j + 1, visit);
        }
    }
};

struct IntegerRows {
    std::vector<IntVector> ineq_a, eq_a;
    IntVector ineq_b, eq_b;
    IntVector lo, hi;
};

/// Integer form of the facets of t·P and the bounding box of t·P.
inline IntegerRows integer_rows(const Polyhedron& p, const Integer& t)
{
    IntegerRows rows;
    auto scale = [&](const Inequality& ineq, std::vector<IntVector>& as, IntVector& bs) {
        Vector full = ineq.normal;
        full.push_back(ineq.rhs * t);
        IntVector prim = primitive(full);
        bs.push_back(prim.back());
        prim.pop_back();
        as.push_back(std::move(prim));
    };
    const HRep& h = p.facets();
    for (const auto& ineq : h.inequalities)
        scale(ineq, rows.ineq_a, rows.ineq_b);
    for (const auto& eq : h.equations)
        scale(eq, rows.eq_a, rows.eq_b);
    const auto& verts = p.vertices();
    const std::size_t d = p.ambient_dim();
    rows.lo.resize(d);
    rows.hi.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rational mn = verts.front()[j], mx = verts.front()[j];
        for (const auto& v : verts) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        rows.lo[j] = ceil_of(mn * t);
        rows.hi[j] = floor_of(mx * t);
    }
    return rows;
}

template <class Int>
LatticeScanner<Int> make_scanner(const IntegerRows& rows, std::size_t d)
{
    auto conv = [](const Integer& z) {
        if constexpr (std::is_same_v<Int, Integer>)
            return z;
        else
            return static_cast<Int>(z.get_si());
    };
    LatticeScanner<Int> s;
    s.dim = d;
    s.x.assign(d, Int(0));
    s.ineq_by_last.resize(d);
    s.eq_by_last.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        s.lo.push_back(conv(rows.lo[j]));
        s.hi.push_back(conv(rows.hi[j]));
    }
    auto add = [&](const std::vector<IntVector>& as, const IntVector& bs, auto& by_last) {
        for (std::size_t i = 0; i < as.size(); ++i) {
            ScanRow<Int> r;
            for (const auto& c : as[i])
                r.a.push_back(conv(c));
            r.b = conv(bs[i]);
            std::size_t last = d;
            for (std::size_t j = d; j-- > 0;)
                if (as[i][j] != 0) {
                    last = j;
                    break;
                }
            if (last == d)
                continue;  // 0 <= b holds for nonempty P
            r.last = last;
            by_last[last].push_back(std::move(r));
        }
    };
    add(rows.ineq_a, rows.ineq_b, s.ineq_by_last);
    add(rows.eq_a, rows.eq_b, s.eq_by_last);
    return s;
}

/// True when every partial sum in the scan stays far inside int64.
inline bool fits_int64(const IntegerRows& rows, std::size_t d)
{
    Integer bound = 1;
    for (std::size_t j = 0; j < d; ++j)
        bound = std::max(bound, Integer(std::max(abs(rows.lo[j]), abs(rows.hi[j]))));
    Integer coeff = 1;
    for (const auto* group : {&rows.ineq_a, &rows.eq_a})
        for (const auto& a : *group)
            for (const auto& c : a)
                coeff = std::max(coeff, Integer(abs(c)));
    Integer rhs = 1;
    for (const auto* group : {&rows.ineq_b, &rows.eq_b})
        for (const auto& b : *group)
            rhs = std::max(rhs, Integer(abs(b)));
    Integer worst = Integer(static_cast<long>(d + 1)) * coeff * bound + rhs;
    return worst < Integer(1) << 60 ? true : false;
}

template <class Visit>
void for_each_lattice_point(const Polyhedron& p, const Integer& t, Visit&& visit)
{
    if (!p.is_bounded())
        throw DomainError("lattice points: polyhedron is unbounded");
    if (p.is_empty())
        return;
    const std::size_t d = p.ambient_dim();
    if (d == 0) {
        IntVector empty;
        visit(empty);
        return;
    }
    IntegerRows rows = integer_rows(p, t);
    if (fits_int64(rows, d)) {
        auto s = make_scanner<std::int64_t>(rows, d);
        auto adapter = [&](const std::vector<std::int64_t>& x) {
            IntVector z;
            z.reserve(x.size());
            for (auto v : x)
                z.emplace_back(static_cast<long>(v));
            visit(z);
        };
        s.scan(0, adapter);
    } else {
        auto s = make_scanner<Integer>(rows, d);
        s.scan(0, visit);
    }
}

inline Integer count_lattice_points(const Polyhedron& p, const Integer& t)
{
    if (!p.is_bounded())
        throw DomainError("lattice points: polyhedron is unbounded");
    if (p.is_empty())
        return 0;
    const std::size_t d = p.ambient_dim();
    if (d == 0)
        return 1;
    IntegerRows rows = integer_rows(p, t);
    if (fits_int64(rows, d)) {
        auto s = make_scanner<std::int64_t>(rows, d);
        std::uint64_t n = 0;
        auto counter = [&](const std::vector<std::int64_t>&) { ++n; };
        s.scan(0, counter);
        return Integer(static_cast<unsigned long>(n));
    }
    auto s = make_scanner<Integer>(rows, d);
    Integer n = 0;
    auto counter = [&](const IntVector&) { ++n; };
    s.scan(0, counter);
    return n;
}

}  // namespace detail

/// All integer points of a bounded polyhedron, in lexicographic order.
inline std::vector<IntVector> lattice_points(const Polyhedron& p)
{
    std::vector<IntVector> out;
    detail::for_each_lattice_point(p, Integer(1), [&](const IntVector& x) { out.push_back(x); });
    return out;
}

/// |t·P ∩ ℤ^d|.
inline Integer count_lattice_points(const Polyhedron& p, long t = 1)
{
    if (t < 0)
        throw InvalidInput("dilation factor must be nonnegative");
    return detail::count_lattice_points(p, Integer(t));
}

inline bool is_lattice_polytope(const Polyhedron& p)
{
    if (!p.is_bounded() || p.is_empty())
        return false;
    for (const auto& v : p.vertices())
        for (const auto& x : v)
            if (!is_integral(x))
                return false;
    return true;
}

/// Ehrhart polynomial, interpolated from the lattice-point counts of the dilates 0..dim.
inline UnivariatePolynomial ehrhart_polynomial(const Polyhedron& p)
{
    if (!p.is_bounded())
        throw DomainError("ehrhart_polynomial: polyhedron is unbounded");
    if (p.is_empty())
        throw DomainError("ehrhart_polynomial: empty polyhedron");
    if (!is_lattice_polytope(p))
        throw DomainError("ehrhart_polynomial: polytope has non-integral vertices");
    const int d = p.dim();
    std::vector<std::pair<Rational, Rational>> samples;
    for (int t = 0; t <= d; ++t)
        samples.emplace_back(Rational(t), Rational(count_lattice_points(p, t)));
    return lagrange_interpolate(samples);
}

}  // namespace qpoly

/**
 * OFF export of 3D polytopes, truncated fans and exploded triangulations.
 *
 * Coordinates are exact rationals rounded (half away from zero) to 12
 * significant digits and written in positional notation.
 */
#pragma once

#include "qpoly/fan.hpp"
#include "qpoly/triangulation.hpp"

#include <sstream>

namespace qpoly::io {

/// Fixed 12-significant-digit decimal of an exact rational.
inline std::string decimal(const Rational& q, int significant = 12)
{
    if (q == 0)
        return "0";
    const bool negative = q < 0;
    const Rational a = abs(q);

    // 10^e <= a < 10^(e+1)
    long e = static_cast<long>(a.get_num().get_str().size()) - static_cast<long>(a.get_den().get_str().size());
    auto pow10 = [](long k) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
        return p;
    };
    auto scaled_by = [&](long k) { return k >= 0 ? Rational(a * pow10(k)) : Rational(a / pow10(-k)); };
    while (scaled_by(-e) >= 10)
        ++e;
    while (scaled_by(-e) < 1)
        --e;

    const long shift = significant - 1 - e;
    Integer digits = floor_of(scaled_by(shift) + Rational(1, 2));
    if (digits == pow10(significant)) {
        digits /= 10;
        ++e;
    }
    const std::string s = digits.get_str();

    std::string out = negative ? "-" : "";
    const long point = e + 1;  // digits before the decimal point
    if (point <= 0) {
        out += "0." + std::string(static_cast<std::size_t>(-point), '0') + s;
    } else if (point >= static_cast<long>(s.size())) {
        out += s + std::string(static_cast<std::size_t>(point - static_cast<long>(s.size())), '0');
    } else {
        out += s.substr(0, static_cast<std::size_t>(point)) + "." + s.substr(static_cast<std::size_t>(point));
    }
    return out;
}

struct OffMesh {
    std::vector<Vector> vertices;  ///< three coordinates each
    std::vector<std::vector<std::size_t>> faces;

    std::size_t add_vertex(Vector v)
    {
        v.resize(3, Rational(0));
        vertices.push_back(std::move(v));
        return vertices.size() - 1;
    }
};

inline std::string write_off(const OffMesh& m)
{
    std::ostringstream out;
    out << "OFF\n" << m.vertices.size() << ' ' << m.faces.size() << " 0\n";
    for (const auto& v : m.vertices)
        out << decimal(v[0]) << ' ' << decimal(v[1]) << ' ' << decimal(v[2]) << '\n';
    for (const auto& f : m.faces) {
        out << f.size();
        for (auto i : f)
            out << ' ' << i;
        out << '\n';
    }
    return out.str();
}

namespace detail {

inline Vector cross(const Vector& a, const Vector& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Vector minus(const Vector& a, const Vector& b)
{
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

/// Vertices of a convex polygon in R^3, counter-clockwise seen from the tip of `normal`.
inline std::vector<std::size_t> cyclic_order(const std::vector<Vector>& pts, std::vector<std::size_t> idx,
                                             const Vector& normal)
{
    if (idx.size() < 3)
        return idx;
    Vector c(3, Rational(0));
    for (auto i : idx)
        for (int k = 0; k < 3; ++k)
            c[k] += pts[i][k];
    for (auto& x : c)
        x /= static_cast<long>(idx.size());
    const Vector u = minus(pts[idx.front()], c);
    auto half = [&](const Vector& w) {
        Rational s = dot(cross(u, w), normal);
        return s > 0 || (s == 0 && dot(u, w) > 0) ? 0 : 1;
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        Vector wa = minus(pts[a], c), wb = minus(pts[b], c);
        int ha = half(wa), hb = half(wb);
        if (ha != hb)
            return ha < hb;
        return dot(cross(wa, wb), normal) > 0;
    });
    return idx;
}

inline Vector padded(Vector v)
{
    v.resize(3, Rational(0));
    return v;
}

// Appends the boundary of a polytope of dimension 1..3 living in R^{<=3}.
inline void append_cell(OffMesh& mesh, const Polyhedron& p)
{
    const auto& verts = p.vertices();
    std::vector<Vector> pts;
    for (const auto& v : verts)
        pts.push_back(padded(v));
    const std::size_t base = mesh.vertices.size();
    for (const auto& v : pts)
        mesh.add_vertex(v);
    std::vector<std::size_t> all(pts.size());
    std::iota(all.begin(), all.end(), 0);
    auto shifted = [&](std::vector<std::size_t> f) {
        for (auto& i : f)
            i += base;
        return f;
    };

    const int d = p.dim();
    if (d == 3) {
        const auto& inc = p.incidence();
        const auto& facets = p.facets().inequalities;
        for (std::size_t k = 0; k < facets.size(); ++k) {
            std::vector<std::size_t> f;
            for (std::size_t v = 0; v < pts.size(); ++v)
                if (inc(k, v))
                    f.push_back(v);
            mesh.faces.push_back(shifted(cyclic_order(pts, f, facets[k].normal)));
        }
    } else if (d == 2) {
        Vector normal{0, 0, 1};
        if (p.ambient_dim() == 3)
            normal = p.facets().equations.front().normal;
        mesh.faces.push_back(shifted(cyclic_order(pts, all, normal)));
    } else {
        mesh.faces.push_back(shifted(all));
    }
}

}  // namespace detail

inline OffMesh polytope_mesh(const Polyhedron& p)
{
    if (p.ambient_dim() != 3 || p.dim() != 3 || !p.is_bounded())
        throw DomainError("OFF export needs a 3-dimensional polytope in R^3");
    OffMesh mesh;
    detail::append_cell(mesh, p);
    return mesh;
}

/// One cell per maximal cone: the cone cut by the box [-1,1]^d, so rays end at their truncations.
inline OffMesh fan_mesh(const Fan& f)
{
    const std::size_t d = f.ambient_dim;
    if (d == 0 || d > 3)
        throw DomainError("fan OFF export needs ambient dimension at most 3");
    OffMesh mesh;
    for (std::size_t i = 0; i < f.maximal_cones.size(); ++i) {
        HRep h = f.cone(i).facets();
        for (std::size_t k = 0; k < d; ++k) {
            Vector e = unit_vector(d, k);
            h.inequalities.push_back({e, Rational(1)});
            for (auto& x : e)
                x = -x;
            h.inequalities.push_back({e, Rational(1)});
        }
        detail::append_cell(mesh, Polyhedron::from_hrep(std::move(h)));
    }
    return mesh;
}

/// One block of simplex faces per cell of the exploded layout.
inline OffMesh explode_mesh(const PointConfiguration& cfg, const Triangulation& t, const Rational& factor)
{
    const std::size_t d = cfg.ambient_dim();
    if (d != 3 || cfg.affine_dim() != 3)
        throw DomainError("exploded triangulation export needs a full-dimensional configuration in R^3");
    OffMesh mesh;
    for (const auto& cell : explode_layout(cfg, t, factor)) {
        const std::size_t base = mesh.vertices.size();
        for (const auto& v : cell)
            mesh.add_vertex(v);
        for (std::size_t skip = 0; skip < 4; ++skip) {
            std::vector<std::size_t> f;
            for (std::size_t k = 0; k < 4; ++k)
                if (k != skip)
                    f.push_back(k);
            Vector n = detail::cross(detail::minus(cell[f[1]], cell[f[0]]), detail::minus(cell[f[2]], cell[f[0]]));
            if (dot(n, detail::minus(cell[skip], cell[f[0]])) > 0)
                std::swap(f[1], f[2]);
            for (auto& i : f)
                i += base;
            mesh.faces.push_back(std::move(f));
        }
    }
    return mesh;
}

}  // namespace qpoly::io

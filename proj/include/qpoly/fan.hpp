/**
 * Polyhedral cones and fans.
 */
#pragma once

#include "qpoly/polyhedron.hpp"

#include <map>
#include <numeric>

namespace qpoly {

/// pos(generators) with its extreme rays, lineality space and facets cached at construction.
class Cone {
  public:
    Cone() = default;

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Vector>& generators() const { return generators_; }
    /// Primitive extreme rays modulo the lineality space, sorted.
    const std::vector<Vector>& rays() const { return desc_.vrep.rays; }
    const std::vector<Vector>& lineality() const { return desc_.vrep.lineality; }
    /// Facet inequalities a·x <= 0 and the equations of the linear span.
    const HRep& facets() const { return desc_.hrep; }

    bool is_pointed() const { return lineality().empty(); }
    int dim() const { return static_cast<int>(dim_ - desc_.hrep.equations.size()); }

    bool contains(const Vector& x) const
    {
        if (x.size() != dim_)
            throw InvalidInput("cone membership: dimension mismatch");
        for (const auto& f : facets().inequalities)
            if (dot(f.normal, x) > 0)
                return false;
        for (const auto& e : facets().equations)
            if (dot(e.normal, x) != 0)
                return false;
        return true;
    }

    /// Same point set (compared through the canonical facet description).
    bool operator==(const Cone& o) const { return dim_ == o.dim_ && desc_.hrep == o.desc_.hrep; }

  private:
    friend Cone positive_hull(const std::vector<Vector>&, std::size_t);
    std::size_t dim_ = 0;
    std::vector<Vector> generators_;
    DualDescription desc_;
};

inline Cone positive_hull(const std::vector<Vector>& generators, std::size_t dim)
{
    if (dim == 0)
        throw InvalidInput("positive_hull: ambient dimension must be positive");
    for (const auto& g : generators)
        if (g.size() != dim)
            throw InvalidInput("positive_hull: generator dimension mismatch");
    Cone c;
    c.dim_ = dim;
    c.generators_ = generators;
    std::vector<Vector> rays;
    for (const auto& g : generators)
        if (!is_zero(g))
            rays.push_back(g);
    c.desc_ = describe(VRep{dim, {Vector(dim, Rational(0))}, rays, {}});
    return c;
}

inline bool is_pointed(const Cone& c) { return c.is_pointed(); }

/// Rays plus maximal cones given as ray-index sets.
struct Fan {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> rays;
    std::vector<std::vector<std::size_t>> maximal_cones;

    Cone cone(std::size_t i) const
    {
        std::vector<Vector> gens;
        for (auto r : maximal_cones.at(i))
            gens.push_back(to_rational(rays[r]));
        return positive_hull(gens, ambient_dim);
    }

    /// Rays sorted, cones remapped and sorted; equal fans compare equal after this.
    Fan canonical() const
    {
        std::vector<std::size_t> order(rays.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return rays[a] < rays[b]; });
        std::vector<std::size_t> where(rays.size());
        Fan out;
        out.ambient_dim = ambient_dim;
        for (std::size_t i = 0; i < order.size(); ++i) {
            where[order[i]] = i;
            out.rays.push_back(rays[order[i]]);
        }
        for (const auto& c : maximal_cones) {
            std::vector<std::size_t> m;
            for (auto r : c)
                m.push_back(where[r]);
            std::sort(m.begin(), m.end());
            out.maximal_cones.push_back(std::move(m));
        }
        std::sort(out.maximal_cones.begin(), out.maximal_cones.end());
        return out;
    }

    bool operator==(const Fan& o) const
    {
        Fan a = canonical(), b = o.canonical();
        return a.ambient_dim == b.ambient_dim && a.rays == b.rays && a.maximal_cones == b.maximal_cones;
    }
};

inline Fan fan_from_rays_and_cones(const std::vector<Vector>& rays, const std::vector<std::vector<std::size_t>>& cones)
{
    if (rays.empty())
        throw InvalidInput("fan needs at least one ray");
    Fan f;
    f.ambient_dim = rays.front().size();
    for (const auto& r : rays) {
        if (r.size() != f.ambient_dim)
            throw InvalidInput("fan rays have different dimensions");
        if (is_zero(r))
            throw InvalidInput("fan ray is zero");
        f.rays.push_back(primitive(r));
    }
    for (auto c : cones) {
        if (c.empty())
            throw InvalidInput("maximal cone without rays");
        for (auto i : c)
            if (i >= rays.size())
                throw InvalidInput("cone references ray " + std::to_string(i) + " which does not exist");
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw InvalidInput("cone lists a ray twice");
        f.maximal_cones.push_back(std::move(c));
    }
    return f;
}

namespace detail {

// Whether outer ∩ other, spanned by inter_rays, is a face of outer. A face of a pointed
// cone is spanned by the extreme rays lying on the facets that are tight on it.
inline bool intersection_is_face(const Cone& outer, const Cone& other, const std::vector<Vector>& inter_rays)
{
    const auto& facets = outer.facets().inequalities;
    std::vector<const Inequality*> tight;
    for (const auto& f : facets) {
        bool all = true;
        for (const auto& r : inter_rays)
            if (dot(f.normal, r) != 0) {
                all = false;
                break;
            }
        if (all)
            tight.push_back(&f);
    }
    for (const auto& r : outer.rays()) {
        bool on_face = true;
        for (const auto* f : tight)
            if (dot(f->normal, r) != 0) {
                on_face = false;
                break;
            }
        if (on_face && !other.contains(r))
            return false;
    }
    return true;
}

}  // namespace detail

struct FanCheck {
    bool valid = true;
    std::string reason;
};

/// Every listed ray of a cone is extreme, cones are pointed, pairwise intersections are common faces.
inline FanCheck check_fan(const Fan& f)
{
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < f.maximal_cones.size(); ++i) {
        Cone c = f.cone(i);
        if (!c.is_pointed())
            return {false, "cone " + std::to_string(i) + " contains a line"};
        if (c.rays().size() != f.maximal_cones[i].size())
            return {false, "cone " + std::to_string(i) + " lists a non-extreme ray"};
        cones.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            HRep both = cones[i].facets();
            const HRep& other = cones[j].facets();
            both.inequalities.insert(both.inequalities.end(), other.inequalities.begin(), other.inequalities.end());
            both.equations.insert(both.equations.end(), other.equations.begin(), other.equations.end());
            VRep inter = hrep_to_vrep(both);
            if (!inter.lineality.empty())
                return {false, "cones intersect in a line"};
            if (!detail::intersection_is_face(cones[i], cones[j], inter.rays) ||
                !detail::intersection_is_face(cones[j], cones[i], inter.rays))
                return {false, "cones " + std::to_string(i) + " and " + std::to_string(j) +
                                   " meet in a set that is not a common face"};
        }
    return {};
}

inline bool is_valid(const Fan& f) { return check_fan(f).valid; }

/// For pure full-dimensional fans: complete iff every wall lies in exactly two maximal cones.
inline bool is_complete(const Fan& f)
{
    FanCheck chk = check_fan(f);
    if (!chk.valid)
        throw DomainError("is_complete: invalid fan (" + chk.reason + ")");
    if (f.maximal_cones.empty())
        return false;
    std::map<std::vector<std::size_t>, int> walls;
    for (std::size_t i = 0; i < f.maximal_cones.size(); ++i) {
        Cone c = f.cone(i);
        if (c.dim() != static_cast<int>(f.ambient_dim))
            throw DomainError("is_complete: fan is not pure full-dimensional");
        for (const auto& facet : c.facets().inequalities) {
            std::vector<std::size_t> wall;
            for (auto r : f.maximal_cones[i])
                if (dot(facet.normal, to_rational(f.rays[r])) == 0)
                    wall.push_back(r);
            ++walls[wall];
        }
    }
    for (const auto& [wall, count] : walls)
        if (count != 2)
            return false;
    return true;
}

/// Rays are the outer facet normals; one maximal cone per vertex, in vertex order.
inline Fan normal_fan(const Polyhedron& p)
{
    if (p.is_empty() || !p.is_bounded())
        throw DomainError("normal_fan: polytope must be bounded and nonempty");
    if (p.dim() != static_cast<int>(p.ambient_dim()))
        throw DomainError("normal_fan: polytope is not full-dimensional");
    Fan f;
    f.ambient_dim = p.ambient_dim();
    for (const auto& ineq : p.facets().inequalities)
        f.rays.push_back(primitive(ineq.normal));
    const IncidenceMatrix& inc = p.incidence();
    for (std::size_t v = 0; v < inc.num_vertices; ++v) {
        std::vector<std::size_t> cone;
        for (std::size_t k = 0; k < inc.rows.size(); ++k)
            if (inc(k, v))
                cone.push_back(k);
        f.maximal_cones.push_back(std::move(cone));
    }
    return f;
}

/// Index of a maximal cone containing x, if any.
inline std::optional<std::size_t> locate(const Fan& f, const Vector& x)
{
    for (std::size_t i = 0; i < f.maximal_cones.size(); ++i)
        if (f.cone(i).contains(x))
            return i;
    return std::nullopt;
}

/// Ray scaled by 1 / max |coordinate|.
inline Vector truncated_ray(const IntVector& r)
{
    Integer m = 0;
    for (const auto& x : r)
        m = std::max(m, Integer(abs(x)));
    Vector out;
    for (const auto& x : r)
        out.push_back(Rational(x) / m);
    return out;
}

}  // namespace qpoly

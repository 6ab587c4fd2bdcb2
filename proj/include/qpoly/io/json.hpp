/**
 * JSON documents for polyhedra, fans and triangulations.
 *
 * Exact scalars travel as strings "p/q" (or "p"); plain JSON integers are
 * accepted on input. Counts (f-vectors, sizes) are written as JSON integers.
 */
#pragma once

#include "qpoly/fan.hpp"
#include "qpoly/triangulation.hpp"

#include <json.hpp>

namespace qpoly::io {

using Json = nlohmann::ordered_json;

inline Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

// Scalars
// ---------------------------------------------------------------------------

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

inline Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
        return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    }
    throw InvalidInput("expected an exact scalar (string \"p/q\" or integer), got " + j.dump());
}

inline Integer integer_from_json(const Json& j)
{
    Rational q = rational_from_json(j);
    if (!is_integral(q))
        throw InvalidInput("expected an integer, got " + j.dump());
    return q.get_num();
}

inline long long_from_json(const Json& j)
{
    Integer z = integer_from_json(j);
    if (!z.fits_slong_p())
        throw InvalidInput("integer out of range: " + j.dump());
    return z.get_si();
}

// Arrays
// ---------------------------------------------------------------------------

inline Json to_json(const Vector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

inline Json to_json(const IntVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

inline Json to_json(const std::vector<Vector>& rows)
{
    Json a = Json::array();
    for (const auto& r : rows)
        a.push_back(to_json(r));
    return a;
}

inline const Json& require_array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw InvalidInput(std::string(what) + " must be an array");
    return j;
}

inline Vector vector_from_json(const Json& j)
{
    require_array(j, "vector");
    Vector v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

/// Rows of equal length; `width` is fixed by the first row when it is 0.
inline std::vector<Vector> rows_from_json(const Json& j, std::size_t& width, const char* what)
{
    require_array(j, what);
    std::vector<Vector> rows;
    for (const auto& r : j) {
        Vector v = vector_from_json(r);
        if (width == 0)
            width = v.size();
        if (v.size() != width)
            throw InvalidInput(std::string(what) + ": rows have different lengths");
        rows.push_back(std::move(v));
    }
    return rows;
}

inline std::vector<long> longs_from_json(const Json& j, const char* what)
{
    require_array(j, what);
    std::vector<long> out;
    for (const auto& x : j)
        out.push_back(long_from_json(x));
    return out;
}

// Polyhedra
// ---------------------------------------------------------------------------

/// [b, a_1..a_d] for a·x <= b.
inline Json to_json(const Inequality& h)
{
    Json row = Json::array();
    row.push_back(to_json(h.rhs));
    for (const auto& x : h.normal)
        row.push_back(to_json(x));
    return row;
}

inline Json vrep_to_json(const VRep& v)
{
    Json j = Json::object();
    j["dim"] = v.dim;
    j["points"] = to_json(v.points);
    j["rays"] = to_json(v.rays);
    j["lineality"] = to_json(v.lineality);
    return j;
}

inline Json hrep_to_json(const HRep& h)
{
    Json j = Json::object();
    j["dim"] = h.dim;
    j["inequalities"] = Json::array();
    for (const auto& f : h.inequalities)
        j["inequalities"].push_back(to_json(f));
    j["equations"] = Json::array();
    for (const auto& e : h.equations)
        j["equations"].push_back(to_json(e));
    return j;
}

/// Both representations, computing the missing one.
inline Json to_json(const Polyhedron& p)
{
    Json j = vrep_to_json(p.vrep());
    Json h = hrep_to_json(p.facets());
    j["inequalities"] = h["inequalities"];
    j["equations"] = h["equations"];
    return j;
}

/// A V-description wins when both are present.
inline Polyhedron polyhedron_from_json(const Json& j)
{
    if (!j.is_object())
        throw InvalidInput("polyhedron document must be a JSON object");
    const bool has_v = j.contains("points") || j.contains("rays") || j.contains("lineality");
    const bool has_h = j.contains("inequalities") || j.contains("equations");
    if (!has_v && !has_h)
        throw InvalidInput("polyhedron document has no representation block");

    std::size_t dim = 0;
    if (j.contains("dim")) {
        long d = long_from_json(j["dim"]);
        if (d <= 0)
            throw InvalidInput("dim must be positive");
        dim = static_cast<std::size_t>(d);
    }
    if (has_v) {
        std::size_t width = dim;
        VRep v;
        for (const char* key : {"points", "rays", "lineality"}) {
            if (!j.contains(key))
                continue;
            auto rows = rows_from_json(j[key], width, key);
            if (std::string_view(key) == "points")
                v.points = std::move(rows);
            else if (std::string_view(key) == "rays")
                v.rays = std::move(rows);
            else
                v.lineality = std::move(rows);
        }
        if (width == 0)
            throw InvalidInput("cannot infer the ambient dimension; add \"dim\"");
        v.dim = width;
        return Polyhedron::from_vrep(std::move(v));
    }
    // Rows carry the right-hand side in front.
    std::size_t width = dim == 0 ? 0 : dim + 1;
    HRep h;
    for (const char* key : {"inequalities", "equations"}) {
        if (!j.contains(key))
            continue;
        for (auto& row : rows_from_json(j[key], width, key)) {
            if (row.size() < 2)
                throw InvalidInput(std::string(key) + ": rows need a right-hand side and at least one coefficient");
            Inequality ineq{Vector(row.begin() + 1, row.end()), row.front()};
            (std::string_view(key) == "inequalities" ? h.inequalities : h.equations).push_back(std::move(ineq));
        }
    }
    if (width < 2)
        throw InvalidInput("cannot infer the ambient dimension; add \"dim\"");
    h.dim = width - 1;
    return Polyhedron::from_hrep(std::move(h));
}

// Fans
// ---------------------------------------------------------------------------

/// Cone indices are 0-based.
inline Json to_json(const Fan& f)
{
    Json j = Json::object();
    j["rays"] = Json::array();
    for (const auto& r : f.rays)
        j["rays"].push_back(to_json(to_rational(r)));
    j["maximal_cones"] = f.maximal_cones;
    return j;
}

inline Fan fan_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("rays") || !j.contains("maximal_cones"))
        throw InvalidInput("fan document needs \"rays\" and \"maximal_cones\"");
    std::size_t width = 0;
    auto rays = rows_from_json(j["rays"], width, "rays");
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& c : require_array(j["maximal_cones"], "maximal_cones")) {
        std::vector<std::size_t> cone;
        for (long i : longs_from_json(c, "maximal cone")) {
            if (i < 0)
                throw InvalidInput("negative ray index");
            cone.push_back(static_cast<std::size_t>(i));
        }
        cones.push_back(std::move(cone));
    }
    return fan_from_rays_and_cones(rays, cones);
}

// Triangulations
// ---------------------------------------------------------------------------

/// Cells as 1-based index arrays.
inline Json to_json(const Triangulation& t)
{
    Json a = Json::array();
    for (const auto& cell : t.cells) {
        Json c = Json::array();
        for (auto i : cell)
            c.push_back(i + 1);
        a.push_back(std::move(c));
    }
    return a;
}

inline Triangulation triangulation_from_json(const Json& j)
{
    Triangulation t;
    for (const auto& c : require_array(j, "triangulation")) {
        std::vector<std::size_t> cell;
        for (long i : longs_from_json(c, "cell")) {
            if (i < 1)
                throw InvalidInput("triangulation indices are 1-based");
            cell.push_back(static_cast<std::size_t>(i - 1));
        }
        t.cells.push_back(std::move(cell));
    }
    t.canonicalize();
    return t;
}

/// A bare array of points, or an object with "points".
inline std::vector<Vector> points_from_json(const Json& j)
{
    const Json& pts = j.is_object() && j.contains("points") ? j["points"] : j;
    std::size_t width = 0;
    return rows_from_json(pts, width, "points");
}

}  // namespace qpoly::io

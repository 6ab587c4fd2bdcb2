/**
 * Double description core: generators of a homogeneous cone {y : B y >= 0}.
 *
 * The cone is first split into its lineality space and a pointed part living
 * in the row space of B. The pointed part is built incrementally: start from
 * a nonsingular square subsystem (whose extreme rays are the columns of the
 * inverse) and add one constraint at a time, keeping rays on the feasible side
 * and combining adjacent pairs across the new hyperplane.
 *
 * Everything runs on primitive integer vectors.
 */
#pragma once

#include "qpoly/detail/bitset.hpp"
#include "qpoly/exact.hpp"

#include <algorithm>
#include <numeric>

namespace qpoly {

enum class InsertionOrder { input, lexicographic };

namespace detail {

struct ConeGenerators {
    std::vector<IntVector> lineality;
    std::vector<IntVector> rays;
    /// Per ray: the constraint rows (input indices) that vanish on it.
    std::vector<Bitset> tight;
    std::size_t peak_rays = 0;
};

inline IntVector primitive_int(std::span<const Rational> v) { return primitive(v); }

inline ConeGenerators cone_generators(const std::vector<IntVector>& constraints, std::size_t dim,
                                      InsertionOrder order = InsertionOrder::input)
{
    ConeGenerators out;
    const std::size_t m = constraints.size();
    Matrix a(m, dim);
    for (std::size_t i = 0; i < m; ++i) {
        if (constraints[i].size() != dim)
            throw InvalidInput("constraint has wrong dimension");
        for (std::size_t j = 0; j < dim; ++j)
            a(i, j) = constraints[i][j];
    }
    RrefResult red = rref(a);
    for (const auto& v : nullspace(a))
        out.lineality.push_back(primitive(v));
    const std::size_t r = red.rank;
    if (r == 0)
        return out;

    // Row-space basis; the pointed part is parametrised as y = W^T u.
    std::vector<IntVector> w(r);
    for (std::size_t j = 0; j < r; ++j)
        w[j] = primitive(red.matrix.row(j));
    std::vector<IntVector> b(m, IntVector(r));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < r; ++j)
            b[i][j] = dot(std::span<const Integer>(constraints[i]), std::span<const Integer>(w[j]));

    std::vector<std::size_t> seq(m);
    std::iota(seq.begin(), seq.end(), 0);
    if (order == InsertionOrder::lexicographic)
        std::stable_sort(seq.begin(), seq.end(), [&](std::size_t x, std::size_t y) {
            return constraints[x] < constraints[y];
        });

    // Initial nonsingular subsystem, greedily in insertion order.
    std::vector<std::size_t> basis_rows;
    {
        std::vector<Vector> chosen;
        for (std::size_t idx : seq) {
            chosen.push_back(to_rational(b[idx]));
            if (rank(chosen, r) == chosen.size())
                basis_rows.push_back(idx);
            else
                chosen.pop_back();
            if (basis_rows.size() == r)
                break;
        }
    }
    Matrix bs(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            bs(i, j) = b[basis_rows[i]][j];
    std::vector<IntVector> rays;
    std::vector<Bitset> tight;
    for (std::size_t j = 0; j < r; ++j) {
        auto sol = solve_affine(bs, unit_vector(r, j));
        rays.push_back(primitive(sol->particular));
        Bitset z(m);
        for (std::size_t i = 0; i < r; ++i)
            if (i != j)
                z.set(basis_rows[i]);
        tight.push_back(std::move(z));
    }
    out.peak_rays = rays.size();

    std::vector<bool> in_basis(m, false);
    for (auto i : basis_rows)
        in_basis[i] = true;

    for (std::size_t idx : seq) {
        if (in_basis[idx])
            continue;
        const IntVector& row = b[idx];
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> plus, minus, zero;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            val[k] = dot(std::span<const Integer>(row), std::span<const Integer>(rays[k]));
            int s = sgn(val[k]);
            (s > 0 ? plus : s < 0 ? minus : zero).push_back(k);
        }
        if (minus.empty()) {
            for (auto k : zero)
                tight[k].set(idx);
            continue;
        }
        std::vector<IntVector> next_rays;
        std::vector<Bitset> next_tight;
        for (auto k : plus) {
            next_rays.push_back(rays[k]);
            next_tight.push_back(tight[k]);
        }
        for (auto k : zero) {
            next_rays.push_back(rays[k]);
            next_tight.push_back(tight[k]);
            next_tight.back().set(idx);
        }
        const std::size_t need = r >= 2 ? r - 2 : 0;
        for (auto p : plus)
            for (auto n : minus) {
                if (tight[p].intersection_count(tight[n]) < need)
                    continue;
                Bitset common = tight[p] & tight[n];
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
                    if (t != p && t != n && common.is_subset_of(tight[t]))
                        adjacent = false;
                if (!adjacent)
                    continue;
                IntVector ray(r);
                for (std::size_t j = 0; j < r; ++j)
                    ray[j] = val[p] * rays[n][j] - val[n] * rays[p][j];
                make_primitive(ray);
                common.set(idx);
                next_rays.push_back(std::move(ray));
                next_tight.push_back(std::move(common));
            }
        rays = std::move(next_rays);
        tight = std::move(next_tight);
        out.peak_rays = std::max(out.peak_rays, rays.size());
        if (rays.empty())
            break;
    }

    for (std::size_t k = 0; k < rays.size(); ++k) {
        IntVector y(dim, Integer(0));
        for (std::size_t j = 0; j < r; ++j)
            if (rays[k][j] != 0)
                for (std::size_t c = 0; c < dim; ++c)
                    y[c] += rays[k][j] * w[j][c];
        make_primitive(y);
        out.rays.push_back(std::move(y));
        out.tight.push_back(std::move(tight[k]));
    }
    return out;
}

}  // namespace detail
}  // namespace qpoly

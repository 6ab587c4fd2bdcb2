/**
 * Named polytope families: cubes, simplices, cross-polytopes, permutahedra,
 * random polytopes with vertices on the unit sphere, Gelfand-Tsetlin polytopes
 * and Demazure characters.
 */
#pragma once

#include "qpoly/polyhedron.hpp"

#include <cmath>
#include <numeric>
#include <map>
#include <random>

namespace qpoly {

// ---------------------------------------------------------------------------
// Basic solids
// ---------------------------------------------------------------------------

/// [0,1]^d; vertex k has coordinate i equal to bit i of k.
inline std::vector<Vector> cube_vertices(std::size_t d)
{
    if (d == 0 || d >= 8 * sizeof(std::size_t))
        throw InvalidInput("cube: dimension out of range");
    std::vector<Vector> out;
    for (std::size_t k = 0; k < (std::size_t{1} << d); ++k) {
        Vector v(d);
        for (std::size_t i = 0; i < d; ++i)
            v[i] = (k >> i) & 1U;
        out.push_back(std::move(v));
    }
    return out;
}

inline Polyhedron cube(std::size_t d) { return convex_hull(cube_vertices(d), d); }

/// conv(0, e_1, ..., e_d).
inline Polyhedron simplex(std::size_t d)
{
    if (d == 0)
        throw InvalidInput("simplex: dimension must be positive");
    std::vector<Vector> pts{Vector(d, Rational(0))};
    for (std::size_t i = 0; i < d; ++i)
        pts.push_back(unit_vector(d, i));
    return convex_hull(pts, d);
}

/// conv(±e_i).
inline Polyhedron cross_polytope(std::size_t d)
{
    if (d == 0)
        throw InvalidInput("cross_polytope: dimension must be positive");
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < d; ++i) {
        Vector v = unit_vector(d, i);
        pts.push_back(v);
        v[i] = -1;
        pts.push_back(v);
    }
    return convex_hull(pts, d);
}

/// Convex hull of all coordinate permutations of `point`.
inline Polyhedron permutahedron(Vector point)
{
    if (point.empty())
        throw InvalidInput("permutahedron: empty point");
    std::sort(point.begin(), point.end());
    std::vector<Vector> pts;
    do
        pts.push_back(point);
    while (std::next_permutation(point.begin(), point.end()));
    return convex_hull(pts, point.size());
}

// ---------------------------------------------------------------------------
// Random points on the sphere
// ---------------------------------------------------------------------------

enum class SphereMode {
    float_rationalized,  ///< rounded normalised Gaussians; close to, not on, the sphere
    exact,               ///< rational points with squared norm exactly one
};

namespace detail {

inline Rational dyadic(double x)
{
    constexpr double scale = 4294967296.0;  // 2^32
    Integer num;
    num = static_cast<long>(std::llround(x * scale));
    return make_rational(num, Integer(1) << 32);
}

}  // namespace detail

/// One point of S^{d-1}. Exact mode rationalises the stereographic image of a uniform
/// direction and maps it back with the (rational) inverse projection.
inline Vector random_sphere_point(std::size_t d, SphereMode mode, std::mt19937_64& rng)
{
    if (d < 2)
        throw InvalidInput("sphere sampling needs dimension >= 2");
    std::normal_distribution<double> gauss;
    std::vector<double> u(d);
    double norm = 0;
    do {
        norm = 0;
        for (auto& x : u) {
            x = gauss(rng);
            norm += x * x;
        }
        norm = std::sqrt(norm);
    } while (norm < 1e-9 || u[d - 1] / norm > 1 - 1e-9);
    for (auto& x : u)
        x /= norm;

    Vector p(d);
    if (mode == SphereMode::float_rationalized) {
        for (std::size_t i = 0; i < d; ++i)
            p[i] = detail::dyadic(u[i]);
        return p;
    }
    Vector y(d - 1);
    Rational y2 = 0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        y[i] = detail::dyadic(u[i] / (1 - u[d - 1]));
        y2 += y[i] * y[i];
    }
    const Rational den = y2 + 1;
    for (std::size_t i = 0; i + 1 < d; ++i)
        p[i] = 2 * y[i] / den;
    p[d - 1] = (y2 - 1) / den;
    return p;
}

inline std::vector<Vector> random_sphere_points(std::size_t d, std::size_t n, SphereMode mode, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Vector> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back(random_sphere_point(d, mode, rng));
    return pts;
}

inline Polyhedron rand_spherical_polytope(std::size_t d, std::size_t n, SphereMode mode, std::uint64_t seed)
{
    if (n < d + 1)
        throw InvalidInput("rand_spherical_polytope: need at least d + 1 points");
    return convex_hull(random_sphere_points(d, n, mode, seed), d);
}

// ---------------------------------------------------------------------------
// Partitions and permutations
// ---------------------------------------------------------------------------

/// Weakly decreasing integer sequence.
class Partition {
  public:
    explicit Partition(std::vector<long> parts) : parts_(std::move(parts))
    {
        if (parts_.empty())
            throw InvalidInput("partition must have at least one part");
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1])
                throw InvalidInput("partition must be weakly decreasing");
    }
    std::size_t size() const { return parts_.size(); }
    long operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<long>& parts() const { return parts_; }

  private:
    std::vector<long> parts_;
};

/// One-line notation, values 1..n.
class Permutation {
  public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
                throw InvalidInput("not a permutation of 1..n in one-line notation");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    static Permutation identity(std::size_t n)
    {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }
    /// (n, n-1, ..., 1).
    static Permutation longest(std::size_t n)
    {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = static_cast<int>(n - i);
        return Permutation(std::move(v));
    }
    std::size_t size() const { return images_.size(); }
    /// σ(i) for 1-based i.
    int operator()(std::size_t i) const { return images_.at(i - 1); }
    const std::vector<int>& images() const { return images_; }

    /// (this ∘ o)(i) = this(o(i)).
    Permutation compose(const Permutation& o) const
    {
        if (o.size() != size())
            throw InvalidInput("composing permutations of different sizes");
        std::vector<int> v(size());
        for (std::size_t i = 1; i <= size(); ++i)
            v[i - 1] = (*this)(static_cast<std::size_t>(o(i)));
        return Permutation(std::move(v));
    }
    Permutation inverse() const
    {
        std::vector<int> v(size());
        for (std::size_t i = 0; i < size(); ++i)
            v[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
        return Permutation(std::move(v));
    }
    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> images_;
};

/// c_i = #{j > i : σ_i > σ_j}.
inline std::vector<long> permutation_code(const Permutation& s)
{
    std::vector<long> c(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s.images()[i] > s.images()[j])
                ++c[i];
    return c;
}

/// No i < j < k with σ_j < σ_k < σ_i.
inline bool avoids_312(const Permutation& s)
{
    const auto& v = s.images();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (v[j] < v[i])
                for (std::size_t k = j + 1; k < n; ++k)
                    if (v[j] < v[k] && v[k] < v[i])
                        return false;
    return true;
}

/// Code governing the column equalities of GT(λ, σ): the code of (w0 ∘ σ)^{-1}, with
/// (w0 ∘ σ)(i) = w0(σ(i)). For σ = (1,3,2) this is (1,1,0).
inline std::vector<long> gt_column_code(const Permutation& s)
{
    return permutation_code(Permutation::longest(s.size()).compose(s).inverse());
}

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin polytopes
// ---------------------------------------------------------------------------

/// Triangular array p_{ij}, 1 <= i, j and i + j <= n + 1, stored row by row.
class GTDiagram {
  public:
    GTDiagram(std::size_t n, Vector entries) : n_(n), entries_(std::move(entries))
    {
        if (entries_.size() != n * (n + 1) / 2)
            throw InvalidInput("GT diagram has the wrong number of entries");
    }
    static GTDiagram from_rows(const std::vector<std::vector<long>>& rows)
    {
        const std::size_t n = rows.size();
        Vector e;
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n - i)
                throw InvalidInput("GT diagram rows must have lengths n, n-1, ..., 1");
            for (long x : rows[i])
                e.emplace_back(x);
        }
        return GTDiagram(n, std::move(e));
    }

    std::size_t n() const { return n_; }
    /// 0-based position of p_{ij} (1-based i, j) in row-major order.
    static std::size_t index(std::size_t n, std::size_t i, std::size_t j)
    {
        std::size_t before = 0;
        for (std::size_t r = 1; r < i; ++r)
            before += n + 1 - r;
        return before + (j - 1);
    }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[index(n_, i, j)]; }
    const Vector& entries() const { return entries_; }

    Rational row_sum(std::size_t i) const
    {
        Rational s = 0;
        for (std::size_t j = 1; j + i <= n_ + 1; ++j)
            s += at(i, j);
        return s;
    }

    bool is_valid() const
    {
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t j = 1; j + i <= n_; ++j)
                if (!(at(i, j) >= at(i + 1, j) && at(i + 1, j) >= at(i, j + 1)))
                    return false;
        return true;
    }

  private:
    std::size_t n_;
    Vector entries_;
};

namespace detail {

inline HRep gt_constraints(const Partition& lambda)
{
    const std::size_t n = lambda.size();
    const std::size_t dim = n * (n + 1) / 2;
    HRep h;
    h.dim = dim;
    auto at = [&](std::size_t i, std::size_t j) { return GTDiagram::index(n, i, j); };
    for (std::size_t j = 1; j <= n; ++j) {
        Vector e(dim, Rational(0));
        e[at(1, j)] = 1;
        h.equations.push_back({e, Rational(lambda[j - 1])});
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j + i <= n; ++j) {
            // p_{i+1,j} <= p_{ij} and p_{i,j+1} <= p_{i+1,j}
            Vector a(dim, Rational(0));
            a[at(i + 1, j)] = 1;
            a[at(i, j)] = -1;
            h.inequalities.push_back({a, Rational(0)});
            Vector b(dim, Rational(0));
            b[at(i, j + 1)] = 1;
            b[at(i + 1, j)] = -1;
            h.inequalities.push_back({b, Rational(0)});
        }
    return h;
}

}  // namespace detail

/// All GT diagrams with first row λ, in ℝ^{n(n+1)/2} with row-major coordinates.
inline Polyhedron gelfand_tsetlin(const Partition& lambda) { return Polyhedron::from_hrep(detail::gt_constraints(lambda)); }

/// GT(λ) with the first c_i + 1 entries of column i equal, c = gt_column_code(σ).
inline Polyhedron generalized_gelfand_tsetlin(const Partition& lambda, const Permutation& sigma)
{
    const std::size_t n = lambda.size();
    if (sigma.size() != n)
        throw InvalidInput("partition and permutation have different lengths");
    HRep h = detail::gt_constraints(lambda);
    const auto c = gt_column_code(sigma);
    for (std::size_t col = 1; col <= n; ++col)
        for (std::size_t row = 2; row <= static_cast<std::size_t>(c[col - 1]) + 1; ++row) {
            Vector e(h.dim, Rational(0));
            e[GTDiagram::index(n, 1, col)] = 1;
            e[GTDiagram::index(n, row, col)] = -1;
            h.equations.push_back({e, Rational(0)});
        }
    return Polyhedron::from_hrep(std::move(h));
}

/// weight_i = rowsum_{n+1-i} - rowsum_{n+2-i}, with rowsum_{n+1} = 0.
inline std::vector<Rational> gt_weight(const GTDiagram& d)
{
    const std::size_t n = d.n();
    std::vector<Rational> w(n);
    for (std::size_t i = 1; i <= n; ++i) {
        Rational below = i == 1 ? Rational(0) : d.row_sum(n + 2 - i);
        w[i - 1] = d.row_sum(n + 1 - i) - below;
    }
    return w;
}

/// ∏_{i<j} (kλ_i - kλ_j + j - i) / (j - i).
inline Integer weyl_dimension(const Partition& lambda, long k = 1)
{
    Rational prod = 1;
    const long n = static_cast<long>(lambda.size());
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            prod *= Rational(k * (lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)]) + j - i) /
                    Rational(j - i);
    return prod.get_num();
}

/// ∏_{i<j} (λ_i - λ_j) / (j - i); zero as soon as λ has a repeated part.
inline Rational weyl_volume(const Partition& lambda)
{
    Rational prod = 1;
    const long n = static_cast<long>(lambda.size());
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            prod *= Rational(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)]) / Rational(j - i);
    return prod;
}

// ---------------------------------------------------------------------------
// Demazure characters
// ---------------------------------------------------------------------------

/// Multivariate polynomial with integer exponents; zero coefficients are never stored.
class SparsePolynomial {
  public:
    using Exponent = std::vector<long>;

    explicit SparsePolynomial(std::size_t vars = 0) : vars_(vars) {}

    std::size_t num_vars() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    void add_term(const Exponent& e, const Rational& c)
    {
        if (e.size() != vars_)
            throw InvalidInput("monomial has the wrong number of variables");
        if (c == 0)
            return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational operator()(const std::vector<Rational>& z) const
    {
        if (z.size() != vars_)
            throw InvalidInput("evaluation point has the wrong number of variables");
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational m = c;
            for (std::size_t i = 0; i < vars_; ++i) {
                if (e[i] >= 0) {
                    Rational p;
                    mpz_pow_ui(p.get_num_mpz_t(), z[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
                    mpz_pow_ui(p.get_den_mpz_t(), z[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
                    p.canonicalize();
                    m *= p;
                } else {
                    for (long t = 0; t < -e[i]; ++t)
                        m /= z[i];
                }
            }
            total += m;
        }
        return total;
    }

    bool operator==(const SparsePolynomial&) const = default;

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!out.empty())
                out += c < 0 ? " - " : " + ";
            else if (c < 0)
                out += "-";
            Rational ac = abs(c);
            std::string mono;
            for (std::size_t i = 0; i < vars_; ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += "z" + std::to_string(i + 1);
                if (e[i] != 1)
                    mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                out += qpoly::to_string(ac);
            else if (ac == 1)
                out += mono;
            else
                out += qpoly::to_string(ac) + "*" + mono;
        }
        return out;
    }

  private:
    std::size_t vars_;
    std::map<Exponent, Rational> terms_;
};

/// Σ z^{weight(P)} over the lattice points P of GT(λ, σ). The sum equals the Demazure
/// character when σ avoids 312; it is computed for every σ.
inline SparsePolynomial demazure_character(const Partition& lambda, const Permutation& sigma)
{
    const std::size_t n = lambda.size();
    Polyhedron p = generalized_gelfand_tsetlin(lambda, sigma);
    SparsePolynomial ch(n);
    for (const auto& pt : lattice_points(p)) {
        GTDiagram d(n, to_rational(pt));
        SparsePolynomial::Exponent e;
        for (const auto& w : gt_weight(d))
            e.push_back(w.get_num().get_si());
        ch.add_term(e, 1);
    }
    return ch;
}

/// det( C(λ_i + n - c_i - i, n - c_i - j) )_{i,j}, c = gt_column_code(σ).
inline Integer demazure_dimension(const Partition& lambda, const Permutation& sigma)
{
    const std::size_t n = lambda.size();
    if (sigma.size() != n)
        throw InvalidInput("partition and permutation have different lengths");
    const auto c = gt_column_code(sigma);
    std::vector<IntVector> m(n, IntVector(n));
    const long ln = static_cast<long>(n);
    for (long i = 1; i <= ln; ++i)
        for (long j = 1; j <= ln; ++j) {
            const long ci = c[static_cast<std::size_t>(i - 1)];
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                binomial(lambda[static_cast<std::size_t>(i - 1)] + ln - ci - i, ln - ci - j);
        }
    return determinant(std::move(m));
}

}  // namespace qpoly

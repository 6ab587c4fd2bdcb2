/**
 * Exact rational scalars, dense vectors and matrices, and the linear algebra
 * kernels the rest of the library is built on.
 *
 * Everything here is backed by GMP (`mpq_class` / `mpz_class`); no floating
 * point value is ever produced by these routines.
 */
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qpoly {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised for malformed or dimensionally inconsistent input.
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw InvalidInput("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw InvalidInput("empty rational literal");
    auto valid_int = [](std::string_view part) {
        std::size_t i = 0;
        if (!part.empty() && (part[0] == '-' || part[0] == '+'))
            ++i;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw InvalidInput("malformed rational literal '" + s + "'");
    if (num.front() == '+')
        num.erase(0, 1);
    return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_of(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw InvalidInput("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0)
            s += a[i] * b[i];
    return s;
}

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline Vector to_rational(std::span<const Integer> v) { return Vector(v.begin(), v.end()); }

inline Vector unit_vector(std::size_t dim, std::size_t i)
{
    Vector e(dim, Rational(0));
    e.at(i) = 1;
    return e;
}

/// Positive multiple of `v` with coprime integer entries. The zero vector maps to itself.
inline IntVector primitive(std::span<const Rational> v)
{
    Integer lcm = 1;
    for (const auto& x : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (lcm / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

inline void make_primitive(IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

inline Vector primitive_rational(std::span<const Rational> v)
{
    IntVector p = primitive(v);
    return to_rational(p);
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Dense row-major rational matrix.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw InvalidInput("matrix rows have inconsistent lengths");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
        }
        return m;
    }

    static Matrix from_rows(const std::vector<Vector>& rows)
    {
        return from_rows(rows, rows.empty() ? 0 : rows.front().size());
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Vector row_vector(std::size_t i) const { return Vector(row(i).begin(), row(i).end()); }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw InvalidInput("matrix product: dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline Vector operator*(const Matrix& a, std::span<const Rational> x)
{
    if (a.cols() != x.size())
        throw InvalidInput("matrix-vector product: dimension mismatch");
    Vector y(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        y[i] = dot(a.row(i), x);
    return y;
}

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form. Rows below `rank` are zero.
inline RrefResult rref(Matrix m)
{
    RrefResult out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0)
                    m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.matrix = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

inline std::size_t rank(const std::vector<Vector>& rows, std::size_t cols)
{
    if (rows.empty())
        return 0;
    return rank(Matrix::from_rows(rows, cols));
}

/// Basis of {x : M x = 0}, one vector per free column of the reduced form.
inline std::vector<Vector> nullspace(const Matrix& m)
{
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = -r.matrix(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct AffineSolution {
    Vector particular;
    std::vector<Vector> nullspace;
};

/// Solves A x = b. Returns std::nullopt when the system is inconsistent.
inline std::optional<AffineSolution> solve_affine(const Matrix& a, std::span<const Rational> b)
{
    if (a.rows() != b.size())
        throw InvalidInput("solve_affine: row count does not match right-hand side");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RrefResult r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == a.cols())
        return std::nullopt;
    AffineSolution sol;
    sol.particular.assign(a.cols(), Rational(0));
    for (std::size_t i = 0; i < r.rank; ++i)
        sol.particular[r.pivots[i]] = r.matrix(i, a.cols());
    sol.nullspace = nullspace(a);
    return sol;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Rational determinant(Matrix m)
{
    if (m.rows() != m.cols())
        throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    int sign = 1;
    Rational prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Integer-matrix variant of Bareiss; every intermediate division is exact.
inline Integer determinant(std::vector<IntVector> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/**
 * Lattice basis of ker(E) ∩ ℤ^d for an integer matrix E (rows = equations).
 *
 * Column operations reduce E to lower-triangular form while a unimodular
 * matrix U records them; the columns of U beyond the rank span the integer
 * kernel.
 */
inline std::vector<IntVector> integer_kernel_basis(const std::vector<IntVector>& rows, std::size_t dim)
{
    std::vector<IntVector> e = rows;
    std::vector<IntVector> u(dim, IntVector(dim, Integer(0)));
    for (std::size_t i = 0; i < dim; ++i)
        u[i][i] = 1;
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (auto& r : e)
            r[dst] -= f * r[src];
        for (auto& r : u)
            r[dst] -= f * r[src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (auto& r : e)
            std::swap(r[a], r[b]);
        for (auto& r : u)
            std::swap(r[a], r[b]);
    };
    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < e.size() && pivot_col < dim; ++r) {
        while (true) {
            std::size_t best = dim;
            for (std::size_t c = pivot_col; c < dim; ++c)
                if (e[r][c] != 0 && (best == dim || abs(e[r][c]) < abs(e[r][best])))
                    best = c;
            if (best == dim)
                break;
            col_swap(pivot_col, best);
            bool done = true;
            for (std::size_t c = pivot_col + 1; c < dim; ++c) {
                if (e[r][c] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), e[r][c].get_mpz_t(), e[r][pivot_col].get_mpz_t());
                col_op(c, pivot_col, q);
                if (e[r][c] != 0)
                    done = false;
            }
            if (done) {
                ++pivot_col;
                break;
            }
        }
    }
    std::vector<IntVector> basis;
    for (std::size_t c = pivot_col; c < dim; ++c) {
        IntVector v(dim);
        for (std::size_t i = 0; i < dim; ++i)
            v[i] = u[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Univariate polynomials
// ---------------------------------------------------------------------------

/// Dense univariate polynomial with rational coefficients, lowest degree first.
class UnivariatePolynomial {
  public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const
    {
        Rational y = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            y = y * x + *it;
        return y;
    }

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UnivariatePolynomial(std::move(c));
    }

    friend UnivariatePolynomial operator*(const Rational& s, const UnivariatePolynomial& p)
    {
        std::vector<Rational> c = p.coeffs_;
        for (auto& x : c)
            x *= s;
        return UnivariatePolynomial(std::move(c));
    }

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

    /// Human-readable form in the variable `var`, highest degree first, e.g. "2*k^2 + 3*k + 1".
    std::string to_string(std::string_view var = "k") const
    {
        if (coeffs_.empty())
            return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (sgn(c) == 0)
                continue;
            Rational mag = abs(c);
            if (out.empty())
                out += sgn(c) < 0 ? "-" : "";
            else
                out += sgn(c) < 0 ? " - " : " + ";
            bool unit = mag == 1 && i > 0;
            if (!unit)
                out += qpoly::to_string(mag);
            if (i > 0) {
                if (!unit)
                    out += "*";
                out += var;
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    void trim()
    {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < samples.size() through the given points (Newton form).
inline UnivariatePolynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples)
{
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (samples[i].first == samples[j].first)
                throw InvalidInput("lagrange_interpolate: duplicate abscissa " + to_string(samples[i].first));
    std::vector<Rational> divided(n);
    for (std::size_t i = 0; i < n; ++i)
        divided[i] = samples[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            divided[i] = (divided[i] - divided[i - 1]) / (samples[i].first - samples[i - level].first);

    UnivariatePolynomial result;
    UnivariatePolynomial basis(std::vector<Rational>{Rational(1)});
    for (std::size_t i = 0; i < n; ++i) {
        result += divided[i] * basis;
        basis = basis * UnivariatePolynomial(std::vector<Rational>{-samples[i].first, Rational(1)});
    }
    return result;
}

}  // namespace qpoly

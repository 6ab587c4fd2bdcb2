/**
 * Exact linear programming: dense two-phase simplex with Bland's rule.
 */
#pragma once

#include "qpoly/polyhedron.hpp"

namespace qpoly {

enum class Sense { maximize, minimize };
enum class LPStatus { optimal, unbounded, infeasible };

inline const char* to_string(LPStatus s)
{
    switch (s) {
    case LPStatus::optimal:
        return "optimal";
    case LPStatus::unbounded:
        return "unbounded";
    case LPStatus::infeasible:
        return "infeasible";
    }
    return "?";
}

/// Optimize c·x + k over a polyhedron.
struct LinearProgram {
    Polyhedron feasible;
    Vector c;
    Rational k = 0;
    Sense sense = Sense::maximize;
};

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rational value;
    Vector optimizer;
};

namespace detail {

/// max obj·z subject to rows·z = rhs, z >= 0. Tableau form, Bland's rule.
class SimplexTableau {
  public:
    SimplexTableau(std::vector<Vector> rows, Vector rhs, std::size_t num_vars)
        : m_(rows.size()), n_(num_vars)
    {
        // Columns: structural 0..n-1, artificials n..n+m-1, rhs last.
        t_.assign(m_, Vector(n_ + m_ + 1, Rational(0)));
        for (std::size_t i = 0; i < m_; ++i) {
            bool flip = rhs[i] < 0;
            for (std::size_t j = 0; j < n_; ++j)
                t_[i][j] = flip ? Rational(-rows[i][j]) : rows[i][j];
            t_[i][n_ + i] = 1;
            t_[i].back() = flip ? Rational(-rhs[i]) : rhs[i];
        }
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i)
            basis_[i] = n_ + i;
        active_cols_ = n_ + m_;
    }

    /// Phase one: false when the system is infeasible.
    bool find_feasible()
    {
        Vector obj(n_ + m_, Rational(0));
        for (std::size_t j = n_; j < n_ + m_; ++j)
            obj[j] = -1;
        set_objective(obj);
        run();
        if (current_value() < 0)
            return false;
        drive_out_artificials();
        active_cols_ = n_;
        return true;
    }

    /// Phase two: false when unbounded.
    bool optimize(const Vector& c)
    {
        Vector obj(n_ + m_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j)
            obj[j] = c[j];
        set_objective(obj);
        return run();
    }

    Vector solution() const
    {
        Vector z(n_, Rational(0));
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] < n_)
                z[basis_[i]] = t_[i].back();
        return z;
    }

  private:
    // Reduced costs obj_j - c_B B^{-1} A_j; the rhs slot holds -c_B B^{-1} b.
    void set_objective(const Vector& obj)
    {
        cost_ = obj;
        red_.assign(n_ + m_ + 1, Rational(0));
        for (std::size_t j = 0; j < n_ + m_; ++j)
            red_[j] = obj[j];
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Rational cb = obj[basis_[i]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= n_ + m_; ++j)
                red_[j] -= cb * t_[i][j];
        }
    }

    Rational current_value() const { return -red_.back(); }

    bool run()
    {
        for (;;) {
            std::size_t enter = active_cols_;
            for (std::size_t j = 0; j < active_cols_; ++j)
                if (red_[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == active_cols_)
                return true;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < basis_.size(); ++i) {
                if (t_[i][enter] <= 0)
                    continue;
                Rational ratio = t_[i].back() / t_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_)
                return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t q)
    {
        const Rational p = t_[r][q];
        for (auto& x : t_[r])
            x /= p;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][q] == 0)
                continue;
            const Rational f = t_[i][q];
            for (std::size_t j = 0; j < t_[i].size(); ++j)
                if (t_[r][j] != 0)
                    t_[i][j] -= f * t_[r][j];
        }
        if (red_[q] != 0) {
            const Rational f = red_[q];
            for (std::size_t j = 0; j < red_.size(); ++j)
                if (t_[r][j] != 0)
                    red_[j] -= f * t_[r][j];
        }
        basis_[r] = q;
    }

    // Pivot zero-level artificials out of the basis; rows where that is impossible are redundant.
    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < basis_.size();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t q = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (t_[i][j] != 0) {
                    q = j;
                    break;
                }
            if (q < n_) {
                pivot(i, q);
                ++i;
            } else {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        m_ = t_.size();
    }

    std::size_t m_, n_;
    std::size_t active_cols_;
    std::vector<Vector> t_;
    std::vector<std::size_t> basis_;
    Vector cost_, red_;
};

struct StandardFormResult {
    LPStatus status = LPStatus::infeasible;
    Vector z;
    Rational value;
};

/// max c·z subject to rows·z = rhs, z >= 0.
inline StandardFormResult maximize_standard(std::vector<Vector> rows, Vector rhs, const Vector& c)
{
    const std::size_t n = c.size();
    SimplexTableau tab(std::move(rows), std::move(rhs), n);
    StandardFormResult r;
    if (!tab.find_feasible())
        return r;
    if (!tab.optimize(c)) {
        r.status = LPStatus::unbounded;
        return r;
    }
    r.status = LPStatus::optimal;
    r.z = tab.solution();
    r.value = dot(c, r.z);
    return r;
}

/// Moves a feasible point along the kernel of its tight constraints until it is a vertex
/// (or, with lineality, until only lineality directions remain). Keeps any linear objective
/// that is constant on those directions.
inline Vector purify(const HRep& h, Vector x)
{
    const std::size_t d = h.dim;
    for (;;) {
        std::vector<Vector> tight;
        for (const auto& e : h.equations)
            tight.push_back(e.normal);
        for (const auto& ineq : h.inequalities)
            if (dot(ineq.normal, x) == ineq.rhs)
                tight.push_back(ineq.normal);
        Matrix m = Matrix::from_rows(tight, d);
        std::vector<Vector> ker = nullspace(m);
        const Vector* dir = nullptr;
        for (const auto& u : ker) {
            for (const auto& ineq : h.inequalities)
                if (dot(ineq.normal, u) != 0) {
                    dir = &u;
                    break;
                }
            if (dir)
                break;
        }
        if (!dir)
            return x;
        // Step in whichever sign first hits a constraint.
        Vector u = *dir;
        bool blocked = false;
        for (const auto& ineq : h.inequalities)
            if (dot(ineq.normal, u) > 0)
                blocked = true;
        if (!blocked)
            for (auto& v : u)
                v = -v;
        std::optional<Rational> step;
        for (const auto& ineq : h.inequalities) {
            Rational au = dot(ineq.normal, u);
            if (au <= 0)
                continue;
            Rational s = (ineq.rhs - dot(ineq.normal, x)) / au;
            if (!step || s < *step)
                step = s;
        }
        for (std::size_t i = 0; i < d; ++i)
            x[i] += *step * u[i];
    }
}

}  // namespace detail

/// Optimum, optimizer (a vertex of the optimal face when P is pointed), or the failure status.
inline LPResult solve(const LinearProgram& lp)
{
    const Polyhedron& p = lp.feasible;
    const std::size_t d = p.ambient_dim();
    if (lp.c.size() != d)
        throw InvalidInput("objective length does not match the ambient dimension");
    const HRep& h = p.hrep();
    LPResult result;
    if (h.empty)
        return result;

    // Variables: x+ (d), x- (d), one slack per inequality.
    const std::size_t ni = h.inequalities.size();
    const std::size_t nv = 2 * d + ni;
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < ni; ++i) {
        Vector r(nv, Rational(0));
        for (std::size_t j = 0; j < d; ++j) {
            r[j] = h.inequalities[i].normal[j];
            r[d + j] = -h.inequalities[i].normal[j];
        }
        r[2 * d + i] = 1;
        rows.push_back(std::move(r));
        rhs.push_back(h.inequalities[i].rhs);
    }
    for (const auto& e : h.equations) {
        Vector r(nv, Rational(0));
        for (std::size_t j = 0; j < d; ++j) {
            r[j] = e.normal[j];
            r[d + j] = -e.normal[j];
        }
        rows.push_back(std::move(r));
        rhs.push_back(e.rhs);
    }

    const Rational sign = lp.sense == Sense::maximize ? 1 : -1;
    Vector obj(nv, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        obj[j] = sign * lp.c[j];
        obj[d + j] = -sign * lp.c[j];
    }
    detail::StandardFormResult sf = detail::maximize_standard(std::move(rows), std::move(rhs), obj);
    if (sf.status != LPStatus::optimal) {
        result.status = sf.status;
        return result;
    }
    const Vector& z = sf.z;
    Vector x(d);
    for (std::size_t j = 0; j < d; ++j)
        x[j] = z[j] - z[d + j];
    result.status = LPStatus::optimal;
    result.optimizer = detail::purify(h, std::move(x));
    result.value = dot(lp.c, result.optimizer) + lp.k;
    return result;
}

/// {x in P : c·x + k = optimum}.
inline Polyhedron optimal_face(const LinearProgram& lp)
{
    LPResult r = solve(lp);
    if (r.status != LPStatus::optimal)
        throw DomainError(std::string("optimal_face: linear program is ") + to_string(r.status));
    const VRep& v = lp.feasible.vrep();
    VRep face;
    face.dim = v.dim;
    face.lineality = v.lineality;
    for (const auto& pt : v.points)
        if (dot(lp.c, pt) + lp.k == r.value)
            face.points.push_back(pt);
    for (const auto& ray : v.rays)
        if (dot(lp.c, ray) == 0)
            face.rays.push_back(ray);
    return Polyhedron::from_vrep(std::move(face));
}

}  // namespace qpoly

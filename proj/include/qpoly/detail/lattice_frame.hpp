#pragma once

#include "qpoly/exact.hpp"

namespace qpoly::detail {

/**
 * Lattice basis for the direction space of an affine subspace given by
 * rational equations. Simplex volumes measured in this basis are the
 * lattice-normalised volumes (integers for lattice simplices).
 */
class LatticeFrame {
  public:
    /// `equation_normals` are the normals of the affine hull's equations in ℚ^dim.
    LatticeFrame(const std::vector<Vector>& equation_normals, std::size_t dim) : dim_(dim)
    {
        std::vector<IntVector> rows;
        for (const auto& e : equation_normals)
            rows.push_back(primitive(e));
        if (rows.empty()) {
            full_ = true;
            k_ = dim;
            return;
        }
        basis_ = integer_kernel_basis(rows, dim);
        k_ = basis_.size();
        // Rows of the basis matrix on which it is invertible.
        Matrix bt(k_, dim);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                bt(i, j) = basis_[i][j];
        rows_ = rref(bt).pivots;
        Matrix sub(k_, k_);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < k_; ++j)
                sub(i, j) = basis_[j][rows_[i]];
        inverse_ = Matrix(k_, k_);
        for (std::size_t j = 0; j < k_; ++j) {
            auto sol = solve_affine(sub, unit_vector(k_, j));
            for (std::size_t i = 0; i < k_; ++i)
                inverse_(i, j) = sol->particular[i];
        }
    }

    std::size_t dim() const { return k_; }

    /// Coordinates of a direction vector in the lattice basis.
    Vector coordinates(const Vector& w) const
    {
        if (full_)
            return w;
        Vector sel(k_);
        for (std::size_t i = 0; i < k_; ++i)
            sel[i] = w[rows_[i]];
        return inverse_ * sel;
    }

    /// |det| of the edge vectors of a simplex with vertices `verts` (k+1 of them).
    Rational normalized_volume(const std::vector<const Vector*>& verts) const
    {
        if (verts.size() != k_ + 1)
            throw InvalidInput("simplex vertex count does not match the frame dimension");
        if (k_ == 0)
            return 1;
        Matrix m(k_, k_);
        for (std::size_t i = 0; i < k_; ++i) {
            Vector w(dim_);
            for (std::size_t j = 0; j < dim_; ++j)
                w[j] = (*verts[i + 1])[j] - (*verts[0])[j];
            Vector c = coordinates(w);
            for (std::size_t j = 0; j < k_; ++j)
                m(i, j) = c[j];
        }
        return abs(determinant(std::move(m)));
    }

  private:
    std::size_t dim_ = 0;
    std::size_t k_ = 0;
    bool full_ = false;
    std::vector<IntVector> basis_;
    std::vector<std::size_t> rows_;
    Matrix inverse_;
};

}  // namespace qpoly::detail

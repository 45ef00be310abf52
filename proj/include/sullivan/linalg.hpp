#pragma once

#include "sullivan/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sullivan {

using Vector = std::vector<Rational>;

bool is_zero(const Vector& v);
Rational dot(const Vector& a, const Vector& b);
// a += c * b
void axpy(Vector& a, const Rational& c, const Vector& b);

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Vector apply(const Vector& x) const;
    Matrix transpose() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Reduced row echelon form. Pivots are chosen as the first nonzero column,
// scanning columns left to right, so results depend only on column order.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;  // one per nonzero row, increasing
    Matrix transform;                        // transform * input == reduced (if tracked)

    std::size_t rank() const { return pivot_columns.size(); }
};

Echelon row_reduce(const Matrix& m, bool track_transform = false);

std::size_t rank(const Matrix& m);

// Kernel basis indexed by the free columns of the echelon form: the i-th
// vector has a 1 in the i-th free column and zeros in the other free columns.
// Each vector is then scaled so its first nonzero entry is 1.
std::vector<Vector> nullspace(const Matrix& m);

// Solves A x = b with the free variables set to zero. The map b -> x is
// linear on the image of A.
class LinearSolver {
public:
    LinearSolver() = default;
    explicit LinearSolver(const Matrix& a);

    std::optional<Vector> solve(const Vector& b) const;
    bool in_image(const Vector& b) const;
    std::size_t rank() const { return echelon_.rank(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Echelon echelon_;
};

// A subspace of Q^n kept as a reduced row echelon basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    Subspace(std::size_t ambient, const std::vector<Vector>& spanning);

    std::size_t ambient() const { return ambient_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Remainder of v after clearing every pivot column.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const { return is_zero(reduce(v)); }

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

// Writes v as a combination of the given vectors, if possible.
std::optional<Vector> combination(const std::vector<Vector>& vectors, const Vector& v, std::size_t ambient);

// A functional that vanishes on every vector of `span` but not on `v`;
// nullopt exactly when v lies in the span.
std::optional<Vector> separating_functional(const std::vector<Vector>& span, const Vector& v, std::size_t ambient);

// Basis of the functionals vanishing on `span`.
std::vector<Vector> annihilator(const std::vector<Vector>& span, std::size_t ambient);

}  // namespace sullivan

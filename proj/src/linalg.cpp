#include "sullivan/linalg.hpp"

#include <utility>

namespace sullivan {

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Rational dot(const Vector& a, const Vector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

void axpy(Vector& a, const Rational& c, const Vector& b) {
    if (sgn(c) == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(b[i]) != 0) a[i] += c * b[i];
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::apply(const Vector& x) const {
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c);
            if (sgn(a) != 0 && sgn(x[c]) != 0) s += a * x[c];
        }
        y[r] = s;
    }
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Echelon row_reduce(const Matrix& m, bool track_transform) {
    Echelon e;
    e.reduced = m;
    Matrix& a = e.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (track_transform) {
        e.transform = Matrix(rows, rows);
        for (std::size_t i = 0; i < rows; ++i) e.transform(i, i) = 1;
    }
    Matrix& t = e.transform;

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
            if (track_transform)
                for (std::size_t j = 0; j < rows; ++j) std::swap(t(p, j), t(r, j));
        }
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < cols; ++j)
            if (sgn(a(r, j)) != 0) a(r, j) *= inv;
        if (track_transform)
            for (std::size_t j = 0; j < rows; ++j)
                if (sgn(t(r, j)) != 0) t(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j)
                if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
            if (track_transform)
                for (std::size_t j = 0; j < rows; ++j)
                    if (sgn(t(r, j)) != 0) t(i, j) -= f * t(r, j);
        }
        e.pivot_columns.push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<Vector> nullspace(const Matrix& m) {
    const Echelon e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;

    std::vector<Vector> kernel;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, f);
        for (const auto& x : v) {
            if (sgn(x) != 0) {
                const Rational lead = x;
                for (auto& y : v) y /= lead;
                break;
            }
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

LinearSolver::LinearSolver(const Matrix& a) : rows_(a.rows()), cols_(a.cols()), echelon_(row_reduce(a, true)) {}

std::optional<Vector> LinearSolver::solve(const Vector& b) const {
    const Vector c = echelon_.transform.rows() ? echelon_.transform.apply(b) : Vector{};
    for (std::size_t i = echelon_.rank(); i < rows_; ++i)
        if (sgn(c[i]) != 0) return std::nullopt;
    Vector x(cols_);
    for (std::size_t i = 0; i < echelon_.rank(); ++i) x[echelon_.pivot_columns[i]] = c[i];
    return x;
}

bool LinearSolver::in_image(const Vector& b) const {
    const Vector c = echelon_.transform.rows() ? echelon_.transform.apply(b) : Vector{};
    for (std::size_t i = echelon_.rank(); i < rows_; ++i)
        if (sgn(c[i]) != 0) return false;
    return true;
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vector>& spanning) : ambient_(ambient) {
    if (spanning.empty()) return;
    const Echelon e = row_reduce(Matrix::from_rows(spanning, ambient));
    for (std::size_t i = 0; i < e.rank(); ++i) {
        basis_.push_back(e.reduced.row(i));
        pivots_.push_back(e.pivot_columns[i]);
    }
}

Vector Subspace::reduce(const Vector& v) const {
    Vector r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational c = r[pivots_[i]];
        if (sgn(c) != 0) axpy(r, -c, basis_[i]);
    }
    return r;
}

std::optional<Vector> combination(const std::vector<Vector>& vectors, const Vector& v, std::size_t ambient) {
    if (vectors.empty()) {
        if (is_zero(v)) return Vector{};
        return std::nullopt;
    }
    return LinearSolver(Matrix::from_columns(vectors, ambient)).solve(v);
}

std::vector<Vector> annihilator(const std::vector<Vector>& span, std::size_t ambient) {
    if (span.empty()) {
        std::vector<Vector> all;
        for (std::size_t i = 0; i < ambient; ++i) {
            Vector e(ambient);
            e[i] = 1;
            all.push_back(std::move(e));
        }
        return all;
    }
    return nullspace(Matrix::from_rows(span, ambient));
}

std::optional<Vector> separating_functional(const std::vector<Vector>& span, const Vector& v, std::size_t ambient) {
    for (auto& f : annihilator(span, ambient))
        if (sgn(dot(f, v)) != 0) return f;
    return std::nullopt;
}

}  // namespace sullivan

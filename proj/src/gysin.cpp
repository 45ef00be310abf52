#include "sullivan/gysin.hpp"

#include "sullivan/errors.hpp"
#include "sullivan/parallel.hpp"

#include <utility>

namespace sullivan {

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

// row_a += c * row_b
void add_row(IntMatrix& m, std::size_t a, const Integer& c, std::size_t b) {
    for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] += c * m[b][j];
}

void add_col(IntMatrix& m, std::size_t a, const Integer& c, std::size_t b) {
    for (auto& row : m) row[a] += c * row[b];
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (const auto& f : factors)
        if (f != 0) ++r;
    return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner) {
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMatrix out(a.size(), std::vector<Integer>(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

SmithForm smith_normal_form(const IntMatrix& input, std::size_t rows, std::size_t cols) {
    if (input.size() != rows) throw PreconditionError("matrix row count mismatch");
    for (const auto& r : input)
        if (r.size() != cols) throw PreconditionError("matrix column count mismatch");
    IntMatrix a = input;
    SmithForm out;
    out.u = identity(rows);
    out.v = identity(cols);
    const std::size_t n = std::min(rows, cols);

    for (std::size_t t = 0; t < n; ++t) {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        auto bring_min = [&]() {
            bool found = false;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[bi][bj]))) {
                        found = true;
                        bi = i;
                        bj = j;
                    }
            if (!found) return false;
            swap_rows(a, t, bi);
            swap_rows(out.u, t, bi);
            swap_cols(a, t, bj);
            swap_cols(out.v, t, bj);
            return true;
        };
        if (!bring_min()) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const Integer q = -floor_div(a[i][t], a[t][t]);
                add_row(a, i, q, t);
                add_row(out.u, i, q, t);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const Integer q = -floor_div(a[t][j], a[t][t]);
                add_col(a, j, q, t);
                add_col(out.v, j, q, t);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                bring_min();
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(a, t, 1, i);
                        add_row(out.u, t, 1, i);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            for (auto& x : out.u[t]) x = -x;
        }
    }
    for (std::size_t t = 0; t < n; ++t) out.factors.push_back(a[t][t]);
    return out;
}

std::string AbelianGroup::to_string() const {
    std::string out;
    if (free_rank == 1) out = "Z";
    if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + ("Z_" + t.get_str());
    return out.empty() ? "0" : out;
}

GysinResult gysin_total(const FiniteGradedRing& base, int fiber_dim, const Vector& euler, unsigned threads) {
    if (fiber_dim < 1 || fiber_dim % 2 == 0) throw PreconditionError("the fiber must be an odd-dimensional sphere");
    if (!base.has_integral_constants()) throw PreconditionError("the base ring needs integer structure constants");
    if (euler.size() != base.size()) throw PreconditionError("Euler class vector has the wrong length");
    for (std::size_t i = 0; i < euler.size(); ++i) {
        if (euler[i] == 0) continue;
        if (base.degree(i) != fiber_dim + 1)
            throw DegreeMismatch("the Euler class must have degree " + std::to_string(fiber_dim + 1));
        if (!is_integral(euler[i])) throw PreconditionError("the Euler class must be integral");
    }

    // Integer matrix of ⌣e : H^k(B) -> H^{k+f+1}(B).
    auto cup_matrix = [&](int k) {
        const auto& src = base.indices_of_degree(k);
        const auto& dst = base.indices_of_degree(k + fiber_dim + 1);
        IntMatrix m(dst.size(), std::vector<Integer>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j) {
            Vector e(base.size());
            e[src[j]] = 1;
            const Vector image = base.multiply(euler, e);
            for (std::size_t i = 0; i < dst.size(); ++i) m[i][j] = image[dst[i]].get_num();
        }
        return std::make_pair(m, std::make_pair(dst.size(), src.size()));
    };

    GysinResult out;
    out.fiber_dim = fiber_dim;
    const int top = base.top_degree() + fiber_dim;
    out.degrees.resize(static_cast<std::size_t>(top + 1));
    parallel_for(out.degrees.size(), [&](std::size_t idx) {
        const int k = static_cast<int>(idx);
        GysinDegree g;
        g.degree = k;
        const std::size_t target = base.dimension(k);
        if (k - fiber_dim - 1 >= 0) {
            auto [m, shape] = cup_matrix(k - fiber_dim - 1);
            const SmithForm snf = smith_normal_form(m, shape.first, shape.second);
            g.cokernel.free_rank = target - snf.rank();
            for (const auto& f : snf.factors)
                if (f > 1) g.cokernel.torsion.push_back(f);
        } else {
            g.cokernel.free_rank = target;
        }
        if (k - fiber_dim >= 0) {
            auto [m, shape] = cup_matrix(k - fiber_dim);
            const SmithForm snf = smith_normal_form(m, shape.first, shape.second);
            g.kernel_rank = shape.second - snf.rank();
        }
        // The kernel is a subgroup of a free group, so the sequence splits.
        g.group.free_rank = g.cokernel.free_rank + g.kernel_rank;
        g.group.torsion = g.cokernel.torsion;
        g.resolved = true;
        out.degrees[idx] = std::move(g);
    }, threads);
    return out;
}

}  // namespace sullivan

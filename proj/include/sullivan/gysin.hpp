#pragma once

#include "sullivan/ring.hpp"

#include <string>
#include <vector>

namespace sullivan {

using IntMatrix = std::vector<std::vector<Integer>>;  // row-major

struct SmithForm {
    std::vector<Integer> factors;  // min(rows, cols) entries, d_1 | d_2 | ..., all >= 0
    IntMatrix u;                   // rows x rows, unimodular
    IntMatrix v;                   // cols x cols, unimodular
    std::size_t rank() const;
};

// U * M * V = diag(factors).
SmithForm smith_normal_form(const IntMatrix& m, std::size_t rows, std::size_t cols);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner);

struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // cyclic orders > 1, increasing

    // "0", "Z", "Z^2", "Z_2", "Z^2 + Z_2"
    std::string to_string() const;
};

struct GysinDegree {
    int degree = 0;
    AbelianGroup group;
    AbelianGroup cokernel;  // of ⌣e into H^k(B)
    std::size_t kernel_rank = 0;  // of ⌣e out of H^{k-f}(B)
    bool resolved = true;
};

struct GysinResult {
    int fiber_dim = 0;
    std::vector<GysinDegree> degrees;  // 0 .. top(B) + fiber_dim

    const GysinDegree& at(int k) const { return degrees.at(static_cast<std::size_t>(k)); }
};

// Integral cohomology of an S^f-bundle (f odd) over a base whose integral
// cohomology is free with the ring's basis and integer structure constants.
GysinResult gysin_total(const FiniteGradedRing& base, int fiber_dim, const Vector& euler, unsigned threads = 0);

}  // namespace sullivan

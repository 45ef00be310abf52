#pragma once

#include "sullivan/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sullivan {

// Sparse combination of ring basis indices.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// Finite-dimensional graded-commutative ring with zero differential, given by
// a basis and structure constants. Index 0 is always the unit "1".
class FiniteGradedRing {
public:
    struct BasisElement {
        std::string name;
        int degree = 0;
    };

    using ProductTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

    // The rationals, concentrated in degree 0.
    static std::shared_ptr<const FiniteGradedRing> trivial();

    // `basis` excludes the unit. Products with the unit are implied; a product
    // given for (i,j) but not (j,i) is completed by graded commutativity and
    // unlisted products are zero. Checks degrees, commutativity, associativity.
    static std::shared_ptr<const FiniteGradedRing> from_table(const std::vector<BasisElement>& basis,
                                                              const ProductTable& products);

    // Free graded-commutative algebra on `generators` modulo monomial
    // relations (exponent vectors). Every even generator needs a pure-power
    // relation so that the quotient is finite.
    static std::shared_ptr<const FiniteGradedRing> from_monomial_relations(
        const std::vector<std::pair<std::string, int>>& generators, const std::vector<std::vector<int>>& relations);

    std::size_t size() const { return basis_.size(); }
    int degree(std::size_t i) const { return basis_[i].degree; }
    const std::string& name(std::size_t i) const { return basis_[i].name; }
    int top_degree() const { return top_; }
    const std::vector<std::size_t>& indices_of_degree(int k) const;
    std::size_t dimension(int k) const { return indices_of_degree(k).size(); }

    const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }

    // Names usable in expressions: basis names, and for monomial rings the
    // generator names. nullopt value means the symbol exists but is zero.
    const std::map<std::string, std::optional<std::size_t>>& symbols() const { return symbols_; }

    // Ring generators for monomial rings (empty for table rings).
    const std::vector<std::pair<std::string, int>>& generators() const { return generators_; }
    const std::vector<std::vector<int>>& relations() const { return relations_; }
    bool is_monomial_presentation() const { return !generators_.empty(); }

    bool has_integral_constants() const;

    // Distinguished degree-2 element and half the formal dimension.
    const std::optional<Vector>& omega() const { return omega_; }
    std::optional<int> half_dimension() const { return n_; }
    std::shared_ptr<const FiniteGradedRing> with_omega(const Vector& omega, int n) const;

    // Multiplication of dense coefficient vectors (length size()).
    Vector multiply(const Vector& x, const Vector& y) const;

private:
    FiniteGradedRing() = default;
    void finish();

    std::vector<BasisElement> basis_;
    std::vector<SparseVector> table_;
    std::map<int, std::vector<std::size_t>> by_degree_;
    std::map<std::string, std::optional<std::size_t>> symbols_;
    std::vector<std::pair<std::string, int>> generators_;
    std::vector<std::vector<int>> relations_;
    int top_ = 0;
    std::optional<Vector> omega_;
    std::optional<int> n_;
};

using RingPtr = std::shared_ptr<const FiniteGradedRing>;

// Sign of moving the odd factors of `right` past those of `left` when both
// are sorted exponent vectors; 0 if an odd factor repeats.
int koszul_sign(const std::vector<int>& left, const std::vector<int>& right, const std::vector<int>& degrees);

}  // namespace sullivan

#pragma once

#include "sullivan/gca.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sullivan {

// R ⊗ ΛV with d(R) = 0 and d given on the free generators.
class DGA {
public:
    // `differential[i]` is d of generator i. Validates degrees and d² = 0 on
    // generators; throws ValidationError naming the generator otherwise.
    static std::shared_ptr<const DGA> create(AlgebraPtr algebra, std::vector<Element> differential);

    const GradedAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const Element& d_generator(std::size_t i) const { return diff_[i]; }
    const std::vector<Element>& differentials() const { return diff_; }

    // Leibniz extension. Rejects inhomogeneous input.
    Element d(const Element& e) const;
    Element d(const Monomial& m) const;

    // Matrix of d from degree k to degree k+1 in the monomial bases.
    Matrix matrix(int k) const;

    // No generator differential has a linear part, and the generators can be
    // ordered so that each differential only involves earlier ones. Only free
    // algebras (trivial ring) qualify.
    bool is_minimal() const { return minimal_; }

    // Generators whose d² could not be checked because d(d(g)) lies above the cap.
    const std::vector<std::string>& unverified() const { return unverified_; }

    // The same differential on the algebra with another cap.
    std::shared_ptr<const DGA> with_cap(int cap) const;

    // Image of an element of another algebra whose generators and ring
    // symbols are a subset of this one's, matched by name.
    Element import(const Element& e) const;

private:
    DGA() = default;

    AlgebraPtr algebra_;
    std::vector<Element> diff_;
    bool minimal_ = false;
    std::vector<std::string> unverified_;
};

using DGAPtr = std::shared_ptr<const DGA>;

// Differentials given as expressions keyed by generator name; missing
// generators are closed.
DGAPtr attach_differential(AlgebraPtr algebra, const std::map<std::string, std::string>& differential);

Element differential_of(const DGA& dga, const Element& e);

// Copies `e` into `target`, matching generators and ring symbols by name.
Element transfer(const Element& e, const GradedAlgebra& target);

}  // namespace sullivan

#pragma once

#include "sullivan/dga.hpp"
#include "sullivan/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace sullivan {

struct CochainSlice {
    int degree = 0;
    std::vector<Monomial> basis;
    Matrix d;  // degree -> degree + 1
};

struct CohomologyClass {
    int degree = 0;
    Element representative;
    Vector coordinates;

    bool is_zero() const { return sullivan::is_zero(coordinates); }
};

struct ClassReduction {
    CohomologyClass cls;
    std::optional<Element> primitive;  // set exactly when the class is zero

    bool exact() const { return primitive.has_value(); }
};

struct CohomologyBasis {
    int degree = 0;
    std::vector<Element> representatives;

    std::size_t betti() const { return representatives.size(); }
};

// Cohomology of a DGA within its degree window. Per-degree data is computed
// on demand, cached, and safe to request from several threads.
class Cohomology {
public:
    explicit Cohomology(DGAPtr dga);

    const DGA& dga() const { return *dga_; }
    const DGAPtr& dga_ptr() const { return dga_; }
    const GradedAlgebra& algebra() const { return dga_->algebra(); }

    // H^k needs the bases of degrees k and k+1.
    bool computable(int k) const;
    void require(int k) const;

    CochainSlice slice(int k) const;
    const CohomologyBasis& basis(int k) const;
    std::size_t betti(int k) const { return basis(k).betti(); }
    std::vector<std::size_t> betti_numbers(int lo, int hi, unsigned threads) const;
    void precompute(int lo, int hi, unsigned threads) const;

    bool is_closed(const Element& c) const;
    // Coordinates of a closed element; throws if it is not closed.
    ClassReduction reduce(const Element& c, int degree) const;
    CohomologyClass class_of(const Element& c, int degree) const { return reduce(c, degree).cls; }
    Vector coordinates(const Element& c, int degree) const;
    std::optional<Element> primitive(const Element& c, int degree) const;
    bool is_exact(const Element& c, int degree) const { return primitive(c, degree).has_value(); }

    CohomologyClass basis_class(int k, std::size_t i) const;
    CohomologyClass from_coordinates(int k, const Vector& coords) const;
    CohomologyClass unit() const;
    CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) const;

private:
    struct DegreeData {
        CohomologyBasis basis;
        Subspace boundaries;
        Subspace classes;  // reduced cocycles, RREF
        LinearSolver incoming;  // d from degree k-1
        bool has_incoming = false;
    };

    std::shared_ptr<const DegreeData> data(int k) const;
    std::shared_ptr<const DegreeData> compute(int k) const;

    DGAPtr dga_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::shared_ptr<const DegreeData>> cache_;
};

CohomologyBasis cohomology_basis(const Cohomology& h, int k);
ClassReduction reduce_class(const Cohomology& h, const Element& c, int degree);
CohomologyClass cup(const Cohomology& h, const CohomologyClass& a, const CohomologyClass& b);

}  // namespace sullivan

#include "sullivan/cohomology.hpp"

#include "sullivan/errors.hpp"
#include "sullivan/parallel.hpp"

namespace sullivan {

Cohomology::Cohomology(DGAPtr dga) : dga_(std::move(dga)) {}

bool Cohomology::computable(int k) const {
    if (k < 0) return true;
    return algebra().in_window(k) && algebra().in_window(k + 1);
}

void Cohomology::require(int k) const {
    if (!computable(k))
        throw OutOfWindow("H^" + std::to_string(k) + " needs degree " + std::to_string(k + 1) +
                          ", above the cap " + std::to_string(algebra().cap()));
}

CochainSlice Cohomology::slice(int k) const {
    require(k);
    return {k, algebra().basis(k), dga_->matrix(k)};
}

std::shared_ptr<const Cohomology::DegreeData> Cohomology::compute(int k) const {
    auto out = std::make_shared<DegreeData>();
    out->basis.degree = k;
    const std::size_t dim = algebra().dimension(k);
    if (dim == 0) return out;
    const std::vector<Vector> cocycles = nullspace(dga_->matrix(k));
    if (k > 0) {
        const Matrix incoming = dga_->matrix(k - 1);
        std::vector<Vector> columns;
        for (std::size_t j = 0; j < incoming.cols(); ++j) columns.push_back(incoming.column(j));
        out->boundaries = Subspace(dim, columns);
        out->incoming = LinearSolver(incoming);
        out->has_incoming = true;
    } else {
        out->boundaries = Subspace(dim);
    }
    std::vector<Vector> reduced;
    for (const auto& z : cocycles) {
        Vector r = out->boundaries.reduce(z);
        if (!is_zero(r)) reduced.push_back(std::move(r));
    }
    out->classes = Subspace(dim, reduced);
    for (const auto& v : out->classes.basis()) out->basis.representatives.push_back(algebra().from_vector(k, v));
    return out;
}

std::shared_ptr<const Cohomology::DegreeData> Cohomology::data(int k) const {
    require(k);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
    }
    auto computed = compute(k);
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(k, computed);
    return it->second;
}

const CohomologyBasis& Cohomology::basis(int k) const {
    static const CohomologyBasis empty;
    if (k < 0) return empty;
    return data(k)->basis;
}

void Cohomology::precompute(int lo, int hi, unsigned threads) const {
    if (hi < lo) return;
    parallel_for(static_cast<std::size_t>(hi - lo + 1), [&](std::size_t i) { data(lo + static_cast<int>(i)); },
                 threads);
}

std::vector<std::size_t> Cohomology::betti_numbers(int lo, int hi, unsigned threads) const {
    precompute(lo, hi, threads);
    std::vector<std::size_t> out;
    for (int k = lo; k <= hi; ++k) out.push_back(betti(k));
    return out;
}

bool Cohomology::is_closed(const Element& c) const { return dga_->d(c).is_zero(); }

ClassReduction Cohomology::reduce(const Element& c, int degree) const {
    if (!c.is_zero() && c.degree() != degree)
        throw DegreeMismatch("element is not homogeneous of degree " + std::to_string(degree));
    if (!is_closed(c)) throw PreconditionError("element " + c.to_string() + " is not closed");
    ClassReduction out;
    out.cls.degree = degree;
    out.cls.representative = c.is_zero() ? algebra().zero() : dga_->import(c);
    if (degree < 0) {
        out.primitive = algebra().zero();
        return out;
    }
    auto d = data(degree);
    out.cls.coordinates = coordinates(out.cls.representative, degree);
    if (out.cls.is_zero()) out.primitive = primitive(out.cls.representative, degree);
    return out;
}

Vector Cohomology::coordinates(const Element& c, int degree) const {
    auto d = data(degree);
    const Vector r = d->boundaries.reduce(algebra().to_vector(c, degree));
    Vector coords(d->classes.dimension());
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = r[d->classes.pivots()[i]];
    return coords;
}

std::optional<Element> Cohomology::primitive(const Element& c, int degree) const {
    if (c.is_zero()) return algebra().zero();
    if (degree <= 0) return std::nullopt;
    auto d = data(degree);
    auto x = d->incoming.solve(algebra().to_vector(c, degree));
    if (!x) return std::nullopt;
    return algebra().from_vector(degree - 1, *x);
}

CohomologyClass Cohomology::basis_class(int k, std::size_t i) const {
    const auto& b = basis(k);
    CohomologyClass c;
    c.degree = k;
    c.representative = b.representatives.at(i);
    c.coordinates = Vector(b.betti());
    c.coordinates[i] = 1;
    return c;
}

CohomologyClass Cohomology::from_coordinates(int k, const Vector& coords) const {
    const auto& b = basis(k);
    if (coords.size() != b.betti()) throw PreconditionError("coordinate vector has the wrong length");
    CohomologyClass c;
    c.degree = k;
    c.representative = algebra().zero();
    for (std::size_t i = 0; i < coords.size(); ++i) c.representative += b.representatives[i] * coords[i];
    c.coordinates = coords;
    return c;
}

CohomologyClass Cohomology::unit() const { return class_of(algebra().one(), 0); }

CohomologyClass Cohomology::cup(const CohomologyClass& a, const CohomologyClass& b) const {
    const int k = a.degree + b.degree;
    require(k);
    return class_of(dga_->import(a.representative) * dga_->import(b.representative), k);
}

CohomologyBasis cohomology_basis(const Cohomology& h, int k) { return h.basis(k); }
ClassReduction reduce_class(const Cohomology& h, const Element& c, int degree) { return h.reduce(c, degree); }
CohomologyClass cup(const Cohomology& h, const CohomologyClass& a, const CohomologyClass& b) { return h.cup(a, b); }

}  // namespace sullivan

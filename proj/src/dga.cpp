#include "sullivan/dga.hpp"

#include "sullivan/errors.hpp"
#include "sullivan/expression.hpp"

#include <functional>

namespace sullivan {

Element transfer(const Element& e, const GradedAlgebra& target) {
    Element out = target.zero();
    if (e.is_zero()) return out;
    const GradedAlgebra& source = *e.algebra();
    std::vector<std::size_t> map(source.generators().size());
    for (const auto& g : source.generators()) {
        auto idx = target.generator_index(g.name);
        if (!idx) throw PreconditionError("generator '" + g.name + "' is missing from the target algebra");
        if (target.generators()[*idx].degree != g.degree)
            throw DegreeMismatch("generator '" + g.name + "' has a different degree in the target algebra");
        map[g.index] = *idx;
    }
    const bool same_ring = source.ring_ptr() == target.ring_ptr();
    for (const auto& [m, c] : e.terms()) {
        Element ring_part = target.one();
        if (m.ring != 0) {
            if (same_ring) {
                ring_part = target.ring_element(m.ring);
            } else {
                auto sym = target.symbol(source.ring().name(m.ring));
                if (!sym) throw PreconditionError("ring element '" + source.ring().name(m.ring) + "' is missing from the target");
                ring_part = *sym;
            }
        }
        Monomial free{m.degree - source.ring().degree(m.ring), 0, std::vector<int>(target.generators().size(), 0)};
        for (std::size_t i = 0; i < m.exponents.size(); ++i) free.exponents[map[i]] = m.exponents[i];
        out += ring_part * target.monomial(free) * c;
    }
    return out;
}

DGAPtr DGA::create(AlgebraPtr algebra, std::vector<Element> differential) {
    const auto& gens = algebra->generators();
    if (differential.size() != gens.size()) throw PreconditionError("one differential per generator is required");
    std::shared_ptr<DGA> dga(new DGA());
    dga->algebra_ = algebra;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Element& dg = differential[i];
        if (!dg.is_zero() && dg.algebra() != algebra) dg = transfer(dg, *algebra);
        if (!dg.is_zero()) {
            auto deg = dg.degree();
            if (!deg)
                throw DegreeMismatch("d(" + gens[i].name + ") is not homogeneous");
            if (*deg != gens[i].degree + 1)
                throw DegreeMismatch("d(" + gens[i].name + ") has degree " + std::to_string(*deg) + ", expected " +
                                     std::to_string(gens[i].degree + 1));
        }
    }
    dga->diff_ = std::move(differential);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Element& dg = dga->diff_[i];
        if (dg.is_zero()) continue;
        if (!algebra->in_window(gens[i].degree + 2)) {
            dga->unverified_.push_back(gens[i].name);
            continue;
        }
        Element dd = dga->d(dg);
        if (!dd.is_zero())
            throw ValidationError("d^2(" + gens[i].name + ") = " + dd.to_string() + " is not zero");
    }

    bool minimal = algebra->ring().size() == 1;
    const std::size_t n = gens.size();
    std::vector<std::vector<bool>> uses(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n && minimal; ++i) {
        for (const auto& [m, c] : dga->diff_[i].terms()) {
            int length = 0;
            for (std::size_t j = 0; j < n; ++j) {
                length += m.exponents[j];
                if (m.exponents[j] > 0) uses[i][j] = true;
            }
            if (length == 1) minimal = false;
        }
    }
    if (minimal) {
        std::vector<int> state(n, 0);
        std::function<bool(std::size_t)> acyclic = [&](std::size_t v) {
            if (state[v] == 1) return false;
            if (state[v] == 2) return true;
            state[v] = 1;
            for (std::size_t j = 0; j < n; ++j)
                if (uses[v][j] && !acyclic(j)) return false;
            state[v] = 2;
            return true;
        };
        for (std::size_t i = 0; i < n && minimal; ++i) minimal = acyclic(i);
    }
    dga->minimal_ = minimal;
    return dga;
}

Element DGA::d(const Monomial& m) const {
    const GradedAlgebra& a = *algebra_;
    Element left = m.ring == 0 ? a.one() : a.ring_element(m.ring);
    int left_degree = a.ring().degree(m.ring);
    Element dleft = a.zero();
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        const int e = m.exponents[i];
        if (e == 0) continue;
        const Element g = a.generator(i);
        const int gd = a.generators()[i].degree;
        Element factor = power(g, e);
        Element dfactor = diff_[i].is_zero() ? a.zero()
                                             : (e == 1 ? diff_[i] : power(g, e - 1) * diff_[i] * Rational(e));
        Element next = dleft * factor;
        if (!dfactor.is_zero()) {
            Element t = left * dfactor;
            next += left_degree % 2 == 0 ? t : -t;
        }
        dleft = next;
        left = left * factor;
        left_degree += e * gd;
    }
    return dleft;
}

Element DGA::d(const Element& e) const {
    if (!e.is_homogeneous()) throw PreconditionError("differential of an inhomogeneous element");
    Element out = algebra_->zero();
    if (e.is_zero()) return out;
    const Element& src = (e.algebra() == algebra_) ? e : transfer(e, *algebra_);
    for (const auto& [m, c] : src.terms()) out += d(m) * c;
    return out;
}

Matrix DGA::matrix(int k) const {
    const auto& src = algebra_->basis(k);
    const auto& dst = algebra_->basis(k + 1);
    Matrix mat(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const Element image = d(src[j]);
        for (const auto& [m, c] : image.terms()) mat(algebra_->index_of(m), j) = c;
    }
    return mat;
}

DGAPtr DGA::with_cap(int cap) const {
    auto alg = algebra_->with_cap(cap);
    std::vector<Element> diff;
    for (const auto& dg : diff_) diff.push_back(transfer(dg, *alg));
    return create(alg, diff);
}

Element DGA::import(const Element& e) const {
    if (e.algebra() == algebra_) return e;
    return transfer(e, *algebra_);
}

DGAPtr attach_differential(AlgebraPtr algebra, const std::map<std::string, std::string>& differential) {
    std::vector<Element> diff(algebra->generators().size(), algebra->zero());
    for (const auto& [name, text] : differential) {
        auto idx = algebra->generator_index(name);
        if (!idx) throw PreconditionError("differential given for unknown generator '" + name + "'");
        diff[*idx] = parse_element(text, *algebra);
    }
    return DGA::create(algebra, diff);
}

Element differential_of(const DGA& dga, const Element& e) { return dga.d(e); }

}  // namespace sullivan

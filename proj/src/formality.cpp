#include "sullivan/formality.hpp"

#include "sullivan/errors.hpp"
#include "sullivan/parallel.hpp"

#include <set>

namespace sullivan {

namespace {

void require_minimal(const DGA& dga) {
    if (!dga.is_minimal()) throw PreconditionError("formality checks need a minimal algebra");
}

DGAPtr at_cap(const DGA& dga, int cap) {
    if (cap < 1) throw PreconditionError("cap must be positive");
    return dga.with_cap(cap);
}

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
    return out;
}

}  // namespace

std::vector<std::string> CNDecomposition::complement_generators() const {
    std::vector<std::string> out;
    for (const auto& d : degrees)
        for (const auto& g : d.complement) out.push_back(g.to_string());
    return out;
}

CNDecomposition cn_decomposition(const DGA& dga, int s) {
    require_minimal(dga);
    if (s < 0) throw PreconditionError("s must be non-negative");
    const GradedAlgebra& alg = dga.algebra();
    CNDecomposition out;
    out.s = s;
    for (int i = 1; i <= s; ++i) {
        CNDegree cn;
        cn.degree = i;
        std::vector<std::size_t> gens;
        for (const auto& g : alg.generators())
            if (g.degree == i) gens.push_back(g.index);
        if (!gens.empty()) {
            if (!alg.in_window(i + 1)) throw OutOfWindow("d on V^" + std::to_string(i) + " needs the cap to reach " + std::to_string(i + 1));
            std::vector<Vector> columns;
            for (auto g : gens) columns.push_back(alg.to_vector(dga.d_generator(g), i + 1));
            const Matrix m = Matrix::from_columns(columns, alg.dimension(i + 1));
            for (const auto& v : nullspace(m)) {
                Element e = alg.zero();
                for (std::size_t k = 0; k < v.size(); ++k) e += alg.generator(gens[k]) * v[k];
                cn.closed.push_back(e);
            }
            for (auto p : row_reduce(m).pivot_columns) cn.complement.push_back(alg.generator(gens[p]));
        }
        out.degrees.push_back(std::move(cn));
    }
    return out;
}

std::string to_string(FormalityStatus s) {
    switch (s) {
        case FormalityStatus::s_formal_up_to_cap:
            return "s_formal_up_to_cap";
        case FormalityStatus::not_s_formal:
            return "not_s_formal";
        case FormalityStatus::formal_by_dimension_rule:
            return "formal_by_dimension_rule";
        case FormalityStatus::inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

FormalityVerdict s_formality_check(const DGA& input, int s, int cap, unsigned threads) {
    require_minimal(input);
    const DGAPtr dga = at_cap(input, cap);
    const GradedAlgebra& alg = dga->algebra();
    const CNDecomposition cn = cn_decomposition(*dga, std::min(s, cap - 1));

    FormalityVerdict out;
    out.s = s;
    out.cap = cap;
    out.complement = "N = <" + join(cn.complement_generators()) + ">";
    if (cap < 2 * s + 1)
        out.notes.push_back("cap " + std::to_string(cap) + " is below 2s+1 = " + std::to_string(2 * s + 1));

    std::set<std::size_t> complement;
    for (const auto& d : cn.degrees)
        for (const auto& g : d.complement) complement.insert(*alg.generator_index(g.to_string()));

    auto in_ideal = [&](const Monomial& m) {
        bool hits = false;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (alg.generators()[i].degree > s) return false;
            if (complement.count(i)) hits = true;
        }
        return hits;
    };

    Cohomology h(dga);
    const int top = cap - 1;
    std::vector<std::optional<Element>> found(static_cast<std::size_t>(std::max(top, 0) + 1));
    if (!complement.empty()) {
        parallel_for(found.size(), [&](std::size_t q) {
            const int degree = static_cast<int>(q);
            if (degree == 0 || !h.computable(degree)) return;
            std::vector<Monomial> span;
            for (const auto& m : alg.basis(degree))
                if (in_ideal(m)) span.push_back(m);
            if (span.empty()) return;
            std::vector<Vector> columns;
            for (const auto& m : span) columns.push_back(alg.to_vector(dga->d(m), degree + 1));
            for (const auto& v : nullspace(Matrix::from_columns(columns, alg.dimension(degree + 1)))) {
                Element e = alg.zero();
                for (std::size_t k = 0; k < v.size(); ++k) e += alg.monomial(span[k]) * v[k];
                if (!h.is_exact(e, degree)) {
                    found[q] = e;
                    return;
                }
            }
        }, threads);
    }
    for (std::size_t q = 0; q < found.size(); ++q) {
        if (!found[q]) continue;
        const Element& w = *found[q];
        if (!dga->d(w).is_zero() || h.is_exact(w, static_cast<int>(q)))
            throw Error("internal: formality witness failed revalidation");
        out.status = FormalityStatus::not_s_formal;
        out.witness = w;
        out.degree = static_cast<int>(q);
        out.notes.push_back("negative verdict is relative to the stated complement");
        return out;
    }
    out.status = FormalityStatus::s_formal_up_to_cap;
    return out;
}

FormalityVerdict formality_by_dimension(const DGA& dga, int manifold_dimension, int cap, unsigned threads) {
    if (manifold_dimension < 1) throw PreconditionError("manifold dimension must be positive");
    const int s = (manifold_dimension + 1) / 2 - 1;
    FormalityVerdict out = s_formality_check(dga, s, cap, threads);
    out.manifold_dimension = manifold_dimension;
    if (out.status != FormalityStatus::s_formal_up_to_cap) return out;
    if (cap >= manifold_dimension + 1) {
        out.status = FormalityStatus::formal_by_dimension_rule;
        out.notes.push_back("a compact connected orientable manifold of dimension " +
                            std::to_string(manifold_dimension) + " is formal iff it is " + std::to_string(s) +
                            "-formal");
    } else {
        out.status = FormalityStatus::inconclusive;
        out.notes.push_back("cap " + std::to_string(cap) + " does not reach degree " +
                            std::to_string(manifold_dimension));
    }
    return out;
}

Element apply_morphism(const GradedAlgebra& source, const GradedAlgebra& target,
                       const std::map<std::string, Element>& images, const Element& e) {
    if (source.ring().size() != 1) throw PreconditionError("morphisms are supported from free algebras only");
    std::vector<Element> image(source.generators().size());
    for (const auto& g : source.generators()) {
        auto it = images.find(g.name);
        if (it == images.end()) throw PreconditionError("no image given for generator '" + g.name + "'");
        image[g.index] = it->second.is_zero() ? target.zero() : transfer(it->second, target);
    }
    Element out = target.zero();
    for (const auto& [m, c] : e.terms()) {
        Element term = target.one();
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] > 0) term = term * power(image[i], m.exponents[i]);
        out += term * c;
    }
    return out;
}

QuasiIsoReport quasi_iso_check(const DGA& source_in, const DGA& target, const std::map<std::string, Element>& images,
                               int cap) {
    const DGAPtr source = at_cap(source_in, cap);
    const GradedAlgebra& src = source->algebra();
    const GradedAlgebra& dst = target.algebra();
    for (const auto& [name, e] : images) {
        auto idx = src.generator_index(name);
        if (!idx) throw PreconditionError("image given for unknown generator '" + name + "'");
        const int expected = src.generators()[*idx].degree;
        if (!e.is_zero() && e.degree() != expected)
            throw DegreeMismatch("image of '" + name + "' has degree " +
                                 (e.degree() ? std::to_string(*e.degree()) : std::string("mixed")) + ", expected " +
                                 std::to_string(expected));
    }

    QuasiIsoReport out;
    out.cap = cap;
    out.chain_map = true;
    for (const auto& g : src.generators()) {
        if (!dst.in_window(g.degree + 1) || !src.in_window(g.degree + 1)) continue;
        const Element lhs = apply_morphism(src, dst, images, source->d_generator(g.index));
        const Element rhs = target.d(apply_morphism(src, dst, images, src.generator(g.index)));
        if (lhs != rhs) {
            out.chain_map = false;
            out.chain_failure = g.name;
            return out;
        }
    }

    Cohomology hs(source);
    Cohomology ht(target.with_cap(std::max(cap, dst.cap())));
    out.quasi_isomorphism = true;
    for (int k = 0; k <= cap - 1; ++k) {
        DegreeComparison c;
        c.degree = k;
        const auto& reps = hs.basis(k).representatives;
        c.source_betti = reps.size();
        c.target_betti = ht.betti(k);
        std::vector<Vector> columns;
        for (const auto& r : reps) columns.push_back(ht.coordinates(apply_morphism(src, ht.algebra(), images, r), k));
        c.rank = rank(Matrix::from_columns(columns, c.target_betti));
        out.degrees.push_back(c);
        if (!c.isomorphism() && out.quasi_isomorphism) {
            out.quasi_isomorphism = false;
            out.failing_degree = k;
        }
    }
    return out;
}

}  // namespace sullivan

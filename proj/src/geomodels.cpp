#include "sullivan/geomodels.hpp"

#include "sullivan/errors.hpp"

namespace sullivan {

namespace {

Rational parity_sign(int degree) { return degree % 2 == 0 ? Rational(1) : Rational(-1); }

// Matrix of x -> w*x from A^from to A^to in the ring basis.
Matrix multiplication_matrix(const FiniteGradedRing& ring, const Vector& w, int from, int to) {
    const auto& src = ring.indices_of_degree(from);
    const auto& dst = ring.indices_of_degree(to);
    Matrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        Vector e(ring.size());
        e[src[j]] = 1;
        const Vector image = ring.multiply(w, e);
        for (std::size_t i = 0; i < dst.size(); ++i) m(i, j) = image[dst[i]];
    }
    return m;
}

Vector ring_power(const FiniteGradedRing& ring, const Vector& w, int k) {
    Vector out(ring.size());
    out[0] = 1;
    for (int i = 0; i < k; ++i) out = ring.multiply(out, w);
    return out;
}

struct Parts {
    Element base;  // y-free part
    Element coefficient;  // β in β·y
};

// e = μ + β·y for the single generator y of a Lefschetz extension.
Parts split_parts(const GradedAlgebra& alg, const Element& e) {
    Parts p{alg.zero(), alg.zero()};
    for (const auto& [m, c] : e.terms()) {
        const Element r = m.ring == 0 ? alg.one() : alg.ring_element(m.ring);
        if (m.exponents[0] == 0)
            p.base += r * c;
        else
            p.coefficient += r * c;
    }
    return p;
}

struct LefschetzContext {
    const FiniteGradedRing& ring;
    int n;
    const GradedAlgebra& alg;
    Element y;
};

LefschetzContext require_lefschetz(const ExtensionDGA& e) {
    if (!e.tievsky_shape || !e.ring || !e.ring->omega() || !e.ring->half_dimension())
        throw PreconditionError("expected the extension A ⊗ Λ(y), dy = ω, of a ring carrying ω and n");
    const GradedAlgebra& alg = e.dga->algebra();
    const Element expected = ring_vector_element(alg, *e.ring->omega());
    if (e.dga->d_generator(0) != expected) throw PreconditionError("the extension differential is not dy = ω");
    if (!hard_lefschetz_check(*e.ring).holds) throw PreconditionError("hard Lefschetz fails for the base ring");
    return {*e.ring, *e.ring->half_dimension(), alg, alg.generator(0)};
}

std::string bracket(const CohomologyClass& c) { return "[" + c.representative.to_string() + "]"; }

std::string bracket_list(const std::vector<CohomologyClass>& cs) {
    std::string out = "<";
    for (std::size_t i = 0; i < cs.size(); ++i) out += (i ? ", " : "") + bracket(cs[i]);
    return out + ">";
}

}  // namespace

Element ring_vector_element(const GradedAlgebra& algebra, const Vector& v) {
    if (v.size() != algebra.ring().size()) throw PreconditionError("ring vector has the wrong length");
    Element out = algebra.zero();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        out += (i == 0 ? algebra.one() : algebra.ring_element(i)) * v[i];
    }
    return out;
}

ExtensionDGA elementary_extension(const DGAPtr& base, const std::vector<std::pair<std::string, int>>& generators,
                                  const std::map<std::string, Element>& images, std::optional<int> cap) {
    if (generators.empty()) throw PreconditionError("an elementary extension needs at least one generator");
    const int degree = generators.front().second;
    for (const auto& [name, d] : generators)
        if (d != degree) throw PreconditionError("new generators must share one degree");
    for (const auto& [name, img] : images) {
        bool known = false;
        for (const auto& g : generators) known = known || g.first == name;
        if (!known) throw PreconditionError("image given for unknown generator '" + name + "'");
    }
    const GradedAlgebra& base_alg = base->algebra();
    std::vector<Element> base_images;
    for (const auto& [name, d] : generators) {
        auto it = images.find(name);
        Element img = (it == images.end() || it->second.is_zero()) ? base_alg.zero() : base->import(it->second);
        if (!img.is_zero()) {
            if (img.degree() != degree + 1)
                throw DegreeMismatch("image of '" + name + "' has degree " +
                                     (img.degree() ? std::to_string(*img.degree()) : std::string("mixed")) +
                                     ", expected " + std::to_string(degree + 1));
            if (base_alg.in_window(degree + 2) && !base->d(img).is_zero())
                throw ValidationError("image of '" + name + "' is not closed in the base");
        }
        base_images.push_back(img);
    }

    std::vector<std::pair<std::string, int>> all;
    for (const auto& g : base_alg.generators()) all.push_back({g.name, g.degree});
    for (const auto& g : generators) all.push_back(g);
    std::optional<int> new_cap = cap;
    if (!new_cap && !(base_alg.top_degree() && degree % 2 == 1)) new_cap = base_alg.cap();
    AlgebraPtr alg = GradedAlgebra::create(base_alg.ring_ptr(), all, new_cap);

    std::vector<Element> diff;
    for (const auto& dg : base->differentials()) diff.push_back(dg.is_zero() ? alg->zero() : transfer(dg, *alg));
    for (const auto& img : base_images) diff.push_back(img.is_zero() ? alg->zero() : transfer(img, *alg));

    ExtensionDGA out;
    out.dga = DGA::create(alg, diff);
    out.base = base;
    out.ring = base_alg.ring_ptr();
    for (const auto& g : generators) out.new_generators.push_back(g.first);
    out.generator_degree = degree;
    out.tievsky_shape = base_alg.generators().empty() && generators.size() == 1 && degree == 1;
    return out;
}

ExtensionDGA elementary_extension(const RingPtr& ring, const std::vector<std::pair<std::string, int>>& generators,
                                  const std::map<std::string, Vector>& images, std::optional<int> cap) {
    AlgebraPtr base_alg = GradedAlgebra::create(ring, {}, std::nullopt);
    DGAPtr base = DGA::create(base_alg, {});
    std::map<std::string, Element> converted;
    for (const auto& [name, v] : images) converted[name] = ring_vector_element(*base_alg, v);
    return elementary_extension(base, generators, converted, cap);
}

ExtensionDGA circle_bundle_model(const DGAPtr& base, const CohomologyClass& euler, const std::string& name) {
    if (euler.degree != 2) throw DegreeMismatch("the Euler class of a circle bundle has degree 2");
    return elementary_extension(base, {{name, 1}}, {{name, euler.representative}});
}

ExtensionDGA sphere_bundle_model(const DGAPtr& base, int fiber_dim, const std::optional<CohomologyClass>& euler,
                                 std::optional<int> base_dimension, const std::string& name) {
    if (fiber_dim < 1 || fiber_dim % 2 == 0) throw PreconditionError("the fiber must be an odd-dimensional sphere");
    const bool nonzero = euler && !euler->representative.is_zero();
    if (euler && euler->degree != fiber_dim + 1)
        throw DegreeMismatch("the Euler class of an S^" + std::to_string(fiber_dim) + "-bundle has degree " +
                             std::to_string(fiber_dim + 1));
    if (!base_dimension) base_dimension = base->algebra().top_degree();
    if (nonzero && base_dimension && fiber_dim + 1 > *base_dimension)
        throw PreconditionError("the Euler class lies above the base dimension " + std::to_string(*base_dimension) +
                                " and must be zero");
    std::map<std::string, Element> images;
    if (nonzero) images[name] = euler->representative;
    return elementary_extension(base, {{name, fiber_dim}}, images);
}

ExtensionDGA tievsky_model(const RingPtr& basic, const Vector& cls, const std::string& name) {
    if (cls.size() != basic->size()) throw PreconditionError("class vector has the wrong length");
    bool nonzero = false;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (cls[i] == 0) continue;
        nonzero = true;
        if (basic->degree(i) != 2) throw DegreeMismatch("the class must have degree 2");
    }
    if (!nonzero) throw PreconditionError("the class must be nonzero");
    return elementary_extension(basic, {{name, 1}}, {{name, cls}});
}

ExtensionDGA lefschetz_extension(const RingPtr& ring, const std::string& name) {
    if (!ring->omega() || !ring->half_dimension()) throw PreconditionError("the ring carries no ω and n");
    return tievsky_model(ring, *ring->omega(), name);
}

LefschetzReport hard_lefschetz_check(const FiniteGradedRing& ring) {
    if (!ring.omega() || !ring.half_dimension()) throw PreconditionError("the ring carries no ω and n");
    LefschetzReport out;
    out.n = *ring.half_dimension();
    out.holds = true;
    for (int k = 0; k <= out.n; ++k) {
        LefschetzDegree d;
        d.k = k;
        d.source_dim = ring.dimension(out.n - k);
        d.target_dim = ring.dimension(out.n + k);
        d.rank = rank(multiplication_matrix(ring, ring_power(ring, *ring.omega(), k), out.n - k, out.n + k));
        if (!d.bijective() && out.holds) {
            out.holds = false;
            out.first_failure = k;
        }
        out.maps.push_back(d);
    }
    return out;
}

LefschetzSplit lefschetz_split(const ExtensionDGA& e, const CohomologyClass& c) {
    const LefschetzContext ctx = require_lefschetz(e);
    const Element rep = e.dga->import(c.representative);
    if (!e.dga->d(rep).is_zero()) throw PreconditionError("representative is not closed");
    const Parts p = split_parts(ctx.alg, rep);
    LefschetzSplit out;
    if (c.degree <= ctx.n) {
        if (!p.coefficient.is_zero())
            throw Error("split impossible: closed element with y-part " + p.coefficient.to_string() +
                        " in degree " + std::to_string(c.degree) + " contradicts hard Lefschetz");
        out.representative = p.base;
        out.certificate = ctx.alg.zero();
        out.pure_base = true;
        out.base_part = p.base;
        return out;
    }
    // α = γω with |γ| = j - 2; then α = d(γ̄ y) with γ̄ = (-1)^{|γ|} γ.
    Element certificate = ctx.alg.zero();
    if (!p.base.is_zero()) {
        const auto& ring = ctx.ring;
        const Matrix m = multiplication_matrix(ring, *ring.omega(), c.degree - 2, c.degree);
        const auto& dst = ring.indices_of_degree(c.degree);
        const auto& src = ring.indices_of_degree(c.degree - 2);
        Vector alpha(dst.size());
        for (const auto& [mono, coef] : p.base.terms())
            for (std::size_t i = 0; i < dst.size(); ++i)
                if (dst[i] == mono.ring) alpha[i] = coef;
        auto gamma = LinearSolver(m).solve(alpha);
        if (!gamma) throw Error("split impossible: the base part is not a multiple of ω");
        Vector full(ring.size());
        for (std::size_t i = 0; i < src.size(); ++i) full[src[i]] = (*gamma)[i];
        certificate = ring_vector_element(ctx.alg, full) * ctx.y * parity_sign(c.degree - 2);
        if (e.dga->d(certificate) != p.base) throw Error("internal: split certificate does not match");
    }
    out.representative = rep - e.dga->d(certificate);
    out.certificate = certificate;
    out.pure_base = false;
    out.base_part = p.coefficient;
    return out;
}

DefiningSystem constructive_massey_vanishing(const ExtensionDGA& e, const std::vector<CohomologyClass>& classes,
                                             const DefiningSystem& s) {
    const int t = static_cast<int>(classes.size());
    if (t < 4) throw PreconditionError("the construction concerns products of order m >= 4");
    const LefschetzContext ctx = require_lefschetz(e);
    if (s.order() != t) throw PreconditionError("defining system order does not match the classes");
    for (int i = 0; i < t; ++i)
        if (s.degrees[i] != classes[i].degree) throw DegreeMismatch("defining system degrees do not match the classes");
    if (auto bad = defining_system_residue(*e.dga, s))
        throw ValidationError("defining system violates the constraint at (" + std::to_string(std::get<0>(*bad)) +
                              "," + std::to_string(std::get<1>(*bad)) + "); residue " +
                              std::get<2>(*bad).to_string());

    int value_degree = 2 - t;
    for (const auto& c : classes) value_degree += c.degree;
    // Above the top degree 2n+1 every value vanishes; the input is already a witness.
    if (value_degree > 2 * ctx.n + 1) return s;

    std::optional<int> high;
    for (int i = 1; i <= t; ++i) {
        if (classes[i - 1].degree < ctx.n + 1) continue;
        if (high) throw PreconditionError("two classes of degree >= n+1; the degree count rules this out");
        high = i;
    }

    DefiningSystem w;
    w.degrees = s.degrees;
    const Element zero = ctx.alg.zero();
    for (int i = 1; i <= t; ++i) {
        const Element a = e.dga->import(s.at(i, i));
        if (high && *high == i) {
            const CohomologyClass c{classes[i - 1].degree, a, {}};
            w.at(i, i) = lefschetz_split(e, c).representative;
        } else {
            if (!split_parts(ctx.alg, a).coefficient.is_zero())
                throw Error("split impossible: low-degree representative has a y-part");
            w.at(i, i) = a;
        }
    }
    for (int i = 1; i < t; ++i) {
        if (high && (i == *high - 1 || i == *high)) {
            w.at(i, i + 1) = zero;
            continue;
        }
        w.at(i, i + 1) = split_parts(ctx.alg, e.dga->import(s.at(i, i + 1))).coefficient * ctx.y;
    }
    for (int level = 2; level <= t - 2; ++level)
        for (int i = 1; i + level <= t; ++i) w.at(i, i + level) = zero;

    if (high) {
        const int p = *high;
        const Element beta = split_parts(ctx.alg, w.at(p, p)).coefficient;
        if (p > 1 && !(w.at(p - 1, p - 1) * beta).is_zero())
            throw Error("internal: α_{t-1}·β_t is not zero");
        if (p < t && !(beta * w.at(p + 1, p + 1)).is_zero()) throw Error("internal: β_t·α_{t+1} is not zero");
    }
    if (auto bad = defining_system_residue(*e.dga, w))
        throw Error("internal: constructed system violates (" + std::to_string(std::get<0>(*bad)) + "," +
                    std::to_string(std::get<1>(*bad)) + ")");
    if (!defining_system_element(*e.dga, w).is_zero()) throw Error("internal: constructed value is not zero");
    return w;
}

AMasseyWitness constructive_amassey_vanishing(const ExtensionDGA& e, const CohomologyClass& a,
                                              const std::vector<CohomologyClass>& bs,
                                              const std::vector<Element>& primitives) {
    const std::size_t m = bs.size();
    if (m < 3) throw PreconditionError("a-Massey products need m >= 3");
    const LefschetzContext ctx = require_lefschetz(e);
    Cohomology h(e.dga);
    a_massey_value(h, a, bs, primitives);  // validates the primitives

    AMasseyWitness w;
    w.a = e.dga->import(a.representative);
    for (const auto& b : bs) w.bs.push_back(e.dga->import(b.representative));
    int value_degree = (static_cast<int>(m) - 1) * a.degree + 1 - static_cast<int>(m);
    for (const auto& b : bs) value_degree += b.degree;
    if (value_degree > 2 * ctx.n + 1) {
        w.primitives = primitives;
        return w;
    }

    std::optional<std::size_t> high;
    for (std::size_t i = 0; i < m; ++i) {
        if (bs[i].degree < ctx.n + 1) continue;
        if (high) throw PreconditionError("two classes b_i of degree >= n+1; the degree count rules this out");
        high = i;
    }

    if (a.degree >= ctx.n + 1) {
        // The value lies above the top degree 2n+1.
        w.primitives = primitives;
        return w;
    }
    if (!split_parts(ctx.alg, w.a).coefficient.is_zero())
        throw Error("split impossible: low-degree representative has a y-part");
    for (std::size_t i = 0; i < m; ++i) {
        if (high && *high == i) {
            const CohomologyClass c{bs[i].degree, w.bs[i], {}};
            w.bs[i] = lefschetz_split(e, c).representative;
            if (!(w.a * w.bs[i]).is_zero()) throw Error("internal: a·β_t is not zero");
            w.primitives.push_back(ctx.alg.zero());
        } else {
            if (!split_parts(ctx.alg, w.bs[i]).coefficient.is_zero())
                throw Error("split impossible: low-degree representative has a y-part");
            w.primitives.push_back(split_parts(ctx.alg, e.dga->import(primitives[i])).coefficient * ctx.y);
        }
    }
    std::vector<int> degrees;
    for (const auto& b : bs) degrees.push_back(b.degree);
    for (std::size_t i = 0; i < m; ++i)
        if (e.dga->d(w.primitives[i]) != w.a * w.bs[i]) throw Error("internal: constructed primitive is wrong");
    if (!a_massey_element(*e.dga, w.a, w.bs, w.primitives, a.degree, degrees).is_zero())
        throw Error("internal: constructed a-Massey value is not zero");
    return w;
}

SearchPolicy lefschetz_policy(const ExtensionDGA& e, SearchPolicy base) {
    base.lefschetz_system = [e](const Cohomology&, const std::vector<CohomologyClass>& classes,
                                const DefiningSystem& s) -> std::optional<DefiningSystem> {
        return constructive_massey_vanishing(e, classes, s);
    };
    base.lefschetz_primitives = [e](const Cohomology&, const CohomologyClass& a, const std::vector<CohomologyClass>& bs,
                                    const std::vector<Element>& primitives) -> std::optional<AMasseyWitness> {
        return constructive_amassey_vanishing(e, a, bs, primitives);
    };
    return base;
}

int cup_length(const Cohomology& h, int top) {
    std::map<int, std::vector<Element>> positive;
    for (int k = 1; k <= top; ++k) positive[k] = h.basis(k).representatives;
    std::map<int, std::vector<Element>> current = positive;
    int length = 0;
    for (;;) {
        bool nonzero = false;
        for (const auto& [k, reps] : current) nonzero = nonzero || !reps.empty();
        if (!nonzero) return length;
        ++length;
        std::map<int, std::vector<Element>> next;
        for (int k = 2; k <= top; ++k) {
            std::vector<Vector> coords;
            for (int j = 1; j < k; ++j) {
                auto it = current.find(k - j);
                if (it == current.end()) continue;
                for (const auto& x : positive[j])
                    for (const auto& y : it->second) coords.push_back(h.coordinates(x * y, k));
            }
            const Subspace span(h.betti(k), coords);
            for (const auto& v : span.basis()) next[k].push_back(h.from_coordinates(k, v).representative);
        }
        current = std::move(next);
    }
}

ObstructionReport obstruction_report(const ObstructionInput& input) {
    ObstructionReport out;
    DGAPtr model = input.model;
    if (input.betti) {
        if (input.betti->size() < 2) throw PreconditionError("the Betti list needs at least two entries");
        out.dimension = static_cast<int>(input.betti->size()) - 1;
        if (input.dimension && *input.dimension != out.dimension)
            throw PreconditionError("the Betti list has length " + std::to_string(input.betti->size()) +
                                    " but the dimension is " + std::to_string(*input.dimension));
    } else if (input.dimension) {
        out.dimension = *input.dimension;
    } else if (model && model->algebra().top_degree()) {
        out.dimension = *model->algebra().top_degree();
    } else {
        throw PreconditionError("a Betti list or a dimension is required");
    }
    if (out.dimension % 2 == 0 || out.dimension < 1)
        throw PreconditionError("Sasakian obstructions concern odd dimensions; got " + std::to_string(out.dimension));
    const int n = (out.dimension - 1) / 2;

    std::optional<Cohomology> h;
    if (model) {
        if (model->algebra().cap() < out.dimension + 1) model = model->with_cap(out.dimension + 1);
        h.emplace(model);
    }
    if (input.betti) {
        out.betti = *input.betti;
        if (h) {
            const auto computed = h->betti_numbers(0, out.dimension, input.threads);
            if (computed != out.betti) throw PreconditionError("the Betti list does not match the model");
        }
    } else if (h) {
        out.betti = h->betti_numbers(0, out.dimension, input.threads);
    }

    if (!out.betti.empty()) {
        ObstructionCheck parity{"betti-parity", true, ""};
        for (int p = 1; p <= n; p += 2) {
            if (out.betti[p] % 2 == 0) continue;
            parity.passed = false;
            parity.detail += (parity.detail.empty() ? "" : "; ") + std::string("b_") + std::to_string(p) + " = " +
                             std::to_string(out.betti[p]) + " is odd";
            out.reasons.push_back("b_" + std::to_string(p) + " is odd (betti-parity: b_p is even for odd p <= n)");
        }
        if (parity.passed) parity.detail = "b_p even for odd p <= " + std::to_string(n);
        out.checks.push_back(parity);

        ObstructionCheck basic{"basic-betti-recursion", true, ""};
        for (int r = 0; r <= n; ++r) {
            const std::size_t prev = r >= 2 ? out.basic_betti[r - 2] : 0;
            out.basic_betti.push_back(prev + out.betti[r]);
        }
        basic.detail = "b^B =";
        for (auto b : out.basic_betti) basic.detail += " " + std::to_string(b);
        out.checks.push_back(basic);
    }

    if (!h) return out;

    out.cup_length = cup_length(*h, out.dimension);
    ObstructionCheck cup{"cup-length", true, "cup = " + std::to_string(*out.cup_length)};
    if (*out.cup_length < 1 || *out.cup_length > 2 * n) {
        cup.passed = false;
        cup.detail += ", outside 1.." + std::to_string(2 * n);
        out.reasons.push_back("cup length " + std::to_string(*out.cup_length) + " is outside 1.." +
                              std::to_string(2 * n) + " (cup-length bound)");
    }
    out.checks.push_back(cup);

    std::vector<CohomologyClass> classes;
    for (int k = 1; k <= out.dimension; ++k)
        for (std::size_t i = 0; i < h->betti(k); ++i) classes.push_back(h->basis_class(k, i));
    const std::size_t c = classes.size();
    const std::size_t attempt_limit = input.max_instances * 16;

    // Triple products: informational only.
    std::size_t attempts = 0;
    for (std::size_t i = 0; i < c && attempts < attempt_limit; ++i)
        for (std::size_t j = 0; j < c && attempts < attempt_limit; ++j)
            for (std::size_t k = 0; k < c && attempts < attempt_limit; ++k) {
                if (classes[i].degree + classes[j].degree + classes[k].degree - 1 > out.dimension) continue;
                ++attempts;
                try {
                    const auto r = triple_massey(*h, classes[i], classes[j], classes[k]);
                    if (r.verdict == Verdict::nonzero_certified)
                        out.informational.push_back("triple Massey product " +
                                                    bracket_list({classes[i], classes[j], classes[k]}) +
                                                    " is nonzero (triple products are not an obstruction)");
                } catch (const NotDefined&) {
                } catch (const OutOfWindow&) {
                }
            }

    ObstructionCheck quad{"higher-massey", true, ""};
    attempts = 0;
    std::vector<std::size_t> idx(4, 0);
    for (std::size_t count = 0; c > 0 && count < c * c * c * c; ++count) {
        if (out.quadruple_tested >= input.max_instances || attempts >= attempt_limit) break;
        std::vector<CohomologyClass> cs;
        int sum = 0;
        for (auto q : idx) {
            cs.push_back(classes[q]);
            sum += classes[q].degree;
        }
        for (int q = 3; q >= 0; --q) {
            if (++idx[q] < c) break;
            idx[q] = 0;
        }
        if (sum - 2 > out.dimension) continue;
        ++attempts;
        try {
            const auto r = higher_massey_search(*h, cs, input.policy);
            ++out.quadruple_tested;
            if (r.verdict == Verdict::undecided) ++out.undecided;
            if (r.verdict == Verdict::nonzero_certified) {
                quad.passed = false;
                out.reasons.push_back("quadruple Massey product " + bracket_list(cs) +
                                      " is nonzero (higher-massey: higher Massey products vanish)");
            }
        } catch (const NotDefined&) {
        } catch (const OutOfWindow&) {
        }
    }
    quad.detail = std::to_string(out.quadruple_tested) + " defined quadruple products tested";
    out.checks.push_back(quad);

    ObstructionCheck amassey{"a-massey", true, ""};
    attempts = 0;
    for (std::size_t ai = 0; ai < c; ++ai) {
        if (classes[ai].degree % 2 != 0) continue;
        for (std::size_t count = 0; count < c * c * c; ++count) {
            if (out.amassey_tested >= input.max_instances || attempts >= attempt_limit) break;
            const std::size_t i = count / (c * c), j = (count / c) % c, k = count % c;
            const int degree = 2 * classes[ai].degree + classes[i].degree + classes[j].degree + classes[k].degree - 2;
            if (degree > out.dimension) continue;
            ++attempts;
            try {
                const std::vector<CohomologyClass> bs{classes[i], classes[j], classes[k]};
                const auto r = a_massey(*h, classes[ai], bs, input.policy);
                ++out.amassey_tested;
                if (r.verdict == Verdict::undecided) ++out.undecided;
                if (r.verdict == Verdict::nonzero_certified) {
                    amassey.passed = false;
                    out.reasons.push_back("a-Massey product <" + bracket(classes[ai]) + "; " +
                                          bracket_list(bs).substr(1) +
                                          " is nonzero (a-massey: a-Massey products vanish)");
                }
            } catch (const NotDefined&) {
            } catch (const OutOfWindow&) {
            }
        }
    }
    amassey.detail = std::to_string(out.amassey_tested) + " defined a-Massey products tested";
    out.checks.push_back(amassey);
    return out;
}

}  // namespace sullivan

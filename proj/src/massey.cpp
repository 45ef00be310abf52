#include "sullivan/massey.hpp"

#include "sullivan/errors.hpp"

#include <random>

namespace sullivan {

namespace {

Rational parity_sign(int degree) { return degree % 2 == 0 ? Rational(1) : Rational(-1); }

Vector concat(const std::vector<Vector>& parts) {
    Vector out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Vector difference(const Vector& a, const Vector& b) {
    Vector out = a;
    axpy(out, -1, b);
    return out;
}

std::size_t dim_of(const CohomologyClass& c) { return c.coordinates.size(); }

std::string describe(const std::vector<CohomologyClass>& classes, int i, int j) {
    std::string s = "<";
    for (int k = i; k <= j; ++k) {
        if (k > i) s += ", ";
        s += "[" + classes[k - 1].representative.to_string() + "]";
    }
    return s + ">";
}

void require_window(const Cohomology& h, int degree) {
    if (!h.computable(degree))
        throw OutOfWindow("degree " + std::to_string(degree) + " is outside the computable window (cap " +
                          std::to_string(h.algebra().cap()) + ")");
}

Element rhs(const DGA& dga, const DefiningSystem& s, int i, int j) {
    Element r = dga.algebra().zero();
    for (int k = i; k < j; ++k) r += s.at(i, k) * s.at(k + 1, j) * parity_sign(s.degree(i, k));
    return r;
}

}  // namespace

int DefiningSystem::degree(int i, int j) const {
    int sum = 0;
    for (int k = i; k <= j; ++k) sum += degrees.at(k - 1);
    return sum - (j - i);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::vanishes:
            return "vanishes";
        case Verdict::nonzero_certified:
            return "nonzero_certified";
        case Verdict::undecided:
            return "undecided";
    }
    return "undecided";
}

Element defining_system_element(const DGA& dga, const DefiningSystem& s) {
    const int t = s.order();
    Element v = dga.algebra().zero();
    for (int k = 1; k < t; ++k) v += dga.import(s.at(1, k)) * dga.import(s.at(k + 1, t)) * parity_sign(s.degree(1, k));
    return v;
}

std::optional<std::tuple<int, int, Element>> defining_system_residue(const DGA& dga, const DefiningSystem& s) {
    const int t = s.order();
    if (t < 3) throw PreconditionError("a defining system needs at least three classes");
    DefiningSystem local;
    local.degrees = s.degrees;
    for (int level = 0; level <= t - 2; ++level) {
        for (int i = 1; i + level <= t; ++i) {
            const int j = i + level;
            auto it = s.entries.find({i, j});
            if (it == s.entries.end())
                throw PreconditionError("defining system is missing entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
            local.at(i, j) = dga.import(it->second);
            const Element& e = local.at(i, j);
            if (!e.is_zero() && e.degree() != s.degree(i, j))
                return std::make_tuple(i, j, e);
            Element residue = dga.d(e) - (i == j ? dga.algebra().zero() : rhs(dga, local, i, j));
            if (!residue.is_zero()) return std::make_tuple(i, j, residue);
        }
    }
    return std::nullopt;
}

CohomologyClass defining_system_value(const Cohomology& h, const DefiningSystem& s) {
    if (auto bad = defining_system_residue(h.dga(), s)) {
        const auto& [i, j, residue] = *bad;
        throw ValidationError("constraint at (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is violated; residue " + residue.to_string());
    }
    const int degree = s.degree(1, s.order()) + 1;
    require_window(h, degree);
    return h.class_of(defining_system_element(h.dga(), s), degree);
}

MasseyResult triple_massey(const Cohomology& h, const CohomologyClass& c1, const CohomologyClass& c2,
                           const CohomologyClass& c3) {
    const DGA& dga = h.dga();
    const int p1 = c1.degree, p2 = c2.degree, p3 = c3.degree;
    const int degree = p1 + p2 + p3 - 1;
    require_window(h, degree);
    const Element r1 = dga.import(c1.representative), r2 = dga.import(c2.representative),
                  r3 = dga.import(c3.representative);
    const std::vector<CohomologyClass> classes{c1, c2, c3};
    auto w12 = h.primitive(r1 * r2, p1 + p2);
    if (!w12) throw NotDefined("triple Massey product is not defined", describe(classes, 1, 2) + " is not exact");
    auto w23 = h.primitive(r2 * r3, p2 + p3);
    if (!w23) throw NotDefined("triple Massey product is not defined", describe(classes, 2, 3) + " is not exact");

    const Rational s1 = parity_sign(p1 + 1);
    Element rep = r1 * *w23 + *w12 * r3 * s1;

    MasseyResult out;
    out.kind = "triple";
    out.order = 3;
    out.degree = degree;
    out.value = h.class_of(rep, degree);

    const auto& h23 = h.basis(p2 + p3 - 1).representatives;
    const auto& h12 = h.basis(p1 + p2 - 1).representatives;
    std::vector<Vector> columns;
    for (const auto& z : h23) columns.push_back(h.coordinates(r1 * z, degree));
    for (const auto& z : h12) columns.push_back(h.coordinates(z * r3 * s1, degree));
    out.indeterminacy = Subspace(dim_of(out.value), columns).basis();
    const std::size_t dim = out.value.coordinates.size();

    Vector target = out.value.coordinates;
    for (auto& x : target) x = -x;
    if (auto c = combination(columns, target, dim)) {
        Element a23 = *w23, a12 = *w12;
        for (std::size_t k = 0; k < h23.size(); ++k) a23 += h23[k] * (*c)[k];
        for (std::size_t k = 0; k < h12.size(); ++k) a12 += h12[k] * (*c)[h23.size() + k];
        DefiningSystem s;
        s.degrees = {p1, p2, p3};
        s.at(1, 1) = r1;
        s.at(2, 2) = r2;
        s.at(3, 3) = r3;
        s.at(1, 2) = a12 * parity_sign(p1);
        s.at(2, 3) = a23 * parity_sign(p2);
        if (!defining_system_value(h, s).is_zero()) throw Error("internal: triple Massey witness does not vanish");
        out.verdict = Verdict::vanishes;
        out.witness = s;
        out.method = "affine";
    } else {
        out.verdict = Verdict::nonzero_certified;
        out.certificate = separating_functional(columns, out.value.coordinates, dim);
        out.method = "affine";
    }
    return out;
}

namespace {

// Defining systems for <a_1, ..., a_t>, t >= 4, built level by level. At each
// level the entries are particular primitives shifted by cohomology class
// representatives; the shifts must kill the classes of the next level's
// right-hand sides, which is an affine condition with a constant matrix.
class HigherSearch {
public:
    HigherSearch(const Cohomology& h, const std::vector<CohomologyClass>& classes, const SearchPolicy& policy)
        : h_(h), dga_(h.dga()), classes_(classes), policy_(policy), t_(static_cast<int>(classes.size())) {
        for (const auto& c : classes) degrees_.push_back(c.degree);
        proto_.degrees = degrees_;
        for (int i = 1; i <= t_; ++i) proto_.at(i, i) = dga_.import(classes[i - 1].representative);
        value_degree_ = proto_.degree(1, t_) + 1;
        for (int level = 1; level <= t_ - 2; ++level)
            for (int i = 1; i + level <= t_; ++i) {
                require_window(h_, proto_.degree(i, i + level));
                require_window(h_, proto_.degree(i, i + level) + 1);
            }
        require_window(h_, value_degree_);
        value_dim_ = h_.betti(value_degree_);
        for (int level = 1; level <= t_ - 3; ++level) levels_.push_back(make_level(level));
        for (const auto& z : reps(2, t_)) top_columns_.push_back(h_.coordinates(proto_.at(1, 1) * z * parity_sign(degrees_[0]), value_degree_));
        for (const auto& z : reps(1, t_ - 1))
            top_columns_.push_back(h_.coordinates(z * proto_.at(t_, t_) * parity_sign(proto_.degree(1, t_ - 1)), value_degree_));
        top_space_ = Subspace(value_dim_, top_columns_);
        for (const auto& lv : levels_) free_dims_.push_back(lv.kernel.size());
    }

    std::optional<DefiningSystem> first_system() {
        Outcome o = build(std::vector<Rational>(total_free()));
        if (o.feasible) return o.system;
        if (o.certified) throw NotDefined("higher Massey product is not defined", o.obstruction);
        std::mt19937_64 rng(policy_.seed);
        for (int s = 0; s < policy_.samples; ++s) {
            o = build(random_point(rng));
            if (o.feasible) return o.system;
        }
        return std::nullopt;
    }

    MasseyResult run() {
        MasseyResult out;
        out.kind = "higher";
        out.order = t_;
        out.degree = value_degree_;
        out.indeterminacy = top_space_.basis();

        const std::size_t r = total_free();
        Outcome base = build(std::vector<Rational>(r));
        if (!base.feasible) {
            if (base.certified) throw NotDefined("higher Massey product is not defined", base.obstruction);
            std::mt19937_64 rng(policy_.seed);
            for (int s = 0; s < policy_.samples && !base.feasible; ++s) base = build(random_point(rng));
            if (!base.feasible) {
                out.verdict = Verdict::undecided;
                out.method = "no-defining-system-found";
                return out;
            }
        }
        out.value = base.value;

        if (base.value.representative.is_zero() || is_zero(base.projected)) {
            finish_vanishing(out, base, "direct");
            return out;
        }

        if (policy_.accept_lefschetz && policy_.lefschetz_system) {
            std::optional<DefiningSystem> w;
            bool accepted = false;
            try {
                w = policy_.lefschetz_system(h_, classes_, base.system);
                accepted = w && same_classes(*w) && defining_system_value(h_, *w).is_zero();
            } catch (const Error&) {
                accepted = false;
            }
            if (accepted) {
                out.verdict = Verdict::vanishes;
                out.witness = *w;
                out.method = "lefschetz";
                return out;
            }
        }

        if (regular() && base.point == std::vector<Rational>(r)) {
            const int degree_bound = t_ - 2;
            if (auto affine = affine_on_grid(std::vector<Rational>(r), all_coordinates(), degree_bound)) {
                const auto& [p0, directions] = *affine;
                Vector target = p0;
                for (auto& x : target) x = -x;
                std::vector<Vector> span = top_columns_;
                for (const auto& e : directions) span.push_back(e);
                out.indeterminacy = Subspace(value_dim_, span).basis();
                if (auto u = combination(directions, target, value_dim_)) {
                    Outcome w = build(*u);
                    if (w.feasible && is_zero(w.projected)) {
                        finish_vanishing(out, w, "regular-tower");
                        return out;
                    }
                }
                out.verdict = Verdict::nonzero_certified;
                out.certificate = separating_functional(span, base.value.coordinates, value_dim_);
                out.method = "regular-tower";
                return out;
            }
        }

        std::mt19937_64 rng(policy_.seed);
        for (int sweep = 0; sweep < policy_.sweeps; ++sweep) {
            std::vector<Rational> origin = sweep == 0 ? base.point : random_point(rng);
            std::size_t offset = 0;
            for (std::size_t b = 0; b < free_dims_.size(); ++b) {
                std::vector<std::size_t> coords;
                for (std::size_t k = 0; k < free_dims_[b]; ++k) coords.push_back(offset + k);
                offset += free_dims_[b];
                if (coords.empty()) continue;
                if (auto w = sweep_block(origin, coords)) {
                    finish_vanishing(out, *w, "block-sweep");
                    return out;
                }
            }
        }
        for (int s = 0; s < policy_.samples; ++s) {
            Outcome o = build(random_point(rng));
            if (!o.feasible) continue;
            out.samples.push_back(o.value);
            if (is_zero(o.projected)) {
                finish_vanishing(out, o, "sample");
                return out;
            }
        }
        out.verdict = Verdict::undecided;
        out.method = "search-exhausted";
        return out;
    }

private:
    struct Level {
        int level = 0;
        std::vector<std::pair<int, int>> entries;       // entries of this level
        std::vector<std::pair<int, int>> next_entries;  // entries of the next level
        std::vector<std::size_t> next_offsets;
        std::size_t rows = 0;
        LinearSolver solver;
        std::vector<Vector> kernel;
        bool surjective = false;
    };

    struct Outcome {
        bool feasible = false;
        bool certified = false;
        std::string obstruction;
        std::vector<Rational> point;
        DefiningSystem system;
        CohomologyClass value;
        Vector projected;
    };

    bool same_classes(const DefiningSystem& s) const {
        if (s.degrees != degrees_) return false;
        for (int i = 1; i <= t_; ++i) {
            auto it = s.entries.find({i, i});
            if (it == s.entries.end()) return false;
            if (h_.coordinates(dga_.import(it->second), degrees_[i - 1]) != classes_[i - 1].coordinates) return false;
        }
        return true;
    }

    const std::vector<Element>& reps(int i, int j) const { return h_.basis(proto_.degree(i, j)).representatives; }

    Level make_level(int level) {
        Level lv;
        lv.level = level;
        for (int i = 1; i + level <= t_; ++i) lv.entries.push_back({i, i + level});
        for (int i = 1; i + level + 1 <= t_; ++i) {
            if (i == 1 && i + level + 1 == t_) continue;
            lv.next_entries.push_back({i, i + level + 1});
            lv.next_offsets.push_back(lv.rows);
            lv.rows += h_.betti(proto_.degree(i, i + level + 1) + 1);
        }
        std::vector<Vector> columns;
        for (const auto& [i, j] : lv.entries) {
            for (const auto& z : reps(i, j)) {
                Vector col(lv.rows);
                for (std::size_t n = 0; n < lv.next_entries.size(); ++n) {
                    const auto [ni, nj] = lv.next_entries[n];
                    const int rdeg = proto_.degree(ni, nj) + 1;
                    Element contribution = dga_.algebra().zero();
                    if (ni == i - 1 && nj == j) contribution += proto_.at(ni, ni) * z * parity_sign(degrees_[ni - 1]);
                    if (ni == i && nj == j + 1) contribution += z * proto_.at(nj, nj) * parity_sign(proto_.degree(i, j));
                    if (contribution.is_zero()) continue;
                    const Vector coords = h_.coordinates(contribution, rdeg);
                    for (std::size_t q = 0; q < coords.size(); ++q) col[lv.next_offsets[n] + q] = coords[q];
                }
                columns.push_back(col);
            }
        }
        const Matrix m = Matrix::from_columns(columns, lv.rows);
        lv.solver = LinearSolver(m);
        lv.kernel = nullspace(m);
        lv.surjective = lv.solver.rank() == lv.rows;
        return lv;
    }

    std::size_t total_free() const {
        std::size_t r = 0;
        for (auto f : free_dims_) r += f;
        return r;
    }

    bool regular() const {
        std::size_t lower = 0;
        for (std::size_t l = 0; l < levels_.size(); ++l) {
            if (!levels_[l].surjective && lower != 0) return false;
            lower += free_dims_[l];
        }
        return true;
    }

    std::vector<std::size_t> all_coordinates() const {
        std::vector<std::size_t> c(total_free());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
        return c;
    }

    std::vector<Rational> random_point(std::mt19937_64& rng) const {
        std::uniform_int_distribution<int> dist(-3, 3);
        std::vector<Rational> u(total_free());
        for (auto& x : u) x = dist(rng);
        return u;
    }

    Outcome build(const std::vector<Rational>& point) const {
        Outcome o;
        o.point = point;
        DefiningSystem s = proto_;
        std::size_t lower_free = 0;
        std::size_t offset = 0;
        for (int level = 1; level <= t_ - 2; ++level) {
            for (int i = 1; i + level <= t_; ++i) {
                const int j = i + level;
                const Element r = rhs(dga_, s, i, j);
                auto w = h_.primitive(r, proto_.degree(i, j) + 1);
                if (!w) {
                    o.certified = lower_free == 0;
                    o.obstruction = "the right-hand side for entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") of " + describe(classes_, i, j) + " is the nonzero class of " + r.to_string();
                    return o;
                }
                s.at(i, j) = *w;
            }
            if (level == t_ - 2) break;
            const Level& lv = levels_[level - 1];
            std::vector<Vector> parts;
            for (const auto& [ni, nj] : lv.next_entries)
                parts.push_back(h_.coordinates(rhs(dga_, s, ni, nj), proto_.degree(ni, nj) + 1));
            Vector c0 = concat(parts);
            for (auto& x : c0) x = -x;
            auto z = lv.solver.solve(c0);
            if (!z) {
                o.certified = lower_free == 0;
                o.obstruction = "no choice of level-" + std::to_string(level) +
                                " entries makes the level-" + std::to_string(level + 1) + " right-hand sides exact";
                return o;
            }
            for (std::size_t k = 0; k < lv.kernel.size(); ++k) axpy(*z, point[offset + k], lv.kernel[k]);
            offset += lv.kernel.size();
            lower_free += lv.kernel.size();
            std::size_t col = 0;
            for (const auto& [i, j] : lv.entries)
                for (const auto& rep : reps(i, j)) s.at(i, j) += rep * (*z)[col++];
        }
        o.feasible = true;
        o.system = s;
        o.value = h_.class_of(defining_system_element(dga_, s), value_degree_);
        o.projected = top_space_.reduce(o.value.coordinates);
        return o;
    }

    // Checks whether the projected value is affine in the given coordinates
    // around `origin` on the grid {0..bound}^n; returns the value at the
    // origin and the direction vectors when it is.
    std::optional<std::pair<Vector, std::vector<Vector>>> affine_on_grid(const std::vector<Rational>& origin,
                                                                         const std::vector<std::size_t>& coords,
                                                                         int bound) const {
        const std::size_t n = coords.size();
        std::size_t points = 1;
        for (std::size_t i = 0; i < n; ++i) {
            points *= static_cast<std::size_t>(bound + 1);
            if (points > policy_.grid_budget) return std::nullopt;
        }
        Outcome o0 = build(origin);
        if (!o0.feasible) return std::nullopt;
        std::vector<Vector> directions;
        for (std::size_t i = 0; i < n; ++i) {
            auto u = origin;
            u[coords[i]] += 1;
            Outcome oi = build(u);
            if (!oi.feasible) return std::nullopt;
            directions.push_back(difference(oi.projected, o0.projected));
        }
        std::vector<int> g(n, 0);
        for (std::size_t count = 0; count < points; ++count) {
            auto u = origin;
            Vector expected = o0.projected;
            for (std::size_t i = 0; i < n; ++i) {
                u[coords[i]] += g[i];
                axpy(expected, g[i], directions[i]);
            }
            Outcome o = build(u);
            if (!o.feasible || o.projected != expected) return std::nullopt;
            for (std::size_t i = 0; i < n; ++i) {
                if (++g[i] <= bound) break;
                g[i] = 0;
            }
        }
        return std::make_pair(o0.projected, directions);
    }

    std::optional<Outcome> sweep_block(const std::vector<Rational>& origin, const std::vector<std::size_t>& coords) const {
        const int bound = t_ - 2;
        if (auto affine = affine_on_grid(origin, coords, bound)) {
            const auto& [p0, directions] = *affine;
            Vector target = p0;
            for (auto& x : target) x = -x;
            if (auto c = combination(directions, target, value_dim_)) {
                auto u = origin;
                for (std::size_t i = 0; i < coords.size(); ++i) u[coords[i]] += (*c)[i];
                Outcome o = build(u);
                if (o.feasible && is_zero(o.projected)) return o;
            }
            return std::nullopt;
        }
        std::size_t points = 1;
        for (std::size_t i = 0; i < coords.size() && points <= policy_.grid_budget; ++i)
            points *= static_cast<std::size_t>(bound + 1);
        if (points > policy_.grid_budget) return std::nullopt;
        std::vector<int> g(coords.size(), 0);
        for (std::size_t count = 0; count < points; ++count) {
            auto u = origin;
            for (std::size_t i = 0; i < coords.size(); ++i) u[coords[i]] += g[i];
            Outcome o = build(u);
            if (o.feasible && is_zero(o.projected)) return o;
            for (std::size_t i = 0; i < coords.size(); ++i) {
                if (++g[i] <= bound) break;
                g[i] = 0;
            }
        }
        return std::nullopt;
    }

    // Adjusts the top-level entries so that the value becomes exact.
    void finish_vanishing(MasseyResult& out, const Outcome& o, const std::string& method) const {
        DefiningSystem s = o.system;
        Vector target = o.value.coordinates;
        for (auto& x : target) x = -x;
        auto c = combination(top_columns_, target, value_dim_);
        if (!c) throw Error("internal: value is not in the top-level variation");
        const auto& r2 = reps(2, t_);
        const auto& r1 = reps(1, t_ - 1);
        for (std::size_t k = 0; k < r2.size(); ++k) s.at(2, t_) += r2[k] * (*c)[k];
        for (std::size_t k = 0; k < r1.size(); ++k) s.at(1, t_ - 1) += r1[k] * (*c)[r2.size() + k];
        if (!defining_system_value(h_, s).is_zero()) throw Error("internal: higher Massey witness does not vanish");
        out.verdict = Verdict::vanishes;
        out.witness = s;
        out.method = method;
    }

    const Cohomology& h_;
    const DGA& dga_;
    std::vector<CohomologyClass> classes_;
    const SearchPolicy& policy_;
    int t_;
    std::vector<int> degrees_;
    DefiningSystem proto_;
    int value_degree_ = 0;
    std::size_t value_dim_ = 0;
    std::vector<Level> levels_;
    std::vector<std::size_t> free_dims_;
    std::vector<Vector> top_columns_;
    Subspace top_space_;
};

}  // namespace

MasseyResult higher_massey_search(const Cohomology& h, const std::vector<CohomologyClass>& classes,
                                  const SearchPolicy& policy) {
    if (classes.size() == 3) throw PreconditionError("use triple_massey for three classes");
    if (classes.size() < 4) throw PreconditionError("higher Massey products need at least four classes");
    return HigherSearch(h, classes, policy).run();
}

std::optional<DefiningSystem> construct_defining_system(const Cohomology& h, const std::vector<CohomologyClass>& classes,
                                                      const SearchPolicy& policy) {
    if (classes.size() < 4) throw PreconditionError("defining systems are searched for four or more classes");
    return HigherSearch(h, classes, policy).first_system();
}

Element a_massey_element(const DGA& dga, const Element& a, const std::vector<Element>& bs,
                         const std::vector<Element>& primitives, int a_degree, const std::vector<int>& b_degrees) {
    const std::size_t m = bs.size();
    (void)a;
    Element total = dga.algebra().zero();
    int prefix = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Element term = dga.algebra().one();
        for (std::size_t j = 0; j < m; ++j) term = term * dga.import(j == i ? bs[j] : primitives[j]);
        total += term * parity_sign(prefix);
        prefix += a_degree + b_degrees[i] - 1;
    }
    return total;
}

CohomologyClass a_massey_value(const Cohomology& h, const CohomologyClass& a, const std::vector<CohomologyClass>& bs,
                               const std::vector<Element>& primitives) {
    const DGA& dga = h.dga();
    if (a.degree % 2 != 0) throw PreconditionError("the class a must have even degree");
    if (primitives.size() != bs.size()) throw PreconditionError("one primitive per class is required");
    std::vector<Element> reps;
    std::vector<int> degrees;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        reps.push_back(dga.import(bs[i].representative));
        degrees.push_back(bs[i].degree);
        const Element residue = dga.d(dga.import(primitives[i])) - dga.import(a.representative) * reps.back();
        if (!residue.is_zero())
            throw ValidationError("primitive " + std::to_string(i + 1) + " fails d(xi) = a*b; residue " +
                                  residue.to_string());
    }
    int degree = (static_cast<int>(bs.size()) - 1) * a.degree - static_cast<int>(bs.size()) + 1;
    for (int d : degrees) degree += d;
    require_window(h, degree);
    const Element v = a_massey_element(dga, a.representative, reps, primitives, a.degree, degrees);
    if (!v.is_zero() && v.degree() != degree) throw Error("internal: a-Massey value has the wrong degree");
    return h.class_of(v, degree);
}

MasseyResult a_massey(const Cohomology& h, const CohomologyClass& a, const std::vector<CohomologyClass>& bs,
                      const SearchPolicy& policy) {
    const DGA& dga = h.dga();
    if (a.degree % 2 != 0) throw PreconditionError("the class a must have even degree");
    const std::size_t m = bs.size();
    if (m < 3) throw PreconditionError("a-Massey products need at least three classes b_i");
    const Element ra = dga.import(a.representative);
    std::vector<Element> rb;
    std::vector<int> bdeg;
    std::vector<int> qdeg;
    for (const auto& b : bs) {
        rb.push_back(dga.import(b.representative));
        bdeg.push_back(b.degree);
        qdeg.push_back(a.degree + b.degree - 1);
    }
    int degree = (static_cast<int>(m) - 1) * a.degree - static_cast<int>(m) + 1;
    for (int d : bdeg) degree += d;
    require_window(h, degree);
    for (std::size_t i = 0; i < m; ++i) {
        require_window(h, qdeg[i]);
        require_window(h, qdeg[i] + 1);
    }

    std::vector<Element> base;
    for (std::size_t i = 0; i < m; ++i) {
        auto w = h.primitive(ra * rb[i], qdeg[i] + 1);
        if (!w)
            throw NotDefined("a-Massey product is not defined",
                             "[a]*[b_" + std::to_string(i + 1) + "] is the nonzero class of " + (ra * rb[i]).to_string());
        base.push_back(*w);
    }
    std::vector<std::vector<Element>> blocks;
    for (std::size_t i = 0; i < m; ++i) blocks.push_back(h.basis(qdeg[i]).representatives);
    const std::size_t dim = h.betti(degree);

    auto value_of = [&](const std::vector<Element>& xi) {
        return h.coordinates(a_massey_element(dga, ra, rb, xi, a.degree, bdeg), degree);
    };
    // Sum of the terms not indexed by S, with xi_j replaced by `subs[j]` for j in S.
    auto component = [&](const std::vector<int>& in_s, const std::vector<Element>& xi) {
        Element total = dga.algebra().zero();
        int prefix = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!in_s[i]) {
                Element term = dga.algebra().one();
                for (std::size_t j = 0; j < m; ++j) term = term * (j == i ? rb[j] : xi[j]);
                total += term * parity_sign(prefix);
            }
            prefix += qdeg[i];
        }
        return total;
    };

    MasseyResult out;
    out.kind = "a-massey";
    out.order = static_cast<int>(m);
    out.degree = degree;
    out.value = h.class_of(a_massey_element(dga, ra, rb, base, a.degree, bdeg), degree);

    std::vector<Vector> linear;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<int> in_s(m, 0);
        in_s[j] = 1;
        for (const auto& z : blocks[j]) {
            auto xi = base;
            xi[j] = z;
            linear.push_back(h.coordinates(component(in_s, xi), degree));
        }
    }
    out.indeterminacy = Subspace(dim, linear).basis();

    auto witness_from = [&](const std::vector<Element>& xi, const std::string& method) {
        if (!a_massey_value(h, a, bs, xi).is_zero()) throw Error("internal: a-Massey witness does not vanish");
        out.verdict = Verdict::vanishes;
        out.amassey_witness = AMasseyWitness{ra, rb, xi};
        out.method = method;
    };

    if (out.value.is_zero()) {
        witness_from(base, "direct");
        return out;
    }

    if (policy.accept_lefschetz && policy.lefschetz_primitives) {
        std::optional<AMasseyWitness> w;
        bool accepted = false;
        try {
            w = policy.lefschetz_primitives(h, a, bs, base);
            if (w && w->bs.size() == m && w->primitives.size() == m) {
                std::vector<CohomologyClass> wb;
                for (std::size_t i = 0; i < m; ++i) wb.push_back({bs[i].degree, w->bs[i], bs[i].coordinates});
                CohomologyClass wa{a.degree, w->a, a.coordinates};
                accepted = h.coordinates(dga.import(w->a), a.degree) == a.coordinates;
                for (std::size_t i = 0; i < m && accepted; ++i)
                    accepted = h.coordinates(dga.import(w->bs[i]), bs[i].degree) == bs[i].coordinates;
                accepted = accepted && a_massey_value(h, wa, wb, w->primitives).is_zero();
            }
        } catch (const Error&) {
            accepted = false;
        }
        if (accepted) {
            out.verdict = Verdict::vanishes;
            out.amassey_witness = *w;
            out.method = "lefschetz";
            return out;
        }
    }

    // Higher components: products of two or more shifts.
    std::size_t cost = 0;
    bool affine = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m) && affine; ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        std::size_t tuples = 1;
        for (std::size_t j = 0; j < m; ++j)
            if (mask >> j & 1) tuples *= blocks[j].size();
        cost += tuples;
        if (cost > policy.grid_budget) {
            affine = false;
            break;
        }
        std::vector<int> in_s(m, 0);
        std::vector<std::size_t> members;
        for (std::size_t j = 0; j < m; ++j)
            if (mask >> j & 1) {
                in_s[j] = 1;
                members.push_back(j);
            }
        std::vector<std::size_t> idx(members.size(), 0);
        for (std::size_t count = 0; count < tuples && affine; ++count) {
            auto xi = base;
            for (std::size_t q = 0; q < members.size(); ++q) xi[members[q]] = blocks[members[q]][idx[q]];
            if (!is_zero(h.coordinates(component(in_s, xi), degree))) affine = false;
            for (std::size_t q = 0; q < members.size(); ++q) {
                if (++idx[q] < blocks[members[q]].size()) break;
                idx[q] = 0;
            }
        }
    }

    auto solve_shift = [&](const std::vector<Element>& origin, const std::vector<std::size_t>& which)
        -> std::optional<std::vector<Element>> {
        const Vector v0 = value_of(origin);
        std::vector<Vector> cols;
        std::vector<std::pair<std::size_t, std::size_t>> labels;
        for (std::size_t j : which) {
            for (std::size_t k = 0; k < blocks[j].size(); ++k) {
                auto xi = origin;
                xi[j] += blocks[j][k];
                cols.push_back(difference(value_of(xi), v0));
                labels.push_back({j, k});
            }
        }
        Vector target = v0;
        for (auto& x : target) x = -x;
        auto c = combination(cols, target, dim);
        if (!c) return std::nullopt;
        auto xi = origin;
        for (std::size_t q = 0; q < labels.size(); ++q) xi[labels[q].first] += blocks[labels[q].first][labels[q].second] * (*c)[q];
        return xi;
    };

    if (affine) {
        std::vector<std::size_t> all(m);
        for (std::size_t j = 0; j < m; ++j) all[j] = j;
        Vector target = out.value.coordinates;
        for (auto& x : target) x = -x;
        if (combination(linear, target, dim)) {
            if (auto xi = solve_shift(base, all)) {
                witness_from(*xi, "affine");
                return out;
            }
        }
        out.verdict = Verdict::nonzero_certified;
        out.certificate = separating_functional(linear, out.value.coordinates, dim);
        out.method = "affine";
        return out;
    }

    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    auto random_shift = [&]() {
        auto xi = base;
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& z : blocks[j]) xi[j] += z * Rational(dist(rng));
        return xi;
    };
    for (int sweep = 0; sweep < policy.sweeps; ++sweep) {
        auto origin = sweep == 0 ? base : random_shift();
        for (std::size_t j = 0; j < m; ++j) {
            if (blocks[j].empty()) continue;
            if (auto xi = solve_shift(origin, {j})) {
                witness_from(*xi, "block-sweep");
                return out;
            }
        }
    }
    for (int s = 0; s < policy.samples; ++s) {
        auto xi = random_shift();
        const Vector v = value_of(xi);
        out.samples.push_back(h.from_coordinates(degree, v));
        if (is_zero(v)) {
            witness_from(xi, "sample");
            return out;
        }
    }
    out.verdict = Verdict::undecided;
    out.method = "search-exhausted";
    return out;
}

}  // namespace sullivan

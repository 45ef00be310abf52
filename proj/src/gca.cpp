#include "sullivan/gca.hpp"

#include "sullivan/errors.hpp"

#include <algorithm>
#include <set>

namespace sullivan {

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.ring != b.ring) return a.ring < b.ring;
    return a.exponents > b.exponents;
}

bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.ring == b.ring && a.exponents == b.exponents;
}

AlgebraPtr GradedAlgebra::create(RingPtr ring, const std::vector<std::pair<std::string, int>>& generators,
                                 std::optional<int> cap) {
    if (!ring) ring = FiniteGradedRing::trivial();
    std::shared_ptr<GradedAlgebra> a(new GradedAlgebra());
    a->ring_ = ring;
    std::set<std::string> names;
    for (const auto& [sym, idx] : ring->symbols()) names.insert(sym);
    int max_degree = ring->top_degree();
    bool all_odd = true;
    int odd_sum = 0;
    for (const auto& [name, degree] : generators) {
        if (degree < 1) throw PreconditionError("generator '" + name + "' has degree " + std::to_string(degree) + " < 1");
        if (!names.insert(name).second) throw PreconditionError("duplicate generator name '" + name + "'");
        a->generators_.push_back({name, degree, a->generators_.size()});
        max_degree = std::max(max_degree, degree);
        if (degree % 2 == 0)
            all_odd = false;
        else
            odd_sum += degree;
    }
    if (all_odd) a->top_ = ring->top_degree() + odd_sum;
    if (cap) {
        int max_gen = 0;
        for (const auto& g : a->generators_) max_gen = std::max(max_gen, g.degree);
        if (*cap < max_gen)
            throw PreconditionError("cap " + std::to_string(*cap) + " is below the largest generator degree " +
                                    std::to_string(max_gen));
        a->cap_ = *cap;
    } else {
        if (!a->top_) throw PreconditionError("a cap is required for an infinite-dimensional algebra");
        a->cap_ = *a->top_ + 1;
    }
    a->build_bases();
    return a;
}

AlgebraPtr make_free_gca(const std::vector<std::pair<std::string, int>>& generators, int cap) {
    if (generators.empty()) throw PreconditionError("a free algebra needs at least one generator");
    return GradedAlgebra::create(nullptr, generators, cap);
}

AlgebraPtr GradedAlgebra::with_cap(int cap) const {
    std::vector<std::pair<std::string, int>> gens;
    for (const auto& g : generators_) gens.emplace_back(g.name, g.degree);
    return create(ring_, gens, cap);
}

std::vector<int> GradedAlgebra::generator_degrees() const {
    std::vector<int> d;
    for (const auto& g : generators_) d.push_back(g.degree);
    return d;
}

std::optional<std::size_t> GradedAlgebra::generator_index(const std::string& name) const {
    for (const auto& g : generators_)
        if (g.name == name) return g.index;
    return std::nullopt;
}

void GradedAlgebra::build_bases() {
    const int limit = top_ ? std::min(cap_, *top_) : cap_;
    bases_.assign(limit + 1, {});
    positions_.assign(limit + 1, {});
    const std::size_t g = generators_.size();
    std::vector<int> current(g, 0);
    for (int k = 0; k <= limit; ++k) {
        for (std::size_t r = 0; r < ring_->size(); ++r) {
            const int rest = k - ring_->degree(r);
            if (rest < 0) continue;
            auto enumerate = [&](auto&& self, std::size_t pos, int remaining) -> void {
                if (pos == g) {
                    if (remaining == 0) bases_[k].push_back({k, r, current});
                    return;
                }
                const int d = generators_[pos].degree;
                const int max_e = d % 2 == 0 ? remaining / d : std::min(1, remaining / d);
                for (int e = max_e; e >= 0; --e) {
                    current[pos] = e;
                    self(self, pos + 1, remaining - e * d);
                }
                current[pos] = 0;
            };
            enumerate(enumerate, 0, rest);
        }
        for (std::size_t i = 0; i < bases_[k].size(); ++i) positions_[k][bases_[k][i]] = i;
    }
}

const std::vector<Monomial>& GradedAlgebra::basis(int k) const {
    static const std::vector<Monomial> empty;
    if (k < 0) return empty;
    if (!in_window(k))
        throw OutOfWindow("degree " + std::to_string(k) + " is above the cap " + std::to_string(cap_));
    if (k >= static_cast<int>(bases_.size())) return empty;
    return bases_[k];
}

std::size_t GradedAlgebra::index_of(const Monomial& m) const {
    if (m.degree < 0 || m.degree >= static_cast<int>(positions_.size()))
        throw OutOfWindow("monomial degree " + std::to_string(m.degree) + " outside the computed range");
    auto it = positions_[m.degree].find(m);
    if (it == positions_[m.degree].end()) throw PreconditionError("monomial is not a basis element");
    return it->second;
}

Element GradedAlgebra::zero() const { return Element(self()); }

Element GradedAlgebra::one() const {
    Element e(self());
    e.add_term({0, 0, std::vector<int>(generators_.size(), 0)}, 1);
    return e;
}

Element GradedAlgebra::generator(std::size_t index) const {
    Monomial m{generators_.at(index).degree, 0, std::vector<int>(generators_.size(), 0)};
    m.exponents[index] = 1;
    Element e(self());
    e.add_term(m, 1);
    return e;
}

Element GradedAlgebra::ring_element(std::size_t index) const {
    Element e(self());
    e.add_term({ring_->degree(index), index, std::vector<int>(generators_.size(), 0)}, 1);
    return e;
}

Element GradedAlgebra::monomial(const Monomial& m) const {
    Element e(self());
    e.add_term(m, 1);
    return e;
}

std::optional<Element> GradedAlgebra::symbol(const std::string& name) const {
    if (auto i = generator_index(name)) return generator(*i);
    auto it = ring_->symbols().find(name);
    if (it == ring_->symbols().end()) return std::nullopt;
    if (!it->second) return zero();
    return ring_element(*it->second);
}

Element GradedAlgebra::from_vector(int k, const Vector& v) const {
    const auto& b = basis(k);
    if (v.size() != b.size()) throw PreconditionError("coordinate vector has the wrong length");
    Element e(self());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (sgn(v[i]) != 0) e.add_term(b[i], v[i]);
    return e;
}

Vector GradedAlgebra::to_vector(const Element& e, int k) const {
    Vector v(basis(k).size());
    for (const auto& [m, c] : e.terms()) {
        if (m.degree != k)
            throw DegreeMismatch("element has a term of degree " + std::to_string(m.degree) + ", expected " +
                                 std::to_string(k));
        v[index_of(m)] = c;
    }
    return v;
}

std::string GradedAlgebra::format(const Monomial& m) const {
    std::string s;
    if (m.ring != 0) s = ring_->name(m.ring);
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += generators_[i].name;
        if (m.exponents[i] > 1) s += "^" + std::to_string(m.exponents[i]);
    }
    return s.empty() ? "1" : s;
}

std::vector<std::pair<Rational, Monomial>> GradedAlgebra::multiply(const Monomial& a, const Monomial& b) const {
    std::vector<std::pair<Rational, Monomial>> out;
    const auto degrees = generator_degrees();
    const int sign = koszul_sign(a.exponents, b.exponents, degrees);
    if (sign == 0) return out;
    const int free_a = a.degree - ring_->degree(a.ring);
    const int total = sign * ((free_a % 2 != 0 && ring_->degree(b.ring) % 2 != 0) ? -1 : 1);
    std::vector<int> exps(a.exponents.size());
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = a.exponents[i] + b.exponents[i];
    for (const auto& [k, c] : ring_->product(a.ring, b.ring)) out.push_back({c * total, {a.degree + b.degree, k, exps}});
    return out;
}

std::optional<int> Element::degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree;
    for (const auto& [m, c] : terms_)
        if (m.degree != d) return std::nullopt;
    return d;
}

bool Element::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

void Element::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    if (algebra_ && m.degree > algebra_->cap())
        throw CapOverflow("a nonzero term of degree " + std::to_string(m.degree) + " exceeds the cap " +
                          std::to_string(algebra_->cap()));
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void Element::require_same(const Element& other) const {
    if (algebra_ && other.algebra_ && algebra_ != other.algebra_)
        throw PreconditionError("elements belong to different algebras");
}

Element Element::operator+(const Element& other) const {
    Element r = *this;
    r += other;
    return r;
}

Element Element::operator-(const Element& other) const {
    Element r = *this;
    r -= other;
    return r;
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Element& Element::operator+=(const Element& other) {
    require_same(other);
    if (!algebra_) algebra_ = other.algebra_;
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    require_same(other);
    if (!algebra_) algebra_ = other.algebra_;
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Element Element::operator*(const Element& other) const {
    require_same(other);
    Element r(algebra_ ? algebra_ : other.algebra_);
    if (!r.algebra_) return r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            for (const auto& [c, m] : r.algebra_->multiply(ma, mb)) r.add_term(m, ca * cb * c);
    return r;
}

Element Element::operator*(const Rational& c) const {
    if (sgn(c) == 0) return Element(algebra_);
    Element r = *this;
    for (auto& [m, x] : r.terms_) x *= c;
    return r;
}

bool Element::operator==(const Element& other) const {
    if (terms_.empty() || other.terms_.empty()) return terms_.empty() && other.terms_.empty();
    return algebra_ == other.algebra_ && terms_ == other.terms_;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        const bool negative = sgn(c) < 0;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        const std::string mono = algebra_->format(m);
        if (mono == "1")
            s += sullivan::to_string(a);
        else if (a == 1)
            s += mono;
        else
            s += sullivan::to_string(a) + "*" + mono;
    }
    return s;
}

Element power(const Element& e, int k) {
    if (k < 0) throw PreconditionError("negative exponent");
    Element r = e.algebra()->one();
    for (int i = 0; i < k; ++i) r = r * e;
    return r;
}

}  // namespace sullivan

#pragma once

#include "sullivan/linalg.hpp"
#include "sullivan/ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sullivan {

struct Generator {
    std::string name;
    int degree = 1;
    std::size_t index = 0;
};

// A ring basis element times a monomial in the free generators.
struct Monomial {
    int degree = 0;
    std::size_t ring = 0;
    std::vector<int> exponents;
};

// Degree, then ring index, then exponent vectors in decreasing lexicographic
// order, so that a*x precedes a*y precedes b*x.
bool operator<(const Monomial& a, const Monomial& b);
bool operator==(const Monomial& a, const Monomial& b);
inline bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

class Element;

// R ⊗ Λ(V): a finite graded ring tensored with the free graded-commutative
// algebra on the generators. With the trivial ring this is ΛV.
class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
public:
    // cap defaults to top degree + 1 when the algebra is finite-dimensional.
    static std::shared_ptr<const GradedAlgebra> create(RingPtr ring,
                                                       const std::vector<std::pair<std::string, int>>& generators,
                                                       std::optional<int> cap);

    const FiniteGradedRing& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const std::vector<Generator>& generators() const { return generators_; }
    std::vector<int> generator_degrees() const;
    std::optional<std::size_t> generator_index(const std::string& name) const;
    int cap() const { return cap_; }
    // Highest degree with a nonzero monomial, when finite.
    std::optional<int> top_degree() const { return top_; }
    // Degrees whose basis is known exactly: up to the cap, or above the top.
    bool in_window(int k) const { return k >= 0 && (k <= cap_ || (top_ && k > *top_)); }

    const std::vector<Monomial>& basis(int k) const;
    std::size_t dimension(int k) const { return basis(k).size(); }
    std::size_t index_of(const Monomial& m) const;

    Element zero() const;
    Element one() const;
    Element generator(std::size_t index) const;
    Element ring_element(std::size_t index) const;
    Element monomial(const Monomial& m) const;
    // Looks up a free generator or ring symbol.
    std::optional<Element> symbol(const std::string& name) const;

    Element from_vector(int k, const Vector& v) const;
    Vector to_vector(const Element& e, int k) const;

    std::string format(const Monomial& m) const;

    // Product of two monomials as (coefficient, monomial) terms.
    std::vector<std::pair<Rational, Monomial>> multiply(const Monomial& a, const Monomial& b) const;

    // The same algebra with a different cap.
    std::shared_ptr<const GradedAlgebra> with_cap(int cap) const;

    std::shared_ptr<const GradedAlgebra> self() const { return shared_from_this(); }

private:
    GradedAlgebra() = default;
    void build_bases();

    RingPtr ring_;
    std::vector<Generator> generators_;
    int cap_ = 0;
    std::optional<int> top_;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<std::map<Monomial, std::size_t>> positions_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

AlgebraPtr make_free_gca(const std::vector<std::pair<std::string, int>>& generators, int cap);

// Finite linear combination of monomials with nonzero rational coefficients.
class Element {
public:
    Element() = default;
    explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree of a nonzero homogeneous element.
    std::optional<int> degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const Rational& c);

    Element operator+(const Element& other) const;
    Element operator-(const Element& other) const;
    Element operator-() const;
    Element operator*(const Element& other) const;
    Element operator*(const Rational& c) const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    bool operator==(const Element& other) const;
    bool operator!=(const Element& other) const { return !(*this == other); }

    // Canonical text, e.g. "1/2*a*z - b*x".
    std::string to_string() const;

private:
    void require_same(const Element& other) const;

    AlgebraPtr algebra_;
    std::map<Monomial, Rational> terms_;
};

inline Element operator*(const Rational& c, const Element& e) { return e * c; }

Element power(const Element& e, int k);

}  // namespace sullivan

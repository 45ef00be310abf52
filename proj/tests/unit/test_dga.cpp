#include "doctest.h"
#include "fixtures.hpp"

#include "sullivan/errors.hpp"
#include "sullivan/geomodels.hpp"

using namespace sullivan;

namespace {

// Every corpus algebra as a DGA at cap <= 8; rings enter through their dy = omega
// extension (or with zero differential when they carry no omega).
std::vector<std::pair<std::string, DGAPtr>> corpus_dgas() {
    std::vector<std::pair<std::string, DGAPtr>> out;
    for (const auto& entry : corpus_entries()) {
        const AlgebraDocument d = parse_document(entry.document);
        if (d.is_ring()) {
            const RingPtr r = build_ring(d);
            if (r->omega()) out.push_back({entry.id, lefschetz_extension(r).dga});
            continue;
        }
        const DGAPtr full = build_dga(d);
        out.push_back({entry.id, full->algebra().cap() > 8 ? full->with_cap(8) : full});
    }
    return out;
}

int top_of(const GradedAlgebra& alg) {
    return alg.top_degree() ? std::min(*alg.top_degree(), alg.cap()) : alg.cap();
}

}  // namespace

TEST_CASE("d squared vanishes on every basis monomial") {
    for (const auto& [id, dga] : corpus_dgas()) {
        CAPTURE(id);
        const auto& alg = dga->algebra();
        for (int k = 0; k + 2 <= alg.cap(); ++k)
            for (const auto& m : alg.basis(k)) CHECK(dga->d(dga->d(m)).is_zero());
    }
}

TEST_CASE("Leibniz rule on every pair of basis monomials") {
    for (const auto& [id, dga] : corpus_dgas()) {
        CAPTURE(id);
        const auto& alg = dga->algebra();
        const int top = top_of(alg);
        for (int p = 0; p <= top; ++p)
            for (int q = 0; p + q + 1 <= alg.cap() && p + q <= top; ++q)
                for (const auto& x : alg.basis(p))
                    for (const auto& y : alg.basis(q)) {
                        const Element u = alg.monomial(x), v = alg.monomial(y);
                        const Element rhs = dga->d(u) * v + (p % 2 ? -(u * dga->d(v)) : u * dga->d(v));
                        CHECK(dga->d(u * v) == rhs);
                    }
    }
}

TEST_CASE("d is checked on generators") {
    const auto alg = make_free_gca({{"a", 2}, {"x", 3}, {"y", 4}}, 8);
    // d(y) = a*x is not closed: d(a*x) = a^3.
    std::vector<Element> bad{alg->zero(), power(*alg->symbol("a"), 2), *alg->symbol("a") * *alg->symbol("x")};
    CHECK_THROWS_AS(DGA::create(alg, bad), ValidationError);
    std::vector<Element> wrong_degree{alg->zero(), *alg->symbol("a"), alg->zero()};
    CHECK_THROWS_AS(DGA::create(alg, wrong_degree), DegreeMismatch);
}

TEST_CASE("document errors name the culprit") {
    CHECK_THROWS_AS(fixtures::from_json(R"({"version": 1, "kind": "free_dga",
        "generators": [{"name": "a", "degree": 1}], "differential": {"a": "b*a"}})"),
                    ParseError);
    CHECK_THROWS_AS(fixtures::from_json(R"({"version": 1, "kind": "free_dga",
        "generators": [{"name": "a", "degree": 2}, {"name": "x", "degree": 3}], "differential": {"x": "a"}, "cap": 6})"),
                    DegreeMismatch);
}

TEST_CASE("minimality") {
    CHECK(fixtures::dga("m7")->is_minimal());
    CHECK(fixtures::dga("heisenberg3")->is_minimal());
    CHECK_FALSE(fixtures::dga("m5_model")->is_minimal());
    CHECK_FALSE(fixtures::dga("s2xs2_sasakian")->is_minimal());
}

TEST_CASE("capping keeps the differential") {
    const auto m7 = fixtures::dga("m7");
    const auto low = m7->with_cap(5);
    CHECK(low->algebra().cap() == 5);
    CHECK(low->d_generator(4).to_string() == "2*a*b");
    CHECK(transfer(fixtures::el(m7->algebra(), "a*x"), low->algebra()).to_string() == "a*x");
}

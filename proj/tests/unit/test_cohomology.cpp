#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include "sullivan/errors.hpp"

#include <random>

using namespace sullivan;

namespace {

// Builds the oracle algebra straight from the document generators, with
// differentials given as explicit term lists.
oracle::FreeDGA oracle_of(const std::vector<int>& degrees,
                          const std::vector<std::vector<std::pair<int, std::vector<int>>>>& d) {
    oracle::FreeDGA a;
    a.degrees = degrees;
    for (const auto& terms : d) {
        oracle::Poly p;
        for (const auto& [c, gens] : terms) {
            oracle::Poly t = {{oracle::Mono(degrees.size()), oracle::Q(c)}};
            for (int g : gens) t = a.mul(t, a.gen(static_cast<std::size_t>(g)));
            for (const auto& [m, q] : t) oracle::FreeDGA::add(p, m, q);
        }
        a.d.push_back(p);
    }
    return a;
}

void compare(const DGAPtr& dga, const oracle::FreeDGA& o, int hi) {
    Cohomology h(dga);
    for (int k = 0; k <= hi; ++k) {
        CAPTURE(k);
        CHECK(h.betti(k) == oracle::betti(o, k));
    }
}

}  // namespace

TEST_CASE("Betti numbers agree with the reference implementation") {
    SUBCASE("heisenberg") { compare(fixtures::dga("heisenberg3"), oracle_of({1, 1, 1}, {{}, {}, {{-1, {0, 1}}}}), 3); }
    SUBCASE("b4") {
        compare(fixtures::dga("b4"), oracle_of({1, 1, 1, 1}, {{{-1, {1, 2}}}, {{1, {0, 2}}}, {}, {}}), 4);
    }
    SUBCASE("m7") {
        compare(fixtures::dga("m7"),
                oracle_of({2, 2, 3, 3, 3}, {{}, {}, {{1, {0, 0}}}, {{1, {1, 1}}}, {{2, {0, 1}}}}), 7);
    }
    SUBCASE("m5 model") {
        compare(fixtures::dga("m5_model"),
                oracle_of({1, 1, 2, 3, 1}, {{}, {}, {}, {{1, {2, 2}}}, {{1, {0, 1}}, {1, {2}}}}), 5);
    }
    SUBCASE("n9") {
        compare(fixtures::dga("n9", 10),
                oracle_of({2, 2, 2, 3, 3, 3, 3},
                          {{}, {}, {}, {{1, {0, 0}}}, {{1, {1, 1}}}, {{1, {2, 2}}}, {{2, {0, 1}}, {2, {0, 2}}, {2, {1, 2}}}}),
                9);
    }
    SUBCASE("filiform") {
        compare(fixtures::from_json(fixtures::filiform), oracle_of({1, 1, 1, 1}, {{}, {}, {{1, {0, 1}}}, {{1, {0, 2}}}}), 4);
    }
}

TEST_CASE("classes, primitives and exactness") {
    const auto dga = fixtures::dga("m7");
    Cohomology h(dga);
    const auto& alg = h.algebra();
    const Element nu = fixtures::el(alg, "a*z - 2*b*x");
    CHECK(h.is_closed(nu));
    CHECK_FALSE(h.is_exact(nu, 5));
    const Element ab = fixtures::el(alg, "a*b");
    const auto p = h.primitive(ab, 4);
    REQUIRE(p);
    CHECK(dga->d(*p) == ab);
    CHECK(h.class_of(ab, 4).is_zero());
    CHECK_THROWS(h.reduce(fixtures::el(alg, "x"), 3));
}

TEST_CASE("coordinates do not depend on the representative") {
    const auto dga = fixtures::dga("b4");
    Cohomology h(dga);
    std::mt19937_64 rng(1);
    for (int k = 1; k <= 3; ++k) {
        for (std::size_t i = 0; i < h.betti(k); ++i) {
            const CohomologyClass c = h.basis_class(k, i);
            for (int t = 0; t < 10; ++t) {
                Vector v(h.algebra().dimension(k - 1));
                for (auto& x : v) x = Rational(static_cast<int>(rng() % 5) - 2);
                const Element shifted = c.representative + dga->d(h.algebra().from_vector(k - 1, v));
                CHECK(h.coordinates(shifted, k) == c.coordinates);
            }
        }
    }
}

TEST_CASE("cup products") {
    Cohomology h(fixtures::dga("b4"));
    const auto g = fixtures::cls(h, "gamma"), m = fixtures::cls(h, "mu");
    const auto gm = h.cup(g, m);
    CHECK(gm.coordinates == fixtures::cls(h, "gamma*mu").coordinates);
    CHECK(h.cup(g, g).is_zero());
    CHECK(h.cup(h.unit(), g).coordinates == g.coordinates);
}

TEST_CASE("the window limits what can be computed") {
    Cohomology h(fixtures::dga("m7"));
    CHECK(h.computable(7));
    CHECK_FALSE(h.computable(8));
    CHECK_THROWS_AS(h.require(8), OutOfWindow);
    Cohomology fin(fixtures::dga("heisenberg3"));
    CHECK(fin.computable(12));
    CHECK(fin.betti(12) == 0);
}

TEST_CASE("Betti numbers are the same on any thread count") {
    Cohomology a(fixtures::dga("n9", 10)), b(fixtures::dga("n9", 10));
    CHECK(a.betti_numbers(0, 9, 1) == b.betti_numbers(0, 9, 4));
}

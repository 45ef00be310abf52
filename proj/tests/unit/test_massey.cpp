#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include "sullivan/errors.hpp"
#include "sullivan/massey.hpp"

#include <random>

using namespace sullivan;

namespace {

oracle::FreeDGA oracle_m7() {
    oracle::FreeDGA o;
    o.degrees = {2, 2, 3, 3, 3};
    auto mono = [](std::vector<int> e) { return oracle::Poly{{e, 1}}; };
    o.d = {{}, {}, mono({2, 0, 0, 0, 0}), mono({0, 2, 0, 0, 0}), {{{1, 1, 0, 0, 0}, 2}}};
    return o;
}

// Same class, representative moved by a random coboundary.
CohomologyClass shifted(const Cohomology& h, const CohomologyClass& c, std::mt19937_64& rng) {
    const int k = c.degree;
    Vector v(h.algebra().dimension(k - 1));
    for (auto& x : v) {
        x = Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 2));
        x.canonicalize();
    }
    CohomologyClass out = c;
    out.representative = c.representative + h.dga().d(h.algebra().from_vector(k - 1, v));
    return out;
}

}  // namespace

TEST_CASE("<a, a, b> on the 3-sphere bundle is nonzero") {
    Cohomology h(fixtures::dga("m7"));
    const auto a = fixtures::cls(h, "a"), b = fixtures::cls(h, "b");
    const MasseyResult r = triple_massey(h, a, a, b);
    CHECK(r.verdict == Verdict::nonzero_certified);
    CHECK(r.indeterminacy.empty());
    CHECK(r.degree == 5);
    CHECK(r.value.coordinates == fixtures::cls(h, "1/2*a*z - x*b").coordinates);
    // The reference implementation agrees that the value is not exact.
    const oracle::FreeDGA o = oracle_m7();
    oracle::Poly nu{{{1, 0, 0, 0, 1}, oracle::Q(1, 2)}, {{0, 1, 1, 0, 0}, -1}};
    CHECK(o.d_mono({1, 0, 0, 0, 1}) != oracle::Poly{});
    oracle::Poly dnu;
    for (const auto& [m, c] : nu)
        for (const auto& [mm, cc] : o.d_mono(m)) oracle::FreeDGA::add(dnu, mm, c * cc);
    CHECK(dnu.empty());
    CHECK_FALSE(oracle::exact(o, nu, 5));
}

TEST_CASE("Heisenberg triple products") {
    Cohomology h(fixtures::dga("heisenberg3"));
    const auto al = fixtures::cls(h, "alpha"), be = fixtures::cls(h, "beta");
    const MasseyResult r = triple_massey(h, al, be, be);
    CHECK(r.verdict == Verdict::nonzero_certified);
    CHECK(r.value.coordinates == fixtures::cls(h, "beta*gamma").coordinates);
    CHECK(triple_massey(h, al, al, be).verdict == Verdict::nonzero_certified);
}

TEST_CASE("undefined products are reported") {
    Cohomology h(fixtures::dga("b4"));
    const auto g = fixtures::cls(h, "gamma"), m = fixtures::cls(h, "mu");
    CHECK_THROWS_AS(triple_massey(h, g, m, m), NotDefined);
    Cohomology f(fixtures::from_json(fixtures::filiform));
    const auto e1 = fixtures::cls(f, "e1"), e2 = fixtures::cls(f, "e2");
    CHECK_THROWS_AS(higher_massey_search(f, {e2, e2, e2, e1}), NotDefined);
}

TEST_CASE("a nonzero quadruple product on the filiform nilmanifold") {
    const auto dga = fixtures::from_json(fixtures::filiform);
    Cohomology h(dga);
    const auto& alg = h.algebra();
    const auto e1 = fixtures::cls(h, "e1"), e2 = fixtures::cls(h, "e2");
    // Hand-built defining system: d a(3,4) = -e1 e2, d a(2,4) = -e1 a(3,4).
    DefiningSystem s;
    s.degrees = {1, 1, 1, 1};
    for (int i = 1; i <= 3; ++i) s.at(i, i) = fixtures::el(alg, "e1");
    s.at(4, 4) = fixtures::el(alg, "e2");
    s.at(1, 2) = alg.zero();
    s.at(2, 3) = alg.zero();
    s.at(3, 4) = fixtures::el(alg, "-e3");
    s.at(1, 3) = alg.zero();
    s.at(2, 4) = fixtures::el(alg, "e4");
    CHECK_FALSE(defining_system_residue(*dga, s));
    CHECK(defining_system_value(h, s).coordinates == fixtures::cls(h, "-e1*e4").coordinates);

    const MasseyResult r = higher_massey_search(h, {e1, e1, e1, e2});
    CHECK(r.verdict == Verdict::nonzero_certified);
    CHECK_FALSE(r.witness);
    REQUIRE(r.certificate);
    auto pair = [](const Vector& f, const Vector& v) {
        Rational acc = 0;
        for (std::size_t i = 0; i < v.size(); ++i) acc += f[i] * v[i];
        return acc;
    };
    for (const auto& v : r.indeterminacy) CHECK(pair(*r.certificate, v) == 0);
    CHECK(pair(*r.certificate, r.value.coordinates) != 0);
    // Same coset as the hand-built system.
    Vector diff = r.value.coordinates;
    const Vector hand = defining_system_value(h, s).coordinates;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= hand[i];
    CHECK(pair(*r.certificate, diff) == 0);
    CHECK(higher_massey_search(h, {e2, e1, e1, e2}).verdict == Verdict::vanishes);
}

TEST_CASE("order three goes through the triple product") {
    Cohomology h(fixtures::dga("m7"));
    const auto a = fixtures::cls(h, "a");
    CHECK_THROWS_AS(higher_massey_search(h, {a, a, a}), PreconditionError);
}

TEST_CASE("a-Massey witnesses revalidate") {
    Cohomology h(fixtures::dga("m7", 9));
    const auto a = fixtures::cls(h, "a"), b = fixtures::cls(h, "b");
    const MasseyResult r = a_massey(h, a, {a, a, b});
    CHECK(r.kind == "a-massey");
    CHECK(r.degree == 8);
    if (r.verdict == Verdict::vanishes) {
        REQUIRE(r.amassey_witness);
        CHECK(a_massey_value(h, a, {a, a, b}, r.amassey_witness->primitives).is_zero());
    }
}

TEST_CASE("verdicts do not depend on the representatives") {
    std::mt19937_64 rng(2024);
    struct Case {
        DGAPtr dga;
        std::vector<std::string> classes;
    };
    const std::vector<Case> cases = {
        {fixtures::dga("m7"), {"a", "a", "b"}},
        {fixtures::dga("heisenberg3"), {"alpha", "beta", "beta"}},
        {fixtures::dga("heisenberg3"), {"alpha", "alpha", "beta"}},
        {fixtures::from_json(fixtures::filiform), {"e1", "e1", "e1", "e2"}},
        {fixtures::from_json(fixtures::filiform), {"e2", "e1", "e1", "e2"}},
    };
    for (const auto& c : cases) {
        Cohomology h(c.dga);
        std::vector<CohomologyClass> base;
        for (const auto& t : c.classes) base.push_back(fixtures::cls(h, t));
        auto run = [&](const std::vector<CohomologyClass>& cl) {
            return cl.size() == 3 ? triple_massey(h, cl[0], cl[1], cl[2]) : higher_massey_search(h, cl);
        };
        const MasseyResult ref = run(base);
        for (int t = 0; t < 50; ++t) {
            std::vector<CohomologyClass> moved;
            for (const auto& b : base) moved.push_back(shifted(h, b, rng));
            const MasseyResult r = run(moved);
            CHECK(r.verdict == ref.verdict);
            if (ref.indeterminacy.empty() && r.indeterminacy.empty())
                CHECK(r.value.coordinates == ref.value.coordinates);
        }
    }
}

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include "sullivan/errors.hpp"
#include "sullivan/gysin.hpp"

#include <random>

using namespace sullivan;

namespace {

std::vector<std::string> groups(const GysinResult& r) {
    std::vector<std::string> out;
    for (const auto& d : r.degrees) out.push_back(d.group.to_string());
    return out;
}

}  // namespace

TEST_CASE("Smith normal form against determinantal divisors") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
        IntMatrix m(r, std::vector<Integer>(c));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<int>(rng() % 13) - 6;
        const SmithForm s = smith_normal_form(m, r, c);
        const IntMatrix d = multiply(multiply(s.u, m, r), s.v, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) CHECK(d[i][j] == (i == j ? s.factors[i] : Integer(0)));
        for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) {
            if (s.factors[i] == 0) CHECK(s.factors[i + 1] == 0);
            else CHECK(s.factors[i + 1] % s.factors[i] == 0);
        }
        const auto expected = oracle::invariant_factors(m);
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(s.factors[i] == expected[i]);
        // U and V are unimodular: their own invariant factors are all 1.
        for (const auto& f : oracle::invariant_factors(s.u)) CHECK(f == 1);
        for (const auto& f : oracle::invariant_factors(s.v)) CHECK(f == 1);
    }
}

TEST_CASE("circle bundle over (S^2)^3 with Euler class a1+a2+a3") {
    const RingPtr r = fixtures::ring("s2cubed");
    const GysinResult g = gysin_total(*r, 1, fixtures::ring_vector(r, "a1+a2+a3"));
    CHECK(groups(g) == std::vector<std::string>{"Z", "0", "Z^2", "0", "Z_2", "Z^2", "0", "Z"});
    for (const auto& d : g.degrees) CHECK(d.resolved);
}

TEST_CASE("3-sphere bundles over S^2 x S^2 have H^4 = Z_e") {
    const RingPtr r = fixtures::ring("s2xs2");
    for (int e = 1; e <= 5; ++e) {
        const GysinResult g = gysin_total(*r, 3, fixtures::ring_vector(r, std::to_string(e) + "*a1*a2"));
        CHECK(g.at(4).group.to_string() == (e == 1 ? "0" : "Z_" + std::to_string(e)));
        CHECK(g.at(2).group.to_string() == "Z^2");
        CHECK(g.at(5).group.to_string() == "Z^2");
    }
    const GysinResult trivial = gysin_total(*r, 3, Vector(r->size()));
    CHECK(trivial.at(4).group.to_string() == "Z");
    CHECK(trivial.at(3).group.to_string() == "Z");
}

TEST_CASE("Gysin preconditions") {
    const RingPtr r = fixtures::ring("s2xs2");
    CHECK_THROWS_AS(gysin_total(*r, 2, Vector(r->size())), PreconditionError);
    CHECK_THROWS_AS(gysin_total(*r, 1, fixtures::ring_vector(r, "a1*a2")), DegreeMismatch);
    CHECK_THROWS_AS(gysin_total(*r, 1, fixtures::ring_vector(r, "1/2*a1")), PreconditionError);
}

TEST_CASE("group descriptions") {
    AbelianGroup g;
    CHECK(g.to_string() == "0");
    g.free_rank = 2;
    g.torsion = {Integer(2), Integer(6)};
    CHECK(g.to_string() == "Z^2 + Z_2 + Z_6");
}

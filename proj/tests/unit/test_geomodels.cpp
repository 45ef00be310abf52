#include "doctest.h"
#include "fixtures.hpp"

#include "sullivan/errors.hpp"
#include "sullivan/geomodels.hpp"
#include "sullivan/gysin.hpp"

using namespace sullivan;

namespace {

std::vector<std::size_t> free_ranks(const GysinResult& g) {
    std::vector<std::size_t> out;
    for (const auto& d : g.degrees) out.push_back(d.group.free_rank);
    return out;
}

std::vector<std::size_t> betti(const DGAPtr& dga, std::size_t n) {
    return Cohomology(dga).betti_numbers(0, static_cast<int>(n) - 1, 1);
}

}  // namespace

TEST_CASE("hard Lefschetz") {
    for (const char* id : {"s2xs2", "s2cubed", "cp1", "cp2", "cp3", "t2", "t4"}) {
        CAPTURE(id);
        CHECK(hard_lefschetz_check(*fixtures::ring(id)).holds);
    }
    const auto r = fixtures::ring("s2xs2");
    const auto skew = r->with_omega(fixtures::ring_vector(r, "a1"), 2);
    const LefschetzReport rep = hard_lefschetz_check(*skew);
    CHECK_FALSE(rep.holds);
    CHECK(rep.first_failure == 2);
}

TEST_CASE("Lefschetz split is pure base exactly up to degree n") {
    for (const char* id : {"s2xs2", "s2cubed", "cp2", "cp3", "t2", "t4"}) {
        CAPTURE(id);
        const RingPtr ring = fixtures::ring(id);
        const int n = *ring->half_dimension();
        const ExtensionDGA e = lefschetz_extension(ring);
        Cohomology h(e.dga);
        for (int j = 0; j <= 2 * n + 1; ++j)
            for (std::size_t i = 0; i < h.betti(j); ++i) {
                const CohomologyClass c = h.basis_class(j, i);
                const LefschetzSplit s = lefschetz_split(e, c);
                CHECK(s.pure_base == (j <= n));
                CHECK(c.representative == s.representative + e.dga->d(s.certificate));
            }
    }
}

TEST_CASE("circle and sphere bundle models agree with the Gysin sequence") {
    {
        const auto base = fixtures::dga("s2cubed_model");
        Cohomology h(base);
        const ExtensionDGA e = circle_bundle_model(base, fixtures::cls(h, "a1+a2+a3"));
        const auto g = gysin_total(*fixtures::ring("s2cubed"), 1, fixtures::ring_vector(fixtures::ring("s2cubed"), "a1+a2+a3"));
        CHECK(betti(e.dga, 8) == free_ranks(g));
    }
    {
        const auto base = fixtures::dga("s2xs2_model");
        Cohomology h(base);
        const ExtensionDGA e = sphere_bundle_model(base, 3, fixtures::cls(h, "2*a*b"), 4);
        const auto g = gysin_total(*fixtures::ring("s2xs2"), 3, fixtures::ring_vector(fixtures::ring("s2xs2"), "2*a1*a2"));
        CHECK(betti(e.dga, 8) == free_ranks(g));
        CHECK(betti(e.dga, 8) == betti(fixtures::dga("m7"), 8));
    }
    for (const char* id : {"cp1", "cp2", "cp3", "t2", "s2xs2"}) {
        CAPTURE(id);
        const RingPtr r = fixtures::ring(id);
        const ExtensionDGA e = lefschetz_extension(r);
        const auto g = gysin_total(*r, 1, *r->omega());
        CHECK(betti(e.dga, g.degrees.size()) == free_ranks(g));
    }
}

TEST_CASE("Tievsky model over CP^n has the Betti numbers of S^{2n+1}") {
    for (int n = 1; n <= 3; ++n) {
        const RingPtr r = fixtures::ring("cp" + std::to_string(n));
        const ExtensionDGA e = tievsky_model(r, fixtures::ring_vector(r, "h"));
        CHECK(e.tievsky_shape);
        std::vector<std::size_t> sphere(2 * n + 2, 0);
        sphere.front() = sphere.back() = 1;
        CHECK(betti(e.dga, sphere.size() + 2) == [&] {
            auto s = sphere;
            s.push_back(0);
            s.push_back(0);
            return s;
        }());
    }
}

TEST_CASE("sphere bundles reject Euler classes of the wrong degree") {
    const auto base = fixtures::dga("s2xs2_model");
    Cohomology h(base);
    CHECK_THROWS_AS(sphere_bundle_model(base, 3, fixtures::cls(h, "a"), 4), DegreeMismatch);
    CHECK_THROWS_AS(sphere_bundle_model(base, 2, std::nullopt, 4), PreconditionError);
}

TEST_CASE("obstruction report") {
    ObstructionInput m7;
    m7.model = fixtures::dga("m7");
    m7.dimension = 7;
    const ObstructionReport r = obstruction_report(m7);
    CHECK_FALSE(r.obstructed());
    CHECK(r.verdict() == "no obstruction found");
    bool mentions_triple = false;
    for (const auto& i : r.informational) mentions_triple |= i.find("triple") != std::string::npos;
    CHECK(mentions_triple);

    ObstructionInput odd;
    odd.betti = std::vector<std::size_t>{1, 1, 0, 0, 1, 1};
    const ObstructionReport o = obstruction_report(odd);
    CHECK(o.obstructed());
    CHECK(o.dimension == 5);

    // No reason ever rests on a triple product.
    for (const char* id : {"m7", "heisenberg3", "m5_minimal", "s2xs2_sasakian"}) {
        ObstructionInput in;
        in.model = fixtures::dga(id);
        in.dimension = std::string(id) == "m7" ? 7 : std::string(id) == "heisenberg3" ? 3 : 5;
        for (const auto& reason : obstruction_report(in).reasons) CHECK(reason.find("triple") == std::string::npos);
    }
}

TEST_CASE("constructive vanishing on the dy = omega extension of T^2") {
    const ExtensionDGA e = lefschetz_extension(fixtures::ring("t2"));
    Cohomology h(e.dga);
    std::vector<CohomologyClass> ones;
    for (std::size_t i = 0; i < h.betti(1); ++i) ones.push_back(h.basis_class(1, i));
    std::size_t defined = 0;
    for (std::size_t w = 0; w < 16; ++w) {
        std::vector<CohomologyClass> cl;
        for (int k = 0; k < 4; ++k) cl.push_back(ones[(w >> k) & 1]);
        std::optional<DefiningSystem> s;
        try {
            s = construct_defining_system(h, cl);
        } catch (const NotDefined&) {
            continue;
        }
        if (!s) continue;
        ++defined;
        const DefiningSystem v = constructive_massey_vanishing(e, cl, *s);
        CHECK_FALSE(defining_system_residue(*e.dga, v));
        CHECK(defining_system_value(h, v).is_zero());
    }
    CHECK(defined > 0);
}

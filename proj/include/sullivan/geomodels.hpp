#pragma once

#include "sullivan/massey.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sullivan {

// A DGA obtained by adjoining generators of one degree to a base whose
// differentials land in the base.
struct ExtensionDGA {
    DGAPtr dga;
    DGAPtr base;                            // set when the base is a DGA
    RingPtr ring;                           // the coefficient ring of dga
    std::vector<std::string> new_generators;
    int generator_degree = 0;
    bool tievsky_shape = false;             // one degree-1 generator over a ring with zero differential
};

// Images are expressions or elements of the base, keyed by new generator name.
ExtensionDGA elementary_extension(const DGAPtr& base, const std::vector<std::pair<std::string, int>>& generators,
                                  const std::map<std::string, Element>& images, std::optional<int> cap = std::nullopt);
ExtensionDGA elementary_extension(const RingPtr& base, const std::vector<std::pair<std::string, int>>& generators,
                                  const std::map<std::string, Vector>& images, std::optional<int> cap = std::nullopt);

// Element of R ⊗ ΛV for a dense ring coefficient vector.
Element ring_vector_element(const GradedAlgebra& algebra, const Vector& v);

// base ⊗ Λ(t), dt = euler.
ExtensionDGA circle_bundle_model(const DGAPtr& base, const CohomologyClass& euler, const std::string& name = "t");

// base ⊗ Λ(z), |z| = fiber_dim, dz = euler (or 0). A nonzero Euler class
// above the formal dimension of the base is rejected.
ExtensionDGA sphere_bundle_model(const DGAPtr& base, int fiber_dim, const std::optional<CohomologyClass>& euler,
                                 std::optional<int> base_dimension = std::nullopt, const std::string& name = "z");

// H_B ⊗ Λ(x), Dx = cls.
ExtensionDGA tievsky_model(const RingPtr& basic, const Vector& cls, const std::string& name = "x");

// A ⊗ Λ(y), dy = ω, for a ring carrying ω and n.
ExtensionDGA lefschetz_extension(const RingPtr& ring, const std::string& name = "y");

struct LefschetzDegree {
    int k = 0;  // multiplication by ω^k : A^{n-k} -> A^{n+k}
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    bool bijective() const { return source_dim == target_dim && rank == source_dim; }
};

struct LefschetzReport {
    int n = 0;
    std::vector<LefschetzDegree> maps;
    bool holds = false;
    std::optional<int> first_failure;
};

LefschetzReport hard_lefschetz_check(const FiniteGradedRing& ring);

// Representative α (pure base) or β·y of a class of E = A ⊗ Λ(y), with
// original = representative + d(certificate).
struct LefschetzSplit {
    Element representative;
    Element certificate;
    bool pure_base = false;
    Element base_part;  // α, or β for the β·y form
};

LefschetzSplit lefschetz_split(const ExtensionDGA& e, const CohomologyClass& c);

// Witness with value zero for a defined product of order >= 4, built from a
// defining system S as in the hard Lefschetz vanishing argument.
DefiningSystem constructive_massey_vanishing(const ExtensionDGA& e, const std::vector<CohomologyClass>& classes,
                                             const DefiningSystem& s);

// Primitive tuple with zero value for a defined a-Massey product, m >= 3.
AMasseyWitness constructive_amassey_vanishing(const ExtensionDGA& e, const CohomologyClass& a,
                                              const std::vector<CohomologyClass>& bs,
                                              const std::vector<Element>& primitives);

// Search policy whose Lefschetz hooks call the two constructions above.
SearchPolicy lefschetz_policy(const ExtensionDGA& e, SearchPolicy base = {});

struct ObstructionCheck {
    std::string rule;
    bool passed = true;
    std::string detail;
};

struct ObstructionInput {
    std::optional<std::vector<std::size_t>> betti;  // b_0 .. b_{2n+1}
    DGAPtr model;
    std::optional<int> dimension;
    SearchPolicy policy;
    std::size_t max_instances = 256;  // per product family
    unsigned threads = 0;
};

struct ObstructionReport {
    int dimension = 0;
    std::vector<std::size_t> betti;
    std::vector<std::size_t> basic_betti;  // b^B_0 .. b^B_n
    std::optional<int> cup_length;
    std::vector<ObstructionCheck> checks;
    std::vector<std::string> informational;
    std::vector<std::string> reasons;
    std::size_t quadruple_tested = 0;
    std::size_t amassey_tested = 0;
    std::size_t undecided = 0;

    bool obstructed() const { return !reasons.empty(); }
    std::string verdict() const { return obstructed() ? "obstructed" : "no obstruction found"; }
};

ObstructionReport obstruction_report(const ObstructionInput& input);

// Largest r with a nonzero product of r positive-degree classes, up to `top`.
int cup_length(const Cohomology& h, int top);

}  // namespace sullivan

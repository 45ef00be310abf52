#pragma once

#include "sullivan/cohomology.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sullivan {

// Entries a(i,j), 1 <= i <= j <= t, (i,j) != (1,t), with
// d a(i,j) = sum_{k=i}^{j-1} (-1)^{|a(i,k)|} a(i,k) a(k+1,j).
struct DefiningSystem {
    std::vector<int> degrees;  // degrees of the classes a(i,i)
    std::map<std::pair<int, int>, Element> entries;

    int order() const { return static_cast<int>(degrees.size()); }
    int degree(int i, int j) const;  // sum of class degrees minus (j - i)
    const Element& at(int i, int j) const { return entries.at({i, j}); }
    Element& at(int i, int j) { return entries[{i, j}]; }
};

// Element sum_{k=1}^{t-1} (-1)^{|a(1,k)|} a(1,k) a(k+1,t), no validation.
Element defining_system_element(const DGA& dga, const DefiningSystem& s);

// First violated constraint as (i, j, residue); nullopt when S is valid.
std::optional<std::tuple<int, int, Element>> defining_system_residue(const DGA& dga, const DefiningSystem& s);

// Validates S and returns the class of its value.
CohomologyClass defining_system_value(const Cohomology& h, const DefiningSystem& s);

enum class Verdict { vanishes, nonzero_certified, undecided };
std::string to_string(Verdict v);

struct AMasseyWitness {
    Element a;
    std::vector<Element> bs;
    std::vector<Element> primitives;
};

struct SearchPolicy {
    int sweeps = 1;
    int samples = 16;
    std::uint64_t seed = 0;
    bool accept_lefschetz = true;
    std::size_t grid_budget = 4096;

    // Optional sources of vanishing witnesses; every witness is revalidated.
    std::function<std::optional<DefiningSystem>(const Cohomology&, const std::vector<CohomologyClass>&,
                                                const DefiningSystem&)>
        lefschetz_system;
    std::function<std::optional<AMasseyWitness>(const Cohomology&, const CohomologyClass&,
                                                const std::vector<CohomologyClass>&, const std::vector<Element>&)>
        lefschetz_primitives;
};

struct MasseyResult {
    std::string kind;  // "triple", "higher", "a-massey"
    int order = 0;
    int degree = 0;
    Verdict verdict = Verdict::undecided;
    CohomologyClass value;              // the value of one defining system
    std::vector<Vector> indeterminacy;  // class coordinates of the linear variation
    std::optional<DefiningSystem> witness;
    std::optional<AMasseyWitness> amassey_witness;
    std::optional<Vector> certificate;  // functional killing the variation but not the value
    std::vector<CohomologyClass> samples;
    std::string method;
};

// a1 a23 + (-1)^{p1+1} a12 a3 with d a12 = a1 a2, d a23 = a2 a3.
MasseyResult triple_massey(const Cohomology& h, const CohomologyClass& c1, const CohomologyClass& c2,
                           const CohomologyClass& c3);

MasseyResult higher_massey_search(const Cohomology& h, const std::vector<CohomologyClass>& classes,
                                  const SearchPolicy& policy = {});

// Some defining system for t >= 4 classes; nullopt when none was found,
// NotDefined when none exists.
std::optional<DefiningSystem> construct_defining_system(const Cohomology& h, const std::vector<CohomologyClass>& classes,
                                                      const SearchPolicy& policy = {});

// Value of <a; b_1..b_m> for given primitives d xi_i = a b_i.
Element a_massey_element(const DGA& dga, const Element& a, const std::vector<Element>& bs,
                         const std::vector<Element>& primitives, int a_degree, const std::vector<int>& b_degrees);

// Validates the primitives and returns the class of the value.
CohomologyClass a_massey_value(const Cohomology& h, const CohomologyClass& a, const std::vector<CohomologyClass>& bs,
                               const std::vector<Element>& primitives);

MasseyResult a_massey(const Cohomology& h, const CohomologyClass& a, const std::vector<CohomologyClass>& bs,
                      const SearchPolicy& policy = {});

}  // namespace sullivan

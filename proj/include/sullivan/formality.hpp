#pragma once

#include "sullivan/cohomology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sullivan {

// V^i = C^i ⊕ N^i for the generators of one degree.
struct CNDegree {
    int degree = 0;
    std::vector<Element> closed;      // basis of C^i = ker d ∩ V^i
    std::vector<Element> complement;  // generators spanning N^i
};

struct CNDecomposition {
    int s = 0;
    std::vector<CNDegree> degrees;  // i = 1..s

    const CNDegree& at(int i) const { return degrees.at(static_cast<std::size_t>(i - 1)); }
    std::vector<std::string> complement_generators() const;
};

// N^i is spanned by the generators whose columns are pivots of the echelon
// form of d on V^i (generators taken in declaration order).
CNDecomposition cn_decomposition(const DGA& dga, int s);

enum class FormalityStatus { s_formal_up_to_cap, not_s_formal, formal_by_dimension_rule, inconclusive };
std::string to_string(FormalityStatus s);

struct FormalityVerdict {
    FormalityStatus status = FormalityStatus::inconclusive;
    std::optional<Element> witness;  // closed, in the ideal, not exact
    std::optional<int> degree;       // degree of the witness
    int s = 0;
    int cap = 0;
    std::optional<int> manifold_dimension;
    std::string complement;  // the N^i choice, e.g. "N = <x, y, z>"
    std::vector<std::string> notes;
};

// Scans degrees q <= cap - 1 for closed elements of the ideal generated by
// N^{<= s} in Λ(V^{<= s}) that are not exact in ΛV.
FormalityVerdict s_formality_check(const DGA& dga, int s, int cap, unsigned threads = 0);

// s = ceil(dim/2) - 1. A positive answer needs cap >= dim + 1 to count.
FormalityVerdict formality_by_dimension(const DGA& dga, int manifold_dimension, int cap, unsigned threads = 0);

struct DegreeComparison {
    int degree = 0;
    std::size_t source_betti = 0;
    std::size_t target_betti = 0;
    std::size_t rank = 0;

    bool isomorphism() const { return source_betti == target_betti && rank == source_betti; }
};

struct QuasiIsoReport {
    bool chain_map = false;
    std::optional<std::string> chain_failure;  // generator where rho d != d rho
    bool quasi_isomorphism = false;
    std::optional<int> failing_degree;
    std::vector<DegreeComparison> degrees;
    int cap = 0;
};

// Extends `images` (source generator name -> target element) multiplicatively
// and applies it.
Element apply_morphism(const GradedAlgebra& source, const GradedAlgebra& target,
                       const std::map<std::string, Element>& images, const Element& e);

// Checks rho d = d rho on generators, then H^k(rho) for k <= cap - 1.
QuasiIsoReport quasi_iso_check(const DGA& source, const DGA& target, const std::map<std::string, Element>& images,
                               int cap);

}  // namespace sullivan

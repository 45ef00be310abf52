#pragma once

#include "sullivan/cohomology.hpp"
#include "sullivan/corpus.hpp"
#include "sullivan/document.hpp"
#include "sullivan/expression.hpp"

#include <string>

namespace fixtures {

inline sullivan::AlgebraDocument doc(const std::string& id) { return sullivan::load_document("corpus:" + id); }

inline sullivan::DGAPtr dga(const std::string& id, std::optional<int> cap = std::nullopt) {
    return sullivan::build_dga(doc(id), cap);
}

inline sullivan::RingPtr ring(const std::string& id) { return sullivan::build_ring(doc(id)); }

inline sullivan::DGAPtr from_json(const std::string& text, std::optional<int> cap = std::nullopt) {
    return sullivan::build_dga(sullivan::parse_document(text), cap);
}

inline sullivan::Element el(const sullivan::GradedAlgebra& a, const std::string& text) {
    return sullivan::parse_element(text, a);
}

inline sullivan::CohomologyClass cls(const sullivan::Cohomology& h, const std::string& text) {
    const auto e = el(h.algebra(), text);
    return h.class_of(e, *e.degree());
}

inline sullivan::Vector ring_vector(const sullivan::RingPtr& r, const std::string& text) {
    const auto alg = sullivan::GradedAlgebra::create(r, {}, std::nullopt);
    const auto e = sullivan::parse_element(text, *alg);
    sullivan::Vector v(r->size());
    for (const auto& [m, c] : e.terms()) v[m.ring] += c;
    return v;
}

// de3 = e1 e2, de4 = e1 e3: a 4-dimensional filiform nilmanifold.
inline const char* filiform =
    R"({"version": 1, "kind": "free_dga",
        "generators": [{"name": "e1", "degree": 1}, {"name": "e2", "degree": 1},
                       {"name": "e3", "degree": 1}, {"name": "e4", "degree": 1}],
        "differential": {"e3": "e1*e2", "e4": "e1*e3"}})";

}  // namespace fixtures

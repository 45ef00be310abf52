#pragma once

#include "sullivan/dga.hpp"
#include "sullivan/ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sullivan {

// Text form of an algebra or ring (JSON, "version": 1).
//
//   free_dga:      generators [{name, degree}], differential {name: expr},
//                  cap (optional for finite algebras), ring (optional nested ring document)
//   finite_ring /  either generators + relations ["a^2", ...] (monomial relations)
//   integral_ring: or basis [{name, degree}] + products {"x*y": expr};
//                  optional omega (expr) and n
struct AlgebraDocument {
    int version = 1;
    std::string kind;
    std::vector<std::pair<std::string, int>> generators;
    std::map<std::string, std::string> differential;
    std::optional<int> cap;
    std::shared_ptr<AlgebraDocument> ring;
    std::vector<std::string> relations;
    std::vector<std::pair<std::string, int>> basis;
    std::map<std::string, std::string> products;
    std::optional<std::string> omega;
    std::optional<int> n;

    bool is_ring() const { return kind == "finite_ring" || kind == "integral_ring"; }
};

AlgebraDocument parse_document(const std::string& text);
std::string serialize_document(const AlgebraDocument& doc);

// Reads a file path, or "corpus:<id>" for a built-in document.
AlgebraDocument load_document(const std::string& source);

RingPtr build_ring(const AlgebraDocument& doc);
// The cap override, when given, replaces the document's cap.
DGAPtr build_dga(const AlgebraDocument& doc, std::optional<int> cap = std::nullopt);

AlgebraDocument document_from_ring(const FiniteGradedRing& ring, bool integral = false);
AlgebraDocument document_from_dga(const DGA& dga);

// Parses and rebuilds, rewriting every expression in canonical form.
AlgebraDocument canonicalize(const AlgebraDocument& doc);

}  // namespace sullivan

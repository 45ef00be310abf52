#pragma once

#include <string>
#include <vector>

namespace sullivan {

// Corpus files compiled into the library (generated at build time).
struct EmbeddedDocument {
    std::string name;
    std::string text;
};

const std::vector<EmbeddedDocument>& embedded_corpus();

// One corpus file: an algebra document plus expected results. Every expected
// item carries an "origin": worked-example, derived, or elementary.
struct CorpusEntry {
    std::string id;
    std::string description;
    std::string origin;
    std::string document;  // canonical JSON of the algebra document
    std::string expected;  // canonical JSON of the expected results
};

std::vector<CorpusEntry> corpus_entries();
CorpusEntry corpus_entry(const std::string& id);
std::string corpus_document_text(const std::string& id);

struct CorpusCheck {
    std::string id;
    std::string item;
    std::string origin;
    bool passed = false;
    std::string detail;
};

// Recomputes every expected result of the entry.
std::vector<CorpusCheck> check_corpus_entry(const CorpusEntry& entry, unsigned threads = 0);

}  // namespace sullivan

#include "sullivan/document.hpp"

#include "sullivan/corpus.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/expression.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sullivan {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) { throw PreconditionError("document: " + message); }

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) schema_error("unexpected key '" + key + "' in " + where);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) schema_error("missing '" + key + "' in " + where);
    return j.at(key);
}

int integer_field(const json& j, const std::string& key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer()) schema_error("'" + key + "' in " + where + " must be an integer");
    return v.get<int>();
}

std::string string_value(const json& v, const std::string& what) {
    if (!v.is_string()) schema_error(what + " must be a string");
    return v.get<std::string>();
}

std::vector<std::pair<std::string, int>> named_degrees(const json& j, const std::string& where) {
    if (!j.is_array()) schema_error(where + " must be an array");
    std::vector<std::pair<std::string, int>> out;
    for (const auto& item : j) {
        if (!item.is_object()) schema_error("entries of " + where + " must be objects");
        check_keys(item, {"name", "degree"}, where);
        const std::string name = string_value(field(item, "name", where), "name");
        if (!is_identifier(name)) schema_error("'" + name + "' is not a valid name");
        out.push_back({name, integer_field(item, "degree", where)});
    }
    return out;
}

json named_degrees_json(const std::vector<std::pair<std::string, int>>& v) {
    json out = json::array();
    for (const auto& [name, degree] : v) out.push_back({{"name", name}, {"degree", degree}});
    return out;
}

std::pair<std::size_t, std::size_t> position(const std::string& text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

AlgebraDocument from_json(const json& j) {
    if (!j.is_object()) schema_error("top level must be an object");
    AlgebraDocument doc;
    doc.version = integer_field(j, "version", "document");
    if (doc.version != 1) schema_error("unsupported version " + std::to_string(doc.version));
    doc.kind = string_value(field(j, "kind", "document"), "kind");
    if (doc.kind == "free_dga") {
        check_keys(j, {"version", "kind", "generators", "differential", "cap", "ring"}, "free_dga");
        doc.generators = named_degrees(field(j, "generators", "free_dga"), "generators");
        if (j.contains("differential")) {
            const json& d = j.at("differential");
            if (!d.is_object()) schema_error("differential must be an object");
            for (const auto& [name, expr] : d.items()) doc.differential[name] = string_value(expr, "differential of " + name);
        }
        if (j.contains("cap")) doc.cap = integer_field(j, "cap", "free_dga");
        if (j.contains("ring")) {
            doc.ring = std::make_shared<AlgebraDocument>(from_json(j.at("ring")));
            if (!doc.ring->is_ring()) schema_error("nested ring must be a finite_ring or integral_ring");
        }
    } else if (doc.kind == "finite_ring" || doc.kind == "integral_ring") {
        check_keys(j, {"version", "kind", "generators", "relations", "basis", "products", "omega", "n"}, doc.kind);
        const bool monomial = j.contains("generators");
        const bool table = j.contains("basis");
        if (monomial == table) schema_error("a ring needs either generators/relations or basis/products");
        if (monomial) {
            doc.generators = named_degrees(j.at("generators"), "generators");
            if (j.contains("relations")) {
                if (!j.at("relations").is_array()) schema_error("relations must be an array");
                for (const auto& r : j.at("relations")) doc.relations.push_back(string_value(r, "relation"));
            }
            if (j.contains("products")) schema_error("products belong to basis rings");
        } else {
            doc.basis = named_degrees(j.at("basis"), "basis");
            if (j.contains("products")) {
                const json& p = j.at("products");
                if (!p.is_object()) schema_error("products must be an object");
                for (const auto& [key, expr] : p.items()) doc.products[key] = string_value(expr, "product " + key);
            }
            if (j.contains("relations")) schema_error("relations belong to generator rings");
        }
        if (j.contains("omega")) doc.omega = string_value(j.at("omega"), "omega");
        if (j.contains("n")) doc.n = integer_field(j, "n", doc.kind);
        if (doc.omega.has_value() != doc.n.has_value()) schema_error("omega and n go together");
    } else {
        schema_error("unknown kind '" + doc.kind + "'");
    }
    return doc;
}

json to_json(const AlgebraDocument& doc) {
    json j;
    j["version"] = doc.version;
    j["kind"] = doc.kind;
    if (doc.kind == "free_dga") {
        j["generators"] = named_degrees_json(doc.generators);
        json d = json::object();
        for (const auto& [name, expr] : doc.differential) d[name] = expr;
        j["differential"] = d;
        if (doc.cap) j["cap"] = *doc.cap;
        if (doc.ring) j["ring"] = to_json(*doc.ring);
    } else {
        if (!doc.generators.empty() || doc.basis.empty()) {
            j["generators"] = named_degrees_json(doc.generators);
            j["relations"] = doc.relations;
        } else {
            j["basis"] = named_degrees_json(doc.basis);
            json p = json::object();
            for (const auto& [key, expr] : doc.products) p[key] = expr;
            j["products"] = p;
        }
        if (doc.omega) j["omega"] = *doc.omega;
        if (doc.n) j["n"] = *doc.n;
    }
    return j;
}

// Rethrows expression errors with the place they occurred.
template <typename F>
auto in_context(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.message(), e.line(), e.column());
    }
}

std::vector<int> monomial_exponents(const std::string& text, const std::vector<std::pair<std::string, int>>& gens) {
    const Expression expr = parse_expression(text);
    if (expr.terms.size() != 1 || expr.terms[0].coefficient != 1 || expr.terms[0].factors.empty())
        schema_error("relation '" + text + "' must be a single monomial with coefficient 1");
    std::vector<int> exps(gens.size(), 0);
    for (const auto& f : expr.terms[0].factors) {
        std::size_t k = gens.size();
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].first == f.name) k = i;
        if (k == gens.size()) throw ParseError("unknown generator '" + f.name + "'", f.line, f.column);
        exps[k] += f.power;
    }
    return exps;
}

std::string monomial_text(const std::vector<int>& exps, const std::vector<std::pair<std::string, int>>& gens) {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += gens[i].first;
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s;
}

AlgebraPtr bare(const RingPtr& ring) { return GradedAlgebra::create(ring, {}, std::nullopt); }

Vector ring_vector(const Element& e, std::size_t size) {
    Vector v(size);
    for (const auto& [m, c] : e.terms()) v[m.ring] += c;
    return v;
}

std::string ring_vector_text(const FiniteGradedRing& ring, const SparseVector& v) {
    const AlgebraPtr alg = bare(std::shared_ptr<const FiniteGradedRing>(&ring, [](const FiniteGradedRing*) {}));
    Element e = alg->zero();
    for (const auto& [k, c] : v) e += (k == 0 ? alg->one() : alg->ring_element(k)) * c;
    return e.to_string();
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = position(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string message = e.what();
        const auto colon = message.find("syntax error");
        throw ParseError(colon == std::string::npos ? message : message.substr(colon), line, column);
    }
    return from_json(j);
}

std::string serialize_document(const AlgebraDocument& doc) { return to_json(doc).dump(2) + "\n"; }

AlgebraDocument load_document(const std::string& source) {
    if (source.rfind("corpus:", 0) == 0) return parse_document(corpus_document_text(source.substr(7)));
    std::ifstream in(source);
    if (!in) throw PreconditionError("cannot read '" + source + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

RingPtr build_ring(const AlgebraDocument& doc) {
    if (!doc.is_ring()) schema_error("expected a ring document");
    RingPtr ring;
    if (!doc.generators.empty()) {
        std::vector<std::vector<int>> relations;
        for (std::size_t i = 0; i < doc.relations.size(); ++i)
            relations.push_back(in_context("relation " + std::to_string(i + 1),
                                           [&] { return monomial_exponents(doc.relations[i], doc.generators); }));
        ring = FiniteGradedRing::from_monomial_relations(doc.generators, relations);
    } else {
        std::vector<FiniteGradedRing::BasisElement> basis;
        for (const auto& [name, degree] : doc.basis) basis.push_back({name, degree});
        // Structure constants refer to basis names; parse against a ring with no products.
        const RingPtr names = FiniteGradedRing::from_table(basis, {});
        FiniteGradedRing::ProductTable products;
        for (const auto& [key, expr] : doc.products) {
            const auto star = key.find('*');
            if (star == std::string::npos) schema_error("product key '" + key + "' must look like x*y");
            const std::string left = key.substr(0, star), right = key.substr(star + 1);
            std::optional<std::size_t> li, ri;
            for (std::size_t k = 1; k < names->size(); ++k) {
                if (names->name(k) == left) li = k;
                if (names->name(k) == right) ri = k;
            }
            if (!li || !ri) schema_error("product key '" + key + "' names an unknown basis element");
            const Expression parsed = in_context("product " + key, [&] { return parse_expression(expr); });
            SparseVector v;
            for (const auto& term : parsed.terms) {
                if (term.factors.size() > 1 || (term.factors.size() == 1 && term.factors[0].power != 1))
                    schema_error("product " + key + " must be a combination of basis elements");
                std::size_t k = 0;
                if (!term.factors.empty()) {
                    const auto& f = term.factors[0];
                    auto idx = names->symbols().find(f.name);
                    if (idx == names->symbols().end() || !idx->second)
                        throw ParseError("product " + key + ": unknown basis element '" + f.name + "'", f.line, f.column);
                    k = *idx->second;
                }
                v.push_back({k, term.coefficient});
            }
            products[{*li, *ri}] = v;
        }
        ring = FiniteGradedRing::from_table(basis, products);
    }
    if (doc.kind == "integral_ring" && !ring->has_integral_constants())
        schema_error("integral_ring needs integer structure constants");
    if (doc.omega) {
        const AlgebraPtr alg = bare(ring);
        const Element w = in_context("omega", [&] { return parse_element(*doc.omega, *alg); });
        if (!w.is_zero() && w.degree() != 2) throw DegreeMismatch("omega must have degree 2");
        ring = ring->with_omega(ring_vector(w, ring->size()), *doc.n);
    }
    return ring;
}

DGAPtr build_dga(const AlgebraDocument& doc, std::optional<int> cap) {
    if (doc.kind != "free_dga") schema_error("expected a free_dga document");
    RingPtr ring = doc.ring ? build_ring(*doc.ring) : nullptr;
    const AlgebraPtr alg = GradedAlgebra::create(ring, doc.generators, cap ? cap : doc.cap);
    std::vector<Element> diff(alg->generators().size(), alg->zero());
    for (const auto& [name, text] : doc.differential) {
        auto idx = alg->generator_index(name);
        if (!idx) schema_error("differential given for unknown generator '" + name + "'");
        diff[*idx] = in_context("differential of " + name, [&] { return parse_element(text, *alg); });
    }
    return DGA::create(alg, diff);
}

AlgebraDocument document_from_ring(const FiniteGradedRing& ring, bool integral) {
    AlgebraDocument doc;
    doc.kind = integral ? "integral_ring" : "finite_ring";
    if (ring.is_monomial_presentation()) {
        doc.generators = ring.generators();
        for (const auto& r : ring.relations()) doc.relations.push_back(monomial_text(r, ring.generators()));
    } else {
        for (std::size_t k = 1; k < ring.size(); ++k) doc.basis.push_back({ring.name(k), ring.degree(k)});
        for (std::size_t i = 1; i < ring.size(); ++i)
            for (std::size_t j = i; j < ring.size(); ++j) {
                const SparseVector& p = ring.product(i, j);
                if (p.empty()) continue;
                doc.products[ring.name(i) + "*" + ring.name(j)] = ring_vector_text(ring, p);
            }
    }
    if (ring.omega()) {
        SparseVector w;
        for (std::size_t k = 0; k < ring.size(); ++k)
            if ((*ring.omega())[k] != 0) w.push_back({k, (*ring.omega())[k]});
        doc.omega = ring_vector_text(ring, w);
        doc.n = ring.half_dimension();
    }
    return doc;
}

AlgebraDocument document_from_dga(const DGA& dga) {
    const GradedAlgebra& alg = dga.algebra();
    AlgebraDocument doc;
    doc.kind = "free_dga";
    for (const auto& g : alg.generators()) doc.generators.push_back({g.name, g.degree});
    for (const auto& g : alg.generators()) {
        const Element& d = dga.d_generator(g.index);
        if (!d.is_zero()) doc.differential[g.name] = d.to_string();
    }
    if (!alg.top_degree() || alg.cap() != *alg.top_degree() + 1) doc.cap = alg.cap();
    if (alg.ring().size() > 1)
        doc.ring = std::make_shared<AlgebraDocument>(document_from_ring(alg.ring(), alg.ring().has_integral_constants()));
    return doc;
}

AlgebraDocument canonicalize(const AlgebraDocument& doc) {
    if (doc.is_ring()) {
        AlgebraDocument out = document_from_ring(*build_ring(doc), doc.kind == "integral_ring");
        return out;
    }
    AlgebraDocument out = document_from_dga(*build_dga(doc));
    out.cap = doc.cap;
    if (doc.ring) out.ring = std::make_shared<AlgebraDocument>(canonicalize(*doc.ring));
    return out;
}

}  // namespace sullivan

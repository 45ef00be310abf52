#include "sullivan/corpus.hpp"

#include "sullivan/document.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/expression.hpp"
#include "sullivan/formality.hpp"
#include "sullivan/geomodels.hpp"
#include "sullivan/gysin.hpp"
#include "sullivan/massey.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace sullivan {

namespace {

using json = nlohmann::json;

const std::set<std::string>& known_origins() {
    static const std::set<std::string> origins = {"worked-example", "derived", "elementary"};
    return origins;
}

CorpusEntry parse_entry(const EmbeddedDocument& raw) {
    json j;
    try {
        j = json::parse(raw.text);
    } catch (const json::parse_error& e) {
        throw PreconditionError("corpus file " + raw.name + ": " + e.what());
    }
    CorpusEntry out;
    out.id = j.at("id").get<std::string>();
    if (out.id != raw.name) throw PreconditionError("corpus file " + raw.name + " declares id " + out.id);
    out.description = j.value("description", "");
    out.origin = j.value("origin", "");
    // Round trip through the document parser so the stored text is canonical.
    out.document = serialize_document(parse_document(j.at("document").dump()));
    out.expected = j.at("expected").dump(2);
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

template <typename T>
std::string join_numbers(const std::vector<T>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(std::to_string(x));
    return join(parts);
}

Element element_of(const std::string& text, const GradedAlgebra& alg) { return parse_element(text, alg); }

CohomologyClass class_of_text(const Cohomology& h, const std::string& text) {
    const Element e = element_of(text, h.algebra());
    if (!e.degree()) throw PreconditionError("'" + text + "' is not homogeneous");
    return h.class_of(e, *e.degree());
}

Vector ring_vector_of(const RingPtr& ring, const std::string& text) {
    const AlgebraPtr alg = GradedAlgebra::create(ring, {}, std::nullopt);
    const Element e = parse_element(text, *alg);
    Vector v(ring->size());
    for (const auto& [m, c] : e.terms()) v[m.ring] += c;
    return v;
}

std::vector<std::size_t> betti_list(const DGAPtr& dga, std::size_t count, unsigned threads) {
    Cohomology h(dga);
    return h.betti_numbers(0, static_cast<int>(count) - 1, threads);
}

struct Context {
    const AlgebraDocument& doc;
    unsigned threads;

    DGAPtr dga(const json& item) const {
        std::optional<int> cap;
        if (item.contains("cap") && item.at("check") != "formality" && item.at("check") != "quasi_iso")
            cap = item.at("cap").get<int>();
        return build_dga(doc, cap);
    }
};

using Checker = std::function<std::pair<bool, std::string>(const Context&, const json&)>;

std::pair<bool, std::string> check_betti(const Context& ctx, const json& item) {
    const auto expected = item.at("values").get<std::vector<std::size_t>>();
    const int from = item.value("from", 0);
    Cohomology h(ctx.dga(item));
    const auto got = h.betti_numbers(from, from + static_cast<int>(expected.size()) - 1, ctx.threads);
    return {got == expected, "betti " + join_numbers(got)};
}

std::pair<bool, std::string> check_classes(const Context& ctx, const json& item) {
    const int k = item.at("degree").get<int>();
    Cohomology h(ctx.dga(item));
    std::vector<Vector> rows;
    for (const auto& text : item.at("representatives")) {
        const Element e = element_of(text.get<std::string>(), h.algebra());
        if (!e.is_zero() && e.degree() != k) return {false, text.get<std::string>() + " has the wrong degree"};
        if (!h.is_closed(e)) return {false, text.get<std::string>() + " is not closed"};
        rows.push_back(h.coordinates(e, k));
    }
    const std::size_t rank = Subspace(h.betti(k), rows).dimension();
    const bool ok = rank == rows.size() && rank == h.betti(k);
    return {ok, "rank " + std::to_string(rank) + " of " + std::to_string(h.betti(k))};
}

std::pair<bool, std::string> check_massey(const Context& ctx, const json& item) {
    Cohomology h(ctx.dga(item));
    std::vector<CohomologyClass> classes;
    for (const auto& t : item.at("classes")) classes.push_back(class_of_text(h, t.get<std::string>()));
    MasseyResult r;
    try {
        if (classes.size() == 3) {
            r = triple_massey(h, classes[0], classes[1], classes[2]);
        } else {
            SearchPolicy policy;
            policy.seed = item.value("seed", 0);
            r = higher_massey_search(h, classes, policy);
        }
    } catch (const NotDefined& e) {
        const bool ok = item.at("verdict") == "not_defined";
        return {ok, std::string("not defined: ") + e.what()};
    }
    bool ok = to_string(r.verdict) == item.at("verdict").get<std::string>();
    if (item.contains("indeterminacy")) ok = ok && r.indeterminacy.size() == item.at("indeterminacy").get<std::size_t>();
    return {ok, "verdict " + to_string(r.verdict) + ", indeterminacy " + std::to_string(r.indeterminacy.size())};
}

std::pair<bool, std::string> check_amassey(const Context& ctx, const json& item) {
    Cohomology h(ctx.dga(item));
    const CohomologyClass a = class_of_text(h, item.at("a").get<std::string>());
    std::vector<CohomologyClass> bs;
    for (const auto& t : item.at("classes")) bs.push_back(class_of_text(h, t.get<std::string>()));
    try {
        const MasseyResult r = a_massey(h, a, bs);
        return {to_string(r.verdict) == item.at("verdict").get<std::string>(), "verdict " + to_string(r.verdict)};
    } catch (const NotDefined& e) {
        return {item.at("verdict") == "not_defined", std::string("not defined: ") + e.what()};
    }
}

std::pair<bool, std::string> check_minimal(const Context& ctx, const json& item) {
    const bool got = build_dga(ctx.doc)->is_minimal();
    return {got == item.at("value").get<bool>(), got ? "minimal" : "not minimal"};
}

std::pair<bool, std::string> check_cn(const Context& ctx, const json& item) {
    const int i = item.at("degree").get<int>();
    const DGAPtr dga = build_dga(ctx.doc);
    const CNDecomposition cn = cn_decomposition(*dga, i);
    const CNDegree& deg = cn.at(i);
    std::vector<std::string> names;
    for (const auto& e : deg.complement) names.push_back(e.to_string());
    const auto expected = item.at("complement").get<std::vector<std::string>>();
    const bool ok = names == expected && deg.closed.size() == item.at("closed").get<std::size_t>();
    return {ok, "C dim " + std::to_string(deg.closed.size()) + ", N = <" + join(names, ", ") + ">"};
}

std::pair<bool, std::string> check_formality(const Context& ctx, const json& item) {
    const DGAPtr dga = build_dga(ctx.doc);
    const int cap = item.at("cap").get<int>();
    const FormalityVerdict v = item.contains("dimension")
                                   ? formality_by_dimension(*dga, item.at("dimension").get<int>(), cap, ctx.threads)
                                   : s_formality_check(*dga, item.at("s").get<int>(), cap, ctx.threads);
    std::string detail = "status " + to_string(v.status);
    if (v.witness) detail += ", witness " + v.witness->to_string();
    return {to_string(v.status) == item.at("status").get<std::string>(), detail};
}

std::pair<bool, std::string> check_quasi_iso(const Context& ctx, const json& item) {
    const int cap = item.at("cap").get<int>();
    const DGAPtr source = build_dga(ctx.doc, cap + 1);
    const DGAPtr target = build_dga(parse_document(corpus_document_text(item.at("target").get<std::string>())), cap + 1);
    std::map<std::string, Element> images;
    for (const auto& [name, text] : item.at("images").items())
        images.emplace(name, parse_element(text.get<std::string>(), target->algebra()));
    const QuasiIsoReport r = quasi_iso_check(*source, *target, images, cap);
    std::string detail = r.quasi_isomorphism ? "quasi-isomorphism" : "not a quasi-isomorphism";
    if (r.failing_degree) detail += " (degree " + std::to_string(*r.failing_degree) + ")";
    if (r.chain_failure) detail += " (not a chain map at " + *r.chain_failure + ")";
    return {r.quasi_isomorphism == item.at("value").get<bool>(), detail};
}

std::pair<bool, std::string> check_report(const Context& ctx, const json& item) {
    ObstructionInput in;
    in.model = build_dga(ctx.doc);
    in.dimension = item.at("dimension").get<int>();
    in.threads = ctx.threads;
    const ObstructionReport r = obstruction_report(in);
    return {r.verdict() == item.at("verdict").get<std::string>(), r.verdict()};
}

std::pair<bool, std::string> check_lefschetz(const Context& ctx, const json& item) {
    const LefschetzReport r = hard_lefschetz_check(*build_ring(ctx.doc));
    return {r.holds == item.at("holds").get<bool>(), r.holds ? "holds" : "fails"};
}

std::pair<bool, std::string> compare_betti(const DGAPtr& dga, const json& item, unsigned threads) {
    const auto expected = item.at("betti").get<std::vector<std::size_t>>();
    const auto got = betti_list(dga, expected.size(), threads);
    return {got == expected, "betti " + join_numbers(got)};
}

std::pair<bool, std::string> check_tievsky(const Context& ctx, const json& item) {
    const RingPtr ring = build_ring(ctx.doc);
    const ExtensionDGA e = tievsky_model(ring, ring_vector_of(ring, item.at("class").get<std::string>()));
    return compare_betti(e.dga, item, ctx.threads);
}

std::pair<bool, std::string> check_extension(const Context& ctx, const json& item) {
    return compare_betti(lefschetz_extension(build_ring(ctx.doc)).dga, item, ctx.threads);
}

std::pair<bool, std::string> check_gysin(const Context& ctx, const json& item) {
    const RingPtr ring = build_ring(ctx.doc);
    const GysinResult r = gysin_total(*ring, item.at("fiber").get<int>(),
                                      ring_vector_of(ring, item.at("euler").get<std::string>()), ctx.threads);
    std::vector<std::string> got;
    for (const auto& d : r.degrees) got.push_back(d.group.to_string());
    return {got == item.at("groups").get<std::vector<std::string>>(), join(got, ", ")};
}

std::pair<bool, std::string> check_circle_bundle(const Context& ctx, const json& item) {
    const DGAPtr base = ctx.dga(item);
    Cohomology h(base);
    const ExtensionDGA e = circle_bundle_model(base, class_of_text(h, item.at("euler").get<std::string>()));
    return compare_betti(e.dga, item, ctx.threads);
}

std::pair<bool, std::string> check_sphere_bundle(const Context& ctx, const json& item) {
    const DGAPtr base = ctx.dga(item);
    Cohomology h(base);
    std::optional<int> base_dim;
    if (item.contains("base_dimension")) base_dim = item.at("base_dimension").get<int>();
    const ExtensionDGA e = sphere_bundle_model(base, item.at("fiber").get<int>(),
                                               class_of_text(h, item.at("euler").get<std::string>()), base_dim);
    return compare_betti(e.dga, item, ctx.threads);
}

const std::map<std::string, Checker>& checkers() {
    static const std::map<std::string, Checker> table = {
        {"betti", check_betti},
        {"classes", check_classes},
        {"massey", check_massey},
        {"amassey", check_amassey},
        {"minimal", check_minimal},
        {"cn", check_cn},
        {"formality", check_formality},
        {"quasi_iso", check_quasi_iso},
        {"report", check_report},
        {"lefschetz", check_lefschetz},
        {"tievsky", check_tievsky},
        {"extension", check_extension},
        {"gysin", check_gysin},
        {"circle_bundle", check_circle_bundle},
        {"sphere_bundle", check_sphere_bundle},
    };
    return table;
}

std::string item_label(const json& item) {
    std::string label = item.at("check").get<std::string>();
    for (const char* key : {"degree", "s", "dimension", "fiber", "euler", "class", "a", "classes", "target"}) {
        if (!item.contains(key)) continue;
        const json& v = item.at(key);
        std::string text;
        if (v.is_string()) {
            text = v.get<std::string>();
        } else if (v.is_array()) {
            std::vector<std::string> parts;
            for (const auto& x : v) parts.push_back(x.get<std::string>());
            text = join(parts, ",");
        } else {
            text = v.dump();
        }
        label += std::string(" ") + key + "=" + text;
    }
    return label;
}

}  // namespace

std::vector<CorpusEntry> corpus_entries() {
    std::vector<CorpusEntry> out;
    for (const auto& raw : embedded_corpus()) out.push_back(parse_entry(raw));
    std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
    return out;
}

CorpusEntry corpus_entry(const std::string& id) {
    for (const auto& raw : embedded_corpus())
        if (raw.name == id) return parse_entry(raw);
    throw PreconditionError("unknown corpus entry '" + id + "'");
}

std::string corpus_document_text(const std::string& id) { return corpus_entry(id).document; }

std::vector<CorpusCheck> check_corpus_entry(const CorpusEntry& entry, unsigned threads) {
    const AlgebraDocument doc = parse_document(entry.document);
    const Context ctx{doc, threads};
    std::vector<CorpusCheck> out;
    for (const auto& item : json::parse(entry.expected)) {
        CorpusCheck c;
        c.id = entry.id;
        c.item = item.contains("check") ? item_label(item) : "?";
        c.origin = item.value("origin", "");
        if (!known_origins().count(c.origin)) {
            c.detail = "missing or unknown origin";
            out.push_back(c);
            continue;
        }
        auto it = checkers().find(item.value("check", ""));
        if (it == checkers().end()) {
            c.detail = "unknown check";
            out.push_back(c);
            continue;
        }
        try {
            std::tie(c.passed, c.detail) = it->second(ctx, item);
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = std::string("error: ") + e.what();
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace sullivan

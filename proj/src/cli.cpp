#include "sullivan/cli.hpp"

#include "sullivan/cohomology.hpp"
#include "sullivan/corpus.hpp"
#include "sullivan/document.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/expression.hpp"
#include "sullivan/formality.hpp"
#include "sullivan/geomodels.hpp"
#include "sullivan/gysin.hpp"
#include "sullivan/massey.hpp"
#include "sullivan/parallel.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace sullivan {

namespace {

using json = nlohmann::json;

// A negative verdict: the command ran fine but the answer is "no".
struct Negative {};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int k = std::stoi(text);
            return {k, k};
        }
        const int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
        if (lo < 0 || hi < lo) throw PreconditionError("bad degree range '" + text + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw PreconditionError("bad degree range '" + text + "' (expected a..b)");
    }
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string vector_text(const Vector& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(to_string(x));
    return "(" + join(parts, ", ") + ")";
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

// Rings become DGAs with no generators and zero differential.
DGAPtr load_dga(const AlgebraDocument& doc, std::optional<int> cap) {
    if (doc.is_ring()) return DGA::create(GradedAlgebra::create(build_ring(doc), {}, std::nullopt), {});
    return build_dga(doc, cap);
}

RingPtr load_ring(const AlgebraDocument& doc) {
    if (!doc.is_ring()) throw PreconditionError("this command needs a finite_ring or integral_ring document");
    return build_ring(doc);
}

Vector ring_vector(const RingPtr& ring, const std::string& text) {
    const AlgebraPtr alg = GradedAlgebra::create(ring, {}, std::nullopt);
    const Element e = parse_element(text, *alg);
    Vector v(ring->size());
    for (const auto& [m, c] : e.terms()) v[m.ring] += c;
    return v;
}

CohomologyClass parse_class(const Cohomology& h, const std::string& text) {
    const Element e = parse_element(text, h.algebra());
    if (e.is_zero()) throw PreconditionError("'" + text + "' is zero; give a nonzero class representative");
    if (!e.is_homogeneous()) throw PreconditionError("'" + text + "' is not homogeneous");
    if (!h.is_closed(e)) throw PreconditionError("'" + text + "' is not closed");
    return h.class_of(e, *e.degree());
}

std::pair<int, int> default_range(const DGA& dga) {
    const GradedAlgebra& alg = dga.algebra();
    if (alg.top_degree() && *alg.top_degree() < alg.cap()) return {0, *alg.top_degree()};
    return {0, alg.cap() - 1};
}

struct Options {
    std::string source;
    std::optional<int> cap;
    bool as_json = false;
    std::uint64_t seed = 0;
    std::string degrees;
    std::string classes;
    std::string a;
    std::optional<int> s;
    std::optional<int> dimension;
    int fiber = 1;
    std::string euler;
    std::optional<int> base_dimension;
    std::optional<int> degree;
    std::string cls;
    std::string betti;
    std::string name;
    std::vector<std::string> ids;
    bool basis = false;
};

class Runner {
public:
    explicit Runner(const Options& o) : o_(o), threads_(default_threads()) {}

    std::ostringstream out;

    void validate() {
        const AlgebraDocument doc = load_document(o_.source);
        if (doc.is_ring()) {
            const RingPtr ring = build_ring(doc);
            emit({{"kind", doc.kind}, {"dimension", ring->size()}, {"top_degree", ring->top_degree()}},
                 {"kind: " + doc.kind, "basis size: " + std::to_string(ring->size()),
                  "top degree: " + std::to_string(ring->top_degree()), "status: ok"});
            return;
        }
        const DGAPtr dga = build_dga(doc, o_.cap);
        const GradedAlgebra& alg = dga->algebra();
        json j{{"kind", doc.kind}, {"cap", alg.cap()}, {"minimal", dga->is_minimal()}, {"unverified", dga->unverified()}};
        std::vector<std::string> lines{"kind: " + doc.kind};
        std::vector<std::string> gens;
        json jg = json::array();
        for (const auto& g : alg.generators()) {
            gens.push_back(g.name + ":" + std::to_string(g.degree));
            jg.push_back({{"name", g.name}, {"degree", g.degree}});
        }
        j["generators"] = jg;
        lines.push_back("generators: " + join(gens, " "));
        json jd = json::object();
        for (const auto& g : alg.generators()) {
            const Element& d = dga->d_generator(g.index);
            jd[g.name] = d.to_string();
            lines.push_back("d(" + g.name + ") = " + d.to_string());
        }
        j["differential"] = jd;
        lines.push_back("cap: " + std::to_string(alg.cap()));
        lines.push_back(std::string("minimal: ") + (dga->is_minimal() ? "yes" : "no"));
        if (!dga->unverified().empty())
            lines.push_back("d^2 unchecked above the cap for: " + join(dga->unverified(), ", "));
        lines.push_back("status: ok");
        emit(j, lines);
    }

    void cohomology() {
        const DGAPtr dga = load_dga(load_document(o_.source), o_.cap);
        Cohomology h(dga);
        auto [lo, hi] = o_.degrees.empty() ? default_range(*dga) : parse_range(o_.degrees);
        for (int k = lo; k <= hi; ++k) h.require(k);
        const auto betti = h.betti_numbers(lo, hi, threads_);
        std::vector<std::string> parts;
        for (auto b : betti) parts.push_back(std::to_string(b));
        json j{{"degrees", {lo, hi}}, {"betti", betti}};
        std::vector<std::string> lines{"betti: " + join(parts, " ")};
        json jb = json::object();
        for (int k = lo; k <= hi; ++k) {
            std::vector<std::string> reps;
            for (const auto& r : h.basis(k).representatives) reps.push_back(r.to_string());
            jb[std::to_string(k)] = reps;
            std::vector<std::string> wrapped;
            for (const auto& r : reps) wrapped.push_back("[" + r + "]");
            lines.push_back("H^" + std::to_string(k) + ": " + (reps.empty() ? "0" : join(wrapped, ", ")));
        }
        j["basis"] = jb;
        emit(j, lines);
    }

    void cup() {
        const DGAPtr dga = load_dga(load_document(o_.source), o_.cap);
        Cohomology h(dga);
        const auto texts = class_list();
        if (texts.size() < 2) throw PreconditionError("cup needs at least two classes");
        CohomologyClass c = parse_class(h, texts[0]);
        for (std::size_t i = 1; i < texts.size(); ++i) c = h.cup(c, parse_class(h, texts[i]));
        emit({{"degree", c.degree}, {"representative", c.representative.to_string()},
              {"coordinates", vector_json(c.coordinates)}, {"zero", c.is_zero()}},
             {"degree: " + std::to_string(c.degree), "product: " + c.representative.to_string(),
              "coordinates: " + vector_text(c.coordinates), std::string("zero: ") + (c.is_zero() ? "yes" : "no")});
    }

    void massey() {
        const DGAPtr dga = load_dga(load_document(o_.source), o_.cap);
        Cohomology h(dga);
        std::vector<CohomologyClass> classes;
        for (const auto& t : class_list()) classes.push_back(parse_class(h, t));
        if (classes.size() < 3) throw PreconditionError("a Massey product needs at least three classes");
        SearchPolicy policy;
        policy.seed = o_.seed;
        const MasseyResult r = run_massey([&] {
            return classes.size() == 3 ? triple_massey(h, classes[0], classes[1], classes[2])
                                       : higher_massey_search(h, classes, policy);
        });
        report_massey(r);
    }

    void amassey() {
        const DGAPtr dga = load_dga(load_document(o_.source), o_.cap);
        Cohomology h(dga);
        if (o_.a.empty()) throw PreconditionError("amassey needs --a");
        const CohomologyClass a = parse_class(h, o_.a);
        std::vector<CohomologyClass> bs;
        for (const auto& t : class_list()) bs.push_back(parse_class(h, t));
        SearchPolicy policy;
        policy.seed = o_.seed;
        report_massey(run_massey([&] { return a_massey(h, a, bs, policy); }));
    }

    void formality() {
        const DGAPtr dga = build_dga(load_document(o_.source));
        if (o_.s.has_value() == o_.dimension.has_value())
            throw PreconditionError("formality needs exactly one of --s and --dimension");
        const int cap = o_.cap.value_or(dga->algebra().cap());
        const FormalityVerdict v = o_.dimension ? formality_by_dimension(*dga, *o_.dimension, cap, threads_)
                                                : s_formality_check(*dga, *o_.s, cap, threads_);
        json j{{"status", to_string(v.status)}, {"s", v.s}, {"cap", v.cap}, {"complement", v.complement}, {"notes", v.notes}};
        std::vector<std::string> lines{"status: " + to_string(v.status), "s: " + std::to_string(v.s),
                                       "cap: " + std::to_string(v.cap), "complement: " + v.complement};
        if (v.manifold_dimension) {
            j["dimension"] = *v.manifold_dimension;
            lines.push_back("dimension: " + std::to_string(*v.manifold_dimension));
        }
        if (v.witness) {
            j["witness"] = v.witness->to_string();
            j["witness_degree"] = *v.degree;
            lines.push_back("witness: " + v.witness->to_string() + " (degree " + std::to_string(*v.degree) + ")");
        }
        for (const auto& n : v.notes) lines.push_back("note: " + n);
        emit(j, lines);
        if (v.status == FormalityStatus::not_s_formal) throw Negative{};
    }

    void lefschetz() {
        const RingPtr ring = load_ring(load_document(o_.source));
        const LefschetzReport r = hard_lefschetz_check(*ring);
        json maps = json::array();
        std::vector<std::string> lines{"n: " + std::to_string(r.n)};
        for (const auto& m : r.maps) {
            maps.push_back({{"k", m.k}, {"source_dim", m.source_dim}, {"target_dim", m.target_dim}, {"rank", m.rank},
                            {"bijective", m.bijective()}});
            lines.push_back("omega^" + std::to_string(m.k) + ": A^" + std::to_string(r.n - m.k) + " -> A^" +
                            std::to_string(r.n + m.k) + " rank " + std::to_string(m.rank) + " (" +
                            std::to_string(m.source_dim) + " -> " + std::to_string(m.target_dim) + ")" +
                            (m.bijective() ? "" : " not bijective"));
        }
        lines.push_back(std::string("hard lefschetz: ") + (r.holds ? "holds" : "fails"));
        json j{{"n", r.n}, {"maps", maps}, {"holds", r.holds}};
        if (r.first_failure) j["first_failure"] = *r.first_failure;
        emit(j, lines);
        if (!r.holds) throw Negative{};
    }

    void tievsky() {
        const RingPtr ring = load_ring(load_document(o_.source));
        if (o_.cls.empty()) throw PreconditionError("tievsky needs --class");
        const ExtensionDGA e = tievsky_model(ring, ring_vector(ring, o_.cls), o_.name.empty() ? "x" : o_.name);
        model_summary(e);
    }

    void bundle() {
        const DGAPtr base = load_dga(load_document(o_.source), o_.cap);
        Cohomology h(base);
        std::optional<CohomologyClass> euler;
        if (!o_.euler.empty()) euler = parse_class(h, o_.euler);
        ExtensionDGA e;
        if (o_.fiber == 1) {
            if (!euler) throw PreconditionError("a circle bundle needs --euler");
            e = circle_bundle_model(base, *euler, o_.name.empty() ? "t" : o_.name);
        } else {
            e = sphere_bundle_model(base, o_.fiber, euler, o_.base_dimension, o_.name.empty() ? "z" : o_.name);
        }
        model_summary(e);
    }

    void gysin() {
        const RingPtr ring = load_ring(load_document(o_.source));
        if (o_.euler.empty()) throw PreconditionError("gysin needs --euler");
        const GysinResult r = gysin_total(*ring, o_.fiber, ring_vector(ring, o_.euler), threads_);
        json groups = json::object();
        std::vector<std::string> lines;
        for (const auto& d : r.degrees) {
            if (o_.degree && d.degree != *o_.degree) continue;
            groups[std::to_string(d.degree)] = d.group.to_string();
            lines.push_back("H^" + std::to_string(d.degree) + ": " + d.group.to_string());
        }
        if (o_.degree && lines.empty()) {
            groups[std::to_string(*o_.degree)] = "0";
            lines.push_back("H^" + std::to_string(*o_.degree) + ": 0");
        }
        emit({{"fiber", r.fiber_dim}, {"groups", groups}}, lines);
    }

    void report() {
        ObstructionInput in;
        in.threads = threads_;
        in.policy.seed = o_.seed;
        if (!o_.source.empty()) in.model = load_dga(load_document(o_.source), o_.cap);
        if (!o_.betti.empty()) {
            std::vector<std::size_t> b;
            for (const auto& t : split(o_.betti, ',')) {
                try {
                    b.push_back(std::stoul(trim(t)));
                } catch (const std::logic_error&) {
                    throw PreconditionError("bad Betti list '" + o_.betti + "'");
                }
            }
            in.betti = b;
        }
        if (!in.model && !in.betti) throw PreconditionError("report needs a model or --betti");
        in.dimension = o_.dimension;
        const ObstructionReport r = obstruction_report(in);
        json checks = json::array();
        std::vector<std::string> lines{"dimension: " + std::to_string(r.dimension)};
        std::vector<std::string> b, bb;
        for (auto x : r.betti) b.push_back(std::to_string(x));
        for (auto x : r.basic_betti) bb.push_back(std::to_string(x));
        lines.push_back("betti: " + join(b, " "));
        lines.push_back("basic betti: " + join(bb, " "));
        if (r.cup_length) lines.push_back("cup length: " + std::to_string(*r.cup_length));
        for (const auto& c : r.checks) {
            checks.push_back({{"rule", c.rule}, {"passed", c.passed}, {"detail", c.detail}});
            lines.push_back("check " + c.rule + ": " + (c.passed ? "passed" : "failed") +
                            (c.detail.empty() ? "" : " (" + trim(c.detail) + ")"));
        }
        for (const auto& i : r.informational) lines.push_back("note: " + i);
        for (const auto& reason : r.reasons) lines.push_back("reason: " + reason);
        lines.push_back("verdict: " + r.verdict());
        json j{{"dimension", r.dimension}, {"betti", r.betti}, {"basic_betti", r.basic_betti}, {"checks", checks},
               {"informational", r.informational}, {"reasons", r.reasons}, {"verdict", r.verdict()},
               {"quadruple_tested", r.quadruple_tested}, {"amassey_tested", r.amassey_tested},
               {"undecided", r.undecided}};
        if (r.cup_length) j["cup_length"] = *r.cup_length;
        emit(j, lines);
        if (r.obstructed()) throw Negative{};
    }

    void corpus_list() {
        json j = json::array();
        std::vector<std::string> lines;
        for (const auto& e : corpus_entries()) {
            j.push_back({{"id", e.id}, {"description", e.description}, {"origin", e.origin}});
            lines.push_back(e.id + "  " + e.description);
        }
        emit(j, lines);
    }

    void corpus_show() {
        if (o_.ids.size() != 1) throw PreconditionError("corpus show needs one id");
        const CorpusEntry e = corpus_entry(o_.ids[0]);
        if (o_.as_json) {
            json j{{"id", e.id}, {"description", e.description}, {"origin", e.origin},
                   {"document", json::parse(e.document)}, {"expected", json::parse(e.expected)}};
            out << j.dump(2) << "\n";
            return;
        }
        out << e.document;
    }

    void corpus_check() {
        std::vector<CorpusEntry> entries;
        if (o_.ids.empty()) {
            entries = corpus_entries();
        } else {
            for (const auto& id : o_.ids) entries.push_back(corpus_entry(id));
        }
        std::size_t passed = 0, total = 0;
        json j = json::array();
        std::vector<std::string> lines;
        for (const auto& e : entries)
            for (const auto& c : check_corpus_entry(e, threads_)) {
                ++total;
                if (c.passed) ++passed;
                j.push_back({{"id", c.id}, {"item", c.item}, {"origin", c.origin}, {"passed", c.passed}, {"detail", c.detail}});
                lines.push_back(std::string(c.passed ? "PASS " : "FAIL ") + c.id + " " + c.item + " [" + c.origin +
                                "]: " + c.detail);
            }
        lines.push_back("corpus: " + std::to_string(passed) + "/" + std::to_string(total) + " passed");
        emit(j, lines);
        if (passed != total) throw Negative{};
    }

private:
    void emit(const json& j, const std::vector<std::string>& lines) {
        if (o_.as_json) {
            out << j.dump(2) << "\n";
            return;
        }
        for (const auto& l : lines) out << l << "\n";
    }

    std::vector<std::string> class_list() const {
        if (o_.classes.empty()) throw PreconditionError("missing --classes");
        std::vector<std::string> out;
        for (const auto& t : split(o_.classes, ',')) out.push_back(trim(t));
        return out;
    }

    template <typename F>
    MasseyResult run_massey(F&& f) {
        try {
            return f();
        } catch (const NotDefined& e) {
            emit({{"verdict", "not_defined"}, {"reason", e.what()}, {"obstruction", e.obstruction()}},
                 {"verdict: not_defined", std::string("reason: ") + e.what(), "obstruction: " + e.obstruction()});
            throw Negative{};
        }
    }

    void report_massey(const MasseyResult& r) {
        std::vector<std::string> ind;
        json jind = json::array();
        for (const auto& v : r.indeterminacy) {
            ind.push_back(vector_text(v));
            jind.push_back(vector_json(v));
        }
        json j{{"kind", r.kind}, {"order", r.order}, {"degree", r.degree}, {"verdict", to_string(r.verdict)},
               {"value", r.value.representative.to_string()}, {"value_coordinates", vector_json(r.value.coordinates)},
               {"indeterminacy", jind}, {"method", r.method}};
        std::vector<std::string> lines{"kind: " + r.kind, "order: " + std::to_string(r.order),
                                       "degree: " + std::to_string(r.degree), "verdict: " + to_string(r.verdict),
                                       "value: " + r.value.representative.to_string(),
                                       "value coordinates: " + vector_text(r.value.coordinates),
                                       "indeterminacy: " + (ind.empty() ? std::string("0") : join(ind, " "))};
        if (r.certificate) {
            j["certificate"] = vector_json(*r.certificate);
            lines.push_back("certificate: " + vector_text(*r.certificate));
        }
        if (r.witness) {
            json w = json::object();
            for (const auto& [ij, e] : r.witness->entries) {
                const std::string key = "a(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")";
                w[key] = e.to_string();
                lines.push_back("witness " + key + " = " + e.to_string());
            }
            j["witness"] = w;
        }
        if (r.amassey_witness) {
            json p = json::array();
            for (std::size_t i = 0; i < r.amassey_witness->primitives.size(); ++i) {
                p.push_back(r.amassey_witness->primitives[i].to_string());
                lines.push_back("witness xi(" + std::to_string(i + 1) + ") = " + r.amassey_witness->primitives[i].to_string());
            }
            j["primitives"] = p;
        }
        lines.push_back("method: " + r.method);
        emit(j, lines);
    }

    void model_summary(const ExtensionDGA& e) {
        const DGA& dga = *e.dga;
        Cohomology h(e.dga);
        auto [lo, hi] = o_.degrees.empty() ? default_range(dga) : parse_range(o_.degrees);
        const auto betti = h.betti_numbers(lo, hi, threads_);
        std::vector<std::string> parts;
        for (auto b : betti) parts.push_back(std::to_string(b));
        json d = json::object();
        std::vector<std::string> lines;
        for (const auto& name : e.new_generators) {
            const auto idx = dga.algebra().generator_index(name);
            const std::string text = dga.d_generator(*idx).to_string();
            d[name] = text;
            lines.push_back("d(" + name + ") = " + text);
        }
        lines.push_back("betti: " + join(parts, " "));
        emit({{"differential", d}, {"degrees", {lo, hi}}, {"betti", betti}}, lines);
    }

    const Options& o_;
    unsigned threads_;
};

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"Computations in rational homotopy theory", "sullivan-lab"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool source = true) {
        if (source) sub->add_option("source", o.source, "document path or corpus:<id>")->required();
        sub->add_option("--cap", o.cap, "degree cap");
        sub->add_flag("--json", o.as_json, "canonical JSON output");
    };

    auto* validate = app.add_subcommand("validate", "parse a document and check d^2 = 0");
    common(validate);
    auto* cohomology = app.add_subcommand("cohomology", "Betti numbers and class representatives");
    common(cohomology);
    cohomology->add_option("--degrees", o.degrees, "degree range a..b");
    auto* cup = app.add_subcommand("cup", "cup product of classes");
    common(cup);
    cup->add_option("--classes", o.classes, "comma-separated representatives")->required();
    auto* massey = app.add_subcommand("massey", "triple or higher Massey product");
    common(massey);
    massey->add_option("--classes", o.classes, "comma-separated representatives")->required();
    massey->add_option("--seed", o.seed, "seed for the search");
    auto* amassey = app.add_subcommand("amassey", "a-Massey product <a; b1, ..., bm>");
    common(amassey);
    amassey->add_option("--a", o.a, "even class a")->required();
    amassey->add_option("--classes", o.classes, "comma-separated b_i")->required();
    amassey->add_option("--seed", o.seed, "seed for the search");
    auto* formality = app.add_subcommand("formality", "s-formality of a minimal model");
    common(formality);
    formality->add_option("--s", o.s, "stage s");
    formality->add_option("--dimension", o.dimension, "manifold dimension (uses the dimension rule)");
    auto* lefschetz = app.add_subcommand("lefschetz", "hard Lefschetz check for a ring with omega");
    common(lefschetz);
    auto* tievsky = app.add_subcommand("tievsky", "model H_B (x) L(x), dx = class");
    common(tievsky);
    tievsky->add_option("--class", o.cls, "degree-2 class of the ring")->required();
    tievsky->add_option("--name", o.name, "name of the new generator");
    tievsky->add_option("--degrees", o.degrees, "degree range a..b");
    auto* bundle = app.add_subcommand("bundle", "model of an odd-sphere bundle over a DGA");
    common(bundle);
    bundle->add_option("--fiber", o.fiber, "fiber dimension (odd)");
    bundle->add_option("--euler", o.euler, "Euler class representative");
    bundle->add_option("--base-dim", o.base_dimension, "formal dimension of the base");
    bundle->add_option("--name", o.name, "name of the new generator");
    bundle->add_option("--degrees", o.degrees, "degree range a..b");
    auto* gysin = app.add_subcommand("gysin", "integral cohomology of a sphere bundle");
    common(gysin);
    gysin->add_option("--fiber", o.fiber, "fiber dimension (odd)");
    gysin->add_option("--euler", o.euler, "integral Euler class")->required();
    gysin->add_option("--degree", o.degree, "only this degree");
    auto* report = app.add_subcommand("report", "Sasakian obstruction report");
    report->add_option("source", o.source, "document path or corpus:<id>");
    report->add_option("--cap", o.cap, "degree cap");
    report->add_flag("--json", o.as_json, "canonical JSON output");
    report->add_option("--dimension", o.dimension, "manifold dimension 2n+1");
    report->add_option("--betti", o.betti, "Betti list b_0,...,b_{2n+1}");
    report->add_option("--seed", o.seed, "seed for the Massey searches");
    auto* corpus = app.add_subcommand("corpus", "built-in example documents");
    corpus->require_subcommand(1);
    auto* clist = corpus->add_subcommand("list", "list entries");
    clist->add_flag("--json", o.as_json, "canonical JSON output");
    auto* cshow = corpus->add_subcommand("show", "print the document of an entry");
    cshow->add_option("id", o.ids)->required();
    cshow->add_flag("--json", o.as_json, "entry with expected results as JSON");
    auto* ccheck = corpus->add_subcommand("check", "recompute expected results");
    ccheck->add_option("ids", o.ids, "entries (default: all)");
    ccheck->add_flag("--json", o.as_json, "canonical JSON output");

    CommandResult result;
    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        result.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    Runner runner(o);
    try {
        if (validate->parsed()) runner.validate();
        else if (cohomology->parsed()) runner.cohomology();
        else if (cup->parsed()) runner.cup();
        else if (massey->parsed()) runner.massey();
        else if (amassey->parsed()) runner.amassey();
        else if (formality->parsed()) runner.formality();
        else if (lefschetz->parsed()) runner.lefschetz();
        else if (tievsky->parsed()) runner.tievsky();
        else if (bundle->parsed()) runner.bundle();
        else if (gysin->parsed()) runner.gysin();
        else if (report->parsed()) runner.report();
        else if (clist->parsed()) runner.corpus_list();
        else if (cshow->parsed()) runner.corpus_show();
        else if (ccheck->parsed()) runner.corpus_check();
        result.exit_code = 0;
    } catch (const Negative&) {
        result.exit_code = 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        result.exit_code = 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 2;
    } catch (const ValidationError& e) {
        err << "invalid: " << e.what() << "\n";
        result.exit_code = 1;
    } catch (const NotDefined& e) {
        err << "not defined: " << e.what() << "\n";
        result.exit_code = 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 2;
    }
    result.out = runner.out.str();
    result.err += err.str();
    return result;
}

}  // namespace sullivan

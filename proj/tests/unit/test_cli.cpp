#include "doctest.h"
#include "fixtures.hpp"

#include "sullivan/cli.hpp"
#include "sullivan/errors.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>

using namespace sullivan;

namespace {

CommandResult run(std::vector<std::string> args) { return run_command(args); }

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("documents round trip") {
    for (const auto& entry : corpus_entries()) {
        CAPTURE(entry.id);
        const AlgebraDocument d = parse_document(entry.document);
        const std::string once = serialize_document(d);
        CHECK(serialize_document(parse_document(once)) == once);
        const std::string canon = serialize_document(canonicalize(d));
        CHECK(serialize_document(canonicalize(parse_document(canon))) == canon);
    }
}

TEST_CASE("shipped documents") {
    const AlgebraDocument h = fixtures::doc("heisenberg3");
    CHECK(h.kind == "free_dga");
    CHECK(h.generators.size() == 3);
    for (const auto& g : h.generators) CHECK(g.second == 1);
    CHECK(build_dga(h)->d_generator(2).to_string() == "-alpha*beta");
    const AlgebraDocument m = fixtures::doc("m7");
    CHECK(m.generators.size() == 5);
    CHECK(build_dga(m)->d_generator(4).to_string() == "2*a*b");
}

TEST_CASE("document errors") {
    try {
        build_dga(parse_document(R"({"version": 1, "kind": "free_dga", "generators": [{"name": "a", "degree": 1}],
                                     "differential": {"a": "q*a"}})"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(contains(e.what(), "'q'"));
    }
    try {
        parse_document("{\n  \"version\": 1,\n  \"kind\" \"free_dga\"\n}");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_document(R"({"version": 2, "kind": "free_dga", "generators": []})"), PreconditionError);
    CHECK_THROWS_AS(parse_document(R"({"version": 1, "kind": "lie", "generators": []})"), PreconditionError);
    CHECK_THROWS_AS(load_document("corpus:nope"), PreconditionError);
}

TEST_CASE("command examples") {
    const auto c = run({"cohomology", "corpus:b4", "--degrees", "0..4"});
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "betti: 1 2 2 2 1\n"));
    const auto m = run({"massey", "corpus:m7", "--classes", "a,a,b"});
    CHECK(m.exit_code == 0);
    CHECK(contains(m.out, "verdict: nonzero_certified\n"));
    const auto g = run({"gysin", "corpus:s2cubed", "--fiber", "1", "--euler", "a1+a2+a3", "--degree", "4"});
    CHECK(g.exit_code == 0);
    CHECK(g.out == "H^4: Z_2\n");
}

TEST_CASE("exit codes") {
    CHECK(run({"formality", "corpus:m7", "--s", "3"}).exit_code == 1);
    CHECK(run({"formality", "corpus:m7", "--s", "2"}).exit_code == 0);
    CHECK(run({"formality", "corpus:m5_minimal", "--dimension", "5"}).exit_code == 0);
    CHECK(run({"report", "--betti", "1,1,0,0,1,1"}).exit_code == 1);
    CHECK(run({"report", "corpus:m7", "--dimension", "7"}).exit_code == 0);
    CHECK(run({"lefschetz", "corpus:cp3"}).exit_code == 0);
    CHECK(run({"massey", "corpus:b4", "--classes", "gamma,mu,mu"}).exit_code == 1);
    CHECK(run({"cohomology", "corpus:nope"}).exit_code == 2);
    CHECK(run({"cohomology"}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"massey", "corpus:m7", "--classes", "a,a,q"}).exit_code == 2);
    CHECK(run({"gysin", "corpus:s2xs2", "--fiber", "1", "--euler", "a1*a2"}).exit_code == 2);
    CHECK(run({"cohomology", "corpus:m7", "--degrees", "0..9"}).exit_code == 2);
    CHECK(run({"validate", "corpus:m7"}).exit_code == 0);
    CHECK(run({"--help"}).exit_code == 0);

    const std::string path = "sullivan_bad_dga.json";
    std::ofstream(path) << R"({"version": 1, "kind": "free_dga",
        "generators": [{"name": "a", "degree": 2}, {"name": "x", "degree": 3}, {"name": "y", "degree": 4}],
        "differential": {"x": "a^2", "y": "a*x"}, "cap": 8})";
    const auto bad = run({"validate", path});
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.err, "y"));
    std::remove(path.c_str());
}

TEST_CASE("JSON output has sorted keys and parses") {
    const auto r = run({"massey", "corpus:m7", "--classes", "a,a,b", "--json"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("verdict") == "nonzero_certified");
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("output does not depend on the thread count") {
    const std::vector<std::vector<std::string>> commands = {
        {"cohomology", "corpus:n9"},
        {"formality", "corpus:n9", "--s", "3", "--json"},
        {"report", "corpus:m7", "--dimension", "7", "--json"},
        {"gysin", "corpus:s2cubed", "--euler", "a1+a2+a3"},
        {"corpus", "check", "m7", "heisenberg3"},
    };
    for (const auto& cmd : commands) {
        setenv("SULLIVAN_LAB_THREADS", "1", 1);
        const auto a = run(cmd), a2 = run(cmd);
        setenv("SULLIVAN_LAB_THREADS", "4", 1);
        const auto b = run(cmd);
        unsetenv("SULLIVAN_LAB_THREADS");
        CHECK(a.out == a2.out);
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("every corpus expectation holds and carries an origin") {
    std::size_t items = 0;
    for (const auto& entry : corpus_entries()) {
        CHECK_FALSE(entry.description.empty());
        for (const auto& c : check_corpus_entry(entry)) {
            ++items;
            CAPTURE(c.id);
            CAPTURE(c.item);
            CAPTURE(c.detail);
            CHECK((c.origin == "worked-example" || c.origin == "derived" || c.origin == "elementary"));
            CHECK(c.passed);
        }
    }
    CHECK(items >= 60);
    const auto list = run({"corpus", "list"});
    CHECK(contains(list.out, "m7"));
    CHECK(run({"corpus", "show", "m7"}).out == corpus_document_text("m7"));
}

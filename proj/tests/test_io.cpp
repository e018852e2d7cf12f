#include "support.hpp"

using namespace expanse;
using namespace expanse::test;

TEST_CASE("complex roundtrip") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 50; ++t) {
        const auto c = randomComplex(rng, 6, 5);
        CHECK(complexFromJson(parseJson(toJson(c).dump())) == c);
    }
    const auto v = SimplicialComplex::voidComplex(names(2));
    CHECK(toJson(v)["facets"].is_null());
    CHECK(complexFromJson(toJson(v)).isVoid());
    const auto irr = complexFromJson(parseJson(R"({"vertices": ["a"], "facets": [[]]})"));
    CHECK(irr.isIrrelevant());
}

TEST_CASE("ideal and graph roundtrips") {
    const auto i = ideal1(3, {{1, 2}, {3}});
    CHECK(idealFromJson(toJson(i)) == i);
    const auto g = cycle(5);
    CHECK(graphFromJson(toJson(g)) == g);
    BettiTable b(ModuleKind::Quotient);
    b.add(0, 0, 1);
    b.add(1, 2, 3);
    CHECK(bettiFromJson(toJson(b)) == b);
}

TEST_CASE("malformed input names the field") {
    auto message = [](const std::string& text, auto reader) {
        try {
            reader(parseJson(text));
        } catch (const FormatError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK_THAT(message(R"({"facets": []})", complexFromJson), Catch::Matchers::ContainsSubstring("vertices"));
    CHECK_THAT(message(R"({"vertices": ["a"], "facets": [["b"]]})", complexFromJson),
               Catch::Matchers::ContainsSubstring("facets[0][0]"));
    CHECK_THAT(message(R"({"vertices": ["a", "a"], "facets": []})", complexFromJson),
               Catch::Matchers::ContainsSubstring("vertices"));
    CHECK_THAT(message(R"({"variables": ["a"], "generators": [[]]})", idealFromJson),
               Catch::Matchers::ContainsSubstring("generators[0]"));
    CHECK_THAT(message(R"({"vertices": ["a"], "edges": [["a", "a"]]})", graphFromJson),
               Catch::Matchers::ContainsSubstring("edges[0]"));
    CHECK_THAT(message(R"({"kind": "module", "entries": []})", bettiFromJson),
               Catch::Matchers::ContainsSubstring("kind"));
}

TEST_CASE("JSON syntax errors report line and column") {
    try {
        parseJson("{\n  \"vertices\": [\"a\",,]\n}");
        FAIL("expected a FormatError");
    } catch (const FormatError& e) {
        CHECK_THAT(std::string(e.what()), Catch::Matchers::ContainsSubstring("line 2"));
    }
    CHECK_THROWS_AS(readJsonFile("/nonexistent/file.json"), FormatError);
}

TEST_CASE("expansion vector parsing") {
    CHECK(parseExpansionVector("2,1,1").values() == std::vector<unsigned>{2, 1, 1});
    CHECK_THROWS_AS(parseExpansionVector("2,0"), FormatError);
    CHECK_THROWS_AS(parseExpansionVector("2,x"), FormatError);
    CHECK_THROWS_AS(parseExpansionVector(""), FormatError);
}

TEST_CASE("input kind detection") {
    CHECK(detectKind(parseJson(R"({"vertices": [], "facets": null})")) == InputKind::Complex);
    CHECK(detectKind(parseJson(R"({"variables": [], "generators": []})")) == InputKind::Ideal);
    CHECK(detectKind(parseJson(R"({"vertices": [], "edges": []})")) == InputKind::Graph);
    CHECK_THROWS_AS(detectKind(parseJson("[1]")), FormatError);
}

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "expanse/decomposability.hpp"
#include "expanse/suites.hpp"

using namespace expanse;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

std::vector<FieldSpec> parseFields(const std::string& text) {
    if (text.empty()) {
        return {FieldSpec::rationals(), FieldSpec::prime(2)};
    }
    if (text == "q") {
        return {FieldSpec::rationals()};
    }
    if (text.size() > 1 && text[0] == 'f') {
        try {
            std::size_t used = 0;
            const unsigned long p = std::stoul(text.substr(1), &used);
            if (used == text.size() - 1) {
                return {FieldSpec::prime(static_cast<std::uint32_t>(p))};
            }
        } catch (const std::logic_error&) {
        }
    }
    throw FormatError("--field: expected q, f2 or f<prime>, got '" + text + "'");
}

const char* yesNo(bool b) { return b ? "yes" : "no"; }

struct Report {
    Json json = Json::object();
    std::vector<std::string> lines;

    void add(const std::string& key, const Json& value, const std::string& text) {
        json[key] = value;
        lines.push_back(key + ": " + text);
    }
};

void emit(const Report& report, bool asJson) {
    if (asJson) {
        std::cout << report.json.dump(2) << "\n";
        return;
    }
    for (const std::string& line : report.lines) {
        std::cout << line << "\n";
    }
}

// Betti table of S/I plus reg and pd, for each field.
void bettiSection(Report& report, const MonomialIdeal& ideal, const std::vector<FieldSpec>& fields) {
    for (FieldSpec field : fields) {
        const std::string suffix = " over " + field.name();
        try {
            const BettiTable table = ideal.isZero() ? BettiTable(ModuleKind::Quotient)
                                                    : hochsterBetti(ideal, field, ModuleKind::Quotient);
            BettiTable shown = table;
            if (ideal.isZero()) {
                shown.add(0, 0, 1);
            }
            report.add("betti" + suffix, toJson(shown), shown.format());
            Json totals = shown.totals();
            std::string totalsText;
            for (std::uint64_t t : shown.totals()) {
                totalsText += (totalsText.empty() ? "" : " ") + std::to_string(t);
            }
            report.add("totals" + suffix, totals, "(" + totalsText + ")");
            report.add("reg" + suffix, shown.regularity(), std::to_string(shown.regularity()));
            report.add("pd" + suffix, shown.projectiveDimension(), std::to_string(shown.projectiveDimension()));
        } catch (const CapExceeded& e) {
            report.add("betti" + suffix, nullptr, std::string("skipped (") + e.what() + ")");
        }
    }
}

void flagSection(Report& report, const SimplicialComplex& complex, const std::vector<FieldSpec>& fields) {
    if (complex.isVoid()) {
        report.add("flags", nullptr, "not defined for the void complex");
        return;
    }
    for (FieldSpec field : fields) {
        const bool cm = isCohenMacaulay(complex, field);
        const bool scm = isSequentiallyCohenMacaulay(complex, field);
        report.add("cohen-macaulay over " + field.name(), cm, yesNo(cm));
        report.add("sequentially cohen-macaulay over " + field.name(), scm, yesNo(scm));
    }
    const ShellingSearch shelling = isShellable(complex);
    report.add("shellable", toString(shelling.decision), toString(shelling.decision));
    const Decision vd = isVertexDecomposable(complex);
    report.add("vertex decomposable", toString(vd), toString(vd));
}

// Invariants of K[complex] = S / I_complex.
void complexInvariants(Report& report, const SimplicialComplex& complex, const std::vector<FieldSpec>& fields) {
    const auto dim = complex.dimension();
    report.add("dim", dim ? Json(*dim) : Json(nullptr), dim ? std::to_string(*dim) : "void");
    if (!complex.isVoid()) {
        bettiSection(report, stanleyReisnerIdeal(complex), fields);
    }
    flagSection(report, complex, fields);
}

int runExpand(const std::string& path, const std::string& alphaText) {
    const SimplicialComplex complex = complexFromJson(readJsonFile(path));
    std::cout << toJson(expand(complex, parseExpansionVector(alphaText))).dump(2) << "\n";
    return 0;
}

int runInvariants(const std::string& path, const std::string& fieldText, bool asJson) {
    const std::vector<FieldSpec> fields = parseFields(fieldText);
    const Json input = readJsonFile(path);
    Report report;
    switch (detectKind(input)) {
        case InputKind::Complex:
            report.add("input", "complex", "complex");
            complexInvariants(report, complexFromJson(input), fields);
            break;
        case InputKind::Ideal: {
            const MonomialIdeal ideal = idealFromJson(input);
            report.add("input", "ideal", "ideal S/I");
            const SimplicialComplex complex = complexOfIdeal(ideal);
            const auto dim = complex.dimension();
            report.add("dim", dim ? Json(*dim) : Json(nullptr), dim ? std::to_string(*dim) : "void");
            bettiSection(report, ideal, fields);
            flagSection(report, complex, fields);
            break;
        }
        case InputKind::Graph: {
            const Graph graph = graphFromJson(input);
            report.add("input", "graph", "graph, independence complex");
            complexInvariants(report, independenceComplex(graph), fields);
            break;
        }
    }
    emit(report, asJson);
    return 0;
}

int runIdeal(const std::string& op, const std::string& path) {
    const Json input = readJsonFile(path);
    if (op == "facet") {
        std::cout << toJson(facetIdeal(complexFromJson(input))).dump(2) << "\n";
    } else if (op == "sr") {
        std::cout << toJson(stanleyReisnerIdeal(complexFromJson(input))).dump(2) << "\n";
    } else if (op == "dual") {
        std::cout << toJson(alexanderDualIdeal(idealFromJson(input))).dump(2) << "\n";
    } else {
        const MonomialIdeal ideal =
            detectKind(input) == InputKind::Complex ? facetIdeal(complexFromJson(input)) : idealFromJson(input);
        const LinearQuotientsSearch search = linearQuotientsOrder(ideal);
        Json out;
        out["linear_quotients"] = toString(search.decision);
        if (search.certificate) {
            out["certificate"] = toJson(*search.certificate, ideal);
            out["betti"] = toJson(bettiFromLinearQuotients(*search.certificate, ideal));
        }
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int runGraph(const std::string& op, const std::string& path, const std::string& alphaText) {
    const Graph graph = graphFromJson(readJsonFile(path));
    if (op == "indcomplex") {
        std::cout << toJson(independenceComplex(graph)).dump(2) << "\n";
    } else if (op == "expand" || op == "expand-hat") {
        if (alphaText.empty()) {
            throw FormatError("--alpha is required for graph " + op);
        }
        const ExpansionVector alpha = parseExpansionVector(alphaText);
        const Graph expanded = op == "expand" ? graphExpand(graph, alpha) : graphExpandHat(graph, alpha);
        std::cout << toJson(expanded).dump(2) << "\n";
    } else if (op == "chordal") {
        Json out;
        out["chordal"] = isChordal(graph);
        out["co_chordal"] = isCoChordal(graph);
        std::cout << out.dump(2) << "\n";
    } else {
        Json out = Json::array();
        for (const auto& [a, b] : closedTwins(graph)) {
            out.push_back({graph.vertexNames()[a], graph.vertexNames()[b]});
        }
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

void dumpFailures(const SuiteReport& report, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const SuiteFailure& f : report.failures) {
        for (const auto& [key, value] : f.instance.items()) {
            const std::string file = dir + "/" + report.suite + "-" + std::to_string(f.seed) + "-" + key + ".json";
            std::ofstream(file) << value.dump(2) << "\n";
        }
    }
}

struct VerifyOptions {
    std::string suite;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    SuiteCaps caps;
    bool json = false;
    std::string dumpDir;
};

int runVerify(const VerifyOptions& opts) {
    std::vector<std::string> names;
    if (opts.suite == "all") {
        names = suiteNames();
    } else {
        names.push_back(opts.suite);
    }
    bool ok = true;
    Json all = Json::array();
    for (const std::string& name : names) {
        const SuiteReport report = verifySuite(name, opts.trials, opts.seed, opts.caps);
        ok = ok && report.ok();
        if (opts.json) {
            all.push_back(toJson(report));
        } else {
            std::cout << formatReport(report);
        }
        if (!opts.dumpDir.empty()) {
            dumpFailures(report, opts.dumpDir);
        }
    }
    if (opts.json) {
        std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    }
    return ok ? 0 : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expansion functor on simplicial complexes and squarefree monomial ideals"};
    app.require_subcommand(1);

    std::string path;
    std::string alpha;
    std::string field;
    std::string op;
    bool asJson = false;

    auto* expandCmd = app.add_subcommand("expand", "Expand a complex along alpha");
    expandCmd->add_option("complex", path, "Complex file")->required();
    expandCmd->add_option("--alpha", alpha, "Comma-separated multiplicities, e.g. 2,1,1")->required();

    auto* invariantsCmd = app.add_subcommand("invariants", "Betti table, reg, pd and CM/SCM/shellable/VD flags");
    invariantsCmd->add_option("input", path, "Complex, ideal or graph file")->required();
    invariantsCmd->add_option("--field", field, "q, f2 or f<p>; default: both Q and GF(2)");
    invariantsCmd->add_flag("--json", asJson, "Structured output");

    auto* idealCmd = app.add_subcommand("ideal", "Facet, Stanley-Reisner, Alexander dual or linear quotients");
    idealCmd->add_option("op", op, "facet | sr | dual | lq")->required()->check(
        CLI::IsMember({"facet", "sr", "dual", "lq"}));
    idealCmd->add_option("input", path, "Complex (facet, sr, lq) or ideal (dual, lq) file")->required();

    auto* graphCmd = app.add_subcommand("graph", "Graph operations");
    graphCmd->add_option("op", op, "indcomplex | expand | expand-hat | chordal | twins")->required()->check(
        CLI::IsMember({"indcomplex", "expand", "expand-hat", "chordal", "twins"}));
    graphCmd->add_option("input", path, "Graph file")->required();
    graphCmd->add_option("--alpha", alpha, "Multiplicities for expand / expand-hat");

    VerifyOptions verify;
    auto* verifyCmd = app.add_subcommand("verify", "Run a seeded randomized verification suite");
    std::vector<std::string> suiteChoices = suiteNames();
    suiteChoices.push_back("all");
    verifyCmd->add_option("--suite", verify.suite, "Suite name or 'all'")->required()->check(CLI::IsMember(suiteChoices));
    verifyCmd->add_option("--trials", verify.trials, "Number of trials")->capture_default_str();
    verifyCmd->add_option("--seed", verify.seed, "Base seed; trial t uses seed + t")->capture_default_str();
    verifyCmd->add_option("--max-vertices", verify.caps.maxVertices, "Vertices of random complexes")->capture_default_str();
    verifyCmd->add_option("--max-facets", verify.caps.maxFacets, "Facets of random complexes")->capture_default_str();
    verifyCmd->add_option("--max-graph-vertices", verify.caps.maxGraphVertices, "Vertices of random graphs")
        ->capture_default_str();
    verifyCmd->add_option("--max-mult", verify.caps.maxMultiplicity, "Largest alpha entry")->capture_default_str();
    verifyCmd->add_flag("--json", verify.json, "Structured output");
    verifyCmd->add_option("--dump-dir", verify.dumpDir, "Write each failing instance as loadable files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*expandCmd) {
            return runExpand(path, alpha);
        }
        if (*invariantsCmd) {
            return runInvariants(path, field, asJson);
        }
        if (*idealCmd) {
            return runIdeal(op, path);
        }
        if (*graphCmd) {
            return runGraph(op, path, alpha);
        }
        return runVerify(verify);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

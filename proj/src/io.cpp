#include "expanse/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace expanse {

namespace {

std::vector<std::string> readNames(const Json& json, const char* field) {
    if (!json.contains(field) || !json[field].is_array()) {
        throw FormatError(std::string("field '") + field + "': expected an array of strings");
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < json[field].size(); ++k) {
        const Json& entry = json[field][k];
        if (!entry.is_string()) {
            throw FormatError(std::string(field) + "[" + std::to_string(k) + "]: expected a string");
        }
        names.push_back(entry.get<std::string>());
    }
    try {
        validateNames(names);
    } catch (const InvalidArgument& e) {
        throw FormatError(std::string("field '") + field + "': " + e.what());
    }
    return names;
}

class NameIndex {
  public:
    explicit NameIndex(const std::vector<std::string>& names) {
        for (std::size_t k = 0; k < names.size(); ++k) {
            index_.emplace(names[k], static_cast<VertexId>(k));
        }
    }

    VertexId lookup(const Json& entry, const std::string& where) const {
        if (!entry.is_string()) {
            throw FormatError(where + ": expected a vertex name");
        }
        const auto it = index_.find(entry.get<std::string>());
        if (it == index_.end()) {
            throw FormatError(where + ": unknown name '" + entry.get<std::string>() + "'");
        }
        return it->second;
    }

    Face face(const Json& list, const std::string& where) const {
        if (!list.is_array()) {
            throw FormatError(where + ": expected an array of names");
        }
        Face f;
        for (std::size_t k = 0; k < list.size(); ++k) {
            f = f.with(lookup(list[k], where + "[" + std::to_string(k) + "]"));
        }
        return f;
    }

  private:
    std::unordered_map<std::string, VertexId> index_;
};

Json namesOf(Face f, const std::vector<std::string>& names) {
    Json out = Json::array();
    f.forEach([&](VertexId v) { out.push_back(names[v]); });
    return out;
}

std::pair<std::size_t, std::size_t> lineAndColumn(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

Json toJson(const SimplicialComplex& complex) {
    Json out;
    out["vertices"] = complex.vertexNames();
    if (complex.isVoid()) {
        out["facets"] = nullptr;
        return out;
    }
    out["facets"] = Json::array();
    for (Face f : complex.facets()) {
        out["facets"].push_back(namesOf(f, complex.vertexNames()));
    }
    return out;
}

SimplicialComplex complexFromJson(const Json& json) {
    if (!json.is_object()) {
        throw FormatError("complex: expected a JSON object");
    }
    std::vector<std::string> names = readNames(json, "vertices");
    if (!json.contains("facets")) {
        throw FormatError("field 'facets': missing");
    }
    if (json["facets"].is_null()) {
        return SimplicialComplex::voidComplex(std::move(names));
    }
    if (!json["facets"].is_array()) {
        throw FormatError("field 'facets': expected an array or null");
    }
    const NameIndex index(names);
    std::vector<Face> faces;
    for (std::size_t k = 0; k < json["facets"].size(); ++k) {
        faces.push_back(index.face(json["facets"][k], "facets[" + std::to_string(k) + "]"));
    }
    return SimplicialComplex::fromFacets(std::move(names), std::move(faces));
}

Json toJson(const MonomialIdeal& ideal) {
    Json out;
    out["variables"] = ideal.variableNames();
    out["generators"] = Json::array();
    for (Face g : ideal.generators()) {
        out["generators"].push_back(namesOf(g, ideal.variableNames()));
    }
    return out;
}

MonomialIdeal idealFromJson(const Json& json) {
    if (!json.is_object()) {
        throw FormatError("ideal: expected a JSON object");
    }
    std::vector<std::string> names = readNames(json, "variables");
    if (!json.contains("generators") || !json["generators"].is_array()) {
        throw FormatError("field 'generators': expected an array of name lists");
    }
    const NameIndex index(names);
    std::vector<Face> gens;
    for (std::size_t k = 0; k < json["generators"].size(); ++k) {
        const std::string where = "generators[" + std::to_string(k) + "]";
        const Face g = index.face(json["generators"][k], where);
        if (g.empty()) {
            throw FormatError(where + ": the unit monomial is not a valid generator");
        }
        gens.push_back(g);
    }
    return MonomialIdeal::fromGenerators(std::move(names), std::move(gens));
}

Json toJson(const Graph& graph) {
    Json out;
    out["vertices"] = graph.vertexNames();
    out["edges"] = Json::array();
    for (const auto& [a, b] : graph.edges()) {
        out["edges"].push_back({graph.vertexNames()[a], graph.vertexNames()[b]});
    }
    return out;
}

Graph graphFromJson(const Json& json) {
    if (!json.is_object()) {
        throw FormatError("graph: expected a JSON object");
    }
    std::vector<std::string> names = readNames(json, "vertices");
    if (!json.contains("edges") || !json["edges"].is_array()) {
        throw FormatError("field 'edges': expected an array of name pairs");
    }
    const NameIndex index(names);
    std::vector<Graph::Edge> edges;
    for (std::size_t k = 0; k < json["edges"].size(); ++k) {
        const std::string where = "edges[" + std::to_string(k) + "]";
        const Json& e = json["edges"][k];
        if (!e.is_array() || e.size() != 2) {
            throw FormatError(where + ": expected a pair of names");
        }
        const VertexId a = index.lookup(e[0], where + "[0]");
        const VertexId b = index.lookup(e[1], where + "[1]");
        if (a == b) {
            throw FormatError(where + ": loops are not allowed");
        }
        edges.emplace_back(a, b);
    }
    return Graph::fromEdges(std::move(names), std::move(edges));
}

Json toJson(const BettiTable& table) {
    Json out;
    out["kind"] = toString(table.kind());
    out["entries"] = Json::array();
    for (const auto& [key, value] : table.entries()) {
        out["entries"].push_back({key.first, key.second, value});
    }
    return out;
}

BettiTable bettiFromJson(const Json& json) {
    if (!json.is_object() || !json.contains("kind") || !json["kind"].is_string()) {
        throw FormatError("field 'kind': expected \"ideal\" or \"quotient\"");
    }
    const std::string kind = json["kind"].get<std::string>();
    if (kind != "ideal" && kind != "quotient") {
        throw FormatError("field 'kind': expected \"ideal\" or \"quotient\", got \"" + kind + "\"");
    }
    BettiTable table(kind == "ideal" ? ModuleKind::Ideal : ModuleKind::Quotient);
    if (!json.contains("entries") || !json["entries"].is_array()) {
        throw FormatError("field 'entries': expected an array of [i, j, value] triples");
    }
    for (std::size_t k = 0; k < json["entries"].size(); ++k) {
        const Json& e = json["entries"][k];
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            !e[2].is_number_unsigned()) {
            throw FormatError("entries[" + std::to_string(k) + "]: expected [i, j, value]");
        }
        table.add(e[0].get<int>(), e[1].get<int>(), e[2].get<std::uint64_t>());
    }
    return table;
}

Json toJson(const HomologyProfile& profile) {
    Json out;
    out["dims"] = Json::array();
    for (const auto& [k, d] : profile.dims) {
        out["dims"].push_back({k, d});
    }
    return out;
}

Json toJson(const LinearQuotientsCertificate& cert, const MonomialIdeal& ideal) {
    Json out;
    out["order"] = Json::array();
    out["sets"] = Json::array();
    for (std::size_t t = 0; t < cert.order.size(); ++t) {
        out["order"].push_back(namesOf(ideal.generators().at(cert.order[t]), ideal.variableNames()));
        out["sets"].push_back(namesOf(cert.sets[t], ideal.variableNames()));
    }
    return out;
}

ExpansionVector parseExpansionVector(const std::string& text) {
    std::vector<unsigned> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 0 || v > 1000) {
                throw std::invalid_argument(item);
            }
            values.push_back(static_cast<unsigned>(v));
        } catch (const std::logic_error&) {
            throw FormatError("alpha: '" + item + "' is not a nonnegative integer");
        }
    }
    if (values.empty()) {
        throw FormatError("alpha: empty expansion vector");
    }
    try {
        return ExpansionVector(std::move(values));
    } catch (const InvalidArgument& e) {
        throw FormatError(std::string("alpha: ") + e.what());
    }
}

Json parseJson(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = lineAndColumn(text, e.byte > 0 ? e.byte - 1 : 0);
        throw FormatError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column));
    }
}

Json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parseJson(buffer.str());
}

InputKind detectKind(const Json& json) {
    if (json.is_object()) {
        if (json.contains("facets")) {
            return InputKind::Complex;
        }
        if (json.contains("generators")) {
            return InputKind::Ideal;
        }
        if (json.contains("edges")) {
            return InputKind::Graph;
        }
    }
    throw FormatError("input is not a complex (\"facets\"), ideal (\"generators\") or graph (\"edges\")");
}

}  // namespace expanse

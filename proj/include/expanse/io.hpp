#ifndef EXPANSE_IO_HPP
#define EXPANSE_IO_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "expanse/betti.hpp"
#include "expanse/complex.hpp"
#include "expanse/graph.hpp"
#include "expanse/homology.hpp"
#include "expanse/ideal.hpp"

namespace expanse {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending field.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// {"vertices": [...], "facets": [[...], ...] | null}
Json toJson(const SimplicialComplex& complex);
SimplicialComplex complexFromJson(const Json& json);

// {"variables": [...], "generators": [[...], ...]}
Json toJson(const MonomialIdeal& ideal);
MonomialIdeal idealFromJson(const Json& json);

// {"vertices": [...], "edges": [[a, b], ...]}
Json toJson(const Graph& graph);
Graph graphFromJson(const Json& json);

// {"kind": "ideal"|"quotient", "entries": [[i, j, value], ...]}
Json toJson(const BettiTable& table);
BettiTable bettiFromJson(const Json& json);

// {"dims": [[k, value], ...]}
Json toJson(const HomologyProfile& profile);

// {"order": [[names...], ...], "sets": [[names...], ...]}
Json toJson(const LinearQuotientsCertificate& cert, const MonomialIdeal& ideal);

/// Parses "2,1,1".
ExpansionVector parseExpansionVector(const std::string& text);

/// Parses text, wrapping JSON syntax errors (with their byte offset) in FormatError.
Json parseJson(const std::string& text);
Json readJsonFile(const std::string& path);

enum class InputKind { Complex, Ideal, Graph };
/// Decides by the presence of "facets", "generators" or "edges".
InputKind detectKind(const Json& json);

}  // namespace expanse

#endif  // EXPANSE_IO_HPP

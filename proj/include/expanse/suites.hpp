#ifndef EXPANSE_SUITES_HPP
#define EXPANSE_SUITES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "expanse/io.hpp"

namespace expanse {

/// Size limits for randomly generated suite instances.
struct SuiteCaps {
    std::size_t maxVertices = 6;       ///< complexes and random ideals
    std::size_t maxFacets = 8;
    std::size_t maxGraphVertices = 7;
    unsigned maxMultiplicity = 3;      ///< alpha entries
    std::size_t variableCap = kHochsterVariableCap;  ///< expanded ambient size for Hochster-based suites
    std::size_t maxGenerators = 10;    ///< random ideals in betti-lq
    std::size_t shellingFacetCap = 16;
    std::size_t decompositionBudget = 200000;
};

struct SuiteFailure {
    std::uint64_t seed = 0;
    std::string reason;
    /// Loadable instance: sub-objects use the complex/ideal/graph file formats.
    Json instance;
};

struct SuiteReport {
    std::string suite;
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::size_t skipped = 0;
    std::vector<SuiteFailure> failures;
    /// Informational tallies, e.g. how often an implication's premise held.
    std::map<std::string, std::size_t> counters;

    bool ok() const { return failures.empty(); }
};

/// All suite names, in documentation order.
const std::vector<std::string>& suiteNames();

/**
 * Runs `trials` seeded random instances of a suite. Trial t draws from
 * std::mt19937_64 seeded with `seed + t`, so a failing trial replays with
 * `trials = 1` and its recorded seed. Throws InvalidArgument on an unknown name.
 */
SuiteReport verifySuite(const std::string& name, std::size_t trials, std::uint64_t seed, const SuiteCaps& caps = {});

std::string formatReport(const SuiteReport& report);
Json toJson(const SuiteReport& report);

/// Uniform integer in [lo, hi] by rejection sampling on raw 64-bit output.
std::uint64_t uniformInt(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// Bernoulli(numerator / denominator) from raw generator output.
bool chance(std::mt19937_64& rng, std::uint64_t numerator, std::uint64_t denominator);

}  // namespace expanse

#endif  // EXPANSE_SUITES_HPP

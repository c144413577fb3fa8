#pragma once

#include "gaut/problem_input.hpp"
#include "gaut/validation.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gaut {

inline constexpr int kReportSchemaVersion = 1;

struct ValidationRecord {
    bool effective = false;
    bool pointed = false;
    bool homogeneous = false;
    bool inMaximalIdealSquared = false;
    bool trivialAtGeneratorWeights = false;
    bool latticeBasis = false;
    std::vector<std::string> diagnostics;

    bool operator==(const ValidationRecord&) const = default;
};

struct BlockRecord {
    std::string weight;
    std::vector<std::string> monomials;

    bool operator==(const BlockRecord&) const = default;
};

struct ComponentRecord {
    std::string degree;
    std::size_t dimension = 0; // dim S_u
    std::size_t idealDimension = 0; // l = dim I_u
    std::size_t formCount = 0; // m = dim S_u - l

    bool operator==(const ComponentRecord&) const = default;
};

struct TripleRecord {
    SmallMatrix b;
    std::vector<std::size_t> weightPermutation; // 1-based
    std::vector<std::size_t> nonzeroSlots;      // 1-based Y indices
    std::vector<std::string> ideal;             // J_B
    std::vector<std::string> stabilizer;        // J'_B

    bool operator==(const TripleRecord&) const = default;
};

struct XhatRecord {
    std::vector<std::int64_t> w;
    SmallMatrix gitConeRays; // primitive rays, one per row
    std::size_t orbitConeCount = 0;
    std::vector<std::size_t> retained; // 1-based triple numbers before filtering

    bool operator==(const XhatRecord&) const = default;
};

/// Everything a run produced, as plain data. Polynomials are stored in the
/// explicit print style over T(1..r) or Y(1..n^2), Z.
struct ResultBundle {
    int schemaVersion = kReportSchemaVersion;
    std::string command;
    ProblemInput input;
    ValidationRecord validation;
    std::vector<SmallMatrix> weightAutomorphisms;
    bool hasPresentation = false;
    std::size_t n = 0;
    std::vector<BlockRecord> blocks;
    std::vector<std::string> actionVariableWeights; // Y(1)..Y(n^2), Z
    std::vector<std::string> multiplicativity;
    bool multiMonomialBlocks = false;
    std::vector<TripleRecord> triples;
    bool hasStabilizer = false;
    std::vector<ComponentRecord> components; // one per degree in Omega_I
    std::optional<XhatRecord> xhat;
    std::map<std::string, double> timingSeconds; // only with --timing

    bool operator==(const ResultBundle&) const = default;
};

enum class Stage { Check, WeightsAut, AutKS, AutGradAlg, AutXhat };

struct RunOptions {
    unsigned jobs = 1;
    bool timing = false;
    AutOptions aut;
    std::size_t maxSubsetVariables = 20;
};

/// Runs the computation up to `stage` and records the results.
ResultBundle runStage(const ProblemInput& input, Stage stage, const RunOptions& options = {});

ValidationRecord toRecord(const ValidationReport& report);
TripleRecord toRecord(const AutTriple& triple, const VariableNaming& names);

nlohmann::ordered_json toJson(const ResultBundle& bundle);
/// Throws Error on a schema-version mismatch or malformed content.
ResultBundle fromJson(const nlohmann::ordered_json& json);
void writeReport(const ResultBundle& bundle, const std::string& path);
ResultBundle readReport(const std::string& path);
std::string reportText(const ResultBundle& bundle);

} // namespace gaut

#pragma once

#include "gaut/git_geometry.hpp"
#include "gaut/graded_ring.hpp"
#include "gaut/grading.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaut {

/// Contents of a problem file.
///
///     vars = 8
///     Q = [[1, 1, 0, ...], ...]   # free rows, then torsion rows
///     ideal = ["T(1)*T(6) + T(2)*T(5)"]
///     w = [1, 9, 16, 0]           # optional
///     faces = [[1, 2], [3]]       # optional, 1-based
///     mode = "all-subsets"
///
///     [grading]
///     free_rank = 3
///     torsion = [2]
struct ProblemInput {
    std::size_t freeRank = 0;
    std::vector<std::int64_t> torsion;
    SmallMatrix q;
    std::size_t vars = 0;
    std::vector<std::string> ideal;
    std::optional<std::vector<std::int64_t>> w;
    std::vector<std::vector<std::size_t>> faces; // 1-based
    FaceMode mode = FaceMode::AllSubsets;

    bool operator==(const ProblemInput&) const = default;

    GradingGroup group() const { return GradingGroup(freeRank, torsion); }
    DegreeMatrix degrees() const;
    GradedPolyRing ring() const { return GradedPolyRing(degrees()); }
    /// Parses the generator strings; ParseError carries the generator number as line.
    Ideal idealOf() const;
    std::optional<GroupElement> weight() const;
    OrbitConeOptions orbitOptions(unsigned jobs = 1) const;
};

/// Throws ParseError on syntax errors, missing keys and inconsistent dimensions.
ProblemInput parseInput(std::string_view text);
std::string printInput(const ProblemInput& input);
ProblemInput loadInput(const std::string& path);

/// "1,9,16,0" or "1 9 16 0".
std::vector<std::int64_t> parseIntegerList(std::string_view text);

} // namespace gaut

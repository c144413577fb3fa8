#pragma once

#include "gaut/report.hpp"

#include <string>
#include <vector>

namespace gaut {

/// "singular-like" and "macaulay2-like".
std::vector<std::string> casDialects();

/// Script declaring S' = Q[Y(1..n^2), Z], one ideal per triple (J_B with J'_B
/// when present), their intersection, and the dimension and absolute
/// decomposition calls. Throws StructuralError for an unknown dialect and
/// ValidationError when the bundle has no presentation.
std::string exportCasScript(const ResultBundle& bundle, const std::string& dialect);

/// Structural check of an exported script: balanced delimiters, every
/// polynomial parses over the declared ring. Returns the problems found.
std::vector<std::string> lintCasScript(const std::string& script, const std::string& dialect, std::size_t n);

} // namespace gaut

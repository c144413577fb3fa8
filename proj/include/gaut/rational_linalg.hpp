#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace gaut {

using RatVec = std::vector<mpq_class>;
using RatRows = std::vector<RatVec>;

/// Reduced row echelon form of a row list; zero rows are dropped.
struct EchelonForm {
    RatRows rows;
    std::vector<std::size_t> pivots; // pivot column of each row
};

EchelonForm reducedRowEchelon(RatRows rows, std::size_t cols);

std::size_t rank(const RatRows& rows, std::size_t cols);

/// Basis of {x : row . x == 0 for every row}, one vector per free column of the
/// reduced echelon form: 1 at the free column, -rref entries at pivot columns.
RatRows kernelBasis(const RatRows& rows, std::size_t cols);

mpq_class dot(const RatVec& a, const RatVec& b);

} // namespace gaut

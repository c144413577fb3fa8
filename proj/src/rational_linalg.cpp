#include "gaut/rational_linalg.hpp"

#include "gaut/errors.hpp"

#include <utility>

namespace gaut {

EchelonForm reducedRowEchelon(RatRows rows, std::size_t cols)
{
    for (const auto& row : rows)
        if (row.size() != cols)
            throw StructuralError("reducedRowEchelon: row length mismatch");

    EchelonForm out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[lead], rows[pivot]);
        const mpq_class inv = 1 / rows[lead][col];
        for (auto& x : rows[lead])
            x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][col] == 0)
                continue;
            const mpq_class factor = rows[i][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] -= factor * rows[lead][j];
        }
        out.pivots.push_back(col);
        ++lead;
    }
    rows.resize(lead);
    out.rows = std::move(rows);
    return out;
}

std::size_t rank(const RatRows& rows, std::size_t cols)
{
    return reducedRowEchelon(rows, cols).pivots.size();
}

RatRows kernelBasis(const RatRows& rows, std::size_t cols)
{
    EchelonForm ef = reducedRowEchelon(rows, cols);
    std::vector<bool> isPivot(cols, false);
    for (auto p : ef.pivots)
        isPivot[p] = true;
    RatRows out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (isPivot[f])
            continue;
        RatVec v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < ef.rows.size(); ++r)
            v[ef.pivots[r]] = -ef.rows[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

mpq_class dot(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size())
        throw StructuralError("dot: length mismatch");
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace gaut

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gaut {

using IntVec = std::vector<mpz_class>;

/// Dense row-major matrix over the integers (GMP backed).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix fromRows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& other) const;
    IntVec operator*(const IntVec& v) const;
    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transposed() const;

    void swapRows(std::size_t a, std::size_t b);
    void swapCols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void addRowMultiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    /// col[dst] += factor * col[src]
    void addColMultiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    void negateRow(std::size_t i);
    void negateCol(std::size_t j);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// U * M * V == diagonal with d_1 | d_2 | ... | d_rank, all d_i > 0.
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix left;  // U, unimodular rows x rows
    IntMatrix right; // V, unimodular cols x cols
    std::size_t rank = 0;

    std::vector<mpz_class> invariantFactors() const;
};

SmithForm smithNormalForm(const IntMatrix& m);

/// Exact determinant via fraction-free (Bareiss) elimination.
mpz_class determinant(const IntMatrix& m);

/// Inverse of a unimodular matrix; std::nullopt when |det| != 1.
std::optional<IntMatrix> unimodularInverse(const IntMatrix& m);

/// Some integer solution x of m * x == b, or std::nullopt.
std::optional<IntVec> solveInteger(const IntMatrix& m, const IntVec& b);

/// Floor-modulo for signed 64-bit values, result in [0, modulus).
inline std::int64_t reduceMod(std::int64_t value, std::int64_t modulus)
{
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

std::int64_t toInt64(const mpz_class& value);

} // namespace gaut

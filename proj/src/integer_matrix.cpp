#include "gaut/integer_matrix.hpp"

#include "gaut/errors.hpp"

#include <utility>

namespace gaut {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw StructuralError("IntMatrix::fromRows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const
{
    if (cols_ != other.rows_)
        throw StructuralError("IntMatrix product: dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out(i, j) += a * other(k, j);
        }
    return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const
{
    if (cols_ != v.size())
        throw StructuralError("IntMatrix-vector product: dimension mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::swapRows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swapCols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::addRowMultiple(std::size_t dst, std::size_t src, const mpz_class& factor)
{
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::addColMultiple(std::size_t dst, std::size_t src, const mpz_class& factor)
{
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negateRow(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negateCol(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = -(*this)(i, j);
}

std::vector<mpz_class> SmithForm::invariantFactors() const
{
    std::vector<mpz_class> out;
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(diagonal(i, i));
    return out;
}

namespace {

mpz_class floorDiv(const mpz_class& a, const mpz_class& b)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

SmithForm smithNormalForm(const IntMatrix& input)
{
    SmithForm out;
    IntMatrix m = input;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0 && (!found || abs(m(i, j)) < abs(m(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found)
            break;
        m.swapRows(t, pi);
        u.swapRows(t, pi);
        m.swapCols(t, pj);
        v.swapCols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0)
                    continue;
                mpz_class q = -floorDiv(m(i, t), m(t, t));
                m.addRowMultiple(i, t, q);
                u.addRowMultiple(i, t, q);
                if (m(i, t) != 0) {
                    m.swapRows(t, i);
                    u.swapRows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0)
                    continue;
                mpz_class q = -floorDiv(m(t, j), m(t, t));
                m.addColMultiple(j, t, q);
                v.addColMultiple(j, t, q);
                if (m(t, j) != 0) {
                    m.swapCols(t, j);
                    v.swapCols(t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // divisibility: pull an offending row into the pivot row
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        m.addRowMultiple(t, i, 1);
                        u.addRowMultiple(t, i, 1);
                        clean = false;
                        break;
                    }
        }
        if (m(t, t) < 0) {
            m.negateRow(t);
            u.negateRow(t);
        }
        ++t;
    }
    out.rank = t;
    out.diagonal = std::move(m);
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

mpz_class determinant(const IntMatrix& input)
{
    if (input.rows() != input.cols())
        throw StructuralError("determinant: matrix not square");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix m = input;
    mpz_class sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            m.swapRows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), value.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::optional<IntMatrix> unimodularInverse(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw StructuralError("unimodularInverse: matrix not square");
    const std::size_t n = m.rows();
    SmithForm snf = smithNormalForm(m);
    if (snf.rank != n)
        return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (snf.diagonal(i, i) != 1)
            return std::nullopt;
    // U M V = I  =>  M^{-1} = V U
    return snf.right * snf.left;
}

std::optional<IntVec> solveInteger(const IntMatrix& m, const IntVec& b)
{
    if (b.size() != m.rows())
        throw StructuralError("solveInteger: right-hand side length mismatch");
    SmithForm snf = smithNormalForm(m);
    IntVec ub = snf.left * b;
    IntVec y(m.cols());
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < snf.rank) {
            const mpz_class& d = snf.diagonal(i, i);
            if (ub[i] % d != 0)
                return std::nullopt;
            y[i] = ub[i] / d;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.right * y;
}

std::int64_t toInt64(const mpz_class& value)
{
    if (!value.fits_slong_p())
        throw ResourceGuardError("integer value exceeds 64-bit range");
    return value.get_si();
}

} // namespace gaut

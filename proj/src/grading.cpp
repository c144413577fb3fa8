#include "gaut/grading.hpp"

#include "gaut/cone.hpp"
#include "gaut/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gaut {

namespace {

void requireSameGroup(const GradingGroup& a, const GradingGroup& b, const char* where)
{
    if (!(a == b))
        throw StructuralError(std::string(where) + ": elements of different grading groups");
}

void requireShape(const SmallMatrix& m, std::size_t rows, std::size_t cols, const char* what)
{
    if (m.size() != rows)
        throw StructuralError(std::string(what) + ": wrong number of rows");
    for (const auto& row : m)
        if (row.size() != cols)
            throw StructuralError(std::string(what) + ": wrong number of columns");
}

void reduceTorsionRows(const GradingGroup& group, SmallMatrix& m)
{
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto& x : m[i])
            x = reduceMod(x, group.torsionOrder(i));
}

IntMatrix toIntMatrix(const SmallMatrix& m, std::size_t cols)
{
    return IntMatrix::fromRows(m, cols);
}

SmallMatrix toSmall(const IntMatrix& m)
{
    SmallMatrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = toInt64(m(i, j));
    return out;
}

// out = x * y over the integers (no reduction)
SmallMatrix multiply(const SmallMatrix& x, const SmallMatrix& y, std::size_t inner, std::size_t cols)
{
    SmallMatrix out(x.size(), std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += x[i][k] * y[k][j];
    return out;
}

} // namespace

GradingGroup::GradingGroup(std::size_t freeRank, std::vector<std::int64_t> torsion)
    : freeRank_(freeRank), torsion_(std::move(torsion))
{
    for (auto a : torsion_)
        if (a < 2)
            throw StructuralError("GradingGroup: torsion orders must be >= 2");
}

std::uint64_t GradingGroup::torsionSize(std::uint64_t cap) const
{
    std::uint64_t size = 1;
    for (auto a : torsion_) {
        if (size > cap / static_cast<std::uint64_t>(a))
            return cap + 1;
        size *= static_cast<std::uint64_t>(a);
    }
    return size;
}

std::string GradingGroup::toString() const
{
    std::ostringstream os;
    os << "Z^" << freeRank_;
    for (auto a : torsion_)
        os << " + Z/" << a;
    return os.str();
}

GroupElement::GroupElement(const GradingGroup& group, std::vector<std::int64_t> freePart,
                           std::vector<std::int64_t> torsionPart)
    : group_(group), free_(std::move(freePart)), torsion_(std::move(torsionPart))
{
    if (free_.size() != group_.freeRank() || torsion_.size() != group_.torsionRank())
        throw StructuralError("GroupElement: coordinate count does not match the grading group");
    for (std::size_t j = 0; j < torsion_.size(); ++j)
        torsion_[j] = reduceMod(torsion_[j], group_.torsionOrder(j));
}

GroupElement GroupElement::zero(const GradingGroup& group)
{
    return GroupElement(group, std::vector<std::int64_t>(group.freeRank(), 0),
                        std::vector<std::int64_t>(group.torsionRank(), 0));
}

GroupElement GroupElement::fromCoordinates(const GradingGroup& group, std::span<const std::int64_t> coords)
{
    const std::size_t k = group.freeRank();
    if (coords.size() != k + group.torsionRank())
        throw StructuralError("GroupElement::fromCoordinates: expected " +
                              std::to_string(k + group.torsionRank()) + " coordinates, got " +
                              std::to_string(coords.size()));
    return GroupElement(group, std::vector<std::int64_t>(coords.begin(), coords.begin() + static_cast<long>(k)),
                        std::vector<std::int64_t>(coords.begin() + static_cast<long>(k), coords.end()));
}

std::vector<std::int64_t> GroupElement::coordinates() const
{
    std::vector<std::int64_t> out = free_;
    out.insert(out.end(), torsion_.begin(), torsion_.end());
    return out;
}

IntVec GroupElement::freeVector() const
{
    IntVec v;
    for (auto x : free_)
        v.emplace_back(static_cast<long>(x));
    return v;
}

bool GroupElement::isZero() const
{
    return std::all_of(free_.begin(), free_.end(), [](auto x) { return x == 0; }) &&
           std::all_of(torsion_.begin(), torsion_.end(), [](auto x) { return x == 0; });
}

GroupElement GroupElement::operator+(const GroupElement& other) const
{
    requireSameGroup(group_, other.group_, "GroupElement::operator+");
    GroupElement out = *this;
    for (std::size_t i = 0; i < free_.size(); ++i)
        out.free_[i] += other.free_[i];
    for (std::size_t j = 0; j < torsion_.size(); ++j)
        out.torsion_[j] = reduceMod(out.torsion_[j] + other.torsion_[j], group_.torsionOrder(j));
    return out;
}

GroupElement GroupElement::operator-() const
{
    GroupElement out = *this;
    for (auto& x : out.free_)
        x = -x;
    for (std::size_t j = 0; j < torsion_.size(); ++j)
        out.torsion_[j] = reduceMod(-out.torsion_[j], group_.torsionOrder(j));
    return out;
}

GroupElement GroupElement::operator-(const GroupElement& other) const
{
    return *this + (-other);
}

GroupElement GroupElement::scaled(std::int64_t factor) const
{
    GroupElement out = *this;
    for (auto& x : out.free_)
        x *= factor;
    for (std::size_t j = 0; j < torsion_.size(); ++j)
        out.torsion_[j] = reduceMod(reduceMod(factor, group_.torsionOrder(j)) * out.torsion_[j],
                                    group_.torsionOrder(j));
    return out;
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& other) const
{
    if (auto c = free_ <=> other.free_; c != 0)
        return c;
    return torsion_ <=> other.torsion_;
}

std::string GroupElement::toString() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < free_.size(); ++i)
        os << (i ? "," : "") << free_[i];
    if (!torsion_.empty()) {
        os << ';';
        for (std::size_t j = 0; j < torsion_.size(); ++j)
            os << (j ? "," : "") << torsion_[j];
    }
    os << ')';
    return os.str();
}

GroupElement addElements(const GroupElement& x, const GroupElement& y)
{
    return x + y;
}

DegreeMatrix::DegreeMatrix(GradingGroup group, std::vector<GroupElement> columns)
    : group_(std::move(group)), columns_(std::move(columns))
{
    if (columns_.empty())
        throw StructuralError("DegreeMatrix: at least one column required");
    for (const auto& c : columns_)
        requireSameGroup(group_, c.group(), "DegreeMatrix");
}

DegreeMatrix DegreeMatrix::fromRows(const GradingGroup& group, const SmallMatrix& rows)
{
    const std::size_t height = group.freeRank() + group.torsionRank();
    if (rows.size() != height)
        throw StructuralError("DegreeMatrix: expected " + std::to_string(height) + " rows, got " +
                              std::to_string(rows.size()));
    if (rows.empty())
        throw StructuralError("DegreeMatrix: the trivial group admits no degree rows");
    const std::size_t r = rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != r)
            throw StructuralError("DegreeMatrix: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " + std::to_string(r));
    std::vector<GroupElement> columns;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<std::int64_t> coords(height);
        for (std::size_t i = 0; i < height; ++i)
            coords[i] = rows[i][j];
        columns.push_back(GroupElement::fromCoordinates(group, coords));
    }
    return DegreeMatrix(group, std::move(columns));
}

std::vector<IntVec> DegreeMatrix::freeParts() const
{
    std::vector<IntVec> out;
    for (const auto& c : columns_)
        out.push_back(c.freeVector());
    return out;
}

SmallMatrix DegreeMatrix::rows() const
{
    const std::size_t height = group_.freeRank() + group_.torsionRank();
    SmallMatrix out(height, std::vector<std::int64_t>(columns_.size()));
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        auto coords = columns_[j].coordinates();
        for (std::size_t i = 0; i < height; ++i)
            out[i][j] = coords[i];
    }
    return out;
}

GroupElement degreeOfExponent(const DegreeMatrix& q, std::span<const std::int64_t> exponent)
{
    if (exponent.size() != q.size())
        throw StructuralError("degreeOfExponent: exponent vector has length " + std::to_string(exponent.size()) +
                              ", degree matrix has " + std::to_string(q.size()) + " columns");
    const GradingGroup& g = q.group();
    std::vector<std::int64_t> freePart(g.freeRank(), 0);
    std::vector<std::int64_t> torsionPart(g.torsionRank(), 0);
    for (std::size_t i = 0; i < exponent.size(); ++i) {
        const std::int64_t e = exponent[i];
        if (e < 0)
            throw StructuralError("degreeOfExponent: negative exponent");
        if (e == 0)
            continue;
        const GroupElement& c = q.column(i);
        for (std::size_t a = 0; a < freePart.size(); ++a)
            freePart[a] += e * c.freePart()[a];
        for (std::size_t b = 0; b < torsionPart.size(); ++b)
            torsionPart[b] = reduceMod(torsionPart[b] + e % g.torsionOrder(b) * c.torsionPart()[b], g.torsionOrder(b));
    }
    return GroupElement(g, std::move(freePart), std::move(torsionPart));
}

GroupAutomorphism::GroupAutomorphism(GradingGroup group, SmallMatrix a, SmallMatrix c, SmallMatrix d)
    : group_(std::move(group)), a_(std::move(a)), c_(std::move(c)), d_(std::move(d))
{
}

GroupAutomorphism GroupAutomorphism::identity(const GradingGroup& group)
{
    const std::size_t k = group.freeRank();
    const std::size_t l = group.torsionRank();
    SmallMatrix a(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        a[i][i] = 1;
    SmallMatrix c(l, std::vector<std::int64_t>(k, 0));
    SmallMatrix d(l, std::vector<std::int64_t>(l, 0));
    for (std::size_t i = 0; i < l; ++i)
        d[i][i] = 1;
    return GroupAutomorphism(group, std::move(a), std::move(c), std::move(d));
}

GroupAutomorphism GroupAutomorphism::fromBlocks(const GradingGroup& group, SmallMatrix freeBlock,
                                                SmallMatrix mixingBlock, SmallMatrix torsionBlock)
{
    const std::size_t k = group.freeRank();
    const std::size_t l = group.torsionRank();
    requireShape(freeBlock, k, k, "GroupAutomorphism free block");
    requireShape(mixingBlock, l, k, "GroupAutomorphism mixing block");
    requireShape(torsionBlock, l, l, "GroupAutomorphism torsion block");
    reduceTorsionRows(group, mixingBlock);
    reduceTorsionRows(group, torsionBlock);
    if (abs(determinant(toIntMatrix(freeBlock, k))) != 1)
        throw ValidationError("GroupAutomorphism: free block is not unimodular");
    if (!torsionBlockIsWellDefined(group, torsionBlock))
        throw ValidationError("GroupAutomorphism: torsion block does not respect the torsion orders");
    if (!torsionBlockIsBijective(group, torsionBlock))
        throw ValidationError("GroupAutomorphism: torsion block is not bijective");
    return GroupAutomorphism(group, std::move(freeBlock), std::move(mixingBlock), std::move(torsionBlock));
}

GroupAutomorphism GroupAutomorphism::fromDisplayMatrix(const GradingGroup& group, const SmallMatrix& display)
{
    const std::size_t k = group.freeRank();
    const std::size_t l = group.torsionRank();
    requireShape(display, k + l, k + l, "GroupAutomorphism display matrix");
    SmallMatrix a(k), c(l), d(l);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = k; j < k + l; ++j)
            if (display[i][j] != 0)
                throw ValidationError("GroupAutomorphism: free rows may not depend on torsion coordinates");
        a[i].assign(display[i].begin(), display[i].begin() + static_cast<long>(k));
    }
    for (std::size_t i = 0; i < l; ++i) {
        c[i].assign(display[k + i].begin(), display[k + i].begin() + static_cast<long>(k));
        d[i].assign(display[k + i].begin() + static_cast<long>(k), display[k + i].end());
    }
    return fromBlocks(group, std::move(a), std::move(c), std::move(d));
}

IntMatrix GroupAutomorphism::freeMatrix() const
{
    return toIntMatrix(a_, group_.freeRank());
}

SmallMatrix GroupAutomorphism::displayMatrix() const
{
    const std::size_t k = group_.freeRank();
    const std::size_t l = group_.torsionRank();
    SmallMatrix out(k + l, std::vector<std::int64_t>(k + l, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out[i][j] = a_[i][j];
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            out[k + i][j] = c_[i][j];
        for (std::size_t j = 0; j < l; ++j)
            out[k + i][k + j] = d_[i][j];
    }
    return out;
}

bool GroupAutomorphism::isIdentity() const
{
    return *this == identity(group_);
}

GroupElement GroupAutomorphism::apply(const GroupElement& x) const
{
    requireSameGroup(group_, x.group(), "GroupAutomorphism::apply");
    const std::size_t k = group_.freeRank();
    const std::size_t l = group_.torsionRank();
    std::vector<std::int64_t> freePart(k, 0), torsionPart(l, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            freePart[i] += a_[i][j] * x.freePart()[j];
    for (std::size_t i = 0; i < l; ++i) {
        const std::int64_t a = group_.torsionOrder(i);
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < k; ++j)
            acc = reduceMod(acc + c_[i][j] * reduceMod(x.freePart()[j], a), a);
        for (std::size_t j = 0; j < l; ++j)
            acc = reduceMod(acc + d_[i][j] * x.torsionPart()[j], a);
        torsionPart[i] = acc;
    }
    return GroupElement(group_, std::move(freePart), std::move(torsionPart));
}

GroupElement applyAutomorphism(const GroupAutomorphism& b, const GroupElement& x)
{
    return b.apply(x);
}

GroupAutomorphism composeAutomorphisms(const GroupAutomorphism& b1, const GroupAutomorphism& b2)
{
    requireSameGroup(b1.group(), b2.group(), "composeAutomorphisms");
    const GradingGroup& g = b1.group();
    const std::size_t k = g.freeRank();
    const std::size_t l = g.torsionRank();
    SmallMatrix a = multiply(b1.freeBlock(), b2.freeBlock(), k, k);
    SmallMatrix c = multiply(b1.mixingBlock(), b2.freeBlock(), k, k);
    SmallMatrix dc = multiply(b1.torsionBlock(), b2.mixingBlock(), l, k);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < k; ++j)
            c[i][j] += dc[i][j];
    SmallMatrix d = multiply(b1.torsionBlock(), b2.torsionBlock(), l, l);
    reduceTorsionRows(g, c);
    reduceTorsionRows(g, d);
    return GroupAutomorphism::fromBlocks(g, std::move(a), std::move(c), std::move(d));
}

GroupAutomorphism inverseAutomorphism(const GroupAutomorphism& b)
{
    const GradingGroup& g = b.group();
    const std::size_t k = g.freeRank();
    const std::size_t l = g.torsionRank();
    auto aInv = unimodularInverse(b.freeMatrix());
    if (!aInv)
        throw InternalError("inverseAutomorphism: free block lost unimodularity");
    SmallMatrix a = toSmall(*aInv);

    // D^{-1} column j solves D x = e_j in T, i.e. [D | diag(a)] (x; y) = e_j over Z.
    SmallMatrix dInv(l, std::vector<std::int64_t>(l, 0));
    if (l > 0) {
        IntMatrix system(l, 2 * l);
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t j = 0; j < l; ++j)
                system(i, j) = static_cast<long>(b.torsionBlock()[i][j]);
            system(i, l + i) = static_cast<long>(g.torsionOrder(i));
        }
        for (std::size_t j = 0; j < l; ++j) {
            IntVec rhs(l);
            rhs[j] = 1;
            auto sol = solveInteger(system, rhs);
            if (!sol)
                throw InternalError("inverseAutomorphism: torsion block lost bijectivity");
            for (std::size_t i = 0; i < l; ++i) {
                mpz_class x = (*sol)[i] % static_cast<long>(g.torsionOrder(i));
                dInv[i][j] = reduceMod(toInt64(x), g.torsionOrder(i));
            }
        }
    }
    // C' = -D^{-1} C A^{-1}
    SmallMatrix ca = multiply(b.mixingBlock(), a, k, k);
    reduceTorsionRows(g, ca);
    SmallMatrix c = multiply(dInv, ca, l, k);
    for (auto& row : c)
        for (auto& x : row)
            x = -x;
    reduceTorsionRows(g, c);
    return GroupAutomorphism::fromBlocks(g, std::move(a), std::move(c), std::move(dInv));
}

bool torsionBlockIsWellDefined(const GradingGroup& group, const SmallMatrix& torsionBlock)
{
    const std::size_t l = group.torsionRank();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            if ((group.torsionOrder(j) * torsionBlock[i][j]) % group.torsionOrder(i) != 0)
                return false;
    return true;
}

bool torsionBlockIsBijective(const GradingGroup& group, const SmallMatrix& torsionBlock, std::uint64_t enumerationCap)
{
    const std::size_t l = group.torsionRank();
    if (l == 0)
        return true;
    const std::uint64_t size = group.torsionSize(enumerationCap);
    if (size <= enumerationCap) {
        // mixed-radix enumeration of T; injective on a finite set means bijective
        std::vector<char> hit(size, 0);
        std::vector<std::int64_t> t(l, 0);
        for (std::uint64_t count = 0; count < size; ++count) {
            std::uint64_t index = 0;
            for (std::size_t i = 0; i < l; ++i) {
                std::int64_t acc = 0;
                for (std::size_t j = 0; j < l; ++j)
                    acc = reduceMod(acc + torsionBlock[i][j] * t[j], group.torsionOrder(i));
                index = index * static_cast<std::uint64_t>(group.torsionOrder(i)) + static_cast<std::uint64_t>(acc);
            }
            if (hit[index])
                return false;
            hit[index] = 1;
            for (std::size_t j = l; j-- > 0;) {
                if (++t[j] < group.torsionOrder(j))
                    break;
                t[j] = 0;
            }
        }
        return true;
    }
    // surjective iff the columns of D and the relations generate Z^l
    IntMatrix system(l, 2 * l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j)
            system(i, j) = static_cast<long>(torsionBlock[i][j]);
        system(i, l + i) = static_cast<long>(group.torsionOrder(i));
    }
    SmithForm snf = smithNormalForm(system);
    if (snf.rank != l)
        return false;
    for (std::size_t i = 0; i < l; ++i)
        if (snf.diagonal(i, i) != 1)
            return false;
    return true;
}

bool checkEffective(const DegreeMatrix& q)
{
    const GradingGroup& g = q.group();
    const std::size_t k = g.freeRank();
    const std::size_t l = g.torsionRank();
    const std::size_t r = q.size();
    if (k + l == 0)
        return true;
    IntMatrix m(k + l, r + l);
    for (std::size_t j = 0; j < r; ++j) {
        auto coords = q.column(j).coordinates();
        for (std::size_t i = 0; i < k + l; ++i)
            m(i, j) = static_cast<long>(coords[i]);
    }
    for (std::size_t i = 0; i < l; ++i)
        m(k + i, r + i) = static_cast<long>(g.torsionOrder(i));
    SmithForm snf = smithNormalForm(m);
    if (snf.rank != k + l)
        return false;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.diagonal(i, i) != 1)
            return false;
    return true;
}

std::optional<IntVec> positiveFunctional(const DegreeMatrix& q)
{
    return strictlyPositiveFunctional(q.group().freeRank(), q.freeParts());
}

bool checkPointed(const DegreeMatrix& q)
{
    return positiveFunctional(q).has_value();
}

bool containsLatticeBasis(const DegreeMatrix& q)
{
    const std::size_t k = q.group().freeRank();
    if (k == 0)
        return true;
    std::vector<IntVec> parts = q.freeParts();
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    if (parts.size() < k)
        return false;
    std::vector<bool> mask(parts.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
        IntMatrix m(k, k);
        std::size_t col = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (mask[i]) {
                for (std::size_t row = 0; row < k; ++row)
                    m(row, col) = parts[i][row];
                ++col;
            }
        if (abs(determinant(m)) == 1)
            return true;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return false;
}

std::string formatMatrix(const SmallMatrix& m)
{
    std::size_t width = 1;
    for (const auto& row : m)
        for (auto x : row)
            width = std::max(width, std::to_string(x).size());
    std::ostringstream os;
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::string s = std::to_string(row[j]);
            os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace gaut

#pragma once

#include "gaut/integer_matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gaut {

using SmallMatrix = std::vector<std::vector<std::int64_t>>;

/// K = Z^k + Z/a_1 + ... + Z/a_l with every a_j >= 2.
class GradingGroup {
public:
    GradingGroup() = default;
    GradingGroup(std::size_t freeRank, std::vector<std::int64_t> torsion);

    std::size_t freeRank() const { return freeRank_; }
    std::size_t torsionRank() const { return torsion_.size(); }
    const std::vector<std::int64_t>& torsion() const { return torsion_; }
    std::int64_t torsionOrder(std::size_t j) const { return torsion_[j]; }
    /// |T| = prod a_j, saturated at `cap + 1`.
    std::uint64_t torsionSize(std::uint64_t cap) const;

    bool operator==(const GradingGroup&) const = default;

    std::string toString() const;

private:
    std::size_t freeRank_ = 0;
    std::vector<std::int64_t> torsion_;
};

/// Element of K; torsion coordinates are kept in [0, a_j).
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(const GradingGroup& group, std::vector<std::int64_t> freePart, std::vector<std::int64_t> torsionPart);

    static GroupElement zero(const GradingGroup& group);
    /// Free coordinates followed by torsion coordinates.
    static GroupElement fromCoordinates(const GradingGroup& group, std::span<const std::int64_t> coords);

    const GradingGroup& group() const { return group_; }
    const std::vector<std::int64_t>& freePart() const { return free_; }
    const std::vector<std::int64_t>& torsionPart() const { return torsion_; }
    std::vector<std::int64_t> coordinates() const;
    IntVec freeVector() const;
    bool isZero() const;

    GroupElement operator+(const GroupElement& other) const;
    GroupElement operator-(const GroupElement& other) const;
    GroupElement operator-() const;
    GroupElement scaled(std::int64_t factor) const;

    bool operator==(const GroupElement& other) const { return free_ == other.free_ && torsion_ == other.torsion_; }
    std::strong_ordering operator<=>(const GroupElement& other) const;

    /// "(0,0,2;1)"; the torsion part follows the semicolon when l > 0.
    std::string toString() const;

private:
    GradingGroup group_;
    std::vector<std::int64_t> free_;
    std::vector<std::int64_t> torsion_;
};

GroupElement addElements(const GroupElement& x, const GroupElement& y);

/// Columns q_1..q_r of the degree matrix Q.
class DegreeMatrix {
public:
    DegreeMatrix() = default;
    DegreeMatrix(GradingGroup group, std::vector<GroupElement> columns);
    /// k + l rows of length r; the last l rows are torsion rows.
    static DegreeMatrix fromRows(const GradingGroup& group, const SmallMatrix& rows);

    const GradingGroup& group() const { return group_; }
    std::size_t size() const { return columns_.size(); }
    const GroupElement& column(std::size_t i) const { return columns_[i]; }
    const std::vector<GroupElement>& columns() const { return columns_; }
    std::vector<IntVec> freeParts() const;
    /// Display rows, torsion rows reduced.
    SmallMatrix rows() const;

private:
    GradingGroup group_;
    std::vector<GroupElement> columns_;
};

/// sum_i e_i q_i.
GroupElement degreeOfExponent(const DegreeMatrix& q, std::span<const std::int64_t> exponent);

/// Automorphism of K in lower block-triangular form
///   x -> (A x_free, C x_free + D x_tors)
/// with the torsion rows of C and D reduced modulo their torsion order.
class GroupAutomorphism {
public:
    GroupAutomorphism() = default;
    static GroupAutomorphism identity(const GradingGroup& group);
    /// Validates |det A| = 1, well-definedness and bijectivity of D; throws ValidationError.
    static GroupAutomorphism fromBlocks(const GradingGroup& group, SmallMatrix freeBlock, SmallMatrix mixingBlock,
                                        SmallMatrix torsionBlock);
    /// Square (k+l) matrix in display convention; the upper right k x l block must vanish.
    static GroupAutomorphism fromDisplayMatrix(const GradingGroup& group, const SmallMatrix& display);

    const GradingGroup& group() const { return group_; }
    const SmallMatrix& freeBlock() const { return a_; }
    const SmallMatrix& mixingBlock() const { return c_; }
    const SmallMatrix& torsionBlock() const { return d_; }
    IntMatrix freeMatrix() const;
    SmallMatrix displayMatrix() const;
    bool isIdentity() const;

    GroupElement apply(const GroupElement& x) const;

    bool operator==(const GroupAutomorphism& other) const
    {
        return group_ == other.group_ && a_ == other.a_ && c_ == other.c_ && d_ == other.d_;
    }

private:
    GroupAutomorphism(GradingGroup group, SmallMatrix a, SmallMatrix c, SmallMatrix d);

    GradingGroup group_;
    SmallMatrix a_;
    SmallMatrix c_;
    SmallMatrix d_;
};

GroupElement applyAutomorphism(const GroupAutomorphism& b, const GroupElement& x);
/// (b1 o b2)(x) = b1(b2(x)).
GroupAutomorphism composeAutomorphisms(const GroupAutomorphism& b1, const GroupAutomorphism& b2);
GroupAutomorphism inverseAutomorphism(const GroupAutomorphism& b);

/// Torsion block defines a bijection of the torsion subgroup. Enumerates the
/// group when |T| <= enumerationCap, otherwise uses the Smith form of [D | diag(a)].
bool torsionBlockIsBijective(const GradingGroup& group, const SmallMatrix& torsionBlock,
                             std::uint64_t enumerationCap = 1'000'000);
/// a_i divides a_j * D_ij for all i, j.
bool torsionBlockIsWellDefined(const GradingGroup& group, const SmallMatrix& torsionBlock);

/// The columns of Q generate K as a group.
bool checkEffective(const DegreeMatrix& q);
/// The free parts span a cone without lines and none of them is zero.
bool checkPointed(const DegreeMatrix& q);
/// Integer phi with phi.q_i^0 > 0 for every column; std::nullopt if not pointed.
std::optional<IntVec> positiveFunctional(const DegreeMatrix& q);
/// Some k-subset of the free parts has determinant +-1.
bool containsLatticeBasis(const DegreeMatrix& q);

std::string formatMatrix(const SmallMatrix& m);

} // namespace gaut

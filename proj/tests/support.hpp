// Shared fixtures and brute-force oracles for the test binaries. Nothing here
// calls into the code paths it is used to check.
#pragma once

#include "gaut/aut_algebra.hpp"
#include "gaut/errors.hpp"
#include "gaut/grading.hpp"
#include "gaut/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace testing_support {

using namespace gaut;

inline const SmallMatrix kRunningQ = {{1, 1, 0, 0, -1, -1, 2, -2},
                                      {0, 1, 1, -1, -1, 0, 1, -1},
                                      {1, 1, 1, 1, 1, 1, 1, 1},
                                      {1, 0, 1, 0, 1, 0, 1, 0}};
inline const char* const kRunningGenerator = "T(1)*T(6) + T(2)*T(5) + T(3)*T(4) + T(7)*T(8)";

inline GradingGroup runningGroup() { return GradingGroup(3, {2}); }
inline DegreeMatrix runningDegrees() { return DegreeMatrix::fromRows(runningGroup(), kRunningQ); }
inline GradedPolyRing runningRing() { return GradedPolyRing(runningDegrees()); }
inline Ideal runningIdeal()
{
    GradedPolyRing s = runningRing();
    return Ideal(s, {parsePolynomial(kRunningGenerator, s.naming())});
}

/// The four matrices printed for the running example, in the printed order.
inline const std::vector<SmallMatrix> kRunningAutomorphisms = {
    {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
    {{1, -2, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}},
    {{-1, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 1}},
    {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}},
};

inline GroupElement element(const GradingGroup& k, std::vector<std::int64_t> coords)
{
    return GroupElement::fromCoordinates(k, coords);
}

// ---------------------------------------------------------------------------
// small dense rational helpers, written independently of the library

using QMatrix = std::vector<std::vector<mpq_class>>;

/// Rank by plain Gaussian elimination.
inline std::size_t naiveRank(QMatrix m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != rank && m[r][c] != 0) {
                mpq_class f = m[r][c] / m[rank][c];
                for (std::size_t j = c; j < cols; ++j)
                    m[r][j] -= f * m[rank][j];
            }
        ++rank;
    }
    return rank;
}

/// Solves X * M = N for X (square M invertible), by Gauss-Jordan on the transpose.
inline std::optional<QMatrix> solveRight(const QMatrix& m, const QMatrix& n)
{
    // X M = N  <=>  M^T X^T = N^T
    const std::size_t k = m.size();
    const std::size_t rows = n.size();
    QMatrix aug(k, std::vector<mpq_class>(k + rows));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            aug[i][j] = m[j][i];
        for (std::size_t j = 0; j < rows; ++j)
            aug[i][k + j] = n[j][i];
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && aug[p][c] == 0)
            ++p;
        if (p == k)
            return std::nullopt;
        std::swap(aug[p], aug[c]);
        for (std::size_t r = 0; r < k; ++r)
            if (r != c && aug[r][c] != 0) {
                mpq_class f = aug[r][c] / aug[c][c];
                for (std::size_t j = c; j < k + rows; ++j)
                    aug[r][j] -= f * aug[c][j];
            }
    }
    QMatrix x(rows, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < rows; ++j)
            x[j][i] = aug[i][k + j] / aug[i][i];
    return x;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline mpz_class cofactorDeterminant(const std::vector<std::vector<mpz_class>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    mpz_class det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<std::vector<mpz_class>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<mpz_class> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        mpz_class term = m[0][c] * cofactorDeterminant(minor);
        det += (c % 2 == 0) ? term : mpz_class(-term);
    }
    return det;
}

// ---------------------------------------------------------------------------
// oracles

/// The columns of Q generate K iff the gcd of the maximal minors of
/// [Q | 0 ; 0 | diag(a)] is 1 (first determinantal divisor of the quotient).
inline bool effectiveByMinors(const GradingGroup& k, const SmallMatrix& q)
{
    const std::size_t rows = k.freeRank() + k.torsionRank();
    const std::size_t r = q[0].size();
    std::vector<std::vector<mpz_class>> ext(rows, std::vector<mpz_class>(r + k.torsionRank(), 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < r; ++j)
            ext[i][j] = q[i][j];
    for (std::size_t t = 0; t < k.torsionRank(); ++t)
        ext[k.freeRank() + t][r + t] = k.torsionOrder(t);
    const std::size_t cols = ext[0].size();
    if (cols < rows)
        return false;
    mpz_class g = 0;
    std::vector<std::size_t> pick(rows);
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == rows) {
            std::vector<std::vector<mpz_class>> sub(rows, std::vector<mpz_class>(rows));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < rows; ++j)
                    sub[i][j] = ext[i][pick[j]];
            mpz_class d = cofactorDeterminant(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            return;
        }
        for (std::size_t c = start; c < cols; ++c) {
            pick[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return g == 1;
}

/// Tri-state pointedness oracle over bounded witnesses: a small functional
/// positive on every column proves pointed, a small nonnegative relation
/// sum lambda_i q_i^0 = 0 proves not pointed.
inline std::optional<bool> pointedByWitness(const SmallMatrix& freeRows, std::int64_t bound = 4)
{
    const std::size_t k = freeRows.size();
    const std::size_t r = freeRows[0].size();
    for (std::size_t i = 0; i < r; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < k; ++j)
            zero = zero && freeRows[j][i] == 0;
        if (zero)
            return false;
    }
    std::vector<std::int64_t> phi(k, -bound);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < k; ++j)
                s += phi[j] * freeRows[j][i];
            ok = s > 0;
        }
        if (ok)
            return true;
        std::size_t j = 0;
        while (j < k && phi[j] == bound)
            phi[j++] = -bound;
        if (j == k)
            break;
        ++phi[j];
    }
    std::vector<std::int64_t> lambda(r, 0);
    while (true) {
        std::size_t j = 0;
        while (j < r && lambda[j] == bound)
            lambda[j++] = 0;
        if (j == r)
            break;
        ++lambda[j];
        bool zero = true;
        for (std::size_t row = 0; row < k && zero; ++row) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < r; ++i)
                s += lambda[i] * freeRows[row][i];
            zero = s == 0;
        }
        if (zero)
            return false;
    }
    return std::nullopt;
}

/// Exponent vectors of total degree <= maxTotal whose degree is w, found by
/// exhaustive enumeration. Returned sorted lexicographically.
inline std::vector<std::vector<std::int64_t>> naiveMonomials(const DegreeMatrix& q, const GroupElement& w,
                                                              std::int64_t maxTotal)
{
    const std::size_t r = q.size();
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> e(r, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i == r) {
            GroupElement d = GroupElement::zero(q.group());
            for (std::size_t v = 0; v < r; ++v)
                d = d + q.column(v).scaled(e[v]);
            if (d == w)
                out.push_back(e);
            return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
            e[i] = x;
            self(self, i + 1, left - x);
        }
        e[i] = 0;
    };
    rec(rec, 0, maxTotal);
    std::sort(out.begin(), out.end());
    return out;
}

/// Small integer functional positive on all free parts, by search.
inline std::optional<std::vector<std::int64_t>> smallPositiveFunctional(const SmallMatrix& freeRows,
                                                                        std::int64_t bound = 4)
{
    const std::size_t k = freeRows.size();
    const std::size_t r = freeRows[0].size();
    std::vector<std::int64_t> phi(k, -bound);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < k; ++j)
                s += phi[j] * freeRows[j][i];
            ok = s > 0;
        }
        if (ok)
            return phi;
        std::size_t j = 0;
        while (j < k && phi[j] == bound)
            phi[j++] = -bound;
        if (j == k)
            return std::nullopt;
        ++phi[j];
    }
}

/// Aut(Omega_S) by brute force: every bijection sigma of the distinct weights,
/// the free block from a rational solve of A W = W_sigma, and every torsion
/// block pair (C, D) modulo the torsion orders. Display matrices, sorted.
inline std::vector<SmallMatrix> bruteWeightAutomorphisms(const DegreeMatrix& q)
{
    const GradingGroup& g = q.group();
    const std::size_t k = g.freeRank();
    const std::size_t l = g.torsionRank();

    std::vector<GroupElement> weights;
    for (const auto& c : q.columns())
        if (std::find(weights.begin(), weights.end(), c) == weights.end())
            weights.push_back(c);
    const std::size_t s = weights.size();

    // a k-subset of weights with independent free parts, to solve for A
    std::vector<std::size_t> basis;
    {
        QMatrix rows;
        for (std::size_t i = 0; i < s && basis.size() < k; ++i) {
            QMatrix trial = rows;
            std::vector<mpq_class> v;
            for (auto x : weights[i].freePart())
                v.push_back(x);
            trial.push_back(v);
            if (naiveRank(trial) == trial.size()) {
                rows = trial;
                basis.push_back(i);
            }
        }
        if (basis.size() < k)
            return {};
    }

    // all torsion blocks (C | D), row t modulo a_t
    std::vector<std::int64_t> cell(l * (k + l), 0);
    std::vector<std::vector<std::int64_t>> candidates;
    if (l == 0) {
        candidates.push_back({});
    } else {
        while (true) {
            candidates.push_back(cell);
            std::size_t p = 0;
            while (p < cell.size() && cell[p] == g.torsionOrder(p / (k + l)) - 1)
                cell[p++] = 0;
            if (p == cell.size())
                break;
            ++cell[p];
        }
    }

    std::set<SmallMatrix> found;
    std::vector<std::size_t> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        QMatrix w, img;
        for (std::size_t i : basis) {
            std::vector<mpq_class> a, b;
            for (auto x : weights[i].freePart())
                a.push_back(x);
            for (auto x : weights[perm[i]].freePart())
                b.push_back(x);
            w.push_back(a);
            img.push_back(b);
        }
        SmallMatrix a(k, std::vector<std::int64_t>(k, 0));
        if (k > 0) {
            // A [w_1 .. w_k] = [img_1 .. img_k], columns being the free parts
            QMatrix wt(k, std::vector<mpq_class>(k)), it(k, std::vector<mpq_class>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    wt[i][j] = w[j][i];
                    it[i][j] = img[j][i];
                }
            auto x = solveRight(wt, it);
            if (!x)
                continue;
            bool integral = true;
            for (std::size_t i = 0; i < k && integral; ++i)
                for (std::size_t j = 0; j < k && integral; ++j) {
                    if ((*x)[i][j].get_den() != 1)
                        integral = false;
                    else
                        a[i][j] = (*x)[i][j].get_num().get_si();
                }
            if (!integral)
                continue;
            std::vector<std::vector<mpz_class>> az(k, std::vector<mpz_class>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    az[i][j] = a[i][j];
            mpz_class d = cofactorDeterminant(az);
            if (d != 1 && d != -1)
                continue;
        }
        for (const auto& cand : candidates) {
            SmallMatrix display(k + l, std::vector<std::int64_t>(k + l, 0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    display[i][j] = a[i][j];
            for (std::size_t t = 0; t < l; ++t)
                for (std::size_t j = 0; j < k + l; ++j)
                    display[k + t][j] = cand[t * (k + l) + j];
            // the map must be a well-defined bijective endomorphism of K
            bool wellDefined = true;
            for (std::size_t t = 0; t < l && wellDefined; ++t)
                for (std::size_t j = 0; j < l; ++j)
                    if ((g.torsionOrder(j) * display[k + t][k + j]) % g.torsionOrder(t) != 0)
                        wellDefined = false;
            if (!wellDefined)
                continue;
            auto apply = [&](const GroupElement& x) {
                std::vector<std::int64_t> c = x.coordinates(), out(k + l, 0);
                for (std::size_t i = 0; i < k + l; ++i)
                    for (std::size_t j = 0; j < k + l; ++j)
                        out[i] += display[i][j] * c[j];
                return GroupElement::fromCoordinates(g, out);
            };
            // bijective on torsion: injective on the finite torsion subgroup
            bool bijective = true;
            {
                std::set<std::vector<std::int64_t>> images;
                std::vector<std::int64_t> t(l, 0);
                std::size_t count = 0;
                while (true) {
                    std::vector<std::int64_t> coords(k, 0);
                    coords.insert(coords.end(), t.begin(), t.end());
                    images.insert(apply(GroupElement::fromCoordinates(g, coords)).coordinates());
                    ++count;
                    std::size_t p = 0;
                    while (p < l && t[p] == g.torsionOrder(p) - 1)
                        t[p++] = 0;
                    if (p == l)
                        break;
                    ++t[p];
                }
                bijective = images.size() == count;
            }
            if (!bijective)
                continue;
            bool permutes = true;
            for (std::size_t i = 0; i < s && permutes; ++i)
                permutes = apply(weights[i]) == weights[perm[i]];
            if (permutes)
                found.insert(display);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// random instances

struct RandomGradingSpec {
    std::size_t maxFreeRank = 3;
    std::size_t maxTorsionRank = 1;
    std::size_t maxVars = 6;
    std::int64_t entryBound = 2;
    std::vector<std::int64_t> torsionChoices = {2, 3, 4};
};

/// Random pointed degree matrix whose free parts contain a lattice basis.
inline DegreeMatrix randomPointedGrading(std::mt19937_64& rng, const RandomGradingSpec& spec = {})
{
    std::uniform_int_distribution<std::int64_t> entry(-spec.entryBound, spec.entryBound);
    while (true) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, spec.maxFreeRank)(rng);
        const std::size_t l = std::uniform_int_distribution<std::size_t>(0, spec.maxTorsionRank)(rng);
        const std::size_t r = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(k, 1), spec.maxVars)(rng);
        std::vector<std::int64_t> torsion;
        for (std::size_t t = 0; t < l; ++t)
            torsion.push_back(spec.torsionChoices[rng() % spec.torsionChoices.size()]);
        GradingGroup g(k, torsion);
        SmallMatrix q(k + l, std::vector<std::int64_t>(r));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < r; ++j)
                q[i][j] = entry(rng);
        for (std::size_t t = 0; t < l; ++t)
            for (std::size_t j = 0; j < r; ++j)
                q[k + t][j] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(torsion[t]));
        SmallMatrix free(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(k));
        auto pointed = pointedByWitness(free);
        if (!pointed || !*pointed)
            continue;
        // lattice basis among free parts: some k columns with determinant +-1
        bool basis = false;
        std::vector<std::size_t> pick(k);
        auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
            if (basis)
                return;
            if (depth == k) {
                std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        m[i][j] = free[i][pick[j]];
                mpz_class d = cofactorDeterminant(m);
                basis = d == 1 || d == -1;
                return;
            }
            for (std::size_t c = start; c < r; ++c) {
                pick[depth] = c;
                self(self, c + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
        if (basis)
            return DegreeMatrix::fromRows(g, q);
    }
}

/// Rational point of the quasitorus: t_j in Q* on the free factors and a sign
/// s_t on each torsion factor of even order (x -> s_t^x is a character there).
struct TorusPoint {
    std::vector<mpq_class> free;
    std::vector<int> torsionSign;

    mpq_class character(const GroupElement& q) const
    {
        mpq_class v = 1;
        for (std::size_t j = 0; j < free.size(); ++j) {
            std::int64_t e = q.freePart()[j];
            mpq_class base = e >= 0 ? free[j] : mpq_class(1 / free[j]);
            for (std::int64_t x = 0; x < (e >= 0 ? e : -e); ++x)
                v *= base;
        }
        for (std::size_t t = 0; t < torsionSign.size(); ++t)
            if (torsionSign[t] < 0 && q.torsionPart()[t] % 2 == 1)
                v = -v;
        return v;
    }
};

inline TorusPoint randomTorusPoint(std::mt19937_64& rng, const GradingGroup& g)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    TorusPoint t;
    for (std::size_t j = 0; j < g.freeRank(); ++j) {
        long n = 0;
        while (n == 0)
            n = num(rng);
        mpq_class x(n, den(rng));
        x.canonicalize();
        t.free.push_back(x);
    }
    for (std::size_t j = 0; j < g.torsionRank(); ++j)
        t.torsionSign.push_back(g.torsionOrder(j) % 2 == 0 && rng() % 2 ? -1 : 1);
    return t;
}

/// Point of S' = Q[Y, Z] for the identity triple acting by the torus element:
/// Y(i,i) = chi^{deg flat_i}(t), other Y zero, Z = 1/det.
inline std::vector<mpq_class> torusActionPoint(const ActionBasis& basis, const TorusPoint& t)
{
    const std::size_t n = basis.size();
    std::vector<mpq_class> point(n * n + 1, 0);
    mpq_class det = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class c = t.character(basis.degreeOf(i));
        point[i * n + i] = c;
        det *= c;
    }
    point[n * n] = 1 / det;
    return point;
}

} // namespace testing_support

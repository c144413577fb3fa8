#include "gaut/cone.hpp"

#include "gaut/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace gaut {

namespace {

// Fixed-width bitset over the processed inequalities.
class TightSet {
public:
    explicit TightSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

    TightSet operator&(const TightSet& o) const
    {
        TightSet r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] &= o.words_[i];
        return r;
    }

    bool subsetOf(const TightSet& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0)
                return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

bool isZero(const IntVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

// s0 * x - sx * y, made primitive
IntVec combine(const mpz_class& s0, const IntVec& x, const mpz_class& sx, const IntVec& y)
{
    IntVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = s0 * x[i] - sx * y[i];
    return primitive(std::move(out));
}

void checkDim(std::size_t dim, const std::vector<IntVec>& vs, const char* what)
{
    for (const auto& v : vs)
        if (v.size() != dim)
            throw StructuralError(std::string(what) + ": vector length does not match ambient dimension");
}

} // namespace

IntVec primitive(IntVec v)
{
    mpz_class g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVec primitiveFromRational(const RatVec& v)
{
    mpz_class l = 1;
    for (const auto& x : v)
        l = lcm(l, x.get_den());
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i].get_num() * (l / v[i].get_den());
    return primitive(std::move(out));
}

mpz_class dot(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size())
        throw StructuralError("dot: length mismatch");
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

VRepresentation generatorsFromInequalities(std::size_t dim, const HRepresentation& h)
{
    checkDim(dim, h.inequalities, "generatorsFromInequalities");
    checkDim(dim, h.equations, "generatorsFromInequalities");

    std::vector<IntVec> lin;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVec e(dim);
        e[i] = 1;
        lin.push_back(std::move(e));
    }

    for (const auto& eq : h.equations) {
        auto l0 = std::find_if(lin.begin(), lin.end(), [&](const IntVec& l) { return dot(eq, l) != 0; });
        if (l0 == lin.end())
            continue;
        IntVec pivot = *l0;
        lin.erase(l0);
        const mpz_class s0 = dot(eq, pivot);
        for (auto& l : lin)
            l = combine(s0, l, dot(eq, l), pivot);
    }

    const std::size_t total = h.inequalities.size();
    std::vector<IntVec> rays;
    std::vector<TightSet> tight;

    for (std::size_t t = 0; t < total; ++t) {
        const IntVec& a = h.inequalities[t];
        auto l0 = std::find_if(lin.begin(), lin.end(), [&](const IntVec& l) { return dot(a, l) != 0; });
        if (l0 != lin.end()) {
            IntVec pivot = *l0;
            lin.erase(l0);
            mpz_class s0 = dot(a, pivot);
            if (s0 < 0) {
                for (auto& x : pivot)
                    x = -x;
                s0 = -s0;
            }
            for (auto& l : lin)
                l = combine(s0, l, dot(a, l), pivot);
            for (std::size_t r = 0; r < rays.size(); ++r) {
                rays[r] = combine(s0, rays[r], dot(a, rays[r]), pivot);
                tight[r].set(t);
            }
            // every earlier inequality vanishes on the former lineality vector
            TightSet pivotTight(total);
            for (std::size_t p = 0; p < t; ++p)
                pivotTight.set(p);
            rays.push_back(std::move(pivot));
            tight.push_back(std::move(pivotTight));
            continue;
        }

        std::vector<mpz_class> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(a, rays[r]);
            if (value[r] > 0)
                pos.push_back(r);
            else if (value[r] < 0)
                neg.push_back(r);
        }

        std::vector<IntVec> nextRays;
        std::vector<TightSet> nextTight;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (value[r] < 0)
                continue;
            nextRays.push_back(rays[r]);
            nextTight.push_back(tight[r]);
            if (value[r] == 0)
                nextTight.back().set(t);
        }
        for (auto p : pos)
            for (auto n : neg) {
                TightSet common = tight[p] & tight[n];
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != n && common.subsetOf(tight[r]))
                        adjacent = false;
                if (!adjacent)
                    continue;
                nextRays.push_back(combine(value[p], rays[n], value[n], rays[p]));
                common.set(t);
                nextTight.push_back(std::move(common));
            }
        rays = std::move(nextRays);
        tight = std::move(nextTight);
    }

    VRepresentation out;
    for (auto& r : rays)
        if (!isZero(r))
            out.rays.push_back(primitive(std::move(r)));
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    out.lineality = std::move(lin);
    return out;
}

HRepresentation inequalitiesFromGenerators(std::size_t dim, const VRepresentation& v)
{
    VRepresentation dual = generatorsFromInequalities(dim, HRepresentation{v.rays, v.lineality});
    return HRepresentation{std::move(dual.rays), std::move(dual.lineality)};
}

std::optional<IntVec> strictlyPositiveFunctional(std::size_t dim, const std::vector<IntVec>& vectors)
{
    checkDim(dim, vectors, "strictlyPositiveFunctional");
    for (const auto& v : vectors)
        if (isZero(v))
            return std::nullopt;
    VRepresentation dual = generatorsFromInequalities(dim, HRepresentation{vectors, {}});
    std::vector<IntVec> spanning = dual.rays;
    spanning.insert(spanning.end(), dual.lineality.begin(), dual.lineality.end());
    RatRows rows;
    for (const auto& s : spanning) {
        RatVec row(s.begin(), s.end());
        rows.push_back(std::move(row));
    }
    if (rank(rows, dim) != dim)
        return std::nullopt;
    IntVec phi(dim);
    for (const auto& r : dual.rays)
        for (std::size_t i = 0; i < dim; ++i)
            phi[i] += r[i];
    for (const auto& v : vectors)
        if (dot(phi, v) <= 0)
            throw InternalError("strictlyPositiveFunctional: interior point check failed");
    return phi;
}

RationalCone::RationalCone(std::size_t dim, VRepresentation generators, HRepresentation facets)
    : dim_(dim), generators_(std::move(generators)), facets_(std::move(facets))
{
}

RationalCone RationalCone::fromRays(std::size_t dim, const std::vector<IntVec>& rays)
{
    checkDim(dim, rays, "RationalCone::fromRays");
    VRepresentation input;
    for (const auto& r : rays)
        if (!isZero(r))
            input.rays.push_back(primitive(r));
    HRepresentation h = inequalitiesFromGenerators(dim, input);
    RationalCone cone = fromInequalities(dim, h);
    for (const auto& r : input.rays)
        if (!cone.contains(r))
            throw InternalError("RationalCone::fromRays: generator outside its own facet description");
    return cone;
}

RationalCone RationalCone::fromRationalRays(std::size_t dim, const std::vector<RatVec>& rays)
{
    std::vector<IntVec> ints;
    for (const auto& r : rays)
        ints.push_back(primitiveFromRational(r));
    return fromRays(dim, ints);
}

RationalCone RationalCone::fromInequalities(std::size_t dim, const HRepresentation& h)
{
    VRepresentation v = generatorsFromInequalities(dim, h);
    HRepresentation minimal = inequalitiesFromGenerators(dim, v);
    return RationalCone(dim, std::move(v), std::move(minimal));
}

bool RationalCone::contains(const IntVec& v) const
{
    if (v.size() != dim_)
        throw StructuralError("RationalCone::contains: dimension mismatch");
    for (const auto& a : facets_.inequalities)
        if (dot(a, v) < 0)
            return false;
    for (const auto& e : facets_.equations)
        if (dot(e, v) != 0)
            return false;
    return true;
}

bool RationalCone::contains(const RatVec& v) const
{
    if (v.size() != dim_)
        throw StructuralError("RationalCone::contains: dimension mismatch");
    return contains(primitiveFromRational(v));
}

bool RationalCone::containsCone(const RationalCone& other) const
{
    if (other.dim_ != dim_)
        throw StructuralError("RationalCone::containsCone: dimension mismatch");
    for (const auto& r : other.rays())
        if (!contains(r))
            return false;
    for (const auto& l : other.lineality()) {
        if (!contains(l))
            return false;
        IntVec neg = l;
        for (auto& x : neg)
            x = -x;
        if (!contains(neg))
            return false;
    }
    return true;
}

std::size_t RationalCone::dimension() const
{
    RatRows rows;
    for (const auto& r : rays())
        rows.emplace_back(r.begin(), r.end());
    for (const auto& l : lineality())
        rows.emplace_back(l.begin(), l.end());
    return rank(rows, dim_);
}

IntVec RationalCone::relativeInteriorPoint() const
{
    IntVec p(dim_);
    for (const auto& r : rays())
        for (std::size_t i = 0; i < dim_; ++i)
            p[i] += r[i];
    return p;
}

RationalCone RationalCone::transformed(const IntMatrix& m) const
{
    if (m.rows() != dim_ || m.cols() != dim_)
        throw StructuralError("RationalCone::transformed: matrix size mismatch");
    std::vector<IntVec> images;
    for (const auto& r : rays())
        images.push_back(m * r);
    for (const auto& l : lineality()) {
        IntVec image = m * l;
        images.push_back(image);
        for (auto& x : image)
            x = -x;
        images.push_back(std::move(image));
    }
    return fromRays(dim_, images);
}

RationalCone intersect(const RationalCone& a, const RationalCone& b)
{
    if (a.ambientDim() != b.ambientDim())
        throw StructuralError("intersect: dimension mismatch");
    HRepresentation h = a.facets();
    h.inequalities.insert(h.inequalities.end(), b.facets().inequalities.begin(), b.facets().inequalities.end());
    h.equations.insert(h.equations.end(), b.facets().equations.begin(), b.facets().equations.end());
    return RationalCone::fromInequalities(a.ambientDim(), h);
}

RationalCone intersectAll(std::size_t dim, const std::vector<RationalCone>& cones)
{
    HRepresentation h;
    for (const auto& c : cones) {
        if (c.ambientDim() != dim)
            throw StructuralError("intersectAll: dimension mismatch");
        h.inequalities.insert(h.inequalities.end(), c.facets().inequalities.begin(), c.facets().inequalities.end());
        h.equations.insert(h.equations.end(), c.facets().equations.begin(), c.facets().equations.end());
    }
    std::sort(h.inequalities.begin(), h.inequalities.end());
    h.inequalities.erase(std::unique(h.inequalities.begin(), h.inequalities.end()), h.inequalities.end());
    return RationalCone::fromInequalities(dim, h);
}

bool equalCones(const RationalCone& a, const RationalCone& b)
{
    return a.containsCone(b) && b.containsCone(a);
}

} // namespace gaut

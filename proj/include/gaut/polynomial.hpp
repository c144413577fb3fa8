#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaut {

/// Sparse monomial: (variable, exponent) pairs sorted by variable, exponents > 0.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    static Monomial variable(std::uint32_t var, std::uint32_t exponent = 1);
    static Monomial fromExponents(std::span<const std::int64_t> exponents);

    const std::vector<Factor>& factors() const { return factors_; }
    std::uint32_t degree() const { return degree_; }
    bool isOne() const { return factors_.empty(); }
    std::uint32_t exponent(std::uint32_t var) const;
    /// Dense exponent vector of the given length; throws if a variable does not fit.
    std::vector<std::int64_t> exponents(std::size_t variableCount) const;

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// other / *this; requires divides(other).
    Monomial quotientOf(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

/// Graded lexicographic comparison: total degree first, then the exponent of the
/// lowest-indexed variable decides (T_1 > T_2 > ...). Returns <0, 0, >0.
int compareGrlex(const Monomial& a, const Monomial& b);

/// Orders containers from the largest monomial down.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return compareGrlex(a, b) > 0; }
};

/// Sparse polynomial over Q; terms kept in descending grlex order without zeros.
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpq_class, GrlexDescending>;

    Polynomial() = default;
    static Polynomial constant(const mpq_class& c);
    static Polynomial term(const Monomial& m, const mpq_class& c = 1);
    static Polynomial variable(std::uint32_t var);

    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    mpq_class coefficient(const Monomial& m) const;
    std::uint32_t totalDegree() const;

    void addTerm(const Monomial& m, const mpq_class& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const mpq_class& c) const;
    Polynomial pow(std::uint32_t e) const;

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

    /// Value at a point with one coordinate per variable index.
    mpq_class evaluate(std::span<const mpq_class> point) const;

    /// Replaces variable i by images[i]; variables beyond images.size() stay.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Splits into sum_m m * coeff_m where m only involves variables < boundary
    /// and coeff_m only variables >= boundary (shifted down by boundary).
    std::map<Monomial, Polynomial, GrlexDescending> splitAt(std::uint32_t boundary) const;

private:
    TermMap terms_;
};

/// Names of the variables of a ring: an indexed family `T(1..r)` followed by
/// optional plain symbols such as `Z`.
class VariableNaming {
public:
    VariableNaming(std::string family, std::size_t count, std::vector<std::string> symbols = {});

    std::size_t size() const { return count_ + symbols_.size(); }
    std::size_t familySize() const { return count_; }
    const std::string& family() const { return family_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::string name(std::size_t var) const;

    std::optional<std::size_t> lookupIndexed(std::string_view family, std::size_t index) const;
    std::optional<std::size_t> lookupSymbol(std::string_view symbol) const;

private:
    std::string family_;
    std::size_t count_;
    std::vector<std::string> symbols_;
};

enum class PrintStyle {
    Explicit, ///< `-2*T(1)^2*T(3) + T(2)`: parseable, used in files and scripts
    Compact   ///< `-2T(1)^2T(3)+T(2)`: session-style listing
};

std::string formatRational(const mpq_class& q);
std::string toString(const Polynomial& p, const VariableNaming& names, PrintStyle style = PrintStyle::Explicit);
std::string toString(const Monomial& m, const VariableNaming& names, PrintStyle style = PrintStyle::Explicit);

/// Parses `c*T(i)^e*...` terms joined by `+`/`-`. Juxtaposition is accepted as
/// multiplication. Throws ParseError with a 1-based column on line 1.
Polynomial parsePolynomial(std::string_view text, const VariableNaming& names);

} // namespace gaut

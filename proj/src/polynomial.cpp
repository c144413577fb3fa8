#include "gaut/polynomial.hpp"

#include "gaut/errors.hpp"

#include <algorithm>
#include <cctype>

namespace gaut {

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exponent)
{
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(var, exponent);
        m.degree_ = exponent;
    }
    return m;
}

Monomial Monomial::fromExponents(std::span<const std::int64_t> exponents)
{
    Monomial m;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0)
            throw StructuralError("Monomial: negative exponent");
        if (exponents[i] > 0) {
            m.factors_.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(exponents[i]));
            m.degree_ += static_cast<std::uint32_t>(exponents[i]);
        }
    }
    return m;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                               [](const Factor& f, std::uint32_t v) { return f.first < v; });
    return it != factors_.end() && it->first == var ? it->second : 0;
}

std::vector<std::int64_t> Monomial::exponents(std::size_t variableCount) const
{
    std::vector<std::int64_t> out(variableCount, 0);
    for (const auto& [var, e] : factors_) {
        if (var >= variableCount)
            throw StructuralError("Monomial::exponents: variable index out of range");
        out[var] = e;
    }
    return out;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

bool Monomial::divides(const Monomial& other) const
{
    for (const auto& [var, e] : factors_)
        if (other.exponent(var) < e)
            return false;
    return true;
}

Monomial Monomial::quotientOf(const Monomial& other) const
{
    if (!divides(other))
        throw StructuralError("Monomial::quotientOf: not a divisor");
    Monomial out;
    for (const auto& [var, e] : other.factors_) {
        const std::uint32_t remaining = e - exponent(var);
        if (remaining > 0) {
            out.factors_.emplace_back(var, remaining);
            out.degree_ += remaining;
        }
    }
    return out;
}

int compareGrlex(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() > b.degree() ? 1 : -1;
    auto x = a.factors().begin();
    auto y = b.factors().begin();
    while (x != a.factors().end() && y != b.factors().end()) {
        if (x->first != y->first)
            return x->first < y->first ? 1 : -1;
        if (x->second != y->second)
            return x->second > y->second ? 1 : -1;
        ++x;
        ++y;
    }
    if (x != a.factors().end())
        return 1;
    if (y != b.factors().end())
        return -1;
    return 0;
}

Polynomial Polynomial::constant(const mpq_class& c)
{
    Polynomial p;
    p.addTerm(Monomial(), c);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const mpq_class& c)
{
    Polynomial p;
    p.addTerm(m, c);
    return p;
}

Polynomial Polynomial::variable(std::uint32_t var)
{
    return term(Monomial::variable(var));
}

mpq_class Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

std::uint32_t Polynomial::totalDegree() const
{
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

void Polynomial::addTerm(const Monomial& m, const mpq_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        addTerm(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        addTerm(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const
{
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const
{
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator-() const
{
    return scaled(-1);
}

Polynomial Polynomial::operator*(const Polynomial& other) const
{
    Polynomial out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_)
            out.addTerm(m1 * m2, c1 * c2);
    return out;
}

Polynomial Polynomial::scaled(const mpq_class& c) const
{
    Polynomial out;
    if (c == 0)
        return out;
    for (const auto& [m, coeff] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), m, coeff * c);
    return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const
{
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return result;
}

mpq_class Polynomial::evaluate(std::span<const mpq_class> point) const
{
    mpq_class total = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class value = c;
        for (const auto& [var, e] : m.factors()) {
            if (var >= point.size())
                throw StructuralError("Polynomial::evaluate: point has too few coordinates");
            mpq_class power;
            mpz_pow_ui(power.get_num_mpz_t(), point[var].get_num_mpz_t(), e);
            mpz_pow_ui(power.get_den_mpz_t(), point[var].get_den_mpz_t(), e);
            power.canonicalize();
            value *= power;
        }
        total += value;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const
{
    Polynomial out;
    // powers of an image are reused across terms
    std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> powers;
    auto powerOf = [&](std::uint32_t var, std::uint32_t e) -> const Polynomial& {
        auto key = std::make_pair(var, e);
        auto it = powers.find(key);
        if (it == powers.end())
            it = powers.emplace(key, images[var].pow(e)).first;
        return it->second;
    };
    for (const auto& [m, c] : terms_) {
        Polynomial value = constant(c);
        Monomial kept;
        for (const auto& [var, e] : m.factors()) {
            if (var < images.size())
                value = value * powerOf(var, e);
            else
                kept = kept * Monomial::variable(var, e);
        }
        if (!kept.isOne())
            value = value * term(kept);
        out += value;
    }
    return out;
}

std::map<Monomial, Polynomial, GrlexDescending> Polynomial::splitAt(std::uint32_t boundary) const
{
    std::map<Monomial, Polynomial, GrlexDescending> out;
    for (const auto& [m, c] : terms_) {
        Monomial low, high;
        for (const auto& [var, e] : m.factors()) {
            if (var < boundary)
                low = low * Monomial::variable(var, e);
            else
                high = high * Monomial::variable(var - boundary, e);
        }
        out[low].addTerm(high, c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.isZero() ? out.erase(it) : std::next(it);
    return out;
}

VariableNaming::VariableNaming(std::string family, std::size_t count, std::vector<std::string> symbols)
    : family_(std::move(family)), count_(count), symbols_(std::move(symbols))
{
}

std::string VariableNaming::name(std::size_t var) const
{
    if (var < count_)
        return family_ + "(" + std::to_string(var + 1) + ")";
    if (var - count_ < symbols_.size())
        return symbols_[var - count_];
    throw StructuralError("VariableNaming: variable index " + std::to_string(var) + " out of range");
}

std::optional<std::size_t> VariableNaming::lookupIndexed(std::string_view family, std::size_t index) const
{
    if (family != family_ || index < 1 || index > count_)
        return std::nullopt;
    return index - 1;
}

std::optional<std::size_t> VariableNaming::lookupSymbol(std::string_view symbol) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == symbol)
            return count_ + i;
    return std::nullopt;
}

std::string formatRational(const mpq_class& q)
{
    return q.get_str();
}

std::string toString(const Monomial& m, const VariableNaming& names, PrintStyle style)
{
    if (m.isOne())
        return "1";
    std::string out;
    bool first = true;
    for (const auto& [var, e] : m.factors()) {
        if (!first && style == PrintStyle::Explicit)
            out += '*';
        first = false;
        out += names.name(var);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string toString(const Polynomial& p, const VariableNaming& names, PrintStyle style)
{
    if (p.isZero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else if (style == PrintStyle::Explicit)
            out += negative ? " - " : " + ";
        else
            out += negative ? "-" : "+";
        first = false;
        const mpq_class magnitude = abs(c);
        if (m.isOne()) {
            out += formatRational(magnitude);
            continue;
        }
        if (magnitude != 1) {
            out += formatRational(magnitude);
            if (style == PrintStyle::Explicit)
                out += '*';
        }
        out += toString(m, names, style);
    }
    return out;
}

namespace {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const VariableNaming& names) : text_(text), names_(names) {}

    Polynomial parse()
    {
        Polynomial p = expression();
        skipSpace();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

    void skipSpace()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skipSpace();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c)
    {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool atFactorStart()
    {
        skipSpace();
        if (pos_ >= text_.size())
            return false;
        const char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
    }

    Polynomial expression()
    {
        Polynomial total;
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        for (;;) {
            Polynomial t = product();
            total += negative ? -t : t;
            if (accept('+'))
                negative = false;
            else if (accept('-'))
                negative = true;
            else
                break;
        }
        return total;
    }

    Polynomial product()
    {
        if (!atFactorStart())
            fail(pos_ < text_.size() ? "expected a term" : "unexpected end of input");
        Polynomial p = power();
        for (;;) {
            if (accept('*')) {
                p = p * power();
            } else if (accept('/')) {
                mpz_class d = integer();
                if (d == 0)
                    fail("division by zero");
                p = p.scaled(mpq_class(1, 1) / mpq_class(d));
            } else if (atFactorStart()) {
                p = p * power();
            } else {
                return p;
            }
        }
    }

    Polynomial power()
    {
        Polynomial base = atom();
        if (accept('^')) {
            mpz_class e = integer();
            if (!e.fits_uint_p())
                fail("exponent out of range");
            base = base.pow(static_cast<std::uint32_t>(e.get_ui()));
        }
        return base;
    }

    mpz_class integer()
    {
        skipSpace();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial atom()
    {
        skipSpace();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(mpq_class(integer()));
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view ident = text_.substr(start, pos_ - start);
            if (peek('(')) {
                const std::size_t save = pos_;
                accept('(');
                skipSpace();
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    mpz_class index = integer();
                    if (!accept(')'))
                        fail("expected ')' after variable index");
                    if (!index.fits_ulong_p())
                        fail("variable index out of range");
                    auto var = names_.lookupIndexed(ident, index.get_ui());
                    if (!var) {
                        pos_ = start;
                        fail("unknown variable " + std::string(ident) + "(" + index.get_str() + ")");
                    }
                    return Polynomial::variable(static_cast<std::uint32_t>(*var));
                }
                pos_ = save;
            }
            auto var = names_.lookupSymbol(ident);
            if (!var) {
                pos_ = start;
                fail("unknown variable " + std::string(ident));
            }
            return Polynomial::variable(static_cast<std::uint32_t>(*var));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const VariableNaming& names_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parsePolynomial(std::string_view text, const VariableNaming& names)
{
    return PolynomialParser(text, names).parse();
}

} // namespace gaut

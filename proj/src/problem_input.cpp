#include "gaut/problem_input.hpp"

#include "gaut/config_text.hpp"
#include "gaut/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gaut {

namespace {

using Json = nlohmann::ordered_json;

class Extractor {
public:
    explicit Extractor(const ConfigDocument& doc) : doc_(doc) {}

    [[noreturn]] void fail(const std::string& key, const std::string& message) const
    {
        auto it = doc_.positions.find(key);
        SourcePosition p = it == doc_.positions.end() ? SourcePosition{} : it->second;
        throw ParseError(key + ": " + message, p.line, p.column);
    }

    const Json* find(const std::string& key) const
    {
        auto dot = key.find('.');
        const Json& root = doc_.values;
        if (dot == std::string::npos)
            return root.contains(key) ? &root[key] : nullptr;
        std::string table = key.substr(0, dot);
        if (!root.contains(table) || !root[table].is_object())
            return nullptr;
        const Json& t = root[table];
        std::string rest = key.substr(dot + 1);
        return t.contains(rest) ? &t[rest] : nullptr;
    }

    const Json& require(const std::string& key) const
    {
        const Json* v = find(key);
        if (!v)
            throw ParseError("missing key '" + key + "'", 0, 0);
        return *v;
    }

    std::int64_t integer(const std::string& key, const Json& v) const
    {
        if (!v.is_number_integer())
            fail(key, "expected an integer");
        return v.get<std::int64_t>();
    }

    std::vector<std::int64_t> integers(const std::string& key, const Json& v) const
    {
        if (!v.is_array())
            fail(key, "expected an array of integers");
        std::vector<std::int64_t> out;
        for (const auto& e : v)
            out.push_back(integer(key, e));
        return out;
    }

private:
    const ConfigDocument& doc_;
};

} // namespace

DegreeMatrix ProblemInput::degrees() const
{
    return DegreeMatrix::fromRows(group(), q);
}

Ideal ProblemInput::idealOf() const
{
    GradedPolyRing r = ring();
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < ideal.size(); ++j) {
        try {
            gens.push_back(parsePolynomial(ideal[j], r.naming()));
        } catch (const ParseError& e) {
            throw ParseError("ideal generator " + std::to_string(j + 1) + ": " + e.what(), j + 1, e.column());
        }
    }
    return Ideal(r, std::move(gens));
}

std::optional<GroupElement> ProblemInput::weight() const
{
    if (!w)
        return std::nullopt;
    return GroupElement::fromCoordinates(group(), *w);
}

OrbitConeOptions ProblemInput::orbitOptions(unsigned jobs) const
{
    OrbitConeOptions o;
    o.mode = mode;
    o.jobs = jobs;
    for (const auto& f : faces) {
        std::vector<std::size_t> zeroBased;
        for (std::size_t i : f)
            zeroBased.push_back(i - 1);
        o.faces.push_back(std::move(zeroBased));
    }
    return o;
}

ProblemInput parseInput(std::string_view text)
{
    ConfigDocument doc = parseConfigText(text);
    Extractor x(doc);
    ProblemInput in;

    const std::int64_t freeRank = x.integer("grading.free_rank", x.require("grading.free_rank"));
    if (freeRank < 0)
        x.fail("grading.free_rank", "must be nonnegative");
    in.freeRank = static_cast<std::size_t>(freeRank);
    if (const Json* t = x.find("grading.torsion"))
        in.torsion = x.integers("grading.torsion", *t);
    for (auto a : in.torsion)
        if (a < 2)
            x.fail("grading.torsion", "torsion orders must be at least 2");

    const std::int64_t vars = x.integer("vars", x.require("vars"));
    if (vars < 1)
        x.fail("vars", "need at least one variable");
    in.vars = static_cast<std::size_t>(vars);

    const Json& q = x.require("Q");
    if (!q.is_array())
        x.fail("Q", "expected an array of rows");
    for (std::size_t i = 0; i < q.size(); ++i) {
        auto row = x.integers("Q", q[i]);
        if (row.size() != in.vars)
            x.fail("Q", "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(in.vars));
        in.q.push_back(std::move(row));
    }
    if (in.q.size() != in.freeRank + in.torsion.size())
        x.fail("Q", "has " + std::to_string(in.q.size()) + " rows, expected free_rank + #torsion = " +
                        std::to_string(in.freeRank + in.torsion.size()));

    if (const Json* ideal = x.find("ideal")) {
        if (!ideal->is_array())
            x.fail("ideal", "expected an array of strings");
        for (const auto& g : *ideal) {
            if (!g.is_string())
                x.fail("ideal", "expected an array of strings");
            in.ideal.push_back(g.get<std::string>());
        }
    }

    if (const Json* w = x.find("w")) {
        in.w = x.integers("w", *w);
        if (in.w->size() != in.freeRank + in.torsion.size())
            x.fail("w", "has " + std::to_string(in.w->size()) + " entries, expected " +
                            std::to_string(in.freeRank + in.torsion.size()));
    }

    if (const Json* faces = x.find("faces")) {
        if (!faces->is_array())
            x.fail("faces", "expected an array of index lists");
        for (const auto& f : *faces) {
            std::vector<std::size_t> face;
            for (auto i : x.integers("faces", f)) {
                if (i < 1 || static_cast<std::size_t>(i) > in.vars)
                    x.fail("faces", "index " + std::to_string(i) + " outside 1.." + std::to_string(in.vars));
                face.push_back(static_cast<std::size_t>(i));
            }
            if (face.empty())
                x.fail("faces", "empty face");
            in.faces.push_back(std::move(face));
        }
    }

    if (const Json* mode = x.find("mode")) {
        if (!mode->is_string())
            x.fail("mode", "expected a string");
        try {
            in.mode = parseFaceMode(mode->get<std::string>());
        } catch (const StructuralError& e) {
            x.fail("mode", e.what());
        }
    }
    if (in.mode == FaceMode::UserFaces && in.faces.empty())
        throw ParseError("mode user-faces requires a nonempty 'faces' list", 0, 0);
    return in;
}

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        if (c == '\n')
            out += "\\n";
        else if (c == '\t')
            out += "\\t";
        else
            out += c;
    }
    return out + "\"";
}

template <class T>
std::string list(const std::vector<T>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + std::to_string(v[i]);
    return out + "]";
}

} // namespace

std::string printInput(const ProblemInput& in)
{
    std::ostringstream out;
    out << "vars = " << in.vars << "\n";
    out << "Q = [\n";
    for (const auto& row : in.q)
        out << "  " << list(row) << ",\n";
    out << "]\n";
    out << "ideal = [";
    for (std::size_t j = 0; j < in.ideal.size(); ++j)
        out << (j ? ", " : "") << quoted(in.ideal[j]);
    out << "]\n";
    if (in.w)
        out << "w = " << list(*in.w) << "\n";
    if (!in.faces.empty()) {
        out << "faces = [";
        for (std::size_t j = 0; j < in.faces.size(); ++j)
            out << (j ? ", " : "") << list(in.faces[j]);
        out << "]\n";
    }
    out << "mode = " << quoted(toString(in.mode)) << "\n";
    out << "\n[grading]\n";
    out << "free_rank = " << in.freeRank << "\n";
    out << "torsion = " << list(in.torsion) << "\n";
    return out.str();
}

ProblemInput loadInput(const std::string& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parseInput(buffer.str());
}

std::vector<std::int64_t> parseIntegerList(std::string_view text)
{
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ',' || c == ' ' || c == '\t' || c == '(' || c == ')' || c == ';' || c == '[' || c == ']') {
            ++i;
            continue;
        }
        std::int64_t v = 0;
        const char* begin = text.data() + i;
        if (*begin == '+')
            ++begin;
        auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), v);
        if (ec != std::errc{})
            throw ParseError("expected an integer list such as \"1,9,16,0\"", 1, i + 1);
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return out;
}

} // namespace gaut

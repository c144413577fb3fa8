#include "gaut/cas_export.hpp"

#include "gaut/aut_polyring.hpp"
#include "gaut/errors.hpp"

#include <regex>
#include <sstream>

namespace gaut {

namespace {

// Y(12) -> Y_12
std::string macaulayName(const std::string& poly)
{
    static const std::regex indexed(R"(Y\((\d+)\))");
    return std::regex_replace(poly, indexed, "Y_$1");
}

std::vector<std::string> tripleGenerators(const TripleRecord& t)
{
    std::vector<std::string> gens = t.ideal;
    gens.insert(gens.end(), t.stabilizer.begin(), t.stabilizer.end());
    return gens;
}

std::string joined(const std::vector<std::string>& items, const std::string& sep, const std::string& indent)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? sep + "\n" + indent : indent) + items[i];
    return out;
}

std::string matrixComment(const SmallMatrix& b, const std::string& lead)
{
    std::string out;
    for (const auto& row : b) {
        out += lead + "  ";
        for (std::size_t j = 0; j < row.size(); ++j)
            out += (j ? " " : "") + std::to_string(row[j]);
        out += "\n";
    }
    return out;
}

std::string singular(const ResultBundle& b)
{
    const std::size_t n = b.n;
    std::ostringstream s;
    s << "// graded-aut export, dialect singular-like\n";
    s << "LIB \"primdec.lib\";\n";
    s << "ring Sprime = 0,(Y(1.." << n * n << "),Z),dp;\n";
    if (b.triples.empty())
        return s.str();
    for (std::size_t t = 0; t < b.triples.size(); ++t) {
        const auto& tr = b.triples[t];
        s << "\n// triple " << t + 1 << ", B =\n" << matrixComment(tr.b, "//");
        s << "ideal J" << t + 1 << " =\n" << joined(tripleGenerators(tr), ",", "  ") << ";\n";
    }
    s << "\nideal J = intersect(";
    for (std::size_t t = 0; t < b.triples.size(); ++t)
        s << (t ? ", " : "") << "J" << t + 1;
    s << ");\n";
    for (std::size_t t = 0; t < b.triples.size(); ++t)
        s << "dim(std(J" << t + 1 << "));\n";
    s << "dim(std(J));\n";
    s << "def ABS = absPrimdecGTZ(J);\n";
    s << "setring ABS;\n";
    s << "size(absolute_primes);\n";
    return s.str();
}

std::string macaulay(const ResultBundle& b)
{
    const std::size_t n = b.n;
    std::ostringstream s;
    s << "-- graded-aut export, dialect macaulay2-like\n";
    s << "Sprime = QQ[Y_1..Y_" << n * n << ", Z];\n";
    if (b.triples.empty())
        return s.str();
    for (std::size_t t = 0; t < b.triples.size(); ++t) {
        const auto& tr = b.triples[t];
        std::vector<std::string> gens;
        for (const auto& g : tripleGenerators(tr))
            gens.push_back(macaulayName(g));
        s << "\n-- triple " << t + 1 << ", B =\n" << matrixComment(tr.b, "--");
        s << "J" << t + 1 << " = ideal(\n" << joined(gens, ",", "  ") << ");\n";
    }
    s << "\nJ = intersect(";
    for (std::size_t t = 0; t < b.triples.size(); ++t)
        s << (t ? ", " : "") << "J" << t + 1;
    s << ");\n";
    for (std::size_t t = 0; t < b.triples.size(); ++t)
        s << "dim J" << t + 1 << "\n";
    s << "dim J\n";
    s << "decompose J\n";
    return s.str();
}

} // namespace

std::vector<std::string> casDialects()
{
    return {"singular-like", "macaulay2-like"};
}

std::string exportCasScript(const ResultBundle& bundle, const std::string& dialect)
{
    if (dialect != "singular-like" && dialect != "macaulay2-like")
        throw StructuralError("unsupported dialect '" + dialect + "' (expected singular-like or macaulay2-like)");
    if (!bundle.hasPresentation)
        throw ValidationError("export: the report holds no presentation; run autks, autgradalg or autxhat first");
    return dialect == "singular-like" ? singular(bundle) : macaulay(bundle);
}

std::vector<std::string> lintCasScript(const std::string& script, const std::string& dialect, std::size_t n)
{
    std::vector<std::string> problems;
    const std::string comment = dialect == "singular-like" ? "//" : "--";
    const VariableNaming names = actionRingNaming(n);

    // drop comments, then check delimiters
    std::string body;
    std::istringstream lines(script);
    for (std::string line; std::getline(lines, line);) {
        auto c = line.find(comment);
        body += (c == std::string::npos ? line : line.substr(0, c)) + "\n";
    }
    long depth = 0;
    for (char ch : body) {
        depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
        if (depth < 0) {
            problems.push_back("unbalanced ')'");
            break;
        }
    }
    if (depth > 0)
        problems.push_back("unbalanced '('");

    const std::string ringDecl = dialect == "singular-like"
                                     ? "ring Sprime = 0,(Y(1.." + std::to_string(n * n) + "),Z),dp;"
                                     : "Sprime = QQ[Y_1..Y_" + std::to_string(n * n) + ", Z];";
    if (body.find(ringDecl) == std::string::npos)
        problems.push_back("missing ring declaration");

    // ideal bodies
    const std::regex idealRe = dialect == "singular-like" ? std::regex(R"(ideal (J\d+) =\n([^;]*);)")
                                                          : std::regex(R"((J\d+) = ideal\(\n([^;]*)\);)");
    static const std::regex m2Name(R"(Y_(\d+))");
    for (auto it = std::sregex_iterator(body.begin(), body.end(), idealRe); it != std::sregex_iterator(); ++it) {
        std::istringstream gens((*it)[2].str());
        for (std::string g; std::getline(gens, g);) {
            while (!g.empty() && (g.back() == ',' || g.back() == ' '))
                g.pop_back();
            if (g.empty())
                continue;
            if (dialect != "singular-like")
                g = std::regex_replace(g, m2Name, "Y($1)");
            try {
                parsePolynomial(g, names);
            } catch (const Error& e) {
                problems.push_back((*it)[1].str() + ": " + e.what());
            }
        }
    }
    return problems;
}

} // namespace gaut

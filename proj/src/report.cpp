#include "gaut/report.hpp"

#include "gaut/errors.hpp"
#include "gaut/validation.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace gaut {

namespace {

using Json = nlohmann::ordered_json;

class Stopwatch {
public:
    Stopwatch(std::map<std::string, double>& sink, bool enabled) : sink_(sink), enabled_(enabled) {}

    template <class F>
    auto time(const std::string& label, F&& f)
    {
        auto start = std::chrono::steady_clock::now();
        struct Record {
            Stopwatch& w;
            std::string label;
            std::chrono::steady_clock::time_point start;
            ~Record()
            {
                if (w.enabled_)
                    w.sink_[label] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            }
        } record{*this, label, start};
        return f();
    }

private:
    std::map<std::string, double>& sink_;
    bool enabled_;
};

std::vector<std::string> strings(const std::vector<Polynomial>& ps, const VariableNaming& names)
{
    std::vector<std::string> out;
    out.reserve(ps.size());
    for (const auto& p : ps)
        out.push_back(toString(p, names));
    return out;
}

void fillPresentation(ResultBundle& b, const AutPresentation& p, const VariableNaming& tNames)
{
    b.hasPresentation = true;
    b.n = p.n();
    b.weightAutomorphisms.clear();
    for (const auto& a : p.weightAutomorphisms)
        b.weightAutomorphisms.push_back(a.displayMatrix());
    for (std::size_t i = 0; i < p.basis.blocks.size(); ++i) {
        BlockRecord block{p.basis.weights.weights[i].toString(), {}};
        for (const auto& m : p.basis.blocks[i])
            block.monomials.push_back(toString(m, tNames));
        b.blocks.push_back(std::move(block));
    }
    for (const auto& w : p.variableWeights)
        b.actionVariableWeights.push_back(w.toString());
    b.multiplicativity = strings(p.multiplicativity, p.naming());
    b.multiMonomialBlocks = p.multiMonomialBlocks;
    b.triples.clear();
    for (const auto& t : p.triples)
        b.triples.push_back(toRecord(t, p.naming()));
}

void fillStabilizer(ResultBundle& b, const StabilizerData& s)
{
    b.hasStabilizer = true;
    const VariableNaming names = s.presentation.naming();
    for (std::size_t t = 0; t < s.triples.size(); ++t)
        b.triples[t].stabilizer = strings(s.triples[t].stabilizer, names);
    for (const auto& u : s.generatorDegrees) {
        const GradedComponent& c = s.component(u);
        b.components.push_back(ComponentRecord{u.toString(), c.dimension(), c.basis.size(), c.forms.size()});
    }
}

} // namespace

ValidationRecord toRecord(const ValidationReport& r)
{
    return ValidationRecord{r.effective, r.pointed, r.homogeneous, r.inMaximalIdealSquared,
                            r.trivialAtGeneratorWeights, r.latticeBasis, r.diagnostics};
}

TripleRecord toRecord(const AutTriple& triple, const VariableNaming& names)
{
    TripleRecord t;
    t.b = triple.weightAutomorphism.displayMatrix();
    for (std::size_t j : triple.weightPermutation)
        t.weightPermutation.push_back(j + 1);
    t.nonzeroSlots = triple.matrix.nonzeroSlots();
    t.ideal = strings(triple.ideal, names);
    return t;
}

ResultBundle runStage(const ProblemInput& input, Stage stage, const RunOptions& options)
{
    ResultBundle b;
    static const char* names[] = {"check", "weights-aut", "autks", "autgradalg", "autxhat"};
    b.command = names[static_cast<int>(stage)];
    b.input = input;
    Stopwatch clock(b.timingSeconds, options.timing);

    const Ideal ideal = input.idealOf();
    b.validation = toRecord(clock.time("check", [&] { return validatePresentation(ideal); }));
    if (stage == Stage::Check)
        return b;

    AutOptions aut = options.aut;
    aut.jobs = options.jobs;
    if (stage == Stage::WeightsAut) {
        SymmetrySearchOptions sym = aut.symmetry;
        sym.jobs = options.jobs;
        for (const auto& a : clock.time("weights-aut", [&] { return autGenWeights(ideal.ring().degrees(), sym); }))
            b.weightAutomorphisms.push_back(a.displayMatrix());
        return b;
    }
    if (stage == Stage::AutKS) {
        auto p = clock.time("autks", [&] { return autKS(ideal.ring(), aut); });
        fillPresentation(b, p, ideal.ring().naming());
        return b;
    }

    StabilizerData stab = clock.time("autgradalg", [&] { return autGradAlg(ideal, aut); });
    fillPresentation(b, stab.presentation, ideal.ring().naming());
    fillStabilizer(b, stab);
    if (stage == Stage::AutGradAlg)
        return b;

    auto w = input.weight();
    if (!w)
        throw ValidationError("autxhat: no weight w given (use --w or the 'w' key)");
    OrbitConeOptions orbit = input.orbitOptions(options.jobs);
    orbit.maxSubsetVariables = options.maxSubsetVariables;
    auto cones = clock.time("orbit-cones", [&] { return orbitCones(ideal.ring().degrees(), orbit); });
    RationalCone lambda = gitConeFromOrbitCones(ideal.ring().degrees(), cones, *w);
    XhatRecord x;
    x.w = *input.w;
    x.orbitConeCount = cones.size();
    for (const auto& ray : lambda.rays()) {
        std::vector<std::int64_t> row;
        for (const auto& c : ray)
            row.push_back(toInt64(c));
        x.gitConeRays.push_back(std::move(row));
    }
    for (const auto& line : lambda.lineality()) {
        // a line is listed as both of its directions
        for (int sign : {1, -1}) {
            std::vector<std::int64_t> row;
            for (const auto& c : line)
                row.push_back(sign * toInt64(c));
            x.gitConeRays.push_back(std::move(row));
        }
    }
    std::vector<TripleRecord> kept;
    for (std::size_t t = 0; t < stab.triples.size(); ++t)
        if (fixesCone(stab.triples[t].triple.weightAutomorphism, lambda)) {
            x.retained.push_back(t + 1);
            kept.push_back(b.triples[t]);
        }
    b.triples = std::move(kept);
    b.xhat = std::move(x);
    return b;
}

namespace {

Json inputJson(const ProblemInput& in)
{
    Json j;
    j["free_rank"] = in.freeRank;
    j["torsion"] = in.torsion;
    j["vars"] = in.vars;
    j["Q"] = in.q;
    j["ideal"] = in.ideal;
    j["w"] = in.w ? Json(*in.w) : Json(nullptr);
    j["faces"] = in.faces;
    j["mode"] = toString(in.mode);
    return j;
}

ProblemInput inputFromJson(const Json& j)
{
    ProblemInput in;
    in.freeRank = j.at("free_rank").get<std::size_t>();
    in.torsion = j.at("torsion").get<std::vector<std::int64_t>>();
    in.vars = j.at("vars").get<std::size_t>();
    in.q = j.at("Q").get<SmallMatrix>();
    in.ideal = j.at("ideal").get<std::vector<std::string>>();
    if (!j.at("w").is_null())
        in.w = j.at("w").get<std::vector<std::int64_t>>();
    in.faces = j.at("faces").get<std::vector<std::vector<std::size_t>>>();
    in.mode = parseFaceMode(j.at("mode").get<std::string>());
    return in;
}

} // namespace

Json toJson(const ResultBundle& b)
{
    Json j;
    j["schema_version"] = b.schemaVersion;
    j["command"] = b.command;
    j["input"] = inputJson(b.input);

    const auto& v = b.validation;
    j["validation"] = Json{{"effective", v.effective},
                           {"pointed", v.pointed},
                           {"homogeneous", v.homogeneous},
                           {"in_maximal_ideal_squared", v.inMaximalIdealSquared},
                           {"trivial_at_generator_weights", v.trivialAtGeneratorWeights},
                           {"lattice_basis", v.latticeBasis},
                           {"diagnostics", v.diagnostics}};
    j["weight_automorphisms"] = b.weightAutomorphisms;

    if (b.hasPresentation) {
        Json p;
        p["n"] = b.n;
        Json blocks = Json::array();
        for (const auto& block : b.blocks)
            blocks.push_back(Json{{"weight", block.weight}, {"monomials", block.monomials}});
        p["blocks"] = blocks;
        p["action_variable_weights"] = b.actionVariableWeights;
        p["multiplicativity"] = b.multiplicativity;
        p["multi_monomial_blocks"] = b.multiMonomialBlocks;
        j["presentation"] = p;
    } else {
        j["presentation"] = nullptr;
    }

    Json triples = Json::array();
    for (const auto& t : b.triples)
        triples.push_back(Json{{"B", t.b},
                               {"weight_permutation", t.weightPermutation},
                               {"nonzero_slots", t.nonzeroSlots},
                               {"ideal", t.ideal},
                               {"stabilizer", t.stabilizer}});
    j["triples"] = triples;

    if (b.hasStabilizer) {
        Json comps = Json::array();
        for (const auto& c : b.components)
            comps.push_back(Json{{"degree", c.degree},
                                 {"dimension", c.dimension},
                                 {"ideal_dimension", c.idealDimension},
                                 {"form_count", c.formCount}});
        j["stabilizer"] = Json{{"components", comps}};
    } else {
        j["stabilizer"] = nullptr;
    }

    if (b.xhat)
        j["xhat"] = Json{{"w", b.xhat->w},
                         {"git_cone_rays", b.xhat->gitConeRays},
                         {"orbit_cone_count", b.xhat->orbitConeCount},
                         {"retained", b.xhat->retained}};
    else
        j["xhat"] = nullptr;

    if (!b.timingSeconds.empty()) {
        Json t = Json::object();
        for (const auto& [k, s] : b.timingSeconds)
            t[k] = s;
        j["timing_seconds"] = t;
    }
    return j;
}

ResultBundle fromJson(const Json& j)
{
    if (!j.is_object() || !j.contains("schema_version"))
        throw Error("report: missing schema_version");
    const int version = j.at("schema_version").get<int>();
    if (version != kReportSchemaVersion)
        throw Error("report: unsupported schema_version " + std::to_string(version) + " (expected " +
                    std::to_string(kReportSchemaVersion) + ")");
    try {
        ResultBundle b;
        b.schemaVersion = version;
        b.command = j.at("command").get<std::string>();
        b.input = inputFromJson(j.at("input"));
        const Json& v = j.at("validation");
        b.validation = ValidationRecord{v.at("effective").get<bool>(),
                                        v.at("pointed").get<bool>(),
                                        v.at("homogeneous").get<bool>(),
                                        v.at("in_maximal_ideal_squared").get<bool>(),
                                        v.at("trivial_at_generator_weights").get<bool>(),
                                        v.at("lattice_basis").get<bool>(),
                                        v.at("diagnostics").get<std::vector<std::string>>()};
        b.weightAutomorphisms = j.at("weight_automorphisms").get<std::vector<SmallMatrix>>();
        if (const Json& p = j.at("presentation"); !p.is_null()) {
            b.hasPresentation = true;
            b.n = p.at("n").get<std::size_t>();
            for (const auto& block : p.at("blocks"))
                b.blocks.push_back(BlockRecord{block.at("weight").get<std::string>(),
                                               block.at("monomials").get<std::vector<std::string>>()});
            b.actionVariableWeights = p.at("action_variable_weights").get<std::vector<std::string>>();
            b.multiplicativity = p.at("multiplicativity").get<std::vector<std::string>>();
            b.multiMonomialBlocks = p.at("multi_monomial_blocks").get<bool>();
        }
        for (const auto& t : j.at("triples"))
            b.triples.push_back(TripleRecord{t.at("B").get<SmallMatrix>(),
                                             t.at("weight_permutation").get<std::vector<std::size_t>>(),
                                             t.at("nonzero_slots").get<std::vector<std::size_t>>(),
                                             t.at("ideal").get<std::vector<std::string>>(),
                                             t.at("stabilizer").get<std::vector<std::string>>()});
        if (const Json& s = j.at("stabilizer"); !s.is_null()) {
            b.hasStabilizer = true;
            for (const auto& c : s.at("components"))
                b.components.push_back(ComponentRecord{c.at("degree").get<std::string>(),
                                                       c.at("dimension").get<std::size_t>(),
                                                       c.at("ideal_dimension").get<std::size_t>(),
                                                       c.at("form_count").get<std::size_t>()});
        }
        if (const Json& x = j.at("xhat"); !x.is_null())
            b.xhat = XhatRecord{x.at("w").get<std::vector<std::int64_t>>(),
                                x.at("git_cone_rays").get<SmallMatrix>(),
                                x.at("orbit_cone_count").get<std::size_t>(),
                                x.at("retained").get<std::vector<std::size_t>>()};
        if (j.contains("timing_seconds"))
            for (const auto& [k, s] : j.at("timing_seconds").items())
                b.timingSeconds[k] = s.get<double>();
        return b;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("report: malformed content: ") + e.what());
    }
}

namespace {

// Like dump(2), but arrays of scalars stay on one line.
void writeCompact(const Json& j, std::string& out, std::size_t indent)
{
    auto scalarArray = [](const Json& a) {
        return std::all_of(a.begin(), a.end(), [](const Json& e) { return !e.is_structured(); });
    };
    const std::string pad(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [k, v] : j.items()) {
            out += pad + Json(k).dump() + ": ";
            writeCompact(v, out, indent + 2);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += std::string(indent, ' ') + "}";
    } else if (j.is_array() && !j.empty() && !scalarArray(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            writeCompact(j[i], out, indent + 2);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(indent, ' ') + "]";
    } else if (j.is_array()) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i)
            out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else {
        out += j.dump();
    }
}

} // namespace

std::string reportText(const ResultBundle& bundle)
{
    std::string out;
    writeCompact(toJson(bundle), out, 0);
    return out + "\n";
}

void writeReport(const ResultBundle& bundle, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write report '" + path + "'");
    out << reportText(bundle);
    if (!out)
        throw Error("write failed for '" + path + "'");
}

ResultBundle readReport(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open report '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what(), 0, 0);
    }
    return fromJson(j);
}

} // namespace gaut

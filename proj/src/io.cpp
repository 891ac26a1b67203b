#include "stellar/io.hpp"

#include <set>

#include "stellar/error.hpp"

namespace stellar {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& what)
{
    throw StellarError(ErrorKind::Malformed, where + ": " + what);
}

VertexId read_label(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        malformed(where, "expected a non-negative integer label");
    const auto v = j.get<long long>();
    if (v < 0 || v > static_cast<long long>(UINT32_MAX))
        malformed(where, "label out of range");
    return VertexId(static_cast<std::uint32_t>(v));
}

std::vector<VertexId> read_labels(const json& j, const std::string& where)
{
    if (!j.is_array())
        malformed(where, "expected an array of labels");
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(read_label(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Simplex read_simplex(const json& j, const std::string& where)
{
    auto labels = read_labels(j, where);
    try {
        return Simplex(std::move(labels));
    } catch (const StellarError& e) {
        throw StellarError(e.kind(), where + ": " + e.what());
    }
}

} // namespace

ComplexDocument make_document(const Complex& k)
{
    if (!k.is_uniform())
        throw StellarError(ErrorKind::NotUniform, "documents hold uniform complexes only");
    ComplexDocument doc;
    doc.complex = k;
    doc.dimension = k.empty() ? -1 : k.dimension();
    return doc;
}

ComplexDocument parse(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw StellarError(ErrorKind::Malformed, "at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object())
        malformed("$", "expected a JSON object");
    if (!j.contains("dimension"))
        malformed("$", "missing key \"dimension\"");
    if (!j.contains("generators"))
        malformed("$", "missing key \"generators\"");
    if (!j["dimension"].is_number_integer() || j["dimension"].get<long long>() < -1 ||
        j["dimension"].get<long long>() > 64)
        malformed("$.dimension", "expected an integer >= -1");

    ComplexDocument doc;
    doc.dimension = j["dimension"].get<int>();
    const json& gens = j["generators"];
    if (!gens.is_array())
        malformed("$.generators", "expected an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string where = "$.generators[" + std::to_string(i) + "]";
        Simplex s = read_simplex(gens[i], where);
        if (static_cast<int>(s.size()) != doc.dimension + 1)
            throw StellarError(ErrorKind::DimensionMismatch, where + ": " + std::to_string(s.size()) +
                                                                  " vertices in a " + std::to_string(doc.dimension) +
                                                                  "-dimensional document");
        if (doc.complex.contains(s))
            malformed(where, "generator listed twice");
        doc.complex.insert(std::move(s));
    }
    if (doc.complex.empty() && doc.dimension != -1)
        throw StellarError(ErrorKind::DimensionMismatch, "the zero complex has dimension -1");

    if (j.contains("equivalence") && !j["equivalence"].is_null()) {
        const json& classes = j["equivalence"];
        if (!classes.is_array())
            malformed("$.equivalence", "expected an array of classes");
        std::vector<std::vector<VertexId>> parsed;
        const auto verts = doc.complex.vertices();
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const std::string where = "$.equivalence[" + std::to_string(i) + "]";
            auto cls = read_labels(classes[i], where);
            for (auto v : cls)
                if (!verts.count(v))
                    throw StellarError(ErrorKind::UnknownVertex,
                                       where + ": vertex " + std::to_string(v.value) + " is not in the complex");
            parsed.push_back(std::move(cls));
        }
        doc.equivalence = RegularEquivalence(parsed);
    }
    if (j.contains("metadata"))
        doc.metadata = j["metadata"];
    return doc;
}

std::string serialize(const ComplexDocument& doc)
{
    json j;
    j["dimension"] = doc.dimension;
    j["generators"] = to_json(doc.complex);
    if (doc.equivalence)
        j["equivalence"] = to_json(*doc.equivalence);
    if (!doc.metadata.is_null())
        j["metadata"] = doc.metadata;
    return j.dump();
}

json to_json(const Simplex& s)
{
    json j = json::array();
    for (auto v : s.vertices())
        j.push_back(v.value);
    return j;
}

json to_json(const Complex& k)
{
    json j = json::array();
    for (const auto& g : k)
        j.push_back(to_json(g));
    return j;
}

json to_json(const RegularEquivalence& eq)
{
    json j = json::array();
    for (const auto& cls : eq.classes()) {
        json c = json::array();
        for (auto v : cls)
            c.push_back(v.value);
        j.push_back(std::move(c));
    }
    return j;
}

json to_json(const MoveRecord& move)
{
    return std::visit(
        [](const auto& m) -> json {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Subdivide>) {
                return {{"kind", "subdivide"}, {"simplex", to_json(m.face)}, {"vertex", m.vertex.value}};
            } else if constexpr (std::is_same_v<T, Weld>) {
                return {{"kind", "weld"}, {"simplex", to_json(m.face)}, {"vertex", m.vertex.value}};
            } else if constexpr (std::is_same_v<T, Relabel>) {
                json pairs = json::array();
                for (auto [from, to] : m.mapping)
                    pairs.push_back(json::array({from.value, to.value}));
                return {{"kind", "relabel"}, {"map", std::move(pairs)}};
            } else {
                return {{"kind", "split_vertex"},
                        {"generator", to_json(m.generator)},
                        {"old", m.old.value},
                        {"fresh", m.fresh.value}};
            }
        },
        move);
}

json to_json(const MoveSequence& moves)
{
    json j = json::array();
    for (const auto& m : moves)
        j.push_back(to_json(m));
    return j;
}

MoveRecord move_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        malformed("move", "expected an object with a \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    auto field = [&](const char* key) -> const json& {
        if (!j.contains(key))
            malformed("move", std::string("missing \"") + key + "\"");
        return j[key];
    };
    if (kind == "subdivide")
        return Subdivide{read_simplex(field("simplex"), "simplex"), read_label(field("vertex"), "vertex")};
    if (kind == "weld")
        return Weld{read_simplex(field("simplex"), "simplex"), read_label(field("vertex"), "vertex")};
    if (kind == "relabel") {
        Relabel r;
        const json& pairs = field("map");
        if (!pairs.is_array())
            malformed("map", "expected an array of pairs");
        for (const auto& p : pairs) {
            auto labels = read_labels(p, "map");
            if (labels.size() != 2)
                malformed("map", "expected [from, to]");
            r.mapping.emplace(labels[0], labels[1]);
        }
        return r;
    }
    if (kind == "split_vertex")
        return SplitVertex{read_simplex(field("generator"), "generator"), read_label(field("old"), "old"),
                           read_label(field("fresh"), "fresh")};
    malformed("move", "unknown kind \"" + kind + "\"");
}

MoveSequence moves_from_json(const json& j)
{
    if (!j.is_array())
        malformed("trace", "expected an array of moves");
    MoveSequence out;
    for (const auto& m : j)
        out.push_back(move_from_json(m));
    return out;
}

json to_json(const RecognitionResult& r)
{
    json j{{"verdict", std::string(to_string(r.verdict))}, {"diagnostics", r.diagnostics}};
    j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
    return j;
}

json to_json(const ManifoldReport& r)
{
    json links = json::object();
    for (const auto& [v, result] : r.per_vertex)
        links[std::to_string(v.value)] = {{"verdict", std::string(to_string(result.verdict))},
                                          {"diagnostics", result.diagnostics}};
    return {{"verdict", std::string(to_string(r.verdict.answer))},
            {"witness", r.verdict.witness},
            {"links", std::move(links)}};
}

json to_json(const StarNormalForm& nf)
{
    json pairs = json::array();
    for (const auto& [g, p] : nf.pairing.pairs)
        pairs.push_back(json::array({to_json(g), to_json(p)}));
    json unpaired = json::array();
    for (const auto& g : nf.pairing.unpaired)
        unpaired.push_back(to_json(g));

    json sphere{{"dimension", nf.sphere.empty() ? -1 : nf.sphere.dimension()}, {"generators", to_json(nf.sphere)}};
    return {{"dimension", nf.dimension},
            {"apex", nf.apex.value},
            {"sphere", std::move(sphere)},
            {"equivalence", to_json(nf.eq)},
            {"pairing", {{"pairs", std::move(pairs)}, {"unpaired", std::move(unpaired)}}},
            {"quotient_euler_characteristic", star_quotient_euler_characteristic(nf.sphere, nf.eq)},
            {"steps", nf.steps},
            {"trace", to_json(nf.trace)},
            {"warnings", nf.warnings}};
}

json to_json(const GroupPresentation& p, const AbelianInvariants& a)
{
    json relators = json::array();
    for (const auto& r : p.relators) {
        json word = json::array();
        for (const auto& l : r)
            word.push_back(json::array({p.generators.at(l.generator), l.exponent}));
        relators.push_back(std::move(word));
    }
    return {{"generators", p.generators},
            {"relators", std::move(relators)},
            {"abelianization", {{"free_rank", a.free_rank}, {"torsion", a.torsion}, {"text", to_string(a)}}}};
}

} // namespace stellar

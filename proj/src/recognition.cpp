#include "stellar/recognition.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "stellar/error.hpp"

namespace stellar {

std::string_view to_string(Shape s)
{
    switch (s) {
    case Shape::Ball: return "Ball";
    case Shape::Sphere: return "Sphere";
    case Shape::Neither: return "Neither";
    case Shape::Unknown: return "Unknown";
    }
    return "Unknown";
}

bool is_single_simplex(const Complex& k)
{
    return k.size() == 1;
}

bool is_simplex_boundary(const Complex& k)
{
    if (k.empty() || !k.is_uniform())
        return false;
    const auto n = static_cast<std::size_t>(k.dimension());
    return k.size() == n + 2 && k.vertices().size() == n + 2;
}

namespace {

RecognitionResult exact(Shape shape, const Complex& k, std::string diagnostics)
{
    RecognitionResult r{shape, std::nullopt, std::move(diagnostics)};
    if ((shape == Shape::Ball && is_single_simplex(k)) || (shape == Shape::Sphere && is_simplex_boundary(k)))
        r.certificate = MoveSequence{};
    return r;
}

RecognitionResult neither(std::string why)
{
    return {Shape::Neither, std::nullopt, std::move(why)};
}

RecognitionResult recognize_graph(const Complex& k)
{
    std::map<VertexId, int> degree;
    for (const auto& e : k)
        for (auto v : e.vertices())
            ++degree[v];
    if (!is_connected(k))
        return neither("graph is disconnected");
    int ends = 0;
    for (auto [v, d] : degree) {
        if (d == 1)
            ++ends;
        else if (d != 2) {
            std::ostringstream os;
            os << "vertex " << v << " has degree " << d;
            return neither(os.str());
        }
    }
    if (ends == 0)
        return exact(Shape::Sphere, k, "single cycle");
    if (ends == 2)
        return exact(Shape::Ball, k, "single path");
    return neither("graph has " + std::to_string(ends) + " endpoints");
}

/// Vertex links must all be balls or spheres; returns the first offending vertex.
std::optional<std::string> link_obstruction(const Complex& k, const RecognitionOptions& options)
{
    for (auto v : k.vertices()) {
        auto r = recognize_ball_or_sphere(link(v, k), options);
        if (r.verdict == Shape::Neither) {
            std::ostringstream os;
            os << "link of vertex " << v << " is neither a ball nor a sphere (" << r.diagnostics << ")";
            return os.str();
        }
    }
    return std::nullopt;
}

RecognitionResult recognize_surface(const Complex& k, const RecognitionOptions& options)
{
    if (!is_connected(k))
        return neither("complex is disconnected");
    if (auto why = link_obstruction(k, options))
        return neither(*why);
    const long chi = euler_characteristic(k);
    const Complex rim = boundary(k);
    if (rim.empty()) {
        if (chi == 2)
            return exact(Shape::Sphere, k, "closed surface with euler characteristic 2");
        return neither("closed surface with euler characteristic " + std::to_string(chi));
    }
    if (chi != 1)
        return neither("surface with boundary and euler characteristic " + std::to_string(chi));
    if (recognize_graph(rim).verdict != Shape::Sphere)
        return neither("boundary is not a single cycle");
    return exact(Shape::Ball, k, "disc: euler characteristic 1, boundary one cycle");
}

/// Picks a random face of dimension >= 1 for a stall-breaking subdivision.
Simplex random_face(const Complex& k, std::mt19937_64& rng)
{
    std::vector<Simplex> gens(k.begin(), k.end());
    std::uniform_int_distribution<std::size_t> pick_gen(0, gens.size() - 1);
    const Simplex& g = gens[pick_gen(rng)];
    std::vector<Simplex> candidates;
    for (auto& f : g.faces())
        if (f.size() >= 2)
            candidates.push_back(std::move(f));
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(rng)];
}

RecognitionResult search(const Complex& k, const RecognitionOptions& options)
{
    const int n = k.dimension();
    const long chi = euler_characteristic(k);
    const bool closed = is_closed(k);

    if (!is_connected(k))
        return neither("complex is disconnected");
    if (closed && chi != 1 + (n % 2 == 0 ? 1 : -1))
        return neither("closed complex with euler characteristic " + std::to_string(chi));
    if (!closed && chi != 1)
        return neither("complex with boundary and euler characteristic " + std::to_string(chi));
    if (n == 3) {
        if (auto why = link_obstruction(k, options))
            return neither(*why);
        if (!closed && recognize_ball_or_sphere(boundary(k), options).verdict != Shape::Sphere)
            return neither("boundary is not a 2-sphere");
    }

    const Shape target = closed ? Shape::Sphere : Shape::Ball;
    auto reached = [&](const Complex& c) { return closed ? is_simplex_boundary(c) : is_single_simplex(c); };
    if (reached(k))
        return {target, MoveSequence{}, "already a standard simplex"};

    std::mt19937_64 rng(options.seed);
    const std::size_t attempt_cap = 8 * k.vertices().size() + 32;
    std::size_t used = 0;
    std::size_t attempts = 0;
    while (used < options.budget) {
        ++attempts;
        Complex current = k;
        MoveSequence trace;
        for (std::size_t step = 0; step < attempt_cap && used < options.budget; ++step, ++used) {
            std::vector<std::pair<Simplex, VertexId>> welds;
            for (auto v : current.vertices())
                for (auto& a : weldable_faces(current, v))
                    welds.emplace_back(std::move(a), v);
            if (!welds.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, welds.size() - 1);
                auto& [face, v] = welds[pick(rng)];
                current = weld(current, face, v);
                trace.emplace_back(Weld{face, v});
            } else {
                const Simplex face = random_face(current, rng);
                const VertexId b = fresh_vertex(current);
                current = subdivide(current, face, b);
                trace.emplace_back(Subdivide{face, b});
            }
            if (reached(current)) {
                std::ostringstream os;
                os << "reduced in " << trace.size() << " moves (attempt " << attempts << ")";
                return {target, std::move(trace), os.str()};
            }
        }
    }
    return {Shape::Unknown, std::nullopt,
            "move budget of " + std::to_string(options.budget) + " exhausted after " + std::to_string(attempts) +
                " attempts"};
}

} // namespace

RecognitionResult recognize_ball_or_sphere(const Complex& k, const RecognitionOptions& options)
{
    if (k.empty())
        throw StellarError(ErrorKind::EmptyComplex, "cannot recognise the zero complex");
    if (!k.is_uniform())
        throw StellarError(ErrorKind::NotUniform, "generators of different dimensions");

    switch (k.dimension()) {
    case -1:
        return {Shape::Sphere, MoveSequence{}, "empty sphere"};
    case 0: {
        if (k.size() == 1)
            return exact(Shape::Ball, k, "one point");
        if (k.size() == 2)
            return exact(Shape::Sphere, k, "two points");
        return neither(std::to_string(k.size()) + " points");
    }
    case 1:
        return recognize_graph(k);
    case 2:
        return recognize_surface(k, options);
    default:
        return search(k, options);
    }
}

ManifoldReport is_stellar_manifold(const Complex& k, const RecognitionOptions& options)
{
    if (!k.is_uniform())
        throw StellarError(ErrorKind::NotUniform, "generators of different dimensions");

    ManifoldReport report;
    std::optional<VertexId> bad;
    std::optional<VertexId> undecided;
    for (auto v : k.vertices()) {
        RecognitionOptions local = options;
        local.seed = options.seed + v.value;
        auto r = recognize_ball_or_sphere(link(v, k), local);
        if (r.verdict == Shape::Neither && !bad)
            bad = v;
        if (r.verdict == Shape::Unknown && !undecided)
            undecided = v;
        report.per_vertex.emplace(v, std::move(r));
    }

    std::ostringstream os;
    if (bad) {
        os << "link of vertex " << *bad << " is neither a ball nor a sphere";
        report.verdict = Verdict::reject(os.str());
    } else if (undecided) {
        os << "link of vertex " << *undecided << " undecided within budget";
        report.verdict = Verdict::unknown(os.str());
    } else {
        report.verdict = Verdict::accept("every vertex link is a ball or a sphere");
    }
    return report;
}

} // namespace stellar

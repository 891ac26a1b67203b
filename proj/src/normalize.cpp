#include "stellar/normalize.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "stellar/error.hpp"

namespace stellar {

namespace {

VertexId fresh_label(const Complex& k, const RegularEquivalence& eq)
{
    std::uint32_t m = k.max_label();
    for (auto v : eq.members())
        m = std::max(m, v.value);
    return VertexId(m + 1);
}

struct Attachment {
    Simplex generator;  // p in the residual
    Simplex shared;     // facet of p
    Simplex link_face;  // link generator equal to `shared` modulo eq
};

std::optional<Attachment> find_attachment(const Complex& lk, const Complex& res, const RegularEquivalence& eq)
{
    for (const auto& p : res)
        for (auto& e : p.facets())
            if (lk.contains(e))
                return Attachment{p, e, e};

    if (eq.is_identity())
        return std::nullopt;
    std::map<ClassKey, Simplex> by_key;
    for (const auto& f : lk)
        by_key.emplace(class_key(f, eq), f); // keeps the least face per key
    for (const auto& p : res)
        for (auto& e : p.facets())
            if (auto it = by_key.find(class_key(e, eq)); it != by_key.end())
                return Attachment{p, e, it->second};
    return std::nullopt;
}

std::string show(const Simplex& s)
{
    std::ostringstream os;
    os << s;
    return os.str();
}

} // namespace

NormalizationState initial_state(const Complex& m)
{
    if (m.empty())
        throw StellarError(ErrorKind::EmptyComplex, "nothing to normalize");
    if (!m.is_uniform())
        throw StellarError(ErrorKind::NotUniform, "generators of different dimensions");
    if (m.dimension() < 1)
        throw StellarError(ErrorKind::UnsupportedDimension, "normalization needs dimension >= 1");

    NormalizationState state;
    const Simplex& g = *m.begin();
    state.apex = fresh_vertex(m);
    state.complex = subdivide(m, g, state.apex);
    state.trace.emplace_back(Subdivide{g, state.apex});
    return state;
}

NormalizationState normalize_step(const NormalizationState& state)
{
    const Complex lk = state.sphere();
    const Complex res = state.remaining();
    if (res.empty())
        throw StellarError(ErrorKind::NoAdjacentGenerator, "residual is empty");

    auto found = find_attachment(lk, res, state.eq);
    if (!found)
        throw StellarError(ErrorKind::NoAdjacentGenerator,
                           std::to_string(res.size()) + " residual generators, none adjacent to the link");

    NormalizationState next = state;
    ++next.step_index;
    Complex& n = next.complex;
    const Simplex& p = found->generator;
    Simplex target = p;

    // Carry p onto the labels of the link face it matches.
    if (found->link_face != found->shared) {
        for (auto x : found->shared.vertices()) {
            auto same_class = std::find_if(found->link_face.vertices().begin(), found->link_face.vertices().end(),
                                           [&](VertexId y) { return state.eq.equivalent(x, y); });
            if (*same_class == x)
                continue;
            n = split_vertex(n, target, x, *same_class);
            next.trace.emplace_back(SplitVertex{target, x, *same_class});
            target = target.replaced(x, *same_class);
        }
    }

    const Simplex& face = found->link_face;
    VertexId far = target.minus(face).vertices().front();
    if (lk.has_vertex(far)) {
        const VertexId copy = fresh_label(n, next.eq);
        n = split_vertex(n, target, far, copy);
        next.trace.emplace_back(SplitVertex{target, far, copy});
        target = target.replaced(far, copy);
        next.eq.merge(far, copy);
        far = copy;
        next.last_case = StepCase::Split;
    } else {
        next.last_case = StepCase::NewVertex;
    }

    if (auto degree = coface_count(face, n); degree != 2)
        throw StellarError(ErrorKind::InteriorFaceDegree,
                           show(face) + " lies in " + std::to_string(degree) + " generators");

    const VertexId b = fresh_label(n, next.eq);
    n = subdivide(n, face, b);
    next.trace.emplace_back(Subdivide{face, b});
    const Simplex edge({state.apex, far});
    n = weld(n, edge, b);
    next.trace.emplace_back(Weld{edge, b});

    Complex rest = res;
    rest.erase(p);
    const Complex expected = join(Simplex({state.apex}), lk + boundary(target)) + rest;
    if (n != expected)
        throw StellarError(ErrorKind::InternalIdentity, "step " + std::to_string(next.step_index) +
                                                            " does not match a*(lk + boundary p) + Q\\p");
    return next;
}

StarNormalForm normalize(const Complex& m, const NormalizeOptions& options)
{
    if (m.empty())
        throw StellarError(ErrorKind::EmptyComplex, "nothing to normalize");
    if (!m.is_uniform())
        throw StellarError(ErrorKind::NotUniform, "generators of different dimensions");
    if (m.dimension() < 1)
        throw StellarError(ErrorKind::UnsupportedDimension, "normalization needs dimension >= 1");
    if (!is_connected(m))
        throw StellarError(ErrorKind::NotConnected,
                           std::to_string(connected_components(m).size()) + " connected components");

    StarNormalForm nf;
    nf.dimension = m.dimension();
    if (!options.assume_manifold) {
        auto report = is_stellar_manifold(m, options.recognition);
        if (report.verdict.answer == Answer::No)
            throw StellarError(ErrorKind::NotManifold, report.verdict.witness);
        if (report.verdict.answer == Answer::Unknown)
            nf.warnings.push_back("manifold check inconclusive: " + report.verdict.witness);
    }

    NormalizationState state = initial_state(m);
    while (!state.remaining().empty()) {
        try {
            state = normalize_step(state);
        } catch (const StellarError& e) {
            if (e.kind() == ErrorKind::NoAdjacentGenerator)
                throw StellarError(ErrorKind::NotConnected, std::string("loop stalled: ") + e.what());
            throw;
        }
    }

    nf.apex = state.apex;
    nf.sphere = state.sphere();
    nf.eq = state.eq;
    nf.pairing = derive_pairing(nf.sphere, nf.eq);
    nf.trace = std::move(state.trace);
    nf.steps = state.step_index;
    return nf;
}

Verdict verify_normal_form(const StarNormalForm& nf, const Complex& original, const RecognitionOptions& options)
{
    Complex final_complex;
    try {
        final_complex = apply_sequence(original, nf.trace);
    } catch (const StellarError& e) {
        return Verdict::reject(std::string("trace does not replay: ") + e.what());
    }
    if (!residual(Simplex({nf.apex}), final_complex).empty())
        return Verdict::reject("replayed complex has generators away from the apex");
    if (link(Simplex({nf.apex}), final_complex) != nf.sphere)
        return Verdict::reject("replayed apex link differs from the recorded sphere");

    try {
        if (auto regular = validate_regular(nf.sphere, nf.eq); !regular.yes())
            return Verdict::reject("equivalence not regular: " + regular.witness);
    } catch (const StellarError& e) {
        return Verdict::reject(e.what());
    }
    if (nf.pairing != derive_pairing(nf.sphere, nf.eq))
        return Verdict::reject("recorded pairing differs from the one induced by the equivalence");

    // Every class holds exactly one vertex of the original complex.
    const auto original_vertices = original.vertices();
    std::map<VertexId, VertexId> to_original;
    for (auto v : nf.sphere.vertices()) {
        if (original_vertices.count(v)) {
            to_original[nf.eq.representative(v)] = v;
        }
    }
    auto project = [&](const Simplex& s) -> std::optional<Simplex> {
        std::vector<VertexId> vs;
        for (auto v : s.vertices()) {
            auto it = to_original.find(nf.eq.representative(v));
            if (it == to_original.end())
                return std::nullopt;
            vs.push_back(it->second);
        }
        return Simplex(std::move(vs));
    };

    const Complex rim = boundary(original);
    Complex projected_unpaired;
    for (const auto& g : nf.pairing.unpaired) {
        auto image = project(g);
        if (!image)
            return Verdict::reject("generator " + show(g) + " has a vertex class without an original vertex");
        projected_unpaired.toggle(*image);
    }
    if (projected_unpaired != rim) {
        std::ostringstream os;
        os << nf.pairing.unpaired.size() << " unpaired generators but " << rim.size() << " boundary faces";
        return Verdict::reject(os.str());
    }
    for (const auto& [g, p] : nf.pairing.pairs) {
        auto image = project(g);
        if (!image || !is_face(*image, original) || rim.contains(*image))
            return Verdict::reject("pair " + show(g) + "~" + show(p) + " is not an interior face");
    }

    auto shape = recognize_ball_or_sphere(nf.sphere, options);
    if (shape.verdict == Shape::Neither)
        return Verdict::reject("sphere is not a stellar sphere: " + shape.diagnostics);
    if (shape.verdict == Shape::Ball)
        return Verdict::reject("sphere is a ball");
    if (shape.verdict == Shape::Unknown)
        return Verdict::unknown("sphere recognition inconclusive: " + shape.diagnostics);

    std::ostringstream os;
    os << nf.steps << " steps, " << nf.pairing.pairs.size() << " pairs, " << nf.pairing.unpaired.size()
       << " unpaired";
    return Verdict::accept(os.str());
}

} // namespace stellar

#include "stellar/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "stellar/error.hpp"

namespace stellar {

namespace {

std::string describe(const Simplex& s)
{
    std::ostringstream os;
    os << s;
    return os.str();
}

} // namespace

VertexId fresh_vertex(const Complex& k)
{
    return VertexId(k.max_label() + 1);
}

Complex subdivide(const Complex& k, const Simplex& face, VertexId a)
{
    if (face.empty() || !is_face(face, k))
        throw StellarError(ErrorKind::FaceAbsent, describe(face) + " is not a face of the complex");
    if (k.has_vertex(a))
        throw StellarError(ErrorKind::VertexInUse, "vertex " + std::to_string(a.value) + " already occurs");

    if (face.size() == 1)
        return relabel(k, {{face.vertices().front(), a}});

    Complex out = residual(face, k);
    const Complex lk = link(face, k);
    const Complex cone = join(Simplex({a}), boundary(face));
    out += join(cone, lk);
    return out;
}

std::optional<Complex> divide_by_boundary(const Complex& lk, const Simplex& face)
{
    if (face.size() < 2 || lk.empty())
        return std::nullopt;
    Complex b;
    for (const auto& g : lk) {
        const Simplex rest = g.minus(face);
        if (rest.size() + face.size() - 1 != g.size())
            return std::nullopt;
        b.insert(rest);
    }
    if (join(boundary(face), b) != lk)
        return std::nullopt;
    return b;
}

Complex weld(const Complex& k, const Simplex& face, VertexId a)
{
    if (!k.has_vertex(a))
        throw StellarError(ErrorKind::NotWeldable, "vertex " + std::to_string(a.value) + " is not in the complex");
    if (face.empty())
        throw StellarError(ErrorKind::NotWeldable, "empty simplex");
    if (face.contains(a))
        throw StellarError(ErrorKind::NotWeldable, describe(face) + " contains the weld vertex");
    if (is_face(face, k))
        throw StellarError(ErrorKind::NotWeldable, describe(face) + " is a simplex of the complex");

    if (face.size() == 1) {
        // face is a single vertex absent from k.
        return relabel(k, {{a, face.vertices().front()}});
    }

    const Complex lk = link(Simplex({a}), k);
    auto b = divide_by_boundary(lk, face);
    if (!b) {
        std::ostringstream os;
        os << "link of " << a << " is not of the form boundary" << face << " * B";
        throw StellarError(ErrorKind::NotWeldable, os.str());
    }
    return join(face, *b) + residual(Simplex({a}), k);
}

Complex relabel(const Complex& k, const std::map<VertexId, VertexId>& mapping)
{
    auto image = [&](VertexId v) {
        auto it = mapping.find(v);
        return it == mapping.end() ? v : it->second;
    };
    std::set<VertexId> seen;
    for (auto v : k.vertices())
        if (!seen.insert(image(v)).second)
            throw StellarError(ErrorKind::NotInjective,
                               "two vertices map to " + std::to_string(image(v).value));

    Complex out;
    for (const auto& g : k) {
        std::vector<VertexId> vs;
        vs.reserve(g.size());
        for (auto v : g.vertices())
            vs.push_back(image(v));
        out.insert(Simplex(std::move(vs)));
    }
    return out;
}

Complex split_vertex(const Complex& k, const Simplex& generator, VertexId old, VertexId fresh)
{
    if (!k.contains(generator))
        throw StellarError(ErrorKind::FaceAbsent, describe(generator) + " is not a generator");
    if (!generator.contains(old))
        throw StellarError(ErrorKind::UnknownVertex,
                           "vertex " + std::to_string(old.value) + " not in " + describe(generator));
    if (generator.contains(fresh))
        throw StellarError(ErrorKind::VertexInUse,
                           "vertex " + std::to_string(fresh.value) + " already in " + describe(generator));
    Complex out = k;
    out.erase(generator);
    const Simplex replaced = generator.replaced(old, fresh);
    if (out.contains(replaced))
        throw StellarError(ErrorKind::VertexInUse, describe(replaced) + " already a generator");
    out.insert(replaced);
    return out;
}

std::vector<Simplex> weldable_faces(const Complex& k, VertexId a)
{
    const Complex lk = link(Simplex({a}), k);
    std::set<Simplex> out;
    if (lk.empty() || lk.begin()->empty())
        return {};

    // Every generator of ∂A ⋆ B holds all but one vertex of A, so A is some
    // nonempty subset of a fixed generator plus one vertex outside it.
    const Simplex& anchor = *lk.begin();
    const auto lk_vertices = lk.vertices();
    const auto anchor_faces = anchor.faces();
    for (auto y : lk_vertices) {
        if (anchor.contains(y))
            continue;
        for (const auto& t : anchor_faces) {
            const Simplex candidate = t.with(y);
            if (out.count(candidate) || is_face(candidate, k))
                continue;
            if (divide_by_boundary(lk, candidate))
                out.insert(candidate);
        }
    }
    return {out.begin(), out.end()};
}

Complex apply_move(const Complex& k, const MoveRecord& move)
{
    return std::visit(
        [&](const auto& m) -> Complex {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Subdivide>)
                return subdivide(k, m.face, m.vertex);
            else if constexpr (std::is_same_v<T, Weld>)
                return weld(k, m.face, m.vertex);
            else if constexpr (std::is_same_v<T, Relabel>)
                return relabel(k, m.mapping);
            else
                return split_vertex(k, m.generator, m.old, m.fresh);
        },
        move);
}

Complex apply_sequence(const Complex& k, const MoveSequence& moves)
{
    Complex current = k;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        try {
            current = apply_move(current, moves[i]);
        } catch (const StellarError& e) {
            throw StellarError(e.kind(), "move " + std::to_string(i) + ": " + e.what());
        }
    }
    return current;
}

MoveSequence invert_sequence(const MoveSequence& moves)
{
    MoveSequence out;
    out.reserve(moves.size());
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        std::visit(
            [&](const auto& m) {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, Subdivide>) {
                    out.emplace_back(Weld{m.face, m.vertex});
                } else if constexpr (std::is_same_v<T, Weld>) {
                    out.emplace_back(Subdivide{m.face, m.vertex});
                } else if constexpr (std::is_same_v<T, Relabel>) {
                    Relabel inv;
                    for (auto [from, to] : m.mapping)
                        if (!inv.mapping.emplace(to, from).second)
                            throw StellarError(ErrorKind::NotInvertible, "relabelling is not injective");
                    out.emplace_back(std::move(inv));
                } else {
                    throw StellarError(ErrorKind::NotInvertible, "sequence contains a vertex split");
                }
            },
            *it);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MoveRecord& move)
{
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Subdivide>) {
                os << '(' << m.face << ' ' << m.vertex << ')';
            } else if constexpr (std::is_same_v<T, Weld>) {
                os << '(' << m.face << ' ' << m.vertex << ")^-1";
            } else if constexpr (std::is_same_v<T, Relabel>) {
                os << "relabel{";
                bool first = true;
                for (auto [from, to] : m.mapping) {
                    os << (first ? "" : ", ") << from << "->" << to;
                    first = false;
                }
                os << '}';
            } else {
                os << "split" << m.generator << '[' << m.old << "->" << m.fresh << ']';
            }
        },
        move);
    return os;
}

} // namespace stellar

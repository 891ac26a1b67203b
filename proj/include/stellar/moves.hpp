#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar {

/// Starring (face vertex)K.
struct Subdivide {
    Simplex face;
    VertexId vertex;
    friend bool operator==(const Subdivide&, const Subdivide&) = default;
};

/// Weld (face vertex)^-1 K.
struct Weld {
    Simplex face;
    VertexId vertex;
    friend bool operator==(const Weld&, const Weld&) = default;
};

/// Enumeration change. Vertices absent from `mapping` are fixed.
struct Relabel {
    std::map<VertexId, VertexId> mapping;
    friend bool operator==(const Relabel&, const Relabel&) = default;
};

/// Replaces `old` by `fresh` inside one generator, recording old ≃ fresh.
/// Produced only by normalization; not a stellar move and not invertible.
struct SplitVertex {
    Simplex generator;
    VertexId old;
    VertexId fresh;
    friend bool operator==(const SplitVertex&, const SplitVertex&) = default;
};

using MoveRecord = std::variant<Subdivide, Weld, Relabel, SplitVertex>;
using MoveSequence = std::vector<MoveRecord>;

/// max label + 1 (1 for a complex without vertices).
VertexId fresh_vertex(const Complex& k);

/// a ⋆ ∂A ⋆ lk(A,K) + Q(A,K). For a single-vertex A this degenerates to
/// relabelling that vertex to `a`.
Complex subdivide(const Complex& k, const Simplex& face, VertexId a);

/// A ⋆ B + Q(a,K) where lk(a,K) = ∂A ⋆ B. For a single-vertex A this is the
/// relabelling a -> A, the inverse of the degenerate starring.
Complex weld(const Complex& k, const Simplex& face, VertexId a);

Complex relabel(const Complex& k, const std::map<VertexId, VertexId>& mapping);

Complex split_vertex(const Complex& k, const Simplex& generator, VertexId old, VertexId fresh);

/// B with ∂A ⋆ B = lk exactly, if such a B exists.
///
/// B is taken maximal: every generator of lk must meet A in |A|-1 vertices and
/// contributes its remainder; the product is then compared with lk.
std::optional<Complex> divide_by_boundary(const Complex& lk, const Simplex& face);

/// Every simplex A (|A| >= 2) at which `a` can be welded in `k`, in lexicographic order.
std::vector<Simplex> weldable_faces(const Complex& k, VertexId a);

Complex apply_move(const Complex& k, const MoveRecord& move);
/// Left-to-right composition. A failing move is rethrown with its index.
Complex apply_sequence(const Complex& k, const MoveSequence& moves);
/// Reverse order, Subdivide <-> Weld, inverse permutations. Rejects SplitVertex.
MoveSequence invert_sequence(const MoveSequence& moves);

std::ostream& operator<<(std::ostream& os, const MoveRecord& move);

} // namespace stellar

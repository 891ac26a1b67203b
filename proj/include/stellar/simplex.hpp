#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace stellar {

/// Opaque vertex label. Only equality and the total order are meaningful.
struct VertexId {
    std::uint32_t value = 0;

    constexpr VertexId() = default;
    constexpr explicit VertexId(std::uint32_t v) : value(v) {}

    friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

std::ostream& operator<<(std::ostream& os, VertexId v);

/// A simplex as the sorted set of its distinct vertices.
///
/// The empty simplex (no vertices, dimension -1) is allowed; it is the unit
/// of the join and appears as the link of a generator inside its own complex.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<std::uint32_t> labels);
    explicit Simplex(std::vector<VertexId> vertices);

    std::span<const VertexId> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    bool empty() const { return vertices_.empty(); }

    bool contains(VertexId v) const;
    /// True when `face` is a (not necessarily proper) face of this simplex.
    bool contains(const Simplex& face) const;
    bool disjoint(const Simplex& other) const;

    Simplex with(VertexId v) const;
    Simplex without(VertexId v) const;
    /// Vertex-set difference.
    Simplex minus(const Simplex& other) const;
    /// Vertex-set union of two disjoint simplexes; throws SharedVertex otherwise.
    Simplex join(const Simplex& other) const;
    /// Replaces `from` by `to`; `to` must not already be a vertex.
    Simplex replaced(VertexId from, VertexId to) const;

    /// Codimension-1 faces in lexicographic order. A vertex has none.
    std::vector<Simplex> facets() const;
    /// All nonempty faces, including the simplex itself.
    std::vector<Simplex> faces() const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    std::vector<VertexId> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

} // namespace stellar

template <>
struct std::hash<stellar::VertexId> {
    std::size_t operator()(stellar::VertexId v) const noexcept { return std::hash<std::uint32_t>{}(v.value); }
};

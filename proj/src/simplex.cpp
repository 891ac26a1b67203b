#include "stellar/simplex.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "stellar/error.hpp"

namespace stellar {

std::ostream& operator<<(std::ostream& os, VertexId v)
{
    return os << v.value;
}

Simplex::Simplex(std::initializer_list<std::uint32_t> labels)
{
    vertices_.reserve(labels.size());
    for (auto l : labels)
        vertices_.emplace_back(l);
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw StellarError(ErrorKind::DuplicateVertexInGenerator, "repeated vertex in simplex");
}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end())
        throw StellarError(ErrorKind::DuplicateVertexInGenerator,
                           "vertex " + std::to_string(dup->value) + " repeated in simplex");
}

bool Simplex::contains(VertexId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::contains(const Simplex& face) const
{
    return std::includes(vertices_.begin(), vertices_.end(), face.vertices_.begin(), face.vertices_.end());
}

bool Simplex::disjoint(const Simplex& other) const
{
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b)
            return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

Simplex Simplex::with(VertexId v) const
{
    auto out = vertices_;
    out.push_back(v);
    return Simplex(std::move(out));
}

Simplex Simplex::without(VertexId v) const
{
    Simplex out;
    out.vertices_.reserve(vertices_.size());
    std::copy_if(vertices_.begin(), vertices_.end(), std::back_inserter(out.vertices_),
                 [v](VertexId x) { return x != v; });
    return out;
}

Simplex Simplex::minus(const Simplex& other) const
{
    Simplex out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                        std::back_inserter(out.vertices_));
    return out;
}

Simplex Simplex::join(const Simplex& other) const
{
    Simplex out;
    out.vertices_.reserve(size() + other.size());
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                   std::back_inserter(out.vertices_));
    if (out.size() != size() + other.size()) {
        std::vector<VertexId> common;
        std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                              std::back_inserter(common));
        throw StellarError(ErrorKind::SharedVertex, std::to_string(common.front().value));
    }
    return out;
}

Simplex Simplex::replaced(VertexId from, VertexId to) const
{
    auto out = vertices_;
    std::replace(out.begin(), out.end(), from, to);
    return Simplex(std::move(out));
}

std::vector<Simplex> Simplex::facets() const
{
    std::vector<Simplex> out;
    if (vertices_.size() < 2)
        return out;
    out.reserve(vertices_.size());
    // Dropping the last vertex first yields lexicographic order.
    for (auto it = vertices_.rbegin(); it != vertices_.rend(); ++it)
        out.push_back(without(*it));
    return out;
}

std::vector<Simplex> Simplex::faces() const
{
    std::vector<Simplex> out;
    const std::size_t n = vertices_.size();
    if (n == 0)
        return out;
    if (n > 20)
        throw std::length_error("face enumeration of a simplex with more than 21 vertices");
    out.reserve((std::size_t{1} << n) - 1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                f.vertices_.push_back(vertices_[i]);
        out.push_back(std::move(f));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Simplex& s)
{
    os << '(';
    bool first = true;
    for (auto v : s.vertices()) {
        if (!first)
            os << ' ';
        os << v;
        first = false;
    }
    return os << ')';
}

} // namespace stellar

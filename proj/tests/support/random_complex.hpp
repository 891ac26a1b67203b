#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "stellar/complex.hpp"

namespace stellar::testing {

/// Random (d+1)-subset of {1..vertices}.
inline Simplex random_simplex(std::mt19937_64& rng, int d, int vertices)
{
    std::vector<std::uint32_t> labels(static_cast<std::size_t>(vertices));
    std::iota(labels.begin(), labels.end(), 1u);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<VertexId> vs;
    for (int i = 0; i <= d; ++i)
        vs.emplace_back(labels[static_cast<std::size_t>(i)]);
    return Simplex(std::move(vs));
}

/// Nonempty uniform complex of dimension d on at most `max_vertices` labels.
inline Complex random_uniform_complex(std::mt19937_64& rng, int d, int max_vertices = 8, int max_generators = 12)
{
    std::uniform_int_distribution<int> nv(d + 1, max_vertices);
    std::uniform_int_distribution<int> ng(1, max_generators);
    const int vertices = nv(rng);
    const int count = ng(rng);
    Complex k;
    for (int i = 0; i < count; ++i)
        k.insert(random_simplex(rng, d, vertices));
    return k;
}

/// Generators of mixed dimensions 0..max_dim.
inline Complex random_mixed_complex(std::mt19937_64& rng, int max_dim = 3, int max_vertices = 8, int max_generators = 12)
{
    std::uniform_int_distribution<int> ng(1, max_generators);
    std::uniform_int_distribution<int> dim(0, max_dim);
    const int count = ng(rng);
    Complex k;
    for (int i = 0; i < count; ++i)
        k.toggle(random_simplex(rng, dim(rng), max_vertices));
    return k;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items)
{
    std::uniform_int_distribution<std::size_t> i(0, items.size() - 1);
    return items[i(rng)];
}

/// Random nonempty face of a random generator.
inline Simplex random_face(std::mt19937_64& rng, const Complex& k)
{
    std::vector<Simplex> gens(k.begin(), k.end());
    return pick(rng, pick(rng, gens).faces());
}

} // namespace stellar::testing

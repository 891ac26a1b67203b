#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar::fixtures {

/// Δᵏ on labels 1..k+1.
Complex simplex(int k);
/// ∂Δᵏ⁺¹ on labels 1..k+2.
Complex sphere(int k);
/// Eight triangles on 1..6; antipodal pairs {1,6}, {2,4}, {3,5}.
Complex octahedron();
/// Möbius–Kantor 7-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7, labels 1..7.
Complex torus7();
/// Six-vertex real projective plane (hemi-icosahedron), 10 triangles.
Complex rp2_6();

/// Resolves "simplex-k", "sphere-k", "octahedron", "torus7", "rp2-6".
/// Throws Malformed for any other name.
Complex by_name(std::string_view name);

std::vector<std::string> names();

} // namespace stellar::fixtures

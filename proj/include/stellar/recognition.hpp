#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "stellar/complex.hpp"
#include "stellar/moves.hpp"
#include "stellar/verdict.hpp"

namespace stellar {

enum class Shape { Ball, Sphere, Neither, Unknown };

std::string_view to_string(Shape s);

struct RecognitionResult {
    Shape verdict = Shape::Unknown;
    /// Moves taking the input to a single simplex (Ball) or the boundary of a
    /// simplex (Sphere). Present only when such a sequence was found or is empty.
    std::optional<MoveSequence> certificate;
    std::string diagnostics;
};

struct RecognitionOptions {
    std::size_t budget = 10000;
    std::uint64_t seed = 0;
};

/// Decides whether `k` is a stellar ball or sphere.
///
/// Exact in dimensions <= 2 via the classical combinatorial characterisation;
/// above that a seeded, budgeted weld-first search. Unknown is returned only
/// when that search runs out of budget without hitting an obstruction.
RecognitionResult recognize_ball_or_sphere(const Complex& k, const RecognitionOptions& options = {});

/// True when `k` is literally Δⁿ (one generator).
bool is_single_simplex(const Complex& k);
/// True when `k` is literally ∂Δⁿ⁺¹ on some n+2 labels.
bool is_simplex_boundary(const Complex& k);

struct ManifoldReport {
    Verdict verdict;
    std::map<VertexId, RecognitionResult> per_vertex;
};

/// Every vertex link must be a stellar ball or sphere.
ManifoldReport is_stellar_manifold(const Complex& k, const RecognitionOptions& options = {});

} // namespace stellar

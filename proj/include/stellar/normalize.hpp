#pragma once

#include <string>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/moves.hpp"
#include "stellar/quotient.hpp"
#include "stellar/recognition.hpp"
#include "stellar/verdict.hpp"

namespace stellar {

enum class StepCase {
    Initial,   ///< N₀ = (g a)M
    NewVertex, ///< the far vertex w of p is not in the link
    Split,     ///< w already in the link: p gets a fresh copy d ≃ w
};

/// Snapshot of the star construction after `step_index` loop steps.
struct NormalizationState {
    Complex complex;
    VertexId apex;
    RegularEquivalence eq;
    MoveSequence trace;
    std::size_t step_index = 0;
    StepCase last_case = StepCase::Initial;

    Complex sphere() const { return link(apex, complex); }
    Complex remaining() const { return residual(apex, complex); }
};

struct StarNormalForm {
    int dimension = 0;
    VertexId apex;
    Complex sphere;
    RegularEquivalence eq;
    GeneratorPairing pairing;
    MoveSequence trace;
    std::size_t steps = 0;
    std::vector<std::string> warnings;
};

/// N₀: stars the least generator of `m` at a fresh apex.
NormalizationState initial_state(const Complex& m);

/// One loop step.
///
/// Picks the least generator p of the residual sharing a facet with the apex
/// link; exact facet matches are preferred over matches modulo the
/// accumulated equivalence. Throws NoAdjacentGenerator when none exists and
/// InteriorFaceDegree when the shared facet is not in exactly two generators.
/// The result is checked against a⋆(lk + ∂p') + Q∖p.
NormalizationState normalize_step(const NormalizationState& state);

struct NormalizeOptions {
    RecognitionOptions recognition;
    /// Skip the vertex-link manifold check (the caller has done it).
    bool assume_manifold = false;
};

/// Rewrites a connected stellar manifold into a⋆(S/≃).
StarNormalForm normalize(const Complex& m, const NormalizeOptions& options = {});

/// Replays the trace and checks every normal-form invariant against `original`.
Verdict verify_normal_form(const StarNormalForm& nf, const Complex& original,
                           const RecognitionOptions& options = {});

} // namespace stellar

#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "stellar/complex.hpp"
#include "stellar/moves.hpp"
#include "stellar/normalize.hpp"
#include "stellar/pi1.hpp"
#include "stellar/quotient.hpp"
#include "stellar/recognition.hpp"

namespace stellar {

/// The on-disk form of a complex:
/// {"dimension": n, "generators": [[...], ...], "equivalence": [[...]], "metadata": {...}}
struct ComplexDocument {
    int dimension = -1;
    Complex complex;
    std::optional<RegularEquivalence> equivalence;
    nlohmann::json metadata; // null when absent

    friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

/// Wraps a uniform complex; the zero complex gets dimension -1.
ComplexDocument make_document(const Complex& k);

/// Throws Malformed (with byte offset or JSON path), DimensionMismatch,
/// DuplicateVertexInGenerator or UnknownVertex.
ComplexDocument parse(std::string_view text);

/// Compact JSON with sorted keys and sorted generators.
std::string serialize(const ComplexDocument& doc);

nlohmann::json to_json(const Simplex& s);
nlohmann::json to_json(const Complex& k);
nlohmann::json to_json(const RegularEquivalence& eq);
nlohmann::json to_json(const MoveRecord& move);
nlohmann::json to_json(const MoveSequence& moves);
nlohmann::json to_json(const RecognitionResult& r);
nlohmann::json to_json(const ManifoldReport& r);
nlohmann::json to_json(const StarNormalForm& nf);
nlohmann::json to_json(const GroupPresentation& p, const AbelianInvariants& a);

MoveRecord move_from_json(const nlohmann::json& j);
MoveSequence moves_from_json(const nlohmann::json& j);

} // namespace stellar

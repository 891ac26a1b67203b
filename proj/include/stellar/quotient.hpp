#pragma once

#include <map>
#include <utility>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/verdict.hpp"

namespace stellar {

/// Partition of vertex labels. Unlisted labels are singleton classes; each
/// class is represented by its least member.
class RegularEquivalence {
public:
    RegularEquivalence() = default;
    /// Classes must be pairwise disjoint; singletons are accepted and dropped.
    explicit RegularEquivalence(const std::vector<std::vector<VertexId>>& classes);

    /// Joins the classes of `a` and `b`.
    void merge(VertexId a, VertexId b);

    VertexId representative(VertexId v) const;
    bool equivalent(VertexId a, VertexId b) const { return representative(a) == representative(b); }
    bool is_identity() const { return rep_.empty(); }

    /// Nontrivial classes, each sorted, ordered by least member.
    std::vector<std::vector<VertexId>> classes() const;
    /// Every label that belongs to a nontrivial class.
    std::vector<VertexId> members() const;

    friend bool operator==(const RegularEquivalence&, const RegularEquivalence&) = default;

private:
    // label -> least member, nontrivial classes only
    std::map<VertexId, VertexId> rep_;
};

/// Sorted class representatives of a simplex's vertices.
using ClassKey = std::vector<VertexId>;
ClassKey class_key(const Simplex& s, const RegularEquivalence& eq);

/// Conditions (i) and (ii): no generator has two equivalent vertices, and each
/// generator shares its class set with at most one other generator.
/// Throws UnknownVertex when a class member is not a vertex of `s`.
Verdict validate_regular(const Complex& s, const RegularEquivalence& eq);

struct GeneratorPairing {
    std::vector<std::pair<Simplex, Simplex>> pairs;
    std::vector<Simplex> unpaired;

    friend bool operator==(const GeneratorPairing&, const GeneratorPairing&) = default;
};

/// Throws NotRegular unless validate_regular accepts.
GeneratorPairing derive_pairing(const Complex& s, const RegularEquivalence& eq);

/// Cell structure of S/≃: faces of S identified when their class sets agree.
struct QuotientComplex {
    /// cells[d] are the distinct class keys of d-faces, sorted.
    std::vector<std::vector<ClassKey>> cells;
    /// incidence[d][i] lists indices into cells[d-1] of the facets of cells[d][i];
    /// filled for d = 1 and d = 2.
    std::vector<std::vector<std::vector<std::size_t>>> incidence;

    std::size_t count(int d) const;
    std::size_t index_of(const ClassKey& key) const;
    long euler_characteristic() const;
};

/// Throws NotRegular unless validate_regular accepts.
QuotientComplex quotient_cells(const Complex& s, const RegularEquivalence& eq);

/// χ of a⋆(S/≃) where the cone cells a⋆σ stay distinct for every face σ of S
/// and only the S/≃ part is identified: 1 - χ(S) + χ(S/≃).
long star_quotient_euler_characteristic(const Complex& s, const RegularEquivalence& eq);

} // namespace stellar

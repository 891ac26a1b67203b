#pragma once

#include <Eigen/Core>
#include <ostream>
#include <string>
#include <vector>

#include "stellar/normalize.hpp"

namespace stellar {

/// A letter x_i^{±1}; `generator` indexes GroupPresentation::generators.
struct Letter {
    std::size_t generator = 0;
    int exponent = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

struct AbelianInvariants {
    std::size_t free_rank = 0;
    /// Invariant factors > 1, each dividing the next.
    std::vector<long long> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

using IntegerMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Cancels adjacent inverse letters.
Word free_reduce(const Word& w);
/// Free reduction followed by cancellation across the ends.
Word cyclic_reduce(const Word& w);

/// Drops generators killed by a length-1 relator and reduces every relator,
/// until nothing changes. Empty relators are removed.
GroupPresentation simplify(const GroupPresentation& p);

/// Boundary word of the polygon S/≃ read once around the cycle S, over all
/// quotient edges (edge i named after quotient edge i). Requires n = 2.
Word polygon_word(const StarNormalForm& nf);

/// Edge-path presentation of π₁(S/≃), or of the closed polygon for n = 2.
///
/// Quotient edges form the generators, a breadth-first spanning tree from the
/// least quotient vertex is set trivial, and each 2-cell contributes its
/// boundary word. For n = 2 the single 2-cell is the polygon itself.
GroupPresentation presentation(const StarNormalForm& nf);

/// relators × generators matrix of exponent sums.
IntegerMatrix exponent_sum_matrix(const GroupPresentation& p);

/// Diagonal of the Smith normal form (nonzero entries, ascending divisibility).
std::vector<long long> smith_diagonal(IntegerMatrix m);

AbelianInvariants abelianization(const GroupPresentation& p);

/// `<x1, x2 | x1 x2 x1^-1 x2^-1>`; the trivial group prints as `< | >`.
std::string to_string(const GroupPresentation& p);
/// "trivial", or e.g. "Z^2", "Z/2", "Z + Z/2 + Z/4".
std::string to_string(const AbelianInvariants& a);

} // namespace stellar

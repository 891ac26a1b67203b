#include <catch_amalgamated.hpp>

#include "stellar/error.hpp"
#include "stellar/fixtures.hpp"
#include "stellar/normalize.hpp"
#include "stellar/quotient.hpp"
#include "support/oracles.hpp"
#include "support/random_complex.hpp"

using namespace stellar;

namespace {

RegularEquivalence eq_of(std::initializer_list<std::vector<std::uint32_t>> classes)
{
    std::vector<std::vector<VertexId>> out;
    for (const auto& c : classes) {
        std::vector<VertexId> ids;
        for (auto x : c)
            ids.push_back(VertexId{x});
        out.push_back(ids);
    }
    return RegularEquivalence(out);
}

// Class-set images of the enumerated faces, per dimension.
std::vector<std::size_t> oracle_cell_counts(const Complex& s, const std::map<std::uint32_t, std::uint32_t>& rep)
{
    std::vector<std::size_t> counts;
    for (std::size_t size = 1;; ++size) {
        const auto faces = oracle::faces_by_enumeration(s, size);
        if (faces.empty())
            break;
        std::set<oracle::Labels> images;
        for (auto f : faces) {
            for (auto& x : f)
                x = rep.count(x) ? rep.at(x) : x;
            std::sort(f.begin(), f.end());
            images.insert(f);
        }
        counts.push_back(images.size());
    }
    return counts;
}

} // namespace

TEST_CASE("equivalence classes", "[quotient]")
{
    RegularEquivalence eq;
    CHECK(eq.is_identity());
    eq.merge(VertexId{5}, VertexId{3});
    eq.merge(VertexId{7}, VertexId{5});
    CHECK(eq.representative(VertexId{7}) == VertexId{3});
    CHECK(eq.equivalent(VertexId{3}, VertexId{7}));
    CHECK_FALSE(eq.equivalent(VertexId{3}, VertexId{4}));
    CHECK(eq.representative(VertexId{9}) == VertexId{9});
    CHECK(eq.classes() == std::vector<std::vector<VertexId>>{{VertexId{3}, VertexId{5}, VertexId{7}}});

    CHECK(eq_of({{1}, {2, 4}}) == eq_of({{4, 2}}));
    CHECK_THROWS_AS(eq_of({{1, 2}, {2, 3}}), StellarError);

    CHECK(class_key(Simplex{2, 3, 4}, eq_of({{2, 4}})) == ClassKey{VertexId{2}, VertexId{2}, VertexId{3}});
}

TEST_CASE("validation", "[quotient]")
{
    const Complex cycle{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
    CHECK(validate_regular(cycle, RegularEquivalence{}).answer == Answer::Yes);
    // (i): an edge with both ends identified
    CHECK(validate_regular(cycle, eq_of({{1, 2}})).answer == Answer::No);
    // (ii): all four edges collapse to one class set
    CHECK(validate_regular(cycle, eq_of({{1, 3}, {2, 4}})).answer == Answer::No);
    // a single pair: (1 2)~(3 2)? no; (1 4)~(3 4)
    CHECK(validate_regular(cycle, eq_of({{1, 3}})).answer == Answer::Yes);

    try {
        validate_regular(cycle, eq_of({{1, 9}}));
        FAIL("expected UnknownVertex");
    } catch (const StellarError& e) {
        CHECK(e.kind() == ErrorKind::UnknownVertex);
    }
}

TEST_CASE("pairing", "[quotient]")
{
    const Complex s{{1, 2}, {3, 4}};
    const auto p = derive_pairing(s, eq_of({{1, 3}, {2, 4}}));
    REQUIRE(p.pairs.size() == 1);
    CHECK(p.pairs[0] == std::pair{Simplex{1, 2}, Simplex{3, 4}});
    CHECK(p.unpaired.empty());

    const auto identity = derive_pairing(s, RegularEquivalence{});
    CHECK(identity.pairs.empty());
    CHECK(identity.unpaired == std::vector<Simplex>{Simplex{1, 2}, Simplex{3, 4}});

    CHECK_THROWS_AS(derive_pairing(s, eq_of({{1, 2}})), StellarError);
}

TEST_CASE("quotient cells", "[quotient]")
{
    const Complex triangle = boundary(Simplex{1, 2, 3});
    const auto q = quotient_cells(triangle, RegularEquivalence{});
    CHECK(q.count(0) == 3);
    CHECK(q.count(1) == 3);
    CHECK(q.euler_characteristic() == 0);
    REQUIRE(q.incidence.size() >= 2);
    for (const auto& facets : q.incidence[1])
        CHECK(facets.size() == 2);

    // square with opposite edges glued: one circle of two edges
    const Complex square{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
    const auto glued = quotient_cells(square, eq_of({{1, 3}}));
    CHECK(glued.count(0) == 3);
    CHECK(glued.count(1) == 2);
    CHECK(glued.euler_characteristic() == 1);
    CHECK(glued.index_of(ClassKey{VertexId{1}, VertexId{2}}) < glued.count(1));

    CHECK(star_quotient_euler_characteristic(triangle, RegularEquivalence{}) == 1);
}

TEST_CASE("star quotients of normal forms", "[quotient]")
{
    const long expected[] = {2, 2, 0, 1};
    const Complex inputs[] = {fixtures::sphere(2), fixtures::octahedron(), fixtures::torus7(), fixtures::rp2_6()};
    for (int i = 0; i < 4; ++i) {
        const auto nf = normalize(inputs[i]);
        CHECK(validate_regular(nf.sphere, nf.eq).answer == Answer::Yes);
        CHECK(star_quotient_euler_characteristic(nf.sphere, nf.eq) == expected[i]);
        CHECK(oracle::euler_by_enumeration(inputs[i]) == expected[i]);
    }
}

TEST_CASE("cell counts agree with enumeration", "[quotient][property]")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim(1, 2);
    int accepted = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Complex s = testing::random_uniform_complex(rng, dim(rng), 8, 10);
        const auto vertex_set = s.vertices();
        std::vector<VertexId> vs(vertex_set.begin(), vertex_set.end());
        std::shuffle(vs.begin(), vs.end(), rng);
        RegularEquivalence eq;
        std::map<std::uint32_t, std::uint32_t> rep;
        for (std::size_t i = 0; i + 1 < vs.size() && i < 4; i += 2) {
            eq.merge(vs[i], vs[i + 1]);
            rep[std::max(vs[i], vs[i + 1]).value] = std::min(vs[i], vs[i + 1]).value;
        }
        if (validate_regular(s, eq).answer != Answer::Yes) {
            CHECK_THROWS_AS(quotient_cells(s, eq), StellarError);
            continue;
        }
        ++accepted;
        const auto q = quotient_cells(s, eq);
        const auto expected = oracle_cell_counts(s, rep);
        REQUIRE(q.cells.size() >= expected.size());
        for (std::size_t d = 0; d < expected.size(); ++d) {
            CHECK(q.count(static_cast<int>(d)) == expected[d]);
            CHECK(q.count(static_cast<int>(d)) <= faces(s, static_cast<int>(d)).size());
        }
        const auto p = derive_pairing(s, eq);
        CHECK(2 * p.pairs.size() + p.unpaired.size() == s.size());
    }
    CHECK(accepted > 50);
}

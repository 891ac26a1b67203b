// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "stellar/fixtures.hpp"
#include "stellar/normalize.hpp"
#include "stellar/pi1.hpp"
#include "support/oracles.hpp"
#include "support/random_complex.hpp"

using namespace stellar;

namespace {

struct Failure {
    std::ostringstream why;
    bool failed = false;

    template <class T>
    Failure& operator<<(const T& x)
    {
        failed = true;
        why << x;
        return *this;
    }
};

#define EXPECT(cond, f)                                                                                            \
    do {                                                                                                           \
        if (!(cond)) {                                                                                             \
            f << #cond << "; ";                                                                                    \
        }                                                                                                          \
    } while (0)

struct Criterion {
    int id;
    const char* name;
    double limit_seconds; // 0: no runtime bound
    std::function<void(Failure&)> body;
};

bool is_one_sphere(const Complex& s)
{
    return s.dimension() == 1 && recognize_ball_or_sphere(s).verdict == Shape::Sphere;
}

// Brute-force version of both regularity conditions.
bool regular_by_enumeration(const Complex& s, const std::map<std::uint32_t, std::uint32_t>& rep)
{
    auto image = [&](const oracle::Labels& g) {
        oracle::Labels out;
        for (auto v : g)
            out.push_back(rep.count(v) ? rep.at(v) : v);
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto gens = oracle::generator_labels(s);
    for (const auto& g : gens) {
        const auto img = image(g);
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            return false;
        int matches = 0;
        for (const auto& p : gens)
            if (p != g && image(p) == img)
                ++matches;
        if (matches > 1)
            return false;
    }
    return true;
}

RegularEquivalence classes(std::initializer_list<std::vector<std::uint32_t>> cs,
                           std::map<std::uint32_t, std::uint32_t>& rep)
{
    std::vector<std::vector<VertexId>> out;
    for (const auto& c : cs) {
        std::vector<VertexId> ids;
        for (auto x : c) {
            ids.push_back(VertexId{x});
            rep[x] = *std::min_element(c.begin(), c.end());
        }
        out.push_back(ids);
    }
    return RegularEquivalence(out);
}

std::string run_shell(const std::string& command)
{
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return out;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        out.append(buffer, n);
    if (pclose(pipe) != 0)
        out.clear();
    return out;
}

void chain_algebra(Failure& f)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 1000 && !f.failed; ++trial) {
        const Complex k = testing::random_mixed_complex(rng, 3, 8, 12);
        if (!boundary(boundary(k)).empty())
            f << "boundary of boundary nonzero on trial " << trial;
        std::set<Simplex> all;
        for (const auto& g : k)
            for (const auto& a : g.faces())
                all.insert(a);
        for (const auto& a : all)
            if (join(a, link(a, k)) + residual(a, k) != k)
                f << "decomposition fails at " << a << " on trial " << trial;
    }
}

void move_round_trip(Failure& f)
{
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> dim(0, 3);
    for (int trial = 0; trial < 500 && !f.failed; ++trial) {
        const Complex k = testing::random_uniform_complex(rng, dim(rng), 8, 12);
        const Simplex a = testing::random_face(rng, k);
        const VertexId v = fresh_vertex(k);
        const Complex sub = subdivide(k, a, v);
        if (weld(sub, a, v) != k)
            f << "weld does not undo subdivide on trial " << trial;
        if (is_closed(sub) != is_closed(k))
            f << "closedness changed on trial " << trial;
        if (euler_characteristic(sub) != euler_characteristic(k))
            f << "euler characteristic changed on trial " << trial;
        if (connected_components(sub).size() != connected_components(k).size())
            f << "component count changed on trial " << trial;
    }
}

void closed_surfaces(Failure& f)
{
    struct Case {
        const char* name;
        std::size_t steps;
        long chi;
    };
    for (const Case c : {Case{"sphere-2", 3, 2}, Case{"octahedron", 7, 2}, Case{"torus7", 13, 0}, Case{"rp2-6", 9, 1}}) {
        const Complex m = fixtures::by_name(c.name);
        const auto nf = normalize(m);
        if (nf.steps != c.steps || nf.steps != m.size() - 1)
            f << c.name << ": " << nf.steps << " steps; ";
        if (!is_one_sphere(nf.sphere))
            f << c.name << ": S is not a 1-sphere; ";
        if (validate_regular(nf.sphere, nf.eq).answer != Answer::Yes)
            f << c.name << ": equivalence not regular; ";
        if (!nf.pairing.unpaired.empty())
            f << c.name << ": " << nf.pairing.unpaired.size() << " unpaired; ";
        if (star_quotient_euler_characteristic(nf.sphere, nf.eq) != c.chi)
            f << c.name << ": quotient euler characteristic " << star_quotient_euler_characteristic(nf.sphere, nf.eq)
              << "; ";
    }
}

void with_boundary(Failure& f)
{
    for (const Complex& m : {Complex{{1, 2, 3}}, Complex{{1, 2, 3}, {2, 3, 4}}}) {
        const auto nf = normalize(m);
        EXPECT(is_one_sphere(nf.sphere), f);
        EXPECT(nf.pairing.pairs.empty(), f);
        EXPECT(nf.eq.is_identity(), f);
    }
}

void three_sphere(Failure& f)
{
    const auto nf = normalize(fixtures::sphere(3));
    const Complex& s = nf.sphere;
    EXPECT(s.dimension() == 2, f);
    EXPECT(is_closed(s), f);
    EXPECT(is_connected(s), f);
    EXPECT(euler_characteristic(s) == 2, f);
    for (auto v : s.vertices())
        EXPECT(is_one_sphere(link(v, s)), f);
    EXPECT(recognize_ball_or_sphere(s).verdict == Shape::Sphere, f);
    EXPECT(nf.pairing.unpaired.empty(), f);
    EXPECT(!nf.pairing.pairs.empty(), f);
}

void abelianizations(Failure& f)
{
    struct Case {
        const char* name;
        AbelianInvariants expected;
    };
    for (const Case& c : {Case{"torus7", {2, {}}}, Case{"rp2-6", {0, {2}}}, Case{"sphere-3", {}}}) {
        const Complex m = fixtures::by_name(c.name);
        const auto p = presentation(normalize(m));
        const auto a = abelianization(p);
        if (!(a == c.expected))
            f << c.name << ": got " << to_string(a) << "; ";
        const auto homology = oracle::first_homology(m);
        if (!(oracle::profile_of(a) == homology))
            f << c.name << ": disagrees with simplicial homology; ";
        if (!(oracle::profile_from_exponent_sums(p) == homology))
            f << c.name << ": exponent-sum ranks disagree with simplicial homology; ";
    }
}

void vertex_star_removal(Failure& f)
{
    for (const char* name : {"sphere-1", "sphere-2", "sphere-3", "octahedron", "torus7", "rp2-6"}) {
        const Complex m = fixtures::by_name(name);
        for (auto v : m.vertices())
            if (is_stellar_manifold(residual(v, m)).verdict.answer != Answer::Yes)
                f << name << " minus star of " << v << "; ";
    }
}

void regularity_checker(Failure& f)
{
    std::map<std::uint32_t, std::uint32_t> rep_i, rep_ii;
    const Complex edge{{1, 2}};
    const auto eq_i = classes({{1, 2}}, rep_i);
    EXPECT(validate_regular(edge, eq_i).answer == Answer::No, f);
    EXPECT(!regular_by_enumeration(edge, rep_i), f);

    const Complex square{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
    const auto eq_ii = classes({{1, 3}, {2, 4}}, rep_ii);
    EXPECT(validate_regular(square, eq_ii).answer == Answer::No, f);
    EXPECT(!regular_by_enumeration(square, rep_ii), f);

    for (const char* name : {"simplex-1", "simplex-2", "simplex-3", "sphere-1", "sphere-2", "sphere-3", "octahedron",
                             "torus7", "rp2-6"}) {
        const auto nf = normalize(fixtures::by_name(name));
        std::map<std::uint32_t, std::uint32_t> rep;
        for (const auto& cls : nf.eq.classes())
            for (auto v : cls)
                rep[v.value] = cls.front().value;
        if (validate_regular(nf.sphere, nf.eq).answer != Answer::Yes || !regular_by_enumeration(nf.sphere, rep))
            f << name << ": emitted equivalence rejected; ";
    }
}

void cli_determinism(Failure& f)
{
    const std::string cli = STELLAR_CLI;
    const std::string command = "'" + cli + "' fixtures --name torus7 | '" + cli + "' normalize";
    const std::string first = run_shell(command);
    const std::string second = run_shell(command);
    EXPECT(!first.empty(), f);
    EXPECT(first == second, f);
}

} // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "chain algebra on 1000 random complexes", 10, chain_algebra},
        {2, "subdivide/weld round trip on 500 random triples", 10, move_round_trip},
        {3, "closed surfaces normalize to perfectly paired polygons", 5, closed_surfaces},
        {4, "surfaces with boundary normalize to unpaired polygons", 1, with_boundary},
        {5, "boundary of the 4-simplex normalizes onto a 2-sphere", 5, three_sphere},
        {6, "abelianized fundamental groups match homology", 2, abelianizations},
        {7, "removing a vertex star leaves a manifold", 5, vertex_star_removal},
        {8, "regularity checker", 0, regularity_checker},
        {9, "CLI normalize is byte-identical across runs", 0, cli_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Failure f;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(f);
        } catch (const std::exception& e) {
            f << "exception: " << e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds)
            f << "took " << seconds << " s, limit " << c.limit_seconds << " s";

        std::ostringstream line;
        line << (f.failed ? "FAIL" : "PASS") << "  [" << c.id << "] " << c.name << "  (" << std::fixed;
        line.precision(3);
        line << seconds << " s";
        if (c.limit_seconds > 0)
            line << " < " << static_cast<int>(c.limit_seconds) << " s";
        line << ")";
        if (f.failed)
            line << "  " << f.why.str();
        std::cout << line.str() << '\n';
        failures += f.failed ? 1 : 0;
    }
    std::cout << (9 - failures) << "/9 criteria passed\n";
    return failures == 0 ? 0 : 1;
}

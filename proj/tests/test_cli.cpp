#include <catch_amalgamated.hpp>

#include <sstream>

#include "stellar/cli.hpp"
#include "stellar/fixtures.hpp"
#include "stellar/io.hpp"

using namespace stellar;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "stellar");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string document(const char* fixture)
{
    return run_cli({"fixtures", "--name", fixture}).out;
}

} // namespace

TEST_CASE("fixtures and simple queries", "[cli]")
{
    const auto fx = run_cli({"fixtures", "--name", "octahedron"});
    CHECK(fx.code == 0);
    const auto doc = parse(fx.out);
    CHECK(doc.complex == fixtures::octahedron());
    CHECK(doc.metadata["name"] == "octahedron");

    CHECK(run_cli({"euler"}, document("octahedron")).out == "2\n");
    CHECK(run_cli({"euler"}, document("torus7")).out == "0\n");
    CHECK(run_cli({"boundary"}, document("simplex-1")).out == "{\"dimension\":0,\"generators\":[[1],[2]]}\n");
    CHECK(run_cli({"boundary"}, document("sphere-2")).out == "{\"dimension\":-1,\"generators\":[]}\n");
    CHECK(run_cli({"link", "--simplex", "1,2"}, document("sphere-2")).out ==
          "{\"dimension\":0,\"generators\":[[3],[4]]}\n");
}

TEST_CASE("reports", "[cli]")
{
    const auto validate = json::parse(run_cli({"validate"}, document("rp2-6")).out);
    CHECK(validate["closed"] == true);
    CHECK(validate["euler_characteristic"] == 1);
    CHECK(validate["manifold"]["verdict"] == "Yes");

    const auto pinched = json::parse(
        run_cli({"manifold"}, R"({"dimension": 2, "generators": [[1, 2, 3], [1, 4, 5]]})").out);
    CHECK(pinched["verdict"] == "No");
    CHECK(pinched["links"]["1"]["verdict"] == "Neither");

    const auto recognized = json::parse(run_cli({"recognize"}, document("sphere-3")).out);
    CHECK(recognized["verdict"] == "Sphere");
}

TEST_CASE("normal forms and fundamental groups", "[cli]")
{
    const auto nf = run_cli({"normalize", "--summary"}, document("torus7"));
    REQUIRE(nf.code == 0);
    const auto j = json::parse(nf.out);
    CHECK(j["steps"] == 13);
    CHECK(j["pairing"]["unpaired"].empty());
    CHECK(j["quotient_euler_characteristic"] == 0);
    CHECK_THAT(nf.err, Catch::Matchers::ContainsSubstring("13 loop steps"));
    CHECK(run_cli({"normalize"}, document("torus7")).out == nf.out);

    const auto torus = run_cli({"pi1"}, document("torus7"));
    CHECK(torus.out == "<x1, x2 | x1 x2 x1^-1 x2^-1>\nabelianization: Z^2\n");
    CHECK_THAT(run_cli({"pi1"}, document("rp2-6")).out, Catch::Matchers::EndsWith("abelianization: Z/2\n"));
    CHECK_THAT(run_cli({"pi1"}, document("sphere-3")).out, Catch::Matchers::EndsWith("abelianization: trivial\n"));
}

TEST_CASE("exit codes", "[cli]")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"euler"}, "{not json").code == 2);
    CHECK(run_cli({"euler"}, R"({"dimension": 1, "generators": [[1, 1]]})").code == 2);
    CHECK(run_cli({"fixtures", "--name", "klein"}).code == 2);
    CHECK(run_cli({"link"}, document("sphere-2")).code == 2);

    const auto open = run_cli({"pi1"}, document("simplex-2"));
    CHECK(open.code == 1);
    CHECK_FALSE(open.err.empty());
    CHECK(run_cli({"normalize"}, R"({"dimension": 2, "generators": [[1, 2, 3], [1, 4, 5]]})").code == 1);
    CHECK(run_cli({"normalize"}, R"({"dimension": 2, "generators": [[1, 2, 3], [4, 5, 6]]})").code == 1);
}

#include "stellar/fixtures.hpp"

#include <charconv>

#include "stellar/error.hpp"

namespace stellar::fixtures {

Complex simplex(int k)
{
    return standard_simplex(k);
}

Complex sphere(int k)
{
    return standard_sphere(k);
}

Complex octahedron()
{
    Complex k;
    for (std::uint32_t a : {1u, 6u})
        for (std::uint32_t b : {2u, 4u})
            for (std::uint32_t c : {3u, 5u})
                k.insert(Simplex{a, b, c});
    return k;
}

Complex torus7()
{
    Complex k;
    auto label = [](std::uint32_t i) { return i % 7 + 1; };
    for (std::uint32_t i = 0; i < 7; ++i) {
        k.insert(Simplex{label(i), label(i + 1), label(i + 3)});
        k.insert(Simplex{label(i), label(i + 2), label(i + 3)});
    }
    return k;
}

Complex rp2_6()
{
    return Complex{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                   {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
}

namespace {

bool parse_suffix(std::string_view name, std::string_view prefix, int& k)
{
    if (!name.starts_with(prefix))
        return false;
    const auto digits = name.substr(prefix.size());
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    return ec == std::errc{} && end == digits.data() + digits.size() && k >= 0 && k <= 12;
}

} // namespace

Complex by_name(std::string_view name)
{
    int k = 0;
    if (parse_suffix(name, "simplex-", k))
        return simplex(k);
    if (parse_suffix(name, "sphere-", k))
        return sphere(k);
    if (name == "octahedron")
        return octahedron();
    if (name == "torus7")
        return torus7();
    if (name == "rp2-6")
        return rp2_6();
    throw StellarError(ErrorKind::Malformed, "unknown fixture \"" + std::string(name) + "\"");
}

std::vector<std::string> names()
{
    return {"simplex-k", "sphere-k", "octahedron", "torus7", "rp2-6"};
}

} // namespace stellar::fixtures

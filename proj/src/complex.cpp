#include "stellar/complex.hpp"

#include <algorithm>
#include <numeric>

#include "stellar/error.hpp"

namespace stellar {

Complex::Complex(std::initializer_list<Simplex> generators)
{
    for (const auto& g : generators)
        toggle(g);
}

Complex::Complex(const std::vector<Simplex>& generators)
{
    for (const auto& g : generators)
        toggle(g);
}

void Complex::toggle(const Simplex& s)
{
    auto [it, inserted] = generators_.insert(s);
    if (!inserted)
        generators_.erase(it);
}

int Complex::dimension() const
{
    int d = -1;
    for (const auto& g : generators_)
        d = std::max(d, g.dimension());
    return d;
}

bool Complex::is_uniform() const
{
    if (generators_.empty())
        return true;
    const int d = generators_.begin()->dimension();
    return std::all_of(generators_.begin(), generators_.end(), [d](const Simplex& g) { return g.dimension() == d; });
}

std::set<VertexId> Complex::vertices() const
{
    std::set<VertexId> out;
    for (const auto& g : generators_)
        out.insert(g.vertices().begin(), g.vertices().end());
    return out;
}

bool Complex::has_vertex(VertexId v) const
{
    return std::any_of(generators_.begin(), generators_.end(), [v](const Simplex& g) { return g.contains(v); });
}

std::uint32_t Complex::max_label() const
{
    std::uint32_t m = 0;
    for (const auto& g : generators_)
        if (!g.empty())
            m = std::max(m, g.vertices().back().value);
    return m;
}

Complex& Complex::operator+=(const Complex& other)
{
    for (const auto& g : other.generators_)
        toggle(g);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Complex& k)
{
    if (k.empty())
        return os << '0';
    bool first = true;
    for (const auto& g : k) {
        if (!first)
            os << '+';
        os << g;
        first = false;
    }
    return os;
}

Complex boundary(const Simplex& s)
{
    Complex out;
    for (auto& f : s.facets())
        out.toggle(f);
    return out;
}

Complex boundary(const Complex& k)
{
    Complex out;
    for (const auto& g : k)
        for (auto& f : g.facets())
            out.toggle(f);
    return out;
}

Complex join(const Simplex& a, const Complex& k)
{
    Complex out;
    for (const auto& g : k)
        out.toggle(a.join(g));
    return out;
}

Complex join(const Complex& k, const Complex& l)
{
    Complex out;
    for (const auto& q : k)
        for (const auto& p : l)
            out.toggle(q.join(p));
    return out;
}

Complex link(const Simplex& a, const Complex& k)
{
    Complex out;
    for (const auto& g : k)
        if (g.contains(a))
            out.insert(g.minus(a));
    return out;
}

Complex residual(const Simplex& a, const Complex& k)
{
    Complex out;
    for (const auto& g : k)
        if (!g.contains(a))
            out.insert(g);
    return out;
}

bool is_face(const Simplex& a, const Complex& k)
{
    return std::any_of(k.begin(), k.end(), [&](const Simplex& g) { return g.contains(a); });
}

std::size_t coface_count(const Simplex& a, const Complex& k)
{
    return static_cast<std::size_t>(std::count_if(k.begin(), k.end(), [&](const Simplex& g) { return g.contains(a); }));
}

bool is_closed(const Complex& k)
{
    return boundary(k).empty();
}

std::vector<Complex> connected_components(const Complex& k)
{
    const std::vector<Simplex> gens(k.begin(), k.end());
    std::vector<std::size_t> parent(gens.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    std::map<VertexId, std::size_t> owner;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (auto v : gens[i].vertices()) {
            auto [it, fresh] = owner.emplace(v, i);
            if (!fresh) {
                auto a = find(it->second), b = find(i);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }

    // Roots are the least generator index of each part, so parts come out
    // ordered by their least generator.
    std::map<std::size_t, Complex> parts;
    for (std::size_t i = 0; i < gens.size(); ++i)
        parts[find(i)].insert(gens[i]);
    std::vector<Complex> out;
    out.reserve(parts.size());
    for (auto& [root, part] : parts)
        out.push_back(std::move(part));
    return out;
}

bool is_connected(const Complex& k)
{
    return connected_components(k).size() == 1;
}

std::set<Simplex> faces(const Complex& k, int d)
{
    std::set<Simplex> out;
    for (const auto& g : k)
        for (auto& f : g.faces())
            if (f.dimension() == d)
                out.insert(std::move(f));
    return out;
}

std::vector<std::size_t> f_vector(const Complex& k)
{
    std::set<Simplex> all;
    for (const auto& g : k)
        for (auto& f : g.faces())
            all.insert(std::move(f));
    std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(k.dimension() + 1, 0)), 0);
    for (const auto& f : all)
        ++counts[static_cast<std::size_t>(f.dimension())];
    return counts;
}

long euler_characteristic(const Complex& k)
{
    long chi = 0;
    long sign = 1;
    for (auto c : f_vector(k)) {
        chi += sign * static_cast<long>(c);
        sign = -sign;
    }
    return chi;
}

Complex standard_simplex(int n, std::uint32_t first)
{
    std::vector<VertexId> vs;
    for (int i = 0; i <= n; ++i)
        vs.emplace_back(first + static_cast<std::uint32_t>(i));
    return Complex{Simplex(std::move(vs))};
}

Complex standard_sphere(int n, std::uint32_t first)
{
    return boundary(standard_simplex(n + 1, first));
}

} // namespace stellar

#include "stellar/quotient.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stellar/error.hpp"

namespace stellar {

RegularEquivalence::RegularEquivalence(const std::vector<std::vector<VertexId>>& classes)
{
    std::set<VertexId> seen;
    for (const auto& cls : classes) {
        for (auto v : cls)
            if (!seen.insert(v).second)
                throw StellarError(ErrorKind::Malformed,
                                   "vertex " + std::to_string(v.value) + " listed in two equivalence classes");
        for (std::size_t i = 1; i < cls.size(); ++i)
            merge(cls[0], cls[i]);
    }
}

VertexId RegularEquivalence::representative(VertexId v) const
{
    auto it = rep_.find(v);
    return it == rep_.end() ? v : it->second;
}

void RegularEquivalence::merge(VertexId a, VertexId b)
{
    const VertexId ra = representative(a);
    const VertexId rb = representative(b);
    if (ra == rb)
        return;
    const VertexId root = std::min(ra, rb);
    const VertexId other = std::max(ra, rb);
    rep_[root] = root;
    rep_[other] = root;
    for (auto& [v, r] : rep_)
        if (r == other)
            r = root;
}

std::vector<std::vector<VertexId>> RegularEquivalence::classes() const
{
    std::map<VertexId, std::vector<VertexId>> grouped;
    for (auto [v, r] : rep_)
        grouped[r].push_back(v);
    std::vector<std::vector<VertexId>> out;
    for (auto& [r, members] : grouped)
        out.push_back(std::move(members));
    return out;
}

std::vector<VertexId> RegularEquivalence::members() const
{
    std::vector<VertexId> out;
    for (auto [v, r] : rep_)
        out.push_back(v);
    return out;
}

ClassKey class_key(const Simplex& s, const RegularEquivalence& eq)
{
    ClassKey key;
    key.reserve(s.size());
    for (auto v : s.vertices())
        key.push_back(eq.representative(v));
    std::sort(key.begin(), key.end());
    return key;
}

namespace {

std::string show(const Simplex& s)
{
    std::ostringstream os;
    os << s;
    return os.str();
}

} // namespace

Verdict validate_regular(const Complex& s, const RegularEquivalence& eq)
{
    const auto verts = s.vertices();
    for (auto v : eq.members())
        if (!verts.count(v))
            throw StellarError(ErrorKind::UnknownVertex, "vertex " + std::to_string(v.value) + " is not in the complex");

    std::map<ClassKey, std::vector<Simplex>> by_key;
    for (const auto& g : s) {
        auto key = class_key(g, eq);
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            return Verdict::reject("condition (i): generator " + show(g) + " has two equivalent vertices");
        by_key[std::move(key)].push_back(g);
    }
    for (const auto& [key, gens] : by_key) {
        if (gens.size() > 2) {
            std::string names;
            for (const auto& g : gens)
                names += show(g);
            return Verdict::reject("condition (ii): generators " + names + " share one class set");
        }
    }
    return Verdict::accept("regular");
}

GeneratorPairing derive_pairing(const Complex& s, const RegularEquivalence& eq)
{
    if (auto v = validate_regular(s, eq); !v.yes())
        throw StellarError(ErrorKind::NotRegular, v.witness);

    std::map<ClassKey, std::vector<Simplex>> by_key;
    for (const auto& g : s)
        by_key[class_key(g, eq)].push_back(g);

    GeneratorPairing out;
    for (auto& [key, gens] : by_key) {
        if (gens.size() == 2)
            out.pairs.emplace_back(gens[0], gens[1]);
        else
            out.unpaired.push_back(gens[0]);
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    std::sort(out.unpaired.begin(), out.unpaired.end());
    return out;
}

std::size_t QuotientComplex::count(int d) const
{
    if (d < 0 || static_cast<std::size_t>(d) >= cells.size())
        return 0;
    return cells[static_cast<std::size_t>(d)].size();
}

std::size_t QuotientComplex::index_of(const ClassKey& key) const
{
    const auto& row = cells.at(key.size() - 1);
    auto it = std::lower_bound(row.begin(), row.end(), key);
    if (it == row.end() || *it != key)
        throw StellarError(ErrorKind::UnknownVertex, "no such quotient cell");
    return static_cast<std::size_t>(it - row.begin());
}

long QuotientComplex::euler_characteristic() const
{
    long chi = 0;
    long sign = 1;
    for (const auto& row : cells) {
        chi += sign * static_cast<long>(row.size());
        sign = -sign;
    }
    return chi;
}

QuotientComplex quotient_cells(const Complex& s, const RegularEquivalence& eq)
{
    if (auto v = validate_regular(s, eq); !v.yes())
        throw StellarError(ErrorKind::NotRegular, v.witness);

    const int n = s.dimension();
    QuotientComplex q;
    q.cells.resize(static_cast<std::size_t>(std::max(n + 1, 0)));
    std::vector<std::set<ClassKey>> keys(q.cells.size());
    for (const auto& g : s)
        for (const auto& f : g.faces())
            keys[static_cast<std::size_t>(f.dimension())].insert(class_key(f, eq));
    for (std::size_t d = 0; d < keys.size(); ++d)
        q.cells[d].assign(keys[d].begin(), keys[d].end());

    q.incidence.resize(q.cells.size());
    for (std::size_t d = 1; d < q.cells.size() && d <= 2; ++d) {
        for (const auto& key : q.cells[d]) {
            std::vector<std::size_t> facets;
            for (std::size_t drop = 0; drop < key.size(); ++drop) {
                ClassKey f = key;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
                facets.push_back(q.index_of(f));
            }
            q.incidence[d].push_back(std::move(facets));
        }
    }
    return q;
}

long star_quotient_euler_characteristic(const Complex& s, const RegularEquivalence& eq)
{
    return 1 - euler_characteristic(s) + quotient_cells(s, eq).euler_characteristic();
}

} // namespace stellar

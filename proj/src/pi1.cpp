#include "stellar/pi1.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "stellar/error.hpp"

namespace stellar {

Word free_reduce(const Word& w)
{
    Word out;
    out.reserve(w.size());
    for (const auto& l : w) {
        if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w)
{
    Word out = free_reduce(w);
    std::size_t lo = 0;
    std::size_t hi = out.size();
    while (hi - lo >= 2 && out[lo].generator == out[hi - 1].generator && out[lo].exponent == -out[hi - 1].exponent) {
        ++lo;
        --hi;
    }
    return Word(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

GroupPresentation simplify(const GroupPresentation& p)
{
    std::vector<bool> alive(p.generators.size(), true);
    std::vector<Word> relators = p.relators;

    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Word> kept;
        for (auto& r : relators) {
            Word reduced = cyclic_reduce(r);
            if (!reduced.empty())
                kept.push_back(std::move(reduced));
        }
        relators = std::move(kept);

        auto unit = std::find_if(relators.begin(), relators.end(), [](const Word& r) { return r.size() == 1; });
        if (unit != relators.end()) {
            const std::size_t dead = unit->front().generator;
            alive[dead] = false;
            for (auto& r : relators)
                std::erase_if(r, [dead](const Letter& l) { return l.generator == dead; });
            changed = true;
        }
    }

    GroupPresentation out;
    std::vector<std::size_t> renumber(p.generators.size(), 0);
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (!alive[i])
            continue;
        renumber[i] = out.generators.size();
        out.generators.push_back(p.generators[i]);
    }
    for (auto& r : relators) {
        for (auto& l : r)
            l.generator = renumber[l.generator];
        out.relators.push_back(std::move(r));
    }
    return out;
}

namespace {

QuotientComplex checked_quotient(const StarNormalForm& nf)
{
    try {
        return quotient_cells(nf.sphere, nf.eq);
    } catch (const StellarError& e) {
        throw StellarError(ErrorKind::BadNormalForm, e.what());
    }
}

Letter traverse(const QuotientComplex& q, VertexId from, VertexId to)
{
    const ClassKey key = from < to ? ClassKey{from, to} : ClassKey{to, from};
    return Letter{q.index_of(key), from < to ? 1 : -1};
}

/// Quotient edges as generators e1.., tree edges as length-1 relators.
GroupPresentation edge_skeleton(const QuotientComplex& q)
{
    GroupPresentation p;
    if (q.cells.size() < 2)
        return p;
    const auto& edges = q.cells[1];
    for (std::size_t i = 0; i < edges.size(); ++i)
        p.generators.push_back("e" + std::to_string(i + 1));

    std::map<VertexId, std::vector<std::pair<VertexId, std::size_t>>> adjacent;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adjacent[edges[i][0]].emplace_back(edges[i][1], i);
        adjacent[edges[i][1]].emplace_back(edges[i][0], i);
    }
    std::set<VertexId> reached;
    std::deque<VertexId> queue;
    for (const auto& start : q.cells[0]) {
        if (reached.count(start[0]))
            continue;
        reached.insert(start[0]);
        queue.push_back(start[0]);
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (auto [w, edge] : adjacent[v]) {
                if (reached.insert(w).second) {
                    p.relators.push_back(Word{Letter{edge, 1}});
                    queue.push_back(w);
                }
            }
        }
    }
    return p;
}

GroupPresentation rename(GroupPresentation p)
{
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        p.generators[i] = "x" + std::to_string(i + 1);
    return p;
}

} // namespace

Word polygon_word(const StarNormalForm& nf)
{
    if (nf.dimension != 2)
        throw StellarError(ErrorKind::BadNormalForm, "polygon word needs a surface normal form");
    const QuotientComplex q = checked_quotient(nf);

    std::map<VertexId, std::vector<VertexId>> neighbours;
    for (const auto& e : nf.sphere) {
        neighbours[e.vertices()[0]].push_back(e.vertices()[1]);
        neighbours[e.vertices()[1]].push_back(e.vertices()[0]);
    }
    for (auto& [v, ns] : neighbours) {
        if (ns.size() != 2)
            throw StellarError(ErrorKind::BadNormalForm, "sphere is not a cycle");
        std::sort(ns.begin(), ns.end());
    }

    Word word;
    const VertexId start = neighbours.begin()->first;
    VertexId prev = start;
    VertexId at = neighbours.begin()->second.front();
    word.push_back(traverse(q, nf.eq.representative(prev), nf.eq.representative(at)));
    while (at != start) {
        const auto& ns = neighbours.at(at);
        const VertexId next = ns[0] == prev ? ns[1] : ns[0];
        word.push_back(traverse(q, nf.eq.representative(at), nf.eq.representative(next)));
        prev = at;
        at = next;
    }
    if (word.size() != nf.sphere.size())
        throw StellarError(ErrorKind::BadNormalForm, "sphere is not a single cycle");
    return word;
}

GroupPresentation presentation(const StarNormalForm& nf)
{
    if (nf.dimension < 1)
        throw StellarError(ErrorKind::BadNormalForm, "dimension " + std::to_string(nf.dimension));

    if (nf.dimension == 1) {
        // Two endpoints; identified exactly when the curve is closed.
        GroupPresentation p;
        if (nf.pairing.unpaired.empty())
            p.generators.push_back("x1");
        return p;
    }

    if (nf.dimension == 2 && !nf.pairing.unpaired.empty())
        throw StellarError(ErrorKind::OpenSurface,
                           std::to_string(nf.pairing.unpaired.size()) + " unpaired polygon edges");

    const QuotientComplex q = checked_quotient(nf);
    GroupPresentation p = edge_skeleton(q);

    if (nf.dimension == 2) {
        p.relators.push_back(polygon_word(nf));
    } else {
        for (const auto& tri : q.cells[2]) {
            p.relators.push_back(Word{traverse(q, tri[0], tri[1]), traverse(q, tri[1], tri[2]),
                                      traverse(q, tri[2], tri[0])});
        }
    }
    return rename(simplify(p));
}

IntegerMatrix exponent_sum_matrix(const GroupPresentation& p)
{
    IntegerMatrix m = IntegerMatrix::Zero(static_cast<Eigen::Index>(p.relators.size()),
                                          static_cast<Eigen::Index>(p.generators.size()));
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const auto& l : p.relators[r])
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(l.generator)) += l.exponent;
    return m;
}

std::vector<long long> smith_diagonal(IntegerMatrix m)
{
    std::vector<long long> diag;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();

    for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            Eigen::Index pr = -1, pc = -1;
            for (Eigen::Index i = t; i < rows; ++i)
                for (Eigen::Index j = t; j < cols; ++j)
                    if (m(i, j) != 0 && (pr < 0 || std::llabs(m(i, j)) < std::llabs(m(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0)
                return diag;
            m.row(t).swap(m.row(pr));
            m.col(t).swap(m.col(pc));

            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                const long long q = m(i, t) / m(t, t);
                m.row(i) -= q * m.row(t);
                clean = clean && m(i, t) == 0;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                const long long q = m(t, j) / m(t, t);
                m.col(j) -= q * m.col(t);
                clean = clean && m(t, j) == 0;
            }
            if (!clean)
                continue;

            // Enforce divisibility: fold an offending row into the pivot row.
            Eigen::Index offending = -1;
            for (Eigen::Index i = t + 1; i < rows && offending < 0; ++i)
                for (Eigen::Index j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        offending = i;
                        break;
                    }
            if (offending < 0)
                break;
            m.row(t) += m.row(offending);
        }
        diag.push_back(std::llabs(m(t, t)));
    }
    return diag;
}

AbelianInvariants abelianization(const GroupPresentation& p)
{
    AbelianInvariants out;
    const auto diag = smith_diagonal(exponent_sum_matrix(p));
    out.free_rank = p.generators.size() - diag.size();
    for (auto d : diag)
        if (d > 1)
            out.torsion.push_back(d);
    return out;
}

std::string to_string(const GroupPresentation& p)
{
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        os << (i ? ", " : "") << p.generators[i];
    os << " | ";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        os << (r ? ", " : "");
        for (std::size_t i = 0; i < p.relators[r].size(); ++i) {
            const auto& l = p.relators[r][i];
            os << (i ? " " : "") << p.generators.at(l.generator);
            if (l.exponent != 1)
                os << '^' << l.exponent;
        }
    }
    os << '>';
    return os.str();
}

std::string to_string(const AbelianInvariants& a)
{
    if (a.trivial())
        return "trivial";
    std::vector<std::string> parts;
    if (a.free_rank == 1)
        parts.emplace_back("Z");
    else if (a.free_rank > 1)
        parts.push_back("Z^" + std::to_string(a.free_rank));
    for (auto t : a.torsion)
        parts.push_back("Z/" + std::to_string(t));
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " + " + parts[i];
    return out;
}

} // namespace stellar

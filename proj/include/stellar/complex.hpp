#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <vector>

#include "stellar/simplex.hpp"

namespace stellar {

/// A finite formal sum of simplexes with coefficients in Z2.
///
/// Only the generators are stored; lower faces are derived on demand.
/// Adding a simplex that is already present removes it.
class Complex {
public:
    using container = std::set<Simplex>;
    using const_iterator = container::const_iterator;

    Complex() = default;
    Complex(std::initializer_list<Simplex> generators);
    explicit Complex(const std::vector<Simplex>& generators);

    /// Z2 addition of a single generator.
    void toggle(const Simplex& s);
    void insert(const Simplex& s) { generators_.insert(s); }
    void erase(const Simplex& s) { generators_.erase(s); }

    bool contains(const Simplex& s) const { return generators_.count(s) != 0; }
    bool empty() const { return generators_.empty(); }
    std::size_t size() const { return generators_.size(); }
    const container& generators() const { return generators_; }
    const_iterator begin() const { return generators_.begin(); }
    const_iterator end() const { return generators_.end(); }

    /// Maximal generator dimension; -1 for the zero complex.
    int dimension() const;
    /// True when every generator has the same dimension (the zero complex counts).
    bool is_uniform() const;
    std::set<VertexId> vertices() const;
    bool has_vertex(VertexId v) const;
    /// Largest label in use; 0 when there are no vertices.
    std::uint32_t max_label() const;

    Complex& operator+=(const Complex& other);
    friend Complex operator+(Complex lhs, const Complex& rhs) { return lhs += rhs; }
    friend bool operator==(const Complex&, const Complex&) = default;

private:
    container generators_;
};

std::ostream& operator<<(std::ostream& os, const Complex& k);

/// Z2 sum of the codimension-1 faces of every generator.
Complex boundary(const Simplex& s);
Complex boundary(const Complex& k);

Complex join(const Simplex& a, const Complex& k);
/// Generator-wise vertex union; throws SharedVertex when the vertex sets meet.
Complex join(const Complex& k, const Complex& l);

/// { B : A ∪ B is a generator, A ∩ B = ∅ }. Contains the empty simplex when A
/// itself is a generator.
Complex link(const Simplex& a, const Complex& k);
/// Generators of `k` that do not contain `a`.
Complex residual(const Simplex& a, const Complex& k);

inline Complex link(VertexId v, const Complex& k) { return link(Simplex({v}), k); }
inline Complex residual(VertexId v, const Complex& k) { return residual(Simplex({v}), k); }

/// True when `a` is a face of at least one generator.
bool is_face(const Simplex& a, const Complex& k);

bool is_closed(const Complex& k);

/// Partition of the generators by transitive shared-vertex adjacency, ordered
/// by least generator.
std::vector<Complex> connected_components(const Complex& k);
bool is_connected(const Complex& k);

/// Distinct nonempty faces of dimension `d` over all generators.
std::set<Simplex> faces(const Complex& k, int d);
/// Face counts indexed by dimension.
std::vector<std::size_t> f_vector(const Complex& k);
long euler_characteristic(const Complex& k);

/// The simplex on labels first..first+n as a single-generator complex.
Complex standard_simplex(int n, std::uint32_t first = 1);
/// Boundary of the standard (n+1)-simplex, an n-sphere.
Complex standard_sphere(int n, std::uint32_t first = 1);

/// Per-vertex multiplicity of a face among the generators: how many generators contain it.
std::size_t coface_count(const Simplex& a, const Complex& k);

} // namespace stellar
